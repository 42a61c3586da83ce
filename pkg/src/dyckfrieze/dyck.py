"""Dyck words, their two integer encodings, and the path map for diamond
vectors.

A Dyck word over {U, D} is balanced and never has a prefix with more Ds
than Us.  Canonical text form is the plain uppercase string, e.g.
``"UUDUDD"``.

Two vector encodings are used.  The profile vector of a path of length 2k
lists, for the first k-1 Ds, the number of Us seen before that D minus its
position offset; the descent vector of a path of length 2(n+1) lists, for
i = 1..n, how many Ds occur before the (n+2-i)-th U.  The former drives the
bijection with diamond vectors, the latter drives polygon triangulations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import (
    BadSymbol,
    IndexOutOfRange,
    InputError,
    InvalidVG,
    InvariantViolation,
    NotBalanced,
    NotInRange,
    PrefixViolation,
    TooShort,
)


def _validate_word(word: str) -> None:
    height = 0
    for pos, ch in enumerate(word, start=1):
        if ch == "U":
            height += 1
        elif ch == "D":
            height -= 1
            if height < 0:
                raise PrefixViolation(pos)
        else:
            raise BadSymbol(pos, ch)
    if height != 0:
        raise NotBalanced(f"{word.count('U')} Us vs {word.count('D')} Ds")


@dataclass(frozen=True)
class DyckPath:
    """Validated Dyck word; construction rejects anything else."""

    word: str

    def __post_init__(self):
        _validate_word(self.word)

    @property
    def half_length(self) -> int:
        return len(self.word) // 2

    def __str__(self) -> str:
        return self.word


def parse_path(text: str) -> DyckPath:
    """Parse a Dyck word, accepting lowercase and canonicalizing to upper."""
    return DyckPath(str(text).upper())


def all_paths(half_length: int):
    """Yield every Dyck path of length ``2 * half_length`` in lexicographic
    order with U < D."""
    if half_length < 0:
        raise InputError("half length must be >= 0")

    def emit(prefix: list[str], ups: int, downs: int, height: int):
        if ups == 0 and downs == 0:
            yield DyckPath("".join(prefix))
            return
        if ups:
            prefix.append("U")
            yield from emit(prefix, ups - 1, downs, height + 1)
            prefix.pop()
        if downs and height > 0:
            prefix.append("D")
            yield from emit(prefix, ups, downs - 1, height - 1)
            prefix.pop()

    yield from emit([], half_length, half_length, 0)


def catalan(n: int) -> int:
    """Exact n-th Catalan number."""
    if n < 0:
        raise InputError("catalan is defined for n >= 0")
    return comb(2 * n, n) // (n + 1)


def peaks(p: DyckPath) -> int:
    """Number of UD factors (north-then-east turns)."""
    return p.word.count("UD")


def _blocks(p: DyckPath) -> list[str]:
    # factor as U w_1 ... w_{n-1} D into two-letter blocks
    n = p.half_length
    if n < 2:
        raise TooShort("block factorization needs length >= 4")
    return [p.word[2 * q - 1 : 2 * q + 1] for q in range(1, n)]


def support(p: DyckPath) -> set[int]:
    """Block indices q where the two-letter block is UD or UU."""
    return {q for q, w in enumerate(_blocks(p), start=1) if w in ("UD", "UU")}


def unitary_shift(p: DyckPath, i: int) -> DyckPath:
    """Reverse the i-th two-letter block; always yields a valid path.

    The height entering a block is odd, hence >= 1, so the reversal cannot
    dip below the diagonal; that is asserted rather than assumed.
    """
    n = p.half_length
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"block index {i} not in 1..{n - 1}")
    w = p.word
    lo = 2 * i - 1
    flipped = w[:lo] + w[lo + 1] + w[lo] + w[lo + 2 :]
    try:
        return DyckPath(flipped)
    except InputError as exc:
        raise InvariantViolation(f"shift broke path validity: {exc}") from exc


def to_v_vector(p: DyckPath) -> tuple[int, ...]:
    """Profile encoding: for i = 1..k-1, (Us before the i-th D) - i + 1."""
    k = p.half_length
    ups = 0
    seen_d = 0
    out = []
    for ch in p.word:
        if ch == "U":
            ups += 1
        else:
            seen_d += 1
            if seen_d == k:
                break
            out.append(ups - seen_d + 1)
    return tuple(out)


def from_v_vector(v) -> DyckPath:
    """Inverse of ``to_v_vector``; raises InvalidVG on vectors that encode
    no path."""
    v = tuple(v)
    k = len(v) + 1
    m_prev = 0
    parts = []
    for i, vi in enumerate(v, start=1):
        if not isinstance(vi, int) or isinstance(vi, bool) or vi < 1:
            raise InvalidVG(f"entry {i}: {vi!r} must be an integer >= 1")
        m_i = vi + i - 1
        if m_i < m_prev:
            raise InvalidVG(f"entry {i}: U-count profile decreases")
        if m_i > k:
            raise InvalidVG(f"entry {i}: profile exceeds half length {k}")
        parts.append("U" * (m_i - m_prev) + "D")
        m_prev = m_i
    parts.append("U" * (k - m_prev) + "D")
    try:
        return DyckPath("".join(parts))
    except InputError as exc:
        raise InvalidVG(str(exc)) from exc


def to_lambda(p: DyckPath) -> tuple[int, ...]:
    """Descent encoding: entry i counts Ds before the (n+2-i)-th U, where
    the path has length 2(n+1)."""
    n = p.half_length - 1
    if n < 1:
        raise TooShort("descent encoding needs length >= 4")
    ds_before = []
    downs = 0
    for ch in p.word:
        if ch == "U":
            ds_before.append(downs)
        else:
            downs += 1
    return tuple(ds_before[n + 1 - i] for i in range(1, n + 1))


def reduce_coordinate(u, i: int) -> int:
    """Greedy subtraction residue of the i-th coordinate of ``u``.

    Repeatedly subtract the entry with the largest index l <= i that keeps
    the remainder positive; after t subtractions the result is remainder
    plus t.  With no qualifying index the coordinate itself is returned.
    Remainders strictly decrease, so the loop terminates.
    """
    u = tuple(u)
    if not 1 <= i <= len(u):
        raise IndexOutOfRange(f"coordinate {i} not in 1..{len(u)}")
    if any(x < 1 for x in u):
        raise InputError("all entries must be >= 1")
    r = u[i - 1]
    t = 0
    while True:
        pick = None
        for l in range(i, 0, -1):
            if r - u[l - 1] > 0:
                pick = l
                break
        if pick is None:
            return r + t
        r -= u[pick - 1]
        t += 1


def vector_to_path(v) -> DyckPath:
    """Map a diamond vector of rank n to its Dyck path of length 2(n+1).

    The reduced coordinates are read as the profile encoding of the path.
    Callers must pass a vector associated to a positive integral diamond;
    other vectors may raise InvalidVG.
    """
    v = tuple(v)
    profile = tuple(reduce_coordinate(v, i) for i in range(1, len(v) + 1))
    return from_v_vector(profile)


def path_to_vector(p: DyckPath, n: int) -> tuple[int, ...]:
    """Unique diamond vector of rank n mapped to ``p`` by ``vector_to_path``.

    Implemented by inverting the forward map over the full rank-n
    enumeration; there is no closed-form inverse.
    """
    if p.half_length != n + 1:
        raise InputError(
            f"path of length {2 * p.half_length} does not match rank {n}"
        )
    try:
        return _inverse_table(n)[p.word]
    except KeyError:
        raise NotInRange(f"no rank-{n} preimage for {p.word}") from None


@lru_cache(maxsize=None)
def _inverse_table(n: int) -> dict[str, tuple[int, ...]]:
    # deferred import: enumeration depends on this module
    from .enumeration import enumerate_all

    table = {}
    for v in enumerate_all(n):
        word = vector_to_path(v).word
        if word in table:
            raise InvariantViolation(f"path map not injective at {v}")
        table[word] = v
    return table
