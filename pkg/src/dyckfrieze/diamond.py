"""Two-column diamond arrays of rank n and their coupling cycles.

A diamond is a staircase pair of columns ``(a[1,1..n], a[2,1..n])`` framed by
implicit boundary ones ``a[2,0] = a[1,n+1] = 1`` and satisfying the
unimodular rule

    a[1,j] * a[2,j] - a[2,j-1] * a[1,j+1] = 1    for 1 <= j <= n.

The first column determines the second by exact division, so a diamond is
usually built from its first column (a "diamond vector").  Chaining the
construction, second column becoming the next first column, walks a cycle
whose length always divides n + 3; those cycles are the diagonals of a
closed integral frieze pattern.

All entries are plain Python integers, so arithmetic is exact and unbounded.
Every value here is immutable and every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CycleOverrun,
    InputError,
    InvariantViolation,
    NonExactDivision,
    NonPositiveEntry,
    RangeError,
)

Vector = tuple[int, ...]


def as_vector(entries) -> Vector:
    """Normalize to a tuple of positive ints, rejecting anything else."""
    v = tuple(entries)
    if not v:
        raise InputError("vector must have at least one entry")
    for k, x in enumerate(v, start=1):
        if not isinstance(x, int) or isinstance(x, bool):
            raise InputError(f"entry {k}: {x!r} is not an integer")
        if x < 1:
            raise NonPositiveEntry(k, x)
    return v


@dataclass(frozen=True)
class Diamond:
    """A validated rank-n diamond; construction checks the unimodular rule.

    ``col1`` and ``col2`` hold ``a[1,1..n]`` and ``a[2,1..n]``; the boundary
    ones are implicit and never stored.
    """

    col1: Vector
    col2: Vector

    def __post_init__(self):
        c1, c2 = tuple(self.col1), tuple(self.col2)
        object.__setattr__(self, "col1", c1)
        object.__setattr__(self, "col2", c2)
        n = len(c1)
        if n == 0 or len(c2) != n:
            raise InputError("columns must be nonempty and of equal length")
        if any(x < 1 for x in c1) or any(x < 1 for x in c2):
            raise InputError("all diamond entries must be positive integers")
        for j in range(1, n + 1):
            a1j = c1[j - 1]
            a2j = c2[j - 1]
            left = c2[j - 2] if j >= 2 else 1
            right = c1[j] if j < n else 1
            if a1j * a2j - left * right != 1:
                raise InputError(
                    f"unimodular rule fails at position {j}: "
                    f"{a1j}*{a2j} - {left}*{right} != 1"
                )

    @property
    def n(self) -> int:
        return len(self.col1)


def complete_diamond(vector) -> Diamond:
    """Build the diamond whose first column is ``vector``.

    The second column is computed left to right from the rearranged rule
    ``a[2,j] = (1 + a[2,j-1] * a[1,j+1]) / a[1,j]``.  Raises
    ``NonExactDivision`` or ``NonPositiveEntry`` when the vector is not
    associated to a positive integral diamond.
    """
    v = as_vector(vector)
    n = len(v)
    col2 = []
    below = 1
    for j in range(1, n + 1):
        right = v[j] if j < n else 1
        numerator = 1 + below * right
        quotient, remainder = divmod(numerator, v[j - 1])
        if remainder:
            raise NonExactDivision(j, numerator, v[j - 1])
        if quotient < 1:
            raise NonPositiveEntry(j, quotient)
        col2.append(quotient)
        below = quotient
    return Diamond(v, tuple(col2))


def _head_form_ok(a11: int, a21: int, a12: int, n: int) -> bool:
    """Existence check for the quadratic head relation.

    True iff some pair ``a, m`` within the documented ranges satisfies
    ``{a11, a21} = {a, a+m}`` and ``a12 = a*a + a*m - 1``.
    """
    head = sorted((a11, a21))
    for a in range(1, (n + 2) // 2 + 1):
        lo, hi = (1, n) if a == 1 else (0, n + 2 * (1 - a))
        for m in range(lo, hi + 1):
            if head == sorted((a, a + m)) and a12 == a * a + a * m - 1:
                return True
    return False


def check_head_form(d: Diamond) -> bool:
    """Optional validator for the quadratic relation between a diamond's
    top entries; total predicate, requires rank >= 2."""
    if d.n < 2:
        raise RangeError("head-form check needs rank >= 2")
    return _head_form_ok(d.col1[0], d.col2[0], d.col1[1], d.n)


def couple_next(d: Diamond) -> Diamond:
    """The successor diamond: complete the current second column.

    The result B satisfies the coupling condition (col2 of ``d`` equals
    col1 of B).  Completion cannot fail on a valid diamond, so a failure
    here is reported as an internal invariant violation.
    """
    try:
        return complete_diamond(d.col2)
    except (NonExactDivision, NonPositiveEntry) as exc:
        raise InvariantViolation(
            f"coupling failed on a valid diamond: {exc}"
        ) from exc


@dataclass(frozen=True)
class Cycle:
    """A minimal coupling cycle: p distinct diamonds, consecutive members
    coupled, wrapping around, with p dividing n + 3."""

    diamonds: tuple[Diamond, ...]

    def __post_init__(self):
        ds = tuple(self.diamonds)
        object.__setattr__(self, "diamonds", ds)
        if not ds:
            raise InputError("cycle must contain at least one diamond")
        n = ds[0].n
        p = len(ds)
        if len(set(ds)) != p:
            raise InputError("cycle members must be distinct")
        for t, d in enumerate(ds):
            nxt = ds[(t + 1) % p]
            if d.n != n or d.col2 != nxt.col1:
                raise InputError(f"members {t} and {(t + 1) % p} are not coupled")
        if (n + 3) % p:
            raise InvariantViolation(f"period {p} does not divide {n + 3}")

    @property
    def p(self) -> int:
        return len(self.diamonds)

    @property
    def n(self) -> int:
        return self.diamonds[0].n


def minimal_cycle(d0: Diamond) -> Cycle:
    """Iterate ``couple_next`` from ``d0`` until it recurs.

    Recurrence happens after at most n + 3 steps; running past that bound
    raises ``CycleOverrun``.
    """
    bound = d0.n + 3
    members = [d0]
    current = couple_next(d0)
    while current != d0:
        if len(members) >= bound:
            raise CycleOverrun(
                f"no recurrence within {bound} couplings from {d0.col1}"
            )
        members.append(current)
        current = couple_next(current)
    return Cycle(tuple(members))


def cycle_heads(c: Cycle) -> Vector:
    """Top entries ``a[1,1]`` of the cycle members, in cycle order.

    Repeated ``(n + 3) / p`` times this is the quiddity row of the frieze
    the cycle generates.
    """
    return tuple(d.col1[0] for d in c.diamonds)
