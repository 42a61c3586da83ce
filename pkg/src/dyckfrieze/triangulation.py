"""Triangulations of a labeled convex polygon and their rotation orbits.

Vertices of an N-gon are labeled 0..N-1 in circular order.  A triangulation
is the set of its N-3 pairwise non-crossing diagonals; with that count,
non-crossing already forces every face to be a triangle.

The realization algorithm turns the descent encoding of a Dyck path of
length 2(n+1) into a triangulation of the (n+3)-gon.  It keeps the active
polygon as an ordered list of original labels: step i connects the vertices
at current positions lambda_i and lambda_i + 2 and removes the vertex
between them.  Recorded diagonals always use original labels, which avoids
off-by-one drift from relabeling arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyck import DyckPath, to_lambda, vector_to_path
from .errors import InputError, InvariantViolation, PositionOutOfRange, SizeMismatch

Diagonal = tuple[int, int]


def _normalize_pair(pair) -> Diagonal:
    a, b = pair
    return (a, b) if a < b else (b, a)


def _crosses(d1: Diagonal, d2: Diagonal) -> bool:
    # strict interleaving on the circle; shared endpoints do not cross
    if set(d1) & set(d2):
        return False
    a, b = d1
    c, d = d2
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class Triangulation:
    """N-3 non-crossing diagonals of the labeled N-gon."""

    polygon_size: int
    diagonals: frozenset[Diagonal]

    def __post_init__(self):
        N = self.polygon_size
        if N < 3:
            raise InputError("polygon needs at least 3 vertices")
        diags = frozenset(_normalize_pair(p) for p in self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        if len(diags) != N - 3:
            raise InputError(f"expected {N - 3} diagonals, got {len(diags)}")
        for i, j in diags:
            if not (0 <= i < j <= N - 1):
                raise InputError(f"diagonal {i}-{j} outside vertex range")
            if (j - i) % N in (1, N - 1):
                raise InputError(f"{i}-{j} is a polygon edge, not a diagonal")
        diag_list = sorted(diags)
        for x in range(len(diag_list)):
            for y in range(x + 1, len(diag_list)):
                if _crosses(diag_list[x], diag_list[y]):
                    raise InputError(
                        f"diagonals {diag_list[x]} and {diag_list[y]} cross"
                    )

    def to_text(self) -> str:
        """Canonical text form, e.g. ``N=6; 1-5,2-4,2-5``."""
        pairs = ",".join(f"{i}-{j}" for i, j in sorted(self.diagonals))
        return f"N={self.polygon_size}; {pairs}"


def realize(lambda_vector) -> Triangulation:
    """Triangulation realized by the descent encoding of a Dyck path."""
    lam = tuple(lambda_vector)
    n = len(lam)
    active = list(range(n + 3))
    diagonals = []
    for step, li in enumerate(lam, start=1):
        if not isinstance(li, int) or isinstance(li, bool) or li < 0:
            raise InputError(f"step {step}: {li!r} is not a valid position")
        if li + 2 > len(active) - 1:
            raise PositionOutOfRange(step, li, len(active))
        diagonals.append(_normalize_pair((active[li], active[li + 2])))
        del active[li + 1]
    return Triangulation(n + 3, frozenset(diagonals))


def triangles(t: Triangulation) -> list[tuple[int, int, int]]:
    """The N-2 triangular faces, each as a sorted vertex triple.

    Found by repeatedly clipping an ear: a vertex with no incident
    remaining diagonal, whose neighbors' chord then becomes boundary.
    """
    active = list(range(t.polygon_size))
    remaining = set(t.diagonals)
    faces = []
    while len(active) > 3:
        for j, v in enumerate(active):
            if any(v in d for d in remaining):
                continue
            u = active[j - 1]
            w = active[(j + 1) % len(active)]
            faces.append(tuple(sorted((u, v, w))))
            remaining.discard(_normalize_pair((u, w)))
            del active[j]
            break
        else:
            raise InvariantViolation("no ear found in a valid triangulation")
    faces.append(tuple(sorted(active)))
    return faces


def quiddity(t: Triangulation) -> tuple[int, ...]:
    """Triangle-incidence counts per vertex; entries sum to 3(N-2)."""
    counts = [0] * t.polygon_size
    for face in triangles(t):
        for v in face:
            counts[v] += 1
    return tuple(counts)


def rotate(t: Triangulation, k: int) -> Triangulation:
    """Shift every vertex label by k modulo the polygon size."""
    N = t.polygon_size
    moved = frozenset(
        _normalize_pair(((i + k) % N, (j + k) % N)) for i, j in t.diagonals
    )
    return Triangulation(N, moved)


def same_rotation_orbit(t1: Triangulation, t2: Triangulation) -> bool:
    """True iff some label rotation carries t1 onto t2."""
    if t1.polygon_size != t2.polygon_size:
        raise SizeMismatch(
            f"polygon sizes differ: {t1.polygon_size} vs {t2.polygon_size}"
        )
    return any(rotate(t1, k) == t2 for k in range(t1.polygon_size))


def rotation_orbit(t: Triangulation) -> set[Triangulation]:
    """All distinct label rotations of ``t``; size divides the polygon size."""
    return {rotate(t, k) for k in range(t.polygon_size)}


def vector_to_triangulation(v) -> Triangulation:
    """Composite map from a rank-n diamond vector to a triangulation of the
    (n+3)-gon, via its Dyck path and descent encoding."""
    return realize(to_lambda(vector_to_path(v)))


def path_to_triangulation(p: DyckPath) -> Triangulation:
    """Triangulation realized by a Dyck path of length 2(n+1)."""
    return realize(to_lambda(p))
