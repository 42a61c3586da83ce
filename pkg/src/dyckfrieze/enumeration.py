"""Seed vectors, the expansion move, exhaustive generation of diamond
vectors, and ballot-number counting.

Generation is a breadth-first closure of the n+1 seed vectors under the
expansion move, deduplicated and emitted in sorted order so output is
deterministic.  The closure has exactly catalan(n+1) members, one per Dyck
path of length 2(n+1).
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .diamond import Vector, complete_diamond, minimal_cycle
from .dyck import DyckPath, vector_to_path
from .errors import IndexOutOfRange, LastEntryNotOne, RangeError


def seed_vector(n: int, z: int) -> Vector:
    """The vector (z, z-1, ..., 2, 1, ..., 1) of rank n, for z in 1..n+1."""
    _check_range(n, z)
    return tuple(z + 1 - i if i < z else 1 for i in range(1, n + 1))


def companion_vector(n: int, z: int) -> Vector:
    """First column of the diamond coupled to the rank-n seed: ones up to
    position z, then 2, 3, ... afterwards."""
    _check_range(n, z)
    return tuple(1 if i < z else i + 2 - z for i in range(1, n + 1))


def _check_range(n: int, z: int) -> None:
    if n < 1:
        raise RangeError(f"rank {n} must be >= 1")
    if not 1 <= z <= n + 1:
        raise RangeError(f"z={z} outside 1..{n + 1}")


def expand(v, i: int) -> Vector:
    """Expansion move at position i: insert the sum of neighbors i and i+1
    after position i and drop the trailing 1.

    Requires the last entry to be 1 and 1 <= i < n; the result is again
    associated to a positive integral diamond.
    """
    v = tuple(v)
    n = len(v)
    if v[-1] != 1:
        raise LastEntryNotOne(f"vector {v} does not end in 1")
    if not 1 <= i < n:
        raise IndexOutOfRange(f"position {i} not in 1..{n - 1}")
    return v[:i] + (v[i - 1] + v[i],) + v[i:-1]


@lru_cache(maxsize=None)
def enumerate_all(n: int) -> tuple[Vector, ...]:
    """All rank-n diamond vectors, sorted lexicographically.

    BFS closure of the seed vectors under ``expand`` at every legal
    position; cardinality is catalan(n+1).
    """
    if n < 1:
        raise RangeError(f"rank {n} must be >= 1")
    seeds = [seed_vector(n, z) for z in range(1, n + 2)]
    seen = set(seeds)
    queue = deque(seeds)
    while queue:
        v = queue.popleft()
        if v[-1] != 1:
            continue
        for i in range(1, n):
            w = expand(v, i)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def ballot_count(n: int, z: int) -> int:
    """Expansion-history count f(n, z); the rows form the Catalan triangle
    (ballot numbers) and sum to catalan(n+1)."""
    _check_range(n, z)
    if n == 1:
        return 1
    lo = 1 if z == 1 else z - 1
    return sum(ballot_count(n - 1, i) for i in range(lo, n + 1))


def cycle_paths(v) -> tuple[DyckPath, ...]:
    """Dyck paths of the members of the minimal cycle through ``v``, in
    cycle order; one path per member, p in total."""
    cycle = minimal_cycle(complete_diamond(v))
    return tuple(vector_to_path(d.col1) for d in cycle.diamonds)
