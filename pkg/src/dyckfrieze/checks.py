"""Cross-module invariant suite for a given rank.

Each check exercises one structural guarantee over the full rank-n
enumeration: counting, both bijections, cycle periods, frieze validity,
and the orbit/quiddity consistency between cycles and triangulations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diamond import complete_diamond, cycle_heads, minimal_cycle
from .dyck import all_paths, catalan, path_to_vector, vector_to_path
from .enumeration import ballot_count, enumerate_all
from .frieze import from_cycle, from_quiddity, verify
from .triangulation import quiddity, rotation_orbit, vector_to_triangulation


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _rotations(seq):
    n = len(seq)
    return {tuple(seq[(c + k) % n] for c in range(n)) for k in range(n)}


def run_checks(n: int) -> list[CheckResult]:
    """Run every rank-n check and report one result per check."""
    results = []
    vectors = enumerate_all(n)
    expected = catalan(n + 1)

    results.append(
        CheckResult(
            "enumeration_count",
            len(vectors) == expected,
            f"count={len(vectors)} expected={expected}",
        )
    )

    paths = [vector_to_path(v) for v in vectors]
    words = [p.word for p in paths]
    all_words = {p.word for p in all_paths(n + 1)}
    results.append(
        CheckResult(
            "path_map_injective",
            len(set(words)) == len(words),
            f"distinct={len(set(words))} of {len(words)}",
        )
    )
    results.append(
        CheckResult(
            "path_map_image_complete",
            set(words) == all_words,
            f"image={len(set(words))} paths={len(all_words)}",
        )
    )
    results.append(
        CheckResult(
            "path_map_roundtrip",
            all(path_to_vector(p, n) == v for v, p in zip(vectors, paths)),
        )
    )

    cycles = {v: minimal_cycle(complete_diamond(v)) for v in vectors}
    results.append(
        CheckResult(
            "cycle_period_divides",
            all((n + 3) % c.p == 0 for c in cycles.values()),
            f"order={n + 3}",
        )
    )
    results.append(
        CheckResult(
            "frieze_from_cycle_valid",
            all(verify(from_cycle(c)) for c in cycles.values()),
        )
    )

    tris = {v: vector_to_triangulation(v) for v in vectors}
    results.append(
        CheckResult(
            "triangulation_map_injective",
            len(set(tris.values())) == expected,
            f"distinct={len(set(tris.values()))} expected={expected}",
        )
    )

    quiddity_ok = True
    orbit_ok = True
    closure_ok = True
    for v, cycle in cycles.items():
        heads = cycle_heads(cycle)
        q = quiddity(tris[v])
        if tuple(heads) * ((n + 3) // cycle.p) not in _rotations(q):
            quiddity_ok = False
        member_images = {vector_to_triangulation(d.col1) for d in cycle.diamonds}
        if member_images != rotation_orbit(tris[v]) or len(member_images) != cycle.p:
            orbit_ok = False
    for t in tris.values():
        if not verify(from_quiddity(quiddity(t))):
            closure_ok = False
    results.append(CheckResult("quiddity_matches_heads", quiddity_ok))
    results.append(CheckResult("cycle_orbit_consistent", orbit_ok))
    results.append(CheckResult("quiddity_friezes_close", closure_ok))

    results.append(
        CheckResult(
            "ballot_row_sum",
            sum(ballot_count(n, z) for z in range(1, n + 2)) == expected,
            f"expected={expected}",
        )
    )
    return results
