import pytest

from dyckfrieze import (
    ballot_count,
    catalan,
    companion_vector,
    complete_diamond,
    cycle_paths,
    enumerate_all,
    expand,
    minimal_cycle,
    same_rotation_orbit,
    seed_vector,
    vector_to_triangulation,
)
from dyckfrieze.errors import IndexOutOfRange, LastEntryNotOne, RangeError

RANK3_VECTORS = [
    (1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 3), (1, 3, 2), (2, 1, 1), (2, 1, 2),
    (2, 3, 1), (2, 3, 4), (2, 5, 3), (3, 2, 1), (3, 2, 3), (3, 5, 2), (4, 3, 2),
]

BALLOT_TRIANGLE = {
    1: (1, 1),
    2: (1, 2, 2),
    3: (1, 3, 5, 5),
    4: (1, 4, 9, 14, 14),
    5: (1, 5, 14, 28, 42, 42),
    6: (1, 6, 20, 48, 90, 132, 132),
}


def test_seed_vectors_known():
    assert seed_vector(3, 1) == (1, 1, 1)
    assert seed_vector(3, 4) == (4, 3, 2)
    assert seed_vector(1, 1) == (1,)
    assert seed_vector(1, 2) == (2,)
    assert seed_vector(4, 3) == (3, 2, 1, 1)


def test_seed_vector_range():
    with pytest.raises(RangeError):
        seed_vector(3, 0)
    with pytest.raises(RangeError):
        seed_vector(3, 5)
    with pytest.raises(RangeError):
        seed_vector(0, 1)


def test_companion_vectors_known():
    assert companion_vector(4, 3) == (1, 1, 2, 3)
    assert companion_vector(1, 1) == (2,)
    assert complete_diamond(seed_vector(4, 3)).col2 == (1, 1, 2, 3)


def test_seed_companion_coupling():
    for n in range(1, 9):
        for z in range(1, n + 2):
            assert complete_diamond(seed_vector(n, z)).col2 == companion_vector(n, z)


def test_expand_known():
    assert expand((1, 2, 1), 2) == (1, 2, 3)
    assert expand((2, 3, 1), 1) == (2, 5, 3)
    assert expand((1, 1, 1), 1) == (1, 2, 1)


def test_expand_errors():
    with pytest.raises(LastEntryNotOne):
        expand((1, 2, 3), 1)
    with pytest.raises(IndexOutOfRange):
        expand((1, 1, 1), 0)
    with pytest.raises(IndexOutOfRange):
        expand((1, 1, 1), 3)


def test_expand_preserves_completability():
    for n in range(2, 7):
        for v in enumerate_all(n):
            if v[-1] != 1:
                continue
            for i in range(1, n):
                w = expand(v, i)
                d = complete_diamond(w)
                assert all(x >= 1 for x in d.col2)


def test_enumerate_smallest_ranks():
    assert enumerate_all(1) == ((1,), (2,))
    assert enumerate_all(3) == tuple(RANK3_VECTORS)
    assert len(enumerate_all(5)) == 132


def test_enumerate_sorted_and_counted():
    for n in range(1, 8):
        vs = enumerate_all(n)
        assert list(vs) == sorted(vs)
        assert len(vs) == catalan(n + 1)
        assert len(set(vs)) == len(vs)


def test_ballot_base_cases():
    assert ballot_count(1, 1) == 1
    assert ballot_count(1, 2) == 1


def test_ballot_rank_three_row():
    row = tuple(ballot_count(3, z) for z in (4, 3, 2, 1))
    assert row == (1, 3, 5, 5)
    assert sum(row) == 14


def test_ballot_triangle_rows():
    for n, expected in BALLOT_TRIANGLE.items():
        assert tuple(ballot_count(n, z) for z in range(n + 1, 0, -1)) == expected


def test_ballot_row_sums_are_catalan():
    for n in range(1, 11):
        assert sum(ballot_count(n, z) for z in range(1, n + 2)) == catalan(n + 1)


def test_ballot_range():
    with pytest.raises(RangeError):
        ballot_count(3, 0)
    with pytest.raises(RangeError):
        ballot_count(3, 5)


def test_cycle_paths_known():
    words = [p.word for p in cycle_paths((1, 2, 3))]
    assert words == ["UDUUDUDD", "UUUDUDDD", "UUDDUDUD"]
    assert all(len(w) == 8 for w in words)
    assert sorted(p.word for p in cycle_paths((1,))) == ["UDUD", "UUDD"]


def test_cycle_paths_sit_in_one_rotation_orbit():
    for n in range(1, 6):
        for v in enumerate_all(n):
            c = minimal_cycle(complete_diamond(v))
            paths = cycle_paths(v)
            assert len(paths) == c.p
            tris = [vector_to_triangulation(d.col1) for d in c.diamonds]
            assert all(same_rotation_orbit(tris[0], t) for t in tris[1:])
