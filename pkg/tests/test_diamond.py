import pytest

from dyckfrieze import (
    Cycle,
    Diamond,
    check_head_form,
    complete_diamond,
    couple_next,
    cycle_heads,
    enumerate_all,
    minimal_cycle,
)
from dyckfrieze.diamond import _head_form_ok
from dyckfrieze.errors import (
    InputError,
    NonExactDivision,
    NonPositiveEntry,
    RangeError,
)
from oracles import unimodular_holds


def test_complete_smallest_rank():
    d = complete_diamond((1,))
    assert d.col2 == (2,)


def test_complete_known_columns():
    cases = {
        (1, 1, 1): (2, 3, 4),
        (1, 2, 3): (3, 5, 2),
        (2, 3, 4, 1): (2, 3, 1, 2),
        (2, 3, 4, 1, 1): (2, 3, 1, 2, 3),
    }
    for col1, col2 in cases.items():
        d = complete_diamond(col1)
        assert d.col2 == col2
        assert unimodular_holds(d.col1, d.col2)


def test_complete_rejects_non_exact_division():
    with pytest.raises(NonExactDivision) as info:
        complete_diamond((2, 2))
    assert info.value.index == 1


def test_complete_rejects_bad_entries():
    with pytest.raises(NonPositiveEntry):
        complete_diamond((1, 0, 1))
    with pytest.raises(InputError):
        complete_diamond(())
    with pytest.raises(InputError):
        complete_diamond((1, "x"))


def test_direct_construction_checks_rule():
    with pytest.raises(InputError):
        Diamond((1,), (3,))
    with pytest.raises(InputError):
        Diamond((1, 2), (3,))


def test_rule_holds_exactly_on_all_enumerated():
    for n in range(1, 6):
        for v in enumerate_all(n):
            d = complete_diamond(v)
            assert unimodular_holds(d.col1, d.col2)
            assert all(x >= 1 for x in d.col2)


def test_head_form_known_diamonds():
    assert check_head_form(complete_diamond((2, 3, 4, 1))) is True
    assert check_head_form(complete_diamond((1, 1))) is True


def test_head_form_rejects_impossible_triple():
    # no (a, m) in range reproduces top entries (3, 3) with second entry 8
    assert _head_form_ok(3, 3, 8, 2) is False


def test_head_form_requires_rank_two():
    with pytest.raises(RangeError):
        check_head_form(complete_diamond((1,)))


def test_head_form_holds_on_all_enumerated():
    for n in range(2, 7):
        assert all(check_head_form(complete_diamond(v)) for v in enumerate_all(n))


def test_couple_next_swaps_rank_one_pair():
    a = complete_diamond((1,))
    b = couple_next(a)
    assert (b.col1, b.col2) == ((2,), (1,))
    assert couple_next(b) == a


def test_couple_next_known_rank_three():
    d = complete_diamond((1, 2, 3))
    nxt = couple_next(d)
    assert nxt.col1 == (3, 5, 2)
    assert nxt.col2 == (2, 1, 1)
    assert d.col2 == nxt.col1


def test_minimal_cycle_rank_one():
    c = minimal_cycle(complete_diamond((1,)))
    assert c.p == 2
    assert [d.col1 for d in c.diamonds] == [(1,), (2,)]
    assert cycle_heads(c) == (1, 2)


def test_minimal_cycle_rank_two():
    c = minimal_cycle(complete_diamond((1, 1)))
    assert c.p == 5
    assert [d.col1 for d in c.diamonds] == [(1, 1), (2, 3), (2, 1), (1, 2), (3, 2)]
    assert cycle_heads(c) == (1, 2, 2, 1, 3)


def test_minimal_cycle_rank_three():
    c = minimal_cycle(complete_diamond((1, 2, 3)))
    assert c.p == 3
    assert [d.col1 for d in c.diamonds] == [(1, 2, 3), (3, 5, 2), (2, 1, 1)]
    assert cycle_heads(c) == (1, 3, 2)


def test_cycle_heads_repeat_to_full_period():
    for v in [(1,), (1, 1), (1, 2, 3), (1, 1, 1)]:
        c = minimal_cycle(complete_diamond(v))
        n = c.n
        full = cycle_heads(c) * ((n + 3) // c.p)
        assert len(full) == n + 3


def test_cycle_period_divides_order():
    for n in range(1, 6):
        for v in enumerate_all(n):
            c = minimal_cycle(complete_diamond(v))
            assert (n + 3) % c.p == 0


def test_coupling_power_is_identity_on_cycle():
    for n in range(1, 6):
        for v in enumerate_all(n):
            c = minimal_cycle(complete_diamond(v))
            for start in c.diamonds:
                d = start
                for _ in range(c.p):
                    d = couple_next(d)
                assert d == start


def test_cycle_start_is_immaterial():
    for n in range(1, 5):
        for v in enumerate_all(n):
            c = minimal_cycle(complete_diamond(v))
            for member in c.diamonds:
                again = minimal_cycle(member)
                assert set(again.diamonds) == set(c.diamonds)
                assert again.p == c.p


def test_cycle_constructor_rejects_uncoupled_members():
    a = complete_diamond((1,))
    with pytest.raises(InputError):
        Cycle((a, a))
    with pytest.raises(InputError):
        Cycle((a,))  # not coupled to itself: col2 != col1
