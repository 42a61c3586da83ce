import pytest

from dyckfrieze import (
    FriezePattern,
    complete_diamond,
    cycle_heads,
    enumerate_all,
    frieze_of_vector,
    from_cycle,
    from_quiddity,
    minimal_cycle,
    period,
    render_ascii,
    to_json_dict,
    verify,
    violations,
)
from dyckfrieze.errors import (
    FailsToClose,
    InputError,
    NonPositiveEntry,
    RangeError,
)


def test_from_quiddity_reproduces_known_band():
    fp = from_quiddity((2, 3, 1, 2, 3, 1))
    assert fp.order == 6
    assert fp.rows[2] == (2, 3, 1, 2, 3, 1)
    assert fp.rows[3] == (5, 2, 1, 5, 2, 1)
    assert fp.rows[4] == (3, 1, 2, 3, 1, 2)
    assert verify(fp)
    assert period(fp) == 3


def test_from_quiddity_order_four():
    fp = from_quiddity((1, 2, 1, 2))
    assert fp.order == 4
    assert fp.rows == (
        (0, 0, 0, 0),
        (1, 1, 1, 1),
        (1, 2, 1, 2),
        (1, 1, 1, 1),
        (0, 0, 0, 0),
    )
    assert period(fp) == 2


def test_from_quiddity_triangle_is_degenerate_but_valid():
    # the 3-gon has the empty triangulation, whose quiddity is all ones
    fp = from_quiddity((1, 1, 1))
    assert fp.order == 3
    assert verify(fp)


def test_from_quiddity_rejects_non_quiddities():
    with pytest.raises(FailsToClose):
        from_quiddity((1, 1, 1, 1))
    with pytest.raises(FailsToClose):
        from_quiddity((2, 2, 2, 2))
    with pytest.raises(NonPositiveEntry):
        from_quiddity((2, 3, 1, 1, 1))
    with pytest.raises(NonPositiveEntry):
        from_quiddity((1, 0, 1, 2))
    with pytest.raises(RangeError):
        from_quiddity((1, 2))
    with pytest.raises(InputError):
        from_quiddity((1, 2, "x", 2))


def test_from_cycle_rank_one():
    fp = from_cycle(minimal_cycle(complete_diamond((1,))))
    assert fp.order == 4
    assert fp.rows[2] == (1, 2, 1, 2)
    assert verify(fp)


def test_from_cycle_rank_three_heads():
    fp = frieze_of_vector((1, 2, 3))
    assert fp.order == 6
    assert fp.quiddity == (1, 3, 2, 1, 3, 2)
    assert period(fp) == 3


def test_from_cycle_all_ones_vector():
    c = minimal_cycle(complete_diamond((1, 1, 1)))
    assert c.p == 6
    assert cycle_heads(c) == (1, 2, 2, 2, 1, 4)
    assert verify(from_cycle(c))


def test_from_cycle_equals_from_quiddity():
    for n in range(1, 6):
        for v in enumerate_all(n):
            c = minimal_cycle(complete_diamond(v))
            heads = cycle_heads(c) * ((n + 3) // c.p)
            assert from_cycle(c) == from_quiddity(heads)


def test_member_friezes_are_column_rotations():
    for v in [(1, 1), (1, 2, 3), (2, 3, 4, 1)]:
        c = minimal_cycle(complete_diamond(v))
        base = from_cycle(c)
        N = base.order
        for k, member in enumerate(c.diamonds):
            shifted = from_cycle(minimal_cycle(member))
            for r in range(N + 1):
                assert shifted.rows[r] == tuple(
                    base.rows[r][(col + k) % N] for col in range(N)
                )


def test_verify_detects_tampering():
    fp = from_quiddity((2, 3, 1, 2, 3, 1))
    rows = [list(row) for row in fp.rows]
    rows[3][1] += 1
    bad = FriezePattern(fp.order, tuple(tuple(r) for r in rows))
    assert not verify(bad)
    report = violations(bad)
    assert any("rule fails" in msg for msg in report)


def test_verify_detects_broken_border():
    fp = from_quiddity((1, 2, 1, 2))
    rows = [list(row) for row in fp.rows]
    rows[0][0] = 1
    bad = FriezePattern(fp.order, tuple(tuple(r) for r in rows))
    assert any("zeros" in msg for msg in violations(bad))


def test_period_divides_order():
    for n in range(1, 6):
        for v in enumerate_all(n):
            fp = frieze_of_vector(v)
            assert fp.order % period(fp) == 0


def test_render_shape_and_determinism():
    fp = from_quiddity((1, 2, 1, 2))
    text = render_ascii(fp, repetitions=1)
    assert len(text.split("\n")) == 5
    assert render_ascii(fp, repetitions=1) == text
    with pytest.raises(RangeError):
        render_ascii(fp, repetitions=0)


def test_render_roundtrip_recovers_rows():
    for v in [(1,), (1, 1), (1, 2, 3), (2, 3, 4, 1)]:
        fp = frieze_of_vector(v)
        N = fp.order
        for reps in (1, 2):
            for r, line in enumerate(render_ascii(fp, reps).split("\n")):
                tokens = [int(tok) for tok in line.split()]
                assert len(tokens) == N * reps
                shift = r // 2
                recovered = tuple(tokens[(c + shift) % N] for c in range(N))
                assert recovered == fp.rows[r]


def test_json_form():
    fp = from_quiddity((1, 2, 1, 2))
    out = to_json_dict(fp)
    assert out["order"] == 4
    assert out["quiddity"] == [1, 2, 1, 2]
    assert out["rows"][0] == [0, 0, 0, 0]
    assert len(out["rows"]) == 5
