#!/usr/bin/env python3
"""Building, verifying and rendering closed integral frieze patterns.

A frieze is completed downward from its quiddity row and must close with a
row of ones at exactly the right depth; that succeeds precisely for the
quiddity sequences of polygon triangulations.  Coupling cycles generate
the same patterns column by column.
"""

from dyckfrieze import (
    complete_diamond,
    frieze_of_vector,
    from_cycle,
    from_quiddity,
    minimal_cycle,
    period,
    render_ascii,
    verify,
)


def main():
    fp = from_quiddity((2, 3, 1, 2, 3, 1))
    print("frieze completed from quiddity (2,3,1,2,3,1):")
    print(render_ascii(fp, repetitions=2))
    print(f"verify: {verify(fp)}   period: {period(fp)}")
    print()

    cycle = minimal_cycle(complete_diamond((1, 2, 3)))
    same = from_cycle(cycle)
    print("the same construction, from the coupling cycle of (1,2,3):")
    print(render_ascii(frieze_of_vector((1, 2, 3)), repetitions=2))
    print(f"matches from_quiddity on repeated heads: "
          f"{same == from_quiddity((1, 3, 2, 1, 3, 2))}")
    print()

    print("a sequence that is not a quiddity fails to close:")
    try:
        from_quiddity((2, 2, 2, 2))
    except Exception as exc:
        print(f"  (2,2,2,2): {exc}")


if __name__ == "__main__":
    main()
