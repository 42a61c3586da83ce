#!/usr/bin/env python3
"""Walk through diamond completion and coupling cycles.

A diamond vector is the first column of a two-column staircase satisfying
the unimodular rule; the second column follows by exact division.  Feeding
the second column back in as a new first column walks a cycle whose length
divides n + 3.
"""

from dyckfrieze import complete_diamond, couple_next, cycle_heads, minimal_cycle


def show_cycle(vector):
    d = complete_diamond(vector)
    print(f"vector {vector} completes to second column {d.col2}")
    cycle = minimal_cycle(d)
    print(f"  minimal cycle has period p={cycle.p} (n+3 = {cycle.n + 3})")
    for t, member in enumerate(cycle.diamonds):
        print(f"  member {t}: {member.col1} | {member.col2}")
    print(f"  heads (future quiddity): {cycle_heads(cycle)}")
    print()


def main():
    print("== smallest rank: the two rank-1 diamonds swap with each other ==")
    a = complete_diamond((1,))
    b = couple_next(a)
    print(f"  (1)|(2)  ->  {b.col1}|{b.col2}  ->  back to {couple_next(b).col1}")
    print()

    print("== cycles of a few vectors ==")
    show_cycle((1, 1))
    show_cycle((1, 2, 3))
    show_cycle((2, 3, 4, 1))

    print("== a vector that completes to nothing ==")
    try:
        complete_diamond((2, 2))
    except Exception as exc:
        print(f"  (2,2) fails: {exc}")


if __name__ == "__main__":
    main()
