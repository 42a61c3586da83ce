#!/usr/bin/env python3
"""Dyck paths, their two vector encodings, and the map from diamond vectors.

The profile encoding counts Us before each D; the descent encoding counts
Ds before each U (read from the far end).  Greedy coordinate reduction
turns a rank-n diamond vector into the profile of a path of length 2(n+1),
bijectively.
"""

from dyckfrieze import (
    enumerate_all,
    parse_path,
    path_to_vector,
    peaks,
    reduce_coordinate,
    support,
    to_lambda,
    to_v_vector,
    unitary_shift,
    vector_to_path,
)


def main():
    p = parse_path("UDUDUUDD")
    print(f"path {p}: peaks={peaks(p)} support={sorted(support(p))}")
    print(f"  profile encoding: {to_v_vector(p)}")
    print(f"  descent encoding: {to_lambda(p)}")
    print(f"  shift at block 1: {unitary_shift(p, 1)} (involution: "
          f"{unitary_shift(unitary_shift(p, 1), 1) == p})")
    print()

    u = (14, 52, 4, 23, 9, 2)
    reduced = tuple(reduce_coordinate(u, i) for i in range(1, len(u) + 1))
    print(f"greedy reduction of {u}: {reduced}")
    print()

    v = (2, 3, 4, 1)
    path = vector_to_path(v)
    print(f"diamond vector {v} -> path {path}")
    print(f"  and back: {path_to_vector(path, len(v))}")
    print()

    n = 3
    print(f"the rank-{n} vectors map onto all paths of length {2 * (n + 1)}:")
    for vec in enumerate_all(n):
        print(f"  {vec} -> {vector_to_path(vec)}")


if __name__ == "__main__":
    main()
