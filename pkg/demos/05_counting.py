#!/usr/bin/env python3
"""Exhaustive counting: Catalan numbers, the ballot triangle, peak counts.

Everything here is exact and cross-checked by full enumeration at desk
scale.
"""

from dyckfrieze import all_paths, ballot_count, catalan, enumerate_all, peaks


def main():
    print("rank n, diamond vectors, catalan(n+1):")
    for n in range(1, 9):
        count = len(enumerate_all(n))
        print(f"  n={n}: {count:5d}  (catalan: {catalan(n + 1)})")
    print()

    print("ballot triangle rows (sums are Catalan numbers):")
    for n in range(1, 7):
        row = [ballot_count(n, z) for z in range(n + 1, 0, -1)]
        print(f"  n={n}: {row}  sum={sum(row)}")
    print()

    print("paths of length 2n with exactly n-1 peaks (= n(n-1)/2):")
    for n in range(2, 9):
        count = sum(1 for p in all_paths(n) if peaks(p) == n - 1)
        print(f"  n={n}: {count:3d}  (formula: {n * (n - 1) // 2})")


if __name__ == "__main__":
    main()
