#!/usr/bin/env python3
"""Generate offline b-file snapshots for the comparison tests.

Values come from closed forms only (no recursions), so the fixtures are an
independent route against the library's table builders.
"""
import os
import sys
from math import comb

OUT = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")
ROWS = 45


def losanitsch(n, k):
    if k < 0 or k > n:
        return 0
    if n % 2 == 0 and k % 2 == 1:
        half, rem = divmod(comb(n, k), 2)
        assert rem == 0
        return half
    half, rem = divmod(comb(n, k) + comb(n // 2, k // 2), 2)
    assert rem == 0
    return half


def comb0(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def even_count(n, k):
    if k < 0 or k > n:
        return 0
    m = (n + 1) // 2
    return sum(comb0(m, 2 * j) * comb0(n // 2, k - 2 * j) for j in range(m // 2 + 1))


def odd_count(n, k):
    return comb(n, k) - even_count(n, k)


def lbar(n, k):
    return comb(n, k) - losanitsch(n, k)


def by_rows(f, first_row=0):
    return [f(n, k) for n in range(first_row, ROWS + 1) for k in range(n + 1)]


def f1(n):
    return sum(losanitsch(n - 1 - k, k) for k in range(n) if 2 * k <= n - 1)


def write_bfile(name, values):
    path = os.path.join(OUT, name + ".txt")
    with open(path, "w") as fh:
        for i, v in enumerate(values):
            fh.write(f"{i} {v}\n")
    print(f"wrote {path} ({len(values)} entries)")


def main():
    os.makedirs(OUT, exist_ok=True)
    # desk checks against the printed small rows before writing anything
    assert [losanitsch(5, k) for k in range(6)] == [1, 3, 6, 6, 3, 1]
    assert [even_count(5, k) for k in range(6)] == [1, 2, 4, 6, 3, 0]
    assert [odd_count(5, k) for k in range(6)] == [0, 3, 6, 4, 2, 1]
    assert all(even_count(n, k) + odd_count(n, k) == comb(n, k)
               for n in range(ROWS + 1) for k in range(n + 1))
    assert [f1(n) for n in range(9)] == [0, 1, 1, 2, 2, 4, 5, 9, 12]

    write_bfile("A034851", by_rows(losanitsch))
    write_bfile("A282011", by_rows(even_count))
    write_bfile("A159916", by_rows(odd_count))
    # A034852 snapshot starts at triangle row 2 (rows 0 and 1 vanish), so the
    # aligned comparison against a row-0 linearization needs index shift +3
    write_bfile("A034852", by_rows(lbar, first_row=2))
    # scalar sequence starts at the first nonzero term f1(1), shift +1
    write_bfile("A102526", [f1(n) for n in range(1, 61)])
    return 0


if __name__ == "__main__":
    sys.exit(main())
