#!/usr/bin/env python3
"""Regenerate the OEIS b-file fixtures under fixtures/.

Every sequence is computed from its defining formula with Python integers,
independently of the C++ library, so the committed files can serve as an
external reference for `boolcube fixtures`.

    python3 tools/gen_fixtures.py fixtures/
"""

import math
import sys
from pathlib import Path


def popcount(x):
    return bin(x).count("1")


def a000120(terms):
    return [popcount(i) for i in range(terms)]


def a294648(max_n):
    # rows n = 1..max_n, each row is 0..2^n-1 sorted by (weight, value)
    out = []
    for n in range(1, max_n + 1):
        out.extend(sorted(range(1 << n), key=lambda i: (popcount(i), i)))
    return out


def a305860(max_n):
    # rows n = 1..max_n: the layer indicator of weight k read as a 2^n-bit
    # number with coordinate 0 as the most significant digit
    out = []
    for n in range(1, max_n + 1):
        size = 1 << n
        for k in range(n + 1):
            value = 0
            for i in range(size):
                value = (value << 1) | (1 if popcount(i) == k else 0)
            out.append(value)
    return out


def a051459(max_n):
    return [math.prod(math.factorial(math.comb(n, k)) for k in range(n + 1))
            for n in range(max_n + 1)]


def a001142(max_n):
    return [math.prod(math.comb(n, k) for k in range(n + 1))
            for n in range(max_n + 1)]


def a000142(max_n):
    return [math.factorial(n) for n in range(max_n + 1)]


def write_bfile(path, name, description, offset, values):
    with open(path, "w") as fh:
        fh.write(f"# {name}: {description}\n")
        fh.write(f"# offset {offset}, {len(values)} terms\n")
        for i, v in enumerate(values):
            fh.write(f"{offset + i} {v}\n")


def main(argv):
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    out = Path(argv[1] if len(argv) > 1 else "fixtures")
    out.mkdir(parents=True, exist_ok=True)
    write_bfile(out / "b000120.txt", "A000120",
                "binary weight of n", 0, a000120(1 << 12))
    write_bfile(out / "b294648.txt", "A294648",
                "weight-lexicographic order of {0,1}^n, rows n=1..12", 1,
                a294648(12))
    write_bfile(out / "b305860.txt", "A305860",
                "serial numbers of the layer masks, rows n=1..9", 1,
                a305860(9))
    write_bfile(out / "b051459.txt", "A051459",
                "prod_k C(n,k)!", 0, a051459(10))
    write_bfile(out / "b001142.txt", "A001142",
                "prod_k C(n,k)", 0, a001142(40))
    write_bfile(out / "b000142.txt", "A000142",
                "n!", 0, a000142(40))


if __name__ == "__main__":
    main(sys.argv)
