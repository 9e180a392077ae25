#!/usr/bin/env python3
"""Regenerate src/ranklab/data/moduli.txt.

For q in {2, 3, 5} and extension degrees 1..24, finds the monic irreducible
polynomial of degree e over GF(q) with the smallest packed coefficient value
whose residue class x generates the multiplicative group.  Primitivity is
proved exactly: the order of x is q^e - 1, checked against every maximal
proper divisor using sympy's integer factorization.

Run from the repository root:

    PYTHONPATH=src python3 tools/gen_modulus_table.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from sympy import factorint  # offline tool only; not a package dependency

from ranklab.field import (
    _monic_polys,
    _poly_powmod,
    is_irreducible_rabin,
)

QS = (2, 3, 5)
MAX_E = 24
OUT = os.path.join(os.path.dirname(__file__), "..", "src", "ranklab",
                   "data", "moduli.txt")


def is_primitive(modulus, q, e, factors):
    order = q ** e - 1
    x = (0, 1)
    if _poly_powmod(x, order, modulus, q) != (1,):
        return False
    for p in factors:
        if _poly_powmod(x, order // p, modulus, q) == (1,):
            return False
    return True


def smallest_primitive(q, e):
    factors = sorted(factorint(q ** e - 1))
    for cand in _monic_polys(q, e):
        if cand[0] == 0:
            continue  # divisible by x
        if not is_irreducible_rabin(cand, q):
            continue
        if is_primitive(cand, q, e, factors):
            return cand
    raise RuntimeError(f"no primitive polynomial found for q={q} e={e}")


def main():
    lines = ["# q e c_0 c_1 ... c_e  (monic primitive irreducible over GF(q))"]
    for q in QS:
        for e in range(1, MAX_E + 1):
            poly = smallest_primitive(q, e)
            lines.append(" ".join(str(v) for v in (q, e, *poly)))
            print(f"GF({q}^{e}): {poly}")
    with open(OUT, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
