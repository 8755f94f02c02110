"""Canonical YD modules over Sweedler's algebra: braiding, its inverse, and duals."""

from __future__ import annotations

import itertools

from hopfcross.suites import canonical_modules, sweedler_fixture_set
from hopfcross.tensor import ExactArray, compose
from hopfcross.yd import braiding, braiding_inverse, left_dual, right_dual, verify_hexagons, verify_rigidity, verify_yd


def main() -> None:
    fx = sweedler_fixture_set()
    mods = canonical_modules(fx.H, fx.pairs)
    print(f"{len(mods)} modules over {fx.H.name}: {', '.join(M.name for M in mods)}")
    M, N = mods[1], mods[2]
    c = braiding(M, N)
    print(f"c_{{{M.name},{N.name}}} =")
    for row in c.scalars():
        print("  " + " ".join(f"{M.field.format(x):>3}" for x in row))
    print("c o c^-1 = id:", compose(c, braiding_inverse(M, N)) == ExactArray.identity(c.shape[0]))
    hex_ok = all(verify_hexagons(U, V, W).ok for U, V, W in itertools.product(mods[:3], repeat=3))
    print("hexagons on the first three modules:", hex_ok)
    for side, dual in (("left", left_dual), ("right", right_dual)):
        D = dual(M)
        print(f"{side} dual of {M.name}: YD {verify_yd(D).ok}, zigzags {verify_rigidity(M, D, side).ok}")


if __name__ == "__main__":
    main()
