"""Build the codouble of k(Z3), check it, and print a few comultiplications."""

from __future__ import annotations

from hopfcross import builtin_group, drinfeld_codouble, group_algebra, verify_coalgebra_axioms


def show(C, i: int) -> str:
    terms = []
    for j, k in C.comult[i].nonzero():
        c = C.field.format(C.comult.item(i, j, k))
        terms.append(("" if c == "1" else f"{c} ") + f"{C.basis[j]} (x) {C.basis[k]}")
    return " + ".join(terms)


def main() -> None:
    H = group_algebra(builtin_group("Z3"))
    D = drinfeld_codouble(H)
    rep = verify_coalgebra_axioms(D)
    print(f"{D.name}: dim {D.dim}, {len(rep)} checks, {len(rep.failures())} failed")
    for i in (0, 4, 8):
        print(f"  Delta({D.basis[i]}) = {show(D, i)}")


if __name__ == "__main__":
    main()
