"""CT(k(S3)): a seeded sample of the Turaev axioms and the closed-form comparison."""

from __future__ import annotations

import sys
from collections import Counter

from hopfcross import TuraevFamily, builtin_group, verify_turaev_axioms
from hopfcross.suites import group_fixture, suite_oracle


def main(sample: int = 300, seed: int = 7) -> None:
    fx = group_fixture("S3")
    rep = verify_turaev_axioms(TuraevFamily(fx.H), fx.pairs, sample=sample, seed=seed)
    print("header:", rep.header)
    for axiom, n in sorted(Counter(e.axiom for e in rep).items()):
        print(f"  {n:6d}  {axiom}")
    print(f"{len(rep)} checks, {len(rep.failures())} failed")
    ora = suite_oracle(builtin_group("S3"))
    print(f"closed forms: {len(ora)} tensors compared, {len(ora.failures())} differ")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:3]))
