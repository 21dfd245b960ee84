#!/usr/bin/env python3
"""Survey the cyclic and metaplectic classification over odd moduli.

For each odd n up to a bound, prints the number of cyclic classes (2^s),
class representatives with their Jacobi sign descriptors, the metaplectic
count 2^(s+1), and whether the categories on Z_n are quantum doubles.

Usage: python3 scripts/survey_classification.py [--max-n 105]
"""

from __future__ import annotations

import argparse

from modcat.cyclic import build_cyclic, canonical_invariant, classify, is_quantum_double
from modcat.metaplectic import count_metaplectic
from modcat.numthy import factorize


def describe(n: int) -> str:
    reps = classify(n)
    parts = []
    for k in reps:
        signs = "".join(
            "+" if s > 0 else "-" for _, s in canonical_invariant(n, k).factors
        )
        parts.append(f"{k}:{signs}" if signs else str(k))
    meta = count_metaplectic(n) if n >= 3 else "-"
    double = "yes" if is_quantum_double(build_cyclic(n, 1)) else "no"
    fac = "*".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in factorize(n)
    ) or "1"
    return (
        f"{n:>5}  {fac:>12}  {len(reps):>7}  {meta!s:>11}  {double:>6}   "
        + ", ".join(parts)
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=105)
    args = parser.parse_args()

    print(f"{'n':>5}  {'factors':>12}  {'classes':>7}  {'metaplectic':>11}  "
          f"{'double':>6}   representatives (k: signs per prime power)")
    for n in range(1, args.max_n + 1, 2):
        print(describe(n))


if __name__ == "__main__":
    main()
