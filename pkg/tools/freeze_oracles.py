"""Compute reference values with the independent oracles in tests/oracles.py
and write them to tests/frozen_oracles.json.

Run once before changing the implementation; the test suite compares the
package against these frozen numbers.

    python3 tools/freeze_oracles.py
"""

import json
import sys
from fractions import Fraction
from itertools import combinations_with_replacement
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402


def key(lam):
    return ",".join(map(str, lam))


def box_partitions(k, w):
    out = []
    for m in range(k * w + 1):
        out += [lam for lam in oracles.partitions_of(m, w) if len(lam) <= k]
    return out


def main():
    frozen = {}
    frozen["syt"] = {key(lam): oracles.syt_brute(lam) for m in range(1, 9) for lam in oracles.partitions_of(m)}

    products = {}
    for k, n in ((2, 4), (2, 5), (3, 6)):
        parts = [lam for lam in box_partitions(k, n - k) if lam]
        for lam, mu in combinations_with_replacement(parts, 2):
            if sum(lam) + sum(mu) > k * (n - k):
                continue
            prod_ = oracles.schubert_product_oracle(lam, mu, k, n)
            products[f"{k},{n}|{key(lam)}|{key(mu)}"] = {key(nu): c for nu, c in prod_.items()}
    frozen["schubert_products"] = products

    frozen["weyl_dim_gl3"] = {key(lam): oracles.weyl_dim_ssyt(lam, 3) for lam in box_partitions(3, 3)}
    frozen["weyl_dim_gl4"] = {key(lam): oracles.weyl_dim_ssyt(lam, 4) for lam in box_partitions(4, 3)}

    intervals = {}
    for q1 in range(1, 8):
        for p1 in range(-q1, q1 + 1):
            for q2 in range(1, 8):
                for p2 in range(-q2, q2 + 1):
                    a, b = Fraction(p1, q1), Fraction(p2, q2)
                    if a < b:
                        intervals[f"{a}|{b}"] = str(oracles.simplest_by_scan(a, b))
    frozen["min_denominator"] = intervals

    net = json.loads((ROOT / "src/mukaiverify/data/reference_net.json").read_text())
    mats = [[[int(x) for x in row] for row in f] for f in net["forms"]]
    spaces = oracles.isotropic_3spaces_f2(mats)
    frozen["reference_net_mod2"] = {
        "isotropic_3spaces": len(spaces),
        "isotropic_4spaces_exist": any(oracles.extends_to_isotropic_4space(mats, s) for s in spaces),
        "isotropic_3spaces_sorted": sorted(sorted(s) for s in spaces),
    }
    frozen["gr_counts_f2"] = {f"{k},7": oracles.subspace_count_ordered_bases(7, k, 2) for k in range(8)}

    (ROOT / "tests/frozen_oracles.json").write_text(json.dumps(frozen, indent=0, sort_keys=True) + "\n")
    print("syt", len(frozen["syt"]), "products", len(products), "intervals", len(intervals),
          "F2 3-spaces", len(spaces))


if __name__ == "__main__":
    main()
