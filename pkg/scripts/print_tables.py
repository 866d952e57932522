"""Print H^0..H^d of SL2(Z), Gamma_0(p), PGamma_0(p) and SL2(Z[1/p]) for a few primes.

    python scripts/print_tables.py 2 3 5 7 11 13 --degree 6
"""

import argparse

from sl2cohom.tables import gamma0_table, pgamma0_table, sl2z_table, sl2zp_table

parser = argparse.ArgumentParser()
parser.add_argument("primes", type=int, nargs="*", default=[2, 3, 5, 7, 11, 13])
parser.add_argument("--degree", type=int, default=6)
args = parser.parse_args()

d = args.degree
print("SL2(Z):", " | ".join(map(str, sl2z_table(d).entries)))
for p in args.primes:
    print(f"\np = {p}  (p mod 12 = {p % 12})")
    rows = [("Gamma0", gamma0_table(p, d)), ("SL2(Z[1/p])", sl2zp_table(p, d))]
    if p != 3:
        rows.insert(1, ("PGamma0", pgamma0_table(p, d)))
    for name, t in rows:
        print(f"  {name:<12}" + " | ".join(f"{x}" for x in t.entries))
