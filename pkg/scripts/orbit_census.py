"""Tabulate B-orbit data and the brute-force invariants for every prime in a range.

    python scripts/orbit_census.py --to 61 > census.csv
"""

import argparse
import csv
import sys

from sl2cohom.checks import n_of_p_oracle, pgamma0_even_oracle
from sl2cohom.cosets import build_quotient_graph, decompose, equivariant_euler_characteristic
from sl2cohom.fp import is_prime
from sl2cohom.tables import n_of_p

parser = argparse.ArgumentParser()
parser.add_argument("--from", dest="lo", type=int, default=5)
parser.add_argument("--to", dest="hi", type=int, default=61)
args = parser.parse_args()

writer = csv.writer(sys.stdout)
writer.writerow(["p", "p_mod_12", "n2", "n4", "n6", "fixed4", "fixed6", "N_oracle", "N_formula",
                 "pgamma0_even", "chi_equivariant", "betti1"])
for p in range(max(args.lo, 5), args.hi + 1):
    if not is_prime(p):
        continue
    decs = {k: decompose(p, k) for k in (2, 4, 6)}
    writer.writerow([
        p, p % 12,
        *(len(decs[k].orbits) for k in (2, 4, 6)),
        " ".join(map(str, sorted(decs[4].fixed_roots()))),
        " ".join(map(str, sorted(decs[6].fixed_roots()))),
        n_of_p_oracle(p), n_of_p(p),
        pgamma0_even_oracle(p),
        equivariant_euler_characteristic(p),
        build_quotient_graph(p).first_betti_number(),
    ])
