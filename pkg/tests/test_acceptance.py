"""Exit criteria.  Every criterion is exact; timing budgets are asserted where stated."""

import time
from collections import Counter
from fractions import Fraction

from sl2cohom import cosets
from sl2cohom.abelian import canonicalize, order, torsion
from sl2cohom.checks import mv_order_check, n_of_p_oracle, pgamma0_even_oracle
from sl2cohom.cosets import (
    build_quotient_graph,
    decompose,
    equivariant_euler_characteristic,
    verify_decomposition,
)
from sl2cohom.fp import Poly, is_prime, roots_mod_p
from sl2cohom.tables import (
    gamma0_cohomology,
    h1_sl2zp,
    n_of_p,
    pgamma0_cohomology,
    sl2zp_cohomology,
)

BRUTE = [p for p in range(5, 102) if is_prime(p)]
CLOSED = [p for p in range(5, 500) if is_prime(p)]


def test_criterion_01_coset_decomposition_c2():
    cosets._coset_space.cache_clear()
    cosets._orbit_labels.cache_clear()
    start = time.perf_counter()
    for p in BRUTE:
        dec = decompose(p, 2)
        assert len(dec.orbits) == p + 1, p
        assert all(o.stabilizer_order == 2 for o in dec.orbits), p
    assert time.perf_counter() - start <= 120


def test_criterion_02_double_cosets_c4_c6():
    for p in BRUTE:
        for k, poly in ((4, Poly.T2_PLUS_1), (6, Poly.T2_MINUS_T_PLUS_1)):
            dec = decompose(p, k)
            if k == 4:
                want = Counter({4: 2, 2: (p - 1) // 2}) if p % 4 == 1 else Counter({2: (p + 1) // 2})
            else:
                want = Counter({6: 2, 2: (p - 1) // 3}) if p % 3 == 1 else Counter({2: (p + 1) // 3})
            assert dec.stabilizer_orders() == want, (p, k)
            assert dec.fixed_roots() == roots_mod_p(poly, p), (p, k)
            assert verify_decomposition(dec).ok


def test_criterion_03_n_of_p():
    assert (n_of_p(13), n_of_p(11), n_of_p(5), n_of_p(7)) == (1, 3, 1, 1)
    for p in BRUTE:
        assert n_of_p_oracle(p) == n_of_p(p), p


def test_criterion_04_pgamma0_oracle():
    spots = {13: [6, 6], 5: [2, 2], 7: [3, 3], 11: []}
    for p, orders in spots.items():
        assert pgamma0_even_oracle(p) == canonicalize(0, orders)
    for p in BRUTE:
        oracle = pgamma0_even_oracle(p)
        for d in (2, 4, 6):
            assert oracle == pgamma0_cohomology(p, d), p


def test_criterion_05_equivariant_euler():
    for p in BRUTE:
        assert equivariant_euler_characteristic(p) == Fraction(-(p + 1), 12), p


def test_criterion_06_quotient_graph():
    g5 = build_quotient_graph(5)
    assert (g5.num_vertices, g5.num_edges, g5.euler_characteristic()) == (50, 60, -10)
    for p in BRUTE:
        g = build_quotient_graph(p)
        assert g.is_connected(), p
        assert g.euler_characteristic() == -p * (p * p - 1) // 12, p


def test_criterion_07_mayer_vietoris_identities():
    for p, lhs in ((13, 1728), (11, 1152), (7, 864)):
        assert f"= {lhs}, " in mv_order_check(p, 4).detail
        assert f"= {lhs};" in mv_order_check(p, 4).detail
    start = time.perf_counter()
    for p in CLOSED:
        for d in (4, 6, 8):
            r = mv_order_check(p, d)
            assert r.ok, r.detail
    assert time.perf_counter() - start <= 1.0


def test_criterion_08_central_extension_doubling():
    for p in CLOSED:
        for d in (2, 4, 6, 8):
            assert order(gamma0_cohomology(p, d)) == 2 * order(pgamma0_cohomology(p, d)), (p, d)


def test_criterion_09_universal_coefficients():
    assert torsion(sl2zp_cohomology(2, 2)) == h1_sl2zp(2) == canonicalize(0, [3])
    assert torsion(sl2zp_cohomology(3, 2)) == h1_sl2zp(3) == canonicalize(0, [4])
    for p in CLOSED:
        assert torsion(sl2zp_cohomology(p, 2)) == h1_sl2zp(p) == canonicalize(0, [12]), p


def test_criterion_10_published_spot_values(capsys):
    from sl2cohom.cli import main

    def rendered(group, p, degree):
        main(["table", "--group", group, "--p", str(p), "--degrees", f"{degree}..{degree}"])
        out = capsys.readouterr().out
        return out.splitlines()[1]

    for d in (4, 6, 8):
        assert rendered("sl2zp", 2, d) == f"H^{d} = Z/3 + Z/24"
    assert rendered("sl2zp", 3, 2) == "H^2 = Z + Z/4"
    assert rendered("sl2zp", 11, 4) == "H^4 = Z/2 + Z/2 + Z/12 + Z/12"
    assert rendered("sl2zp", 11, 3) == "H^3 = 0"
    assert rendered("sl2zp", 13, 3) == "H^3 = Z/6"
