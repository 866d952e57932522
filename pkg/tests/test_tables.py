import pytest
from hypothesis import given, strategies as st

from sl2cohom.abelian import TRIVIAL, Z, FinAbGroup, canonicalize, cyclic
from sl2cohom.fp import NotPrime, UnsupportedPrime, is_prime
from sl2cohom.tables import (
    CohomologyTable,
    cohomology_table,
    gamma0_table,
    h1_sl2zp,
    n_of_p,
    pgamma0_table,
    q_and_a,
    residue_class,
    sl2z_table,
    sl2zp_table,
)

PRIMES = [p for p in range(5, 500) if is_prime(p)]
primes = st.sampled_from(PRIMES)


def g(rank=0, *orders):
    return canonicalize(rank, orders)


def test_residue_class():
    assert [residue_class(p) for p in (2, 3, 5, 7, 11, 13)] == [2, 3, 5, 7, 11, 1]
    with pytest.raises(NotPrime):
        residue_class(9)


@given(primes)
def test_residue_class_consistent_with_mod_4_and_3(p):
    r = residue_class(p)
    assert r in (1, 5, 7, 11)
    assert r % 4 == p % 4 and r % 3 == p % 3


def test_n_of_p_examples():
    assert n_of_p(13) == 1
    assert n_of_p(11) == 3
    assert n_of_p(5) == 1
    assert n_of_p(7) == 1
    with pytest.raises(UnsupportedPrime):
        n_of_p(3)


@given(primes)
def test_n_of_p_is_genus_like(p):
    # one free generator per 6 units of index, corrected by elliptic points
    n = n_of_p(p)
    assert 6 * n == p + {1: -7, 5: 1, 7: -1, 11: 7}[p % 12]
    assert n >= 0


def test_pgamma0_examples():
    assert pgamma0_table(13, 4)[4] == g(0, 6, 6)
    assert pgamma0_table(11, 6)[6] == TRIVIAL
    assert pgamma0_table(5, 3)[3] == TRIVIAL
    assert pgamma0_table(7, 2)[2] == g(0, 3, 3)
    assert pgamma0_table(13)[1] == Z
    assert pgamma0_table(11)[1] == FinAbGroup(3)


def test_pgamma0_p2():
    t = pgamma0_table(2, 5)
    assert t.entries == (Z, Z, cyclic(2), TRIVIAL, cyclic(2), TRIVIAL)
    with pytest.raises(UnsupportedPrime):
        pgamma0_table(3)


def test_gamma0_examples():
    assert gamma0_table(13, 4)[4] == g(0, 12, 6)
    assert gamma0_table(11, 5)[5] == g(0, 2, 2, 2)
    assert gamma0_table(2, 6)[6] == cyclic(4)
    assert gamma0_table(3, 1)[1] == Z
    assert gamma0_table(5)[2] == g(0, 4, 2)
    assert gamma0_table(7)[2] == g(0, 3, 6)
    assert gamma0_table(11)[2] == cyclic(2)


def test_gamma0_small_primes():
    assert gamma0_table(3, 5).entries == (Z, Z, cyclic(6), cyclic(2), cyclic(6), cyclic(2))
    assert gamma0_table(2, 5).entries == (Z, Z, cyclic(4), cyclic(2), cyclic(4), cyclic(2))


def test_q_and_a():
    assert (q_and_a(13).q, q_and_a(13).a) == (12, 1)
    assert (q_and_a(5).q, q_and_a(5).a) == (4, 3)
    assert (q_and_a(11).q, q_and_a(11).a) == (2, 6)
    assert (q_and_a(7).q, q_and_a(7).a) == (6, 2)


@given(primes)
def test_q_is_largest_factor_of_h2(p):
    assert gamma0_table(p, 2)[2].invariant_factors[-1] == q_and_a(p).q


def test_sl2z():
    t = sl2z_table(7)
    assert t[2] == cyclic(12)
    assert t[7] == TRIVIAL
    assert t[0] == Z


def test_h1():
    assert h1_sl2zp(2) == cyclic(3)
    assert h1_sl2zp(3) == cyclic(4)
    assert h1_sl2zp(97) == cyclic(12)


def test_sl2zp_examples():
    assert sl2zp_table(13, 2)[2] == g(1, 12)
    assert sl2zp_table(11, 4)[4] == g(0, 2, 2, 12, 12)
    assert sl2zp_table(7, 4)[4] == g(0, 12, 4)
    assert sl2zp_table(2, 6)[6] == g(0, 24, 3)
    assert sl2zp_table(5, 3)[3] == cyclic(2)
    assert sl2zp_table(5, 4)[4] == g(0, 2, 12, 3)


def test_sl2zp_degree_one_vanishes():
    for p in (2, 3, 5, 7, 11, 13):
        assert sl2zp_table(p, 1)[1] == TRIVIAL


def test_sl2zp_small_primes():
    assert sl2zp_table(3, 6).entries == (Z, TRIVIAL, g(1, 4), TRIVIAL, g(0, 12, 4), TRIVIAL, g(0, 12, 4))
    assert sl2zp_table(2, 6).entries == (Z, TRIVIAL, g(1, 3), TRIVIAL, g(0, 24, 3), TRIVIAL, g(0, 24, 3))


@given(primes)
def test_sl2zp_h2_rank(p):
    h2 = sl2zp_table(p, 2)[2]
    assert h2 == g(n_of_p(p), 12)


@given(primes, st.sampled_from(["gamma0", "pgamma0", "sl2zp"]))
def test_tables_are_periodic(p, group):
    t = cohomology_table(group, p, 12)
    assert t.respects_period()
    assert t[0] == Z
    for d in range(t.periodic_above + 1, 11):
        assert t[d] == t[d + 2]


@given(primes, st.integers(0, 40))
def test_lookup_beyond_stored_range(p, d):
    short = sl2zp_table(p, 6)
    long = sl2zp_table(p, 40)
    assert short[d] == long[d]


def test_lookup_rejects_unperiodic_gap():
    t = sl2zp_table(13, 0)
    with pytest.raises(IndexError):
        t[2]


def test_table_json_roundtrip():
    t = gamma0_table(13, 5)
    assert CohomologyTable.from_json(t.to_json()) == t


def test_cohomology_table_dispatch():
    assert cohomology_table("sl2z", None, 2) == sl2z_table(2)
    with pytest.raises(ValueError):
        cohomology_table("gamma0", None)
    with pytest.raises(ValueError):
        cohomology_table("gamma1", 5)
