"""Closed-form integral cohomology of SL2(Z), Gamma_0(p), PGamma_0(p) and SL2(Z[1/p]).

Every table is determined by the residue class of p mod 12 for p > 3, with
separate entries for p = 2 and p = 3.  Extension problems are not solved
here; their answers are recorded as data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import TRIVIAL, Z, FinAbGroup, canonicalize, free
from .fp import UnsupportedPrime, make_prime, require_large

GROUPS = ("sl2z", "gamma0", "pgamma0", "sl2zp")

# upper bound keeping every closed-form quantity comfortably inside 63 bits
SANITY_LIMIT = 2**61


def residue_class(p: int) -> int:
    """p mod 12; one of 1, 5, 7, 11 for p > 3, or p itself for p in {2, 3}."""
    p = make_prime(p)
    if p > SANITY_LIMIT:
        raise UnsupportedPrime(f"p={p} beyond sanity limit")
    return p % 12


def _g(free_rank=0, *orders):
    return canonicalize(free_rank, orders)


def n_of_p(p: int) -> int:
    """Rank of H^1(Gamma_0(p), Z)."""
    require_large(make_prime(p))
    shift = {1: -7, 5: 1, 7: -1, 11: 7}[residue_class(p)]
    return (p + shift) // 6


@dataclass(frozen=True)
class DerivedConstants:
    n: int  # rank of H^1(Gamma_0(p))
    q: int  # order of the largest cyclic subgroup of H^2(Gamma_0(p))
    a: int  # 12 / q

    def __post_init__(self):
        assert self.a * self.q == 12


def q_and_a(p: int) -> DerivedConstants:
    require_large(make_prime(p))
    q = {1: 12, 5: 4, 7: 6, 11: 2}[residue_class(p)]
    return DerivedConstants(n_of_p(p), q, 12 // q)


def h1_sl2zp(p: int) -> FinAbGroup:
    """First *homology* H_1(SL2(Z[1/p]), Z), the abelianization."""
    p = make_prime(p)
    return {2: _g(0, 3), 3: _g(0, 4)}.get(int(p), _g(0, 12))


# --- degree-wise closed forms ------------------------------------------------

def sl2z_cohomology(degree: int) -> FinAbGroup:
    _check_degree(degree)
    if degree == 0:
        return Z
    return _g(0, 12) if degree % 2 == 0 else TRIVIAL


_PGAMMA0_EVEN = {1: (6, 6), 5: (2, 2), 7: (3, 3), 11: ()}


def pgamma0_cohomology(p: int, degree: int) -> FinAbGroup:
    _check_degree(degree)
    p = make_prime(p)
    if p == 3:
        raise UnsupportedPrime("no PGamma_0(3) table")
    if p == 2:
        if degree <= 1:
            return Z
        return _g(0, 2) if degree % 2 == 0 else TRIVIAL
    if degree == 0:
        return Z
    if degree == 1:
        return free(n_of_p(p))
    if degree % 2:
        return TRIVIAL
    return _g(0, *_PGAMMA0_EVEN[residue_class(p)])


_GAMMA0_EVEN = {1: (12, 6), 5: (4, 2), 7: (3, 6), 11: (2,)}


def gamma0_cohomology(p: int, degree: int) -> FinAbGroup:
    _check_degree(degree)
    p = make_prime(p)
    if degree == 0:
        return Z
    if p in (2, 3):
        if degree == 1:
            return Z
        if degree % 2 == 0:
            return _g(0, 4 if p == 2 else 6)
        return _g(0, 2)
    n = n_of_p(p)
    if degree == 1:
        return free(n)
    if degree % 2 == 0:
        return _g(0, *_GAMMA0_EVEN[residue_class(p)])
    return _g(0, *[2] * n)


# (exponent of Z/2 as a function of p, extra cyclic orders) for degrees 2i >= 4
_SL2ZP_EVEN = {
    1: (lambda p: (p - 7) // 6, (12,)),
    5: (lambda p: (p + 1) // 6, (12, 3)),
    7: (lambda p: (p - 7) // 6, (12, 4)),
    11: (lambda p: (p + 1) // 6, (12, 12)),
}
_SL2ZP_ODD = {1: (6,), 5: (2,), 7: (3,), 11: ()}


def sl2zp_cohomology(p: int, degree: int) -> FinAbGroup:
    _check_degree(degree)
    p = make_prime(p)
    if degree == 0:
        return Z
    if degree == 1:
        return TRIVIAL
    if p == 2:
        if degree % 2:
            return TRIVIAL
        return _g(1, 3) if degree == 2 else _g(0, 24, 3)
    if p == 3:
        if degree % 2:
            return TRIVIAL
        return _g(1, 4) if degree == 2 else _g(0, 12, 4)
    r = residue_class(p)
    if degree == 2:
        return _g(n_of_p(p), 12)
    if degree % 2:
        return _g(0, *_SL2ZP_ODD[r])
    twos, extra = _SL2ZP_EVEN[r]
    return _g(0, *[2] * twos(p), *extra)


def _check_degree(degree: int) -> None:
    if degree < 0:
        raise ValueError(f"negative degree {degree}")


# --- tables --------------------------------------------------------------------

@dataclass(frozen=True)
class CohomologyTable:
    """H^d(group, Z) for d = 0..len(entries)-1.

    ``periodic_above`` is the degree d0 such that entries at d and d+2 agree
    for every d > d0.
    """

    group: str
    p: int | None
    entries: tuple[FinAbGroup, ...]
    periodic_above: int

    def __getitem__(self, degree: int) -> FinAbGroup:
        if 0 <= degree < len(self.entries):
            return self.entries[degree]
        d = degree
        while d >= len(self.entries):
            d -= 2
        if d > self.periodic_above:
            return self.entries[d]
        raise IndexError(degree)

    @property
    def max_degree(self) -> int:
        return len(self.entries) - 1

    def respects_period(self) -> bool:
        e = self.entries
        return all(e[d] == e[d + 2] for d in range(self.periodic_above + 1, len(e) - 2))

    def to_json(self, degrees=None) -> dict:
        degrees = range(len(self.entries)) if degrees is None else degrees
        return {
            "p": self.p,
            "group": self.group,
            "periodic_above": self.periodic_above,
            "cohomology": [{"degree": d, **self[d].to_json()} for d in degrees],
        }

    @classmethod
    def from_json(cls, data: dict) -> CohomologyTable:
        rows = sorted(data["cohomology"], key=lambda r: r["degree"])
        if [r["degree"] for r in rows] != list(range(len(rows))):
            raise ValueError("table JSON must list degrees 0..n contiguously")
        return cls(data["group"], data["p"], tuple(FinAbGroup.from_json(r) for r in rows),
                   data["periodic_above"])


def _table(group, p, fn, max_degree, d0):
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    return CohomologyTable(group, p, tuple(fn(d) for d in range(max_degree + 1)), d0)


def sl2z_table(max_degree: int = 8) -> CohomologyTable:
    return _table("sl2z", None, sl2z_cohomology, max_degree, 0)


def gamma0_table(p: int, max_degree: int = 8) -> CohomologyTable:
    p = make_prime(p)
    return _table("gamma0", int(p), lambda d: gamma0_cohomology(p, d), max_degree, 1)


def pgamma0_table(p: int, max_degree: int = 8) -> CohomologyTable:
    p = make_prime(p)
    if p == 3:
        raise UnsupportedPrime("no PGamma_0(3) table")
    return _table("pgamma0", int(p), lambda d: pgamma0_cohomology(p, d), max_degree, 1)


def sl2zp_table(p: int, max_degree: int = 8) -> CohomologyTable:
    p = make_prime(p)
    return _table("sl2zp", int(p), lambda d: sl2zp_cohomology(p, d), max_degree, 2)


def cohomology_table(group: str, p: int | None = None, max_degree: int = 8) -> CohomologyTable:
    if group == "sl2z":
        return sl2z_table(max_degree)
    if p is None:
        raise ValueError(f"group {group!r} needs a prime p")
    builders = {"gamma0": gamma0_table, "pgamma0": pgamma0_table, "sl2zp": sl2zp_table}
    try:
        return builders[group](p, max_degree)
    except KeyError:
        raise ValueError(f"unknown group {group!r}") from None
