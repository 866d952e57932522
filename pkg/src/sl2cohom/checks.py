"""Brute-force oracles for the closed-form tables, and the consistency suite.

The oracles read cohomology off the B-orbit structure of the finite graph
with vertices G/C4, G/C6 and edges G/C2; they never consult ``tables``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import tables
from .abelian import FinAbGroup, canonicalize, mod_rank, order, quotient_largest, torsion
from .cosets import (
    build_quotient_graph,
    decompose,
    equivariant_euler_characteristic,
    orbit_counts,
    verify_decomposition,
)
from .fp import DEFAULT_BOUND, check_bound, make_prime, require_large

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


def n_of_p_oracle(p: int, bound: int | None = None) -> int:
    """rank H^1(Gamma_0(p)) = (#edge orbits) - (#vertex orbits) + 1."""
    n2, n4, n6 = orbit_counts(p, bound)
    return n2 - n4 - n6 + 1


def pgamma0_even_oracle(p: int, bound: int | None = None) -> FinAbGroup:
    """Even-degree H^*(PGamma_0(p)): one Z/(s/2) per vertex orbit with stabilizer order s."""
    require_large(make_prime(p))
    orders = []
    for k in (4, 6):
        for o in decompose(p, k, bound).orbits:
            if o.stabilizer_order > 2:
                orders.append(o.stabilizer_order // 2)
    return canonicalize(0, orders)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def __str__(self):
        return f"{self.status:<8}{self.name:<24}{self.detail}".rstrip()


def _result(name, ok, detail):
    return CheckResult(name, PASS if ok else FAIL, detail)


def mv_order_check(p: int, degree: int) -> CheckResult:
    """Order and quotient identities of the Mayer-Vietoris sequence at an even degree >= 4.

    |H^d(SL2(Z[1/p]))| * |H^d(Gamma_0(p))| = 2^N(p) * 144 * |H^{d+1}(SL2(Z[1/p]))|
    and H^{d+1}(SL2(Z[1/p])) = H^d(Gamma_0(p)) / Q(p).
    """
    require_large(make_prime(p))
    if degree < 4 or degree % 2:
        raise ValueError(f"degree must be even and >= 4, got {degree}")
    c = tables.q_and_a(p)
    even = tables.sl2zp_cohomology(p, degree)
    odd = tables.sl2zp_cohomology(p, degree + 1)
    g0 = tables.gamma0_cohomology(p, degree)
    lhs = order(even) * order(g0)
    rhs = 2**c.n * 144 * order(odd)
    quotient = quotient_largest(g0, c.q)
    ok = lhs == rhs and quotient == odd
    detail = f"deg {degree}: {order(even)}*{order(g0)} = {lhs}, 2^{c.n}*144*{order(odd)} = {rhs}; " \
             f"H^{degree}(G0)/Q = {quotient} vs H^{degree + 1} = {odd}"
    return _result("mv-order", ok, detail)


# --- individual checks -----------------------------------------------------------

def check_decomposition(p, bound):
    reports = [verify_decomposition(decompose(p, k, bound)) for k in (2, 4, 6)]
    bad = [str(r) for r in reports if not r.ok]
    counts = ", ".join(f"k={r.k}: {sum(r.observed.values())}" for r in reports)
    return _result("decomposition", not bad, "; ".join(bad) or counts)


def check_n_of_p(p, bound):
    oracle, formula = n_of_p_oracle(p, bound), tables.n_of_p(p)
    return _result("n-of-p", oracle == formula, f"oracle {oracle}, formula {formula}")


def check_pgamma0_oracle(p, bound):
    oracle = pgamma0_even_oracle(p, bound)
    closed = tables.pgamma0_cohomology(p, 2)
    return _result("pgamma0-oracle", oracle == closed, f"oracle {oracle}, table {closed}")


def check_euler(p, bound):
    chi = equivariant_euler_characteristic(p, bound)
    want = Fraction(-(p + 1), 12)
    return _result("euler", chi == want, f"{chi} vs {want}")


def check_graph(p, bound):
    g = build_quotient_graph(p, bound)
    want = -p * (p * p - 1) // 12
    ok = g.is_connected() and g.euler_characteristic() == want
    return _result("graph", ok, f"V={g.num_vertices} E={g.num_edges} chi={g.euler_characteristic()} "
                                f"(want {want}), components={g.num_components()}")


def check_central_extension(p, bound=None):
    out = []
    for d in (2, 4, 6):
        a = order(tables.gamma0_cohomology(p, d))
        b = order(tables.pgamma0_cohomology(p, d))
        out.append((d, a, b, a == 2 * b))
    detail = ", ".join(f"deg {d}: {a} = 2*{b}" for d, a, b, _ in out)
    return _result("central-extension", all(x[3] for x in out), detail)


def check_odd_rank(p, bound=None):
    n = tables.n_of_p(p)
    h1 = tables.gamma0_cohomology(p, 1)
    ranks = [mod_rank(tables.gamma0_cohomology(p, d), 2) for d in (3, 5)]
    ok = h1.free_rank == n and all(r == n for r in ranks) \
        and all(set(tables.gamma0_cohomology(p, d).invariant_factors) <= {2} for d in (3, 5))
    return _result("odd-rank", ok, f"N={n}, Z/2-ranks in degrees 3,5: {ranks}")


def check_universal_coefficients(p, bound=None):
    t = torsion(tables.sl2zp_cohomology(p, 2))
    h1 = tables.h1_sl2zp(p)
    return _result("universal-coefficients", t == h1, f"torsion H^2 = {t}, H_1 = {h1}")


def check_mv_order(p, bound=None):
    results = [mv_order_check(p, d) for d in (4, 6)]
    return _result("mv-order", all(r.ok for r in results), " | ".join(r.detail for r in results))


def check_q_of_p(p, bound=None):
    c = tables.q_and_a(p)
    top = tables.gamma0_cohomology(p, 2).invariant_factors[-1]
    return _result("q-of-p", top == c.q and c.a * c.q == 12, f"Q={c.q}, A={c.a}, largest factor of H^2(G0) = {top}")


def check_two_rank(p, bound=None):
    n = tables.n_of_p(p)
    ranks = [mod_rank(tables.sl2zp_cohomology(p, d), 2) for d in (4, 6)]
    return _result("two-rank", all(r == n + 1 for r in ranks), f"dim H^4 (x) Z/2 = {ranks[0]}, N+1 = {n + 1}")


def check_periodicity(p, bound=None):
    ts = [tables.sl2z_table(10), tables.gamma0_table(p, 10), tables.sl2zp_table(p, 10)]
    if p != 3:
        ts.append(tables.pgamma0_table(p, 10))
    bad = [t.group for t in ts if not t.respects_period()]
    return _result("periodicity", not bad, "failing: " + ", ".join(bad) if bad else f"{len(ts)} tables")


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int, int], CheckResult]
    brute_force: bool
    small_primes: bool = False  # also meaningful for p in {2, 3}


CHECKS = (
    Check("decomposition", check_decomposition, True),
    Check("n-of-p", check_n_of_p, True),
    Check("pgamma0-oracle", check_pgamma0_oracle, True),
    Check("euler", check_euler, True),
    Check("graph", check_graph, True),
    Check("central-extension", check_central_extension, False),
    Check("odd-rank", check_odd_rank, False),
    Check("universal-coefficients", check_universal_coefficients, False, small_primes=True),
    Check("mv-order", check_mv_order, False),
    Check("q-of-p", check_q_of_p, False),
    Check("two-rank", check_two_rank, False),
    Check("periodicity", check_periodicity, False, small_primes=True),
)
CHECK_NAMES = tuple(c.name for c in CHECKS)


def select_checks(spec: str | None) -> list[Check]:
    """Resolve ``all``, ``closed-form``, ``brute-force`` or a comma-separated list of names."""
    if spec is None or spec == "all":
        return list(CHECKS)
    if spec == "closed-form":
        return [c for c in CHECKS if not c.brute_force]
    if spec == "brute-force":
        return [c for c in CHECKS if c.brute_force]
    names = [s.strip() for s in spec.split(",") if s.strip()]
    unknown = [n for n in names if n not in CHECK_NAMES]
    if unknown or not names:
        raise ValueError(f"unknown checks: {', '.join(unknown) or spec!r}")
    return [c for c in CHECKS if c.name in names]


@dataclass
class SuiteReport:
    p: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.results)

    def __str__(self):
        return "\n".join(str(r) for r in self.results)


def consistency_suite(p: int, checks: str | list[Check] | None = None, bound: int | None = None) -> SuiteReport:
    """Run the selected checks for one prime, in fixed order.

    Brute-force checks above the enumeration bound, and checks that need
    p > 3, are reported as SKIPPED.
    """
    p = make_prime(p)
    bound = DEFAULT_BOUND if bound is None else bound
    selected = checks if isinstance(checks, list) else select_checks(checks)
    report = SuiteReport(int(p))
    for c in selected:
        if p <= 3 and not c.small_primes:
            report.results.append(CheckResult(c.name, SKIPPED, "needs p > 3"))
            continue
        if c.brute_force:
            try:
                check_bound(p, bound)
            except ValueError as exc:
                report.results.append(CheckResult(c.name, SKIPPED, str(exc)))
                continue
        try:
            report.results.append(c.run(p, bound))
        except (ValueError, ArithmeticError, AssertionError) as exc:
            report.results.append(CheckResult(c.name, FAIL, f"{type(exc).__name__}: {exc}"))
    return report
