"""Finitely generated abelian groups in invariant-factor form, and Smith normal form."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

INFINITE = math.inf
OVERFLOW_LIMIT = 2**63 - 1


class InvalidOrder(ValueError):
    pass


class OverflowDetected(ArithmeticError):
    pass


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class FinAbGroup:
    """``Z^free_rank + Z/d1 + ... + Z/dm`` with ``d1 | d2 | ... | dm`` and every ``di >= 2``.

    Two values compare equal exactly when the groups are isomorphic.
    """

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(int(d) for d in self.invariant_factors))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        ds = self.invariant_factors
        if any(d < 2 for d in ds):
            raise InvalidOrder(f"invariant factors must be >= 2: {ds}")
        if any(b % a for a, b in zip(ds, ds[1:])):
            raise ValueError(f"not a divisibility chain: {ds}")

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"

    def __add__(self, other: FinAbGroup) -> FinAbGroup:
        return direct_sum(self, other)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, data: dict) -> FinAbGroup:
        return cls(int(data["free_rank"]), tuple(data["invariant_factors"]))


TRIVIAL = FinAbGroup()
Z = FinAbGroup(1)


def canonicalize(free_rank: int, cyclic_orders: Iterable[int] = ()) -> FinAbGroup:
    """Regroup a direct sum of cyclic groups into invariant-factor form."""
    orders = list(cyclic_orders)
    bad = [n for n in orders if n < 2]
    if bad:
        raise InvalidOrder(bad)
    powers: dict[int, list[int]] = defaultdict(list)
    for n in orders:
        for q, e in _factor(n).items():
            powers[q].append(q**e)
    length = max((len(v) for v in powers.values()), default=0)
    factors = [1] * length
    for pp in powers.values():
        pp.sort(reverse=True)
        for i, x in enumerate(pp):
            factors[i] *= x
    return FinAbGroup(free_rank, tuple(reversed(factors)))


def cyclic(n: int) -> FinAbGroup:
    """Z/n, with Z/1 the trivial group and Z/0 = Z."""
    if n == 0:
        return Z
    return TRIVIAL if abs(n) == 1 else canonicalize(0, [abs(n)])


def free(r: int) -> FinAbGroup:
    return FinAbGroup(r)


def direct_sum(*groups: FinAbGroup) -> FinAbGroup:
    return canonicalize(
        sum(g.free_rank for g in groups),
        [d for g in groups for d in g.invariant_factors],
    )


def elementary_divisors(g: FinAbGroup) -> list[int]:
    """Prime-power orders of the primary decomposition, sorted."""
    return sorted(q**e for d in g.invariant_factors for q, e in _factor(d).items())


def torsion(g: FinAbGroup) -> FinAbGroup:
    return FinAbGroup(0, g.invariant_factors)


def primary_part(g: FinAbGroup, q: int) -> FinAbGroup:
    """The q-primary part of the torsion subgroup."""
    parts = []
    for d in g.invariant_factors:
        x = 1
        while d % q == 0:
            d //= q
            x *= q
        if x > 1:
            parts.append(x)
    return FinAbGroup(0, tuple(parts))


def order(g: FinAbGroup):
    if g.free_rank:
        return INFINITE
    return math.prod(g.invariant_factors)


def mod_rank(g: FinAbGroup, q: int) -> int:
    """Dimension of ``g (x) Z/q`` over F_q, for q prime."""
    return g.free_rank + sum(1 for d in g.invariant_factors if d % q == 0)


def quotient_largest(g: FinAbGroup, n: int) -> FinAbGroup:
    """Quotient of a finite ``g`` by the order-n subgroup of its largest cyclic summand."""
    if not g.is_finite:
        raise ValueError("group is not finite")
    if n == 1:
        return g
    if not g.invariant_factors or g.invariant_factors[-1] % n:
        raise ValueError(f"largest cyclic summand of {g} has no subgroup of order {n}")
    *rest, top = g.invariant_factors
    return canonicalize(0, [d for d in (*rest, top // n) if d > 1])


# ---------------------------------------------------------------------------
# Smith normal form


def _check(x: int, limit: int) -> int:
    if abs(x) > limit:
        raise OverflowDetected(f"entry {x} exceeds {limit}")
    return x


def smith_normal_form(m: Sequence[Sequence[int]], limit: int = OVERFLOW_LIMIT) -> list[int]:
    """Diagonal ``d1 | d2 | ...`` (length ``min(rows, cols)``) of the Smith form of ``m``.

    Integer row and column operations only.  Any intermediate entry of
    magnitude above ``limit`` raises :class:`OverflowDetected`.
    """
    a = [[_check(int(x), limit) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(r) != cols for r in a):
        raise ValueError("ragged matrix")
    if rows == 0 or cols == 0:
        raise ValueError("matrix dimensions must be positive")

    def add_row(dst, src, f):
        a[dst] = [_check(x - f * y, limit) for x, y in zip(a[dst], a[src])]

    def add_col(dst, src, f):
        for r in a:
            r[dst] = _check(r[dst] - f * r[src], limit)

    diag = []
    for t in range(min(rows, cols)):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
            piv = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // piv
                if q:
                    add_row(i, t, q)
                done &= a[i][t] == 0
            for j in range(t + 1, cols):
                q = a[t][j] // piv
                if q:
                    add_col(j, t, q)
                done &= a[t][j] == 0
            if not done:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % piv), None)
            if bad is None:
                break
            # fold the offending row into the pivot row and reduce again
            add_row(t, bad[0], -1)
        diag.append(abs(a[t][t]))
    return diag


def cokernel(m: Sequence[Sequence[int]]) -> FinAbGroup:
    """``Z^cols`` modulo the row space of ``m``."""
    diag = smith_normal_form(m)
    cols = len(m[0])
    rank = sum(1 for d in diag if d)
    return FinAbGroup(cols - rank, tuple(d for d in diag if d > 1))
