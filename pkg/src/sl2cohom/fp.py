"""Arithmetic in F_p and enumeration of SL2(F_p) with its distinguished subgroups.

Matrices are stored with least nonnegative residues.  For bulk work a matrix
``[[a, b], [c, d]]`` is packed into the integer ``((a*p + b)*p + c)*p + d``,
whose numeric order coincides with lexicographic order on ``(a, b, c, d)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

DEFAULT_BOUND = 101


class NotPrime(ValueError):
    pass


class UnsupportedPrime(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


class DegenerateGenerators(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Prime(int):
    """An ``int`` that is known to be prime."""

    def __new__(cls, n):
        if isinstance(n, bool) or int(n) != n:
            raise NotPrime(n)
        n = int(n)
        if not is_prime(n):
            raise NotPrime(n)
        return super().__new__(cls, n)

    def __repr__(self):
        return f"Prime({int(self)})"


def make_prime(n: int) -> Prime:
    return n if isinstance(n, Prime) else Prime(n)


def check_bound(p: int, bound: int | None = None) -> None:
    bound = DEFAULT_BOUND if bound is None else bound
    if p > bound:
        raise BoundExceeded(f"p={p} exceeds enumeration bound {bound}")


def require_large(p: int) -> None:
    if p <= 3:
        raise UnsupportedPrime(f"p={p}: need p > 3")


@dataclass(frozen=True, order=True)
class FpMat:
    """A 2x2 matrix of determinant one over F_p."""

    a: int
    b: int
    c: int
    d: int
    p: int

    def __post_init__(self):
        p = self.p
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % p)
        if (self.a * self.d - self.b * self.c) % p != 1:
            raise ValueError(f"determinant is not 1 mod {p}: {self.rows()}")

    @classmethod
    def from_rows(cls, rows, p: int) -> FpMat:
        (a, b), (c, d) = rows
        return cls(a, b, c, d, p)

    @classmethod
    def identity(cls, p: int) -> FpMat:
        return cls(1, 0, 0, 1, p)

    @classmethod
    def decode(cls, code: int, p: int) -> FpMat:
        code = int(code)
        code, d = divmod(code, p)
        code, c = divmod(code, p)
        a, b = divmod(code, p)
        return cls(a, b, c, d, p)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def code(self) -> int:
        p = self.p
        return ((self.a * p + self.b) * p + self.c) * p + self.d

    def __mul__(self, other: FpMat) -> FpMat:
        if not isinstance(other, FpMat):
            return NotImplemented
        if other.p != self.p:
            raise ValueError("matrices over different fields")
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return FpMat(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.p)

    def __pow__(self, n: int) -> FpMat:
        if n < 0:
            return self.inverse() ** (-n)
        result = FpMat.identity(self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> FpMat:
        return FpMat(self.d, -self.b, -self.c, self.a, self.p)

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def order(self) -> int:
        """Multiplicative order, by repeated multiplication."""
        n, x = 1, self
        while not x.is_identity():
            x = x * self
            n += 1
        return n

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def lower_unipotent(x: int, p: int) -> FpMat:
    return FpMat(1, 0, x, 1, p)


def standard_generators(p: int) -> tuple[FpMat, FpMat, FpMat]:
    """Return ``(a2, a4, a6)``, generators of the cyclic subgroups C2, C4, C6."""
    p = make_prime(p)
    a2 = FpMat(-1, 0, 0, -1, p)
    a4 = FpMat(0, -1, 1, 0, p)
    a6 = FpMat(0, -1, 1, 1, p)
    for k, g in ((2, a2), (4, a4), (6, a6)):
        if g.order() != k:
            raise DegenerateGenerators(f"p={p}: generator of C{k} has order {g.order()}")
    return a2, a4, a6


def cyclic_subgroup(k: int, p: int) -> list[FpMat]:
    """Elements of C_k in the order 1, g, g^2, ..."""
    if k not in (2, 4, 6):
        raise ValueError(f"k must be 2, 4 or 6, got {k}")
    gen = dict(zip((2, 4, 6), standard_generators(p)))[k]
    return [gen**i for i in range(k)]


def least_primitive_root(p: int) -> int:
    p = make_prime(p)
    if p == 2:
        return 1
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("unreachable")


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def borel_generators(p: int) -> tuple[FpMat, FpMat]:
    """The unipotent [[1,1],[0,1]] and the torus element diag(g, 1/g), g the least primitive root."""
    g = least_primitive_root(p)
    return FpMat(1, 1, 0, 1, p), FpMat(g, 0, 0, pow(g, -1, p), p)


# ---------------------------------------------------------------------------
# vectorised arrays of matrices: tuples (a, b, c, d) of int64 arrays

def encode(m, p: int) -> np.ndarray:
    a, b, c, d = m
    return ((a * p + b) * p + c) * p + d


def decode(codes: np.ndarray, p: int):
    codes = np.asarray(codes, dtype=np.int64)
    rest, d = np.divmod(codes, p)
    rest, c = np.divmod(rest, p)
    a, b = np.divmod(rest, p)
    return a, b, c, d


def vmul(x, y, p: int):
    """Entrywise product of two (broadcastable) arrays of matrices."""
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def as_arrays(m: FpMat):
    return tuple(np.int64(v) for v in (m.a, m.b, m.c, m.d))


@lru_cache(maxsize=8)
def group_codes(p: int, which: str = "G") -> np.ndarray:
    """Sorted packed codes of every element of G = SL2(F_p) or of a subgroup.

    ``which`` is one of ``"G"``, ``"B"``, ``"C2"``, ``"C4"``, ``"C6"``.
    """
    p = make_prime(p)
    if which == "G":
        # a != 0: d is determined by a, b, c
        a, b, c = np.meshgrid(np.arange(1, p), np.arange(p), np.arange(p), indexing="ij")
        a, b, c = a.ravel().astype(np.int64), b.ravel().astype(np.int64), c.ravel().astype(np.int64)
        inv = np.array([0] + [pow(int(x), -1, p) for x in range(1, p)], dtype=np.int64)
        d = ((1 + b * c) % p) * inv[a] % p
        part1 = encode((a, b, c, d), p)
        # a == 0: bc = -1
        b2, d2 = np.meshgrid(np.arange(1, p), np.arange(p), indexing="ij")
        b2, d2 = b2.ravel().astype(np.int64), d2.ravel().astype(np.int64)
        c2 = (-inv[b2]) % p
        part2 = encode((np.zeros_like(b2), b2, c2, d2), p)
        out = np.sort(np.concatenate([part1, part2]))
    elif which == "B":
        a, b = np.meshgrid(np.arange(1, p), np.arange(p), indexing="ij")
        a, b = a.ravel().astype(np.int64), b.ravel().astype(np.int64)
        inv = np.array([0] + [pow(int(x), -1, p) for x in range(1, p)], dtype=np.int64)
        out = np.sort(encode((a, b, np.zeros_like(a), inv[a]), p))
    elif which in ("C2", "C4", "C6"):
        out = np.array(sorted({m.code() for m in cyclic_subgroup(int(which[1]), p)}), dtype=np.int64)
    else:
        raise ValueError(f"unknown subgroup {which!r}")
    out.setflags(write=False)
    return out


def enumerate_group(p: int, which: str = "G", bound: int | None = None) -> list[FpMat]:
    """All elements of G or of one of B, C2, C4, C6, each exactly once, in lex order."""
    p = make_prime(p)
    check_bound(p, bound)
    return [FpMat.decode(c, p) for c in group_codes(p, which).tolist()]


class Poly(Enum):
    T2_PLUS_1 = "T^2+1"
    T2_MINUS_T_PLUS_1 = "T^2-T+1"

    def __call__(self, t: int, p: int) -> int:
        if self is Poly.T2_PLUS_1:
            return (t * t + 1) % p
        return (t * t - t + 1) % p


def roots_mod_p(poly: Poly | str, p: int) -> frozenset[int]:
    """Roots of ``poly`` in F_p, by exhaustive scan."""
    poly = Poly(poly)
    p = make_prime(p)
    require_large(p)
    return frozenset(t for t in range(p) if poly(t, p) == 0)
