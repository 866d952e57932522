"""Coset spaces G/C_k, the left action of B on them, and the quotient graph.

B-orbits on G/C_k are the double cosets B\\G/C_k.  A coset ``g C_k`` is
represented by the lexicographically least element of ``g C_k``; a coset space
is the sorted array of packed codes of those representatives.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .fp import (
    FpMat,
    Poly,
    as_arrays,
    borel_generators,
    check_bound,
    cyclic_subgroup,
    decode,
    encode,
    group_codes,
    make_prime,
    require_large,
    roots_mod_p,
    vmul,
)

ROOT_POLY = {4: Poly.T2_PLUS_1, 6: Poly.T2_MINUS_T_PLUS_1}


@dataclass(frozen=True, eq=False)
class CosetSpace:
    p: int
    k: int
    reps: np.ndarray  # sorted packed codes of canonical representatives

    def __len__(self):
        return len(self.reps)

    def representatives(self) -> list[FpMat]:
        return [FpMat.decode(c, self.p) for c in self.reps.tolist()]

    def canonical(self, mats) -> np.ndarray:
        """Packed canonical representative of ``m C_k`` for an array of matrices ``m``."""
        return _canonical(mats, self.p, self.k)

    def index(self, mats) -> np.ndarray:
        """Position in ``reps`` of the coset ``m C_k``."""
        codes = self.canonical(mats)
        idx = np.searchsorted(self.reps, codes)
        if np.any(idx >= len(self.reps)) or np.any(self.reps[np.minimum(idx, len(self.reps) - 1)] != codes):
            raise AssertionError("coset representative not found")
        return idx

    def index_of(self, m: FpMat) -> int:
        return int(self.index(as_arrays(m)))


def _canonical(mats, p: int, k: int) -> np.ndarray:
    best = None
    for c in cyclic_subgroup(k, p):
        codes = encode(vmul(mats, as_arrays(c), p), p)
        best = codes if best is None else np.minimum(best, codes)
    return best


@lru_cache(maxsize=16)
def _coset_space(p: int, k: int) -> CosetSpace:
    g = decode(group_codes(p, "G"), p)
    reps = np.unique(_canonical(g, p, k))
    reps.setflags(write=False)
    return CosetSpace(p, k, reps)


def build_coset_space(p: int, k: int, bound: int | None = None) -> CosetSpace:
    p = make_prime(p)
    if k not in (2, 4, 6):
        raise ValueError(f"k must be 2, 4 or 6, got {k}")
    check_bound(p, bound)
    if k != 2:
        require_large(p)
    space = _coset_space(int(p), k)
    assert len(space) == p * (p * p - 1) // k
    return space


def borel_right_cosets(p: int, bound: int | None = None) -> np.ndarray:
    """Canonical representatives of the right cosets B\\G (least element of each ``B g``).

    Costs |B| passes over G; intended for small p.
    """
    p = make_prime(p)
    check_bound(p, bound)
    g = decode(group_codes(p, "G"), p)
    best = None
    for code in group_codes(p, "B").tolist():
        codes = encode(vmul(as_arrays(FpMat.decode(code, p)), g, p), p)
        best = codes if best is None else np.minimum(best, codes)
    return np.unique(best)


@dataclass(frozen=True)
class Orbit:
    representative: FpMat
    size: int
    stabilizer_order: int
    fixed_root: int | None = None
    singular: bool = False


@dataclass(frozen=True)
class OrbitDecomposition:
    p: int
    k: int
    orbits: tuple[Orbit, ...]

    def stabilizer_orders(self) -> Counter:
        return Counter(o.stabilizer_order for o in self.orbits)

    def fixed_roots(self) -> frozenset[int]:
        return frozenset(o.fixed_root for o in self.orbits if o.fixed_root is not None)


def _action_permutations(space: CosetSpace) -> list[np.ndarray]:
    reps = decode(space.reps, space.p)
    return [space.index(vmul(as_arrays(b), reps, space.p)) for b in borel_generators(space.p)]


@lru_cache(maxsize=16)
def _orbit_labels(space: CosetSpace) -> np.ndarray:
    """Orbit label per coset; labels are numbered by first (lex least) member."""
    n = len(space)
    perms = _action_permutations(space)
    src = np.concatenate([np.arange(n)] * len(perms))
    dst = np.concatenate(perms)
    adj = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    _, labels = connected_components(adj, directed=True, connection="weak")
    # renumber so that label order follows the lex order of each orbit's least coset
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    return rank[labels]


def orbits_by_bfs(space: CosetSpace) -> list[list[int]]:
    """Plain breadth-first orbit enumeration over coset indices.

    Independent of the sparse-graph route in :func:`decompose_under_B`; slow,
    so meant for cross-checks at small p.
    """
    p, k = space.p, space.k
    gens = borel_generators(p)
    ck = cyclic_subgroup(k, p)
    lookup = {c: i for i, c in enumerate(space.reps.tolist())}

    def canon(m):
        return min((m * c).code() for c in ck)

    seen = [False] * len(space)
    orbits = []
    for start, code in enumerate(space.reps.tolist()):
        if seen[start]:
            continue
        seen[start] = True
        orbit, queue = [start], deque([FpMat.decode(code, p)])
        while queue:
            m = queue.popleft()
            for b in gens:
                j = lookup[canon(b * m)]
                if not seen[j]:
                    seen[j] = True
                    orbit.append(j)
                    queue.append(FpMat.decode(space.reps[j], p))
        orbits.append(sorted(orbit))
    return orbits


def stabilizer_order_slow(space: CosetSpace, rep: FpMat) -> int:
    """|{b in B : b rep C_k = rep C_k}| by enumerating B."""
    p = space.p
    b = decode(group_codes(p, "B"), p)
    target = space.canonical(as_arrays(rep))
    return int(np.count_nonzero(space.canonical(vmul(b, as_arrays(rep), p)) == target))


def decompose_under_B(space: CosetSpace) -> OrbitDecomposition:
    p, k = space.p, space.k
    order_b = p * (p - 1)
    labels = _orbit_labels(space)
    sizes = np.bincount(labels)
    _, first = np.unique(labels, return_index=True)

    roots_by_label: dict[int, list[int]] = {}
    singular_label = None
    if k in (4, 6):
        xs = np.arange(p, dtype=np.int64)
        lower = (np.ones_like(xs), np.zeros_like(xs), xs, np.ones_like(xs))
        for x, lab in enumerate(labels[space.index(lower)].tolist()):
            roots_by_label.setdefault(lab, []).append(x)
    if k == 6:
        singular_label = int(labels[space.index_of(FpMat.identity(p))])

    orbits = []
    for lab, size in enumerate(sizes.tolist()):
        stab = order_b // size
        assert stab * size == order_b
        root = None
        if stab > 2:
            xs = roots_by_label.get(lab, [])
            if len(xs) != 1:
                raise AssertionError(f"orbit with stabilizer {stab} meets {len(xs)} lower unipotent cosets")
            root = xs[0]
        rep = FpMat.decode(space.reps[first[lab]], p)
        orbits.append(Orbit(rep, size, stab, root, lab == singular_label))
    orbits.sort(key=lambda o: (-o.stabilizer_order, o.representative))
    return OrbitDecomposition(p, k, tuple(orbits))


def expected_stabilizers(p: int, k: int) -> Counter:
    """Stabilizer-order multiset predicted by the closed-form double coset decomposition."""
    require_large(p)
    if k == 2:
        return Counter({2: p + 1})
    if k == 4:
        return Counter({4: 2, 2: (p - 1) // 2}) if p % 4 == 1 else Counter({2: (p + 1) // 2})
    if k == 6:
        return Counter({6: 2, 2: (p - 1) // 3}) if p % 3 == 1 else Counter({2: (p + 1) // 3})
    raise ValueError(k)


@dataclass(frozen=True)
class DecompositionReport:
    p: int
    k: int
    ok: bool
    expected: Counter
    observed: Counter
    expected_roots: frozenset = frozenset()
    observed_roots: frozenset = frozenset()
    notes: tuple[str, ...] = ()

    def __str__(self):
        def fmt(c):
            return "{" + ", ".join(f"{s} x {c[s]}" for s in sorted(c, reverse=True)) + "}"

        if self.ok:
            return f"PASS p={self.p} k={self.k}: {sum(self.observed.values())} orbits {fmt(self.observed)}"
        lines = [f"MISMATCH p={self.p} k={self.k}",
                 f"  expected stabilizers {fmt(self.expected)}",
                 f"  observed stabilizers {fmt(self.observed)}"]
        if self.expected_roots != self.observed_roots:
            lines.append(f"  expected roots {sorted(self.expected_roots)}, observed {sorted(self.observed_roots)}")
        lines.extend(f"  {n}" for n in self.notes)
        return "\n".join(lines)


def verify_decomposition(dec: OrbitDecomposition) -> DecompositionReport:
    p, k = dec.p, dec.k
    require_large(p)
    expected = expected_stabilizers(p, k)
    observed = dec.stabilizer_orders()
    exp_roots = roots_mod_p(ROOT_POLY[k], p) if k in ROOT_POLY else frozenset()
    obs_roots = dec.fixed_roots()
    notes = []
    if k == 6:
        singular = [o for o in dec.orbits if o.singular]
        if len(singular) != 1 or singular[0].fixed_root is not None:
            notes.append("singular orbit through the identity coset not found")
    ok = expected == observed and exp_roots == obs_roots and not notes
    return DecompositionReport(p, k, ok, expected, observed, exp_roots, obs_roots, tuple(notes))


def decompose(p: int, k: int, bound: int | None = None) -> OrbitDecomposition:
    return decompose_under_B(build_coset_space(p, k, bound))


def orbit_counts(p: int, bound: int | None = None) -> tuple[int, int, int]:
    """Number of B-orbits on G/C2, G/C4, G/C6."""
    require_large(make_prime(p))
    return tuple(len(decompose(p, k, bound).orbits) for k in (2, 4, 6))


def equivariant_euler_characteristic(p: int, bound: int | None = None) -> Fraction:
    """Sum of 1/|stabilizer| over vertex orbits minus the same over edge orbits."""
    require_large(make_prime(p))
    chi = Fraction(0)
    for k, sign in ((4, 1), (6, 1), (2, -1)):
        for o in decompose(p, k, bound).orbits:
            chi += Fraction(sign, o.stabilizer_order)
    return chi


@dataclass(frozen=True, eq=False)
class QuotientGraph:
    """Finite graph with vertices G/C4 and G/C6 and edges G/C2.

    Vertex ``i < n4`` is the i-th coset of C4, vertex ``n4 + j`` the j-th coset
    of C6; edge ``e`` joins ``incidence[e, 0]`` and ``incidence[e, 1]``.
    """

    p: int
    c4: CosetSpace
    c6: CosetSpace
    c2: CosetSpace
    incidence: np.ndarray
    _components: list = field(default_factory=list, repr=False)

    @property
    def num_vertices(self) -> int:
        return len(self.c4) + len(self.c6)

    @property
    def num_edges(self) -> int:
        return len(self.c2)

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges

    def first_betti_number(self) -> int:
        return self.num_edges - self.num_vertices + self.num_components()

    def num_components(self) -> int:
        if not self._components:
            n = self.num_vertices
            src, dst = self.incidence[:, 0], self.incidence[:, 1]
            adj = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
            ncomp, _ = connected_components(adj, directed=False)
            self._components.append(int(ncomp))
        return self._components[0]

    def is_connected(self) -> bool:
        return self.num_components() == 1


def edge_endpoints(c2: CosetSpace, c4: CosetSpace, c6: CosetSpace, mats) -> np.ndarray:
    """Endpoints (C4 vertex, C6 vertex) of the edges ``m C2``, computed from ``m`` itself."""
    return np.stack([c4.index(mats), len(c4) + c6.index(mats)], axis=1)


def build_quotient_graph(p: int, bound: int | None = None) -> QuotientGraph:
    p = make_prime(p)
    require_large(p)
    c2, c4, c6 = (build_coset_space(p, k, bound) for k in (2, 4, 6))
    incidence = edge_endpoints(c2, c4, c6, decode(c2.reps, p))
    incidence.setflags(write=False)
    return QuotientGraph(int(p), c4, c6, c2, incidence)
