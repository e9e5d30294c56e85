"""Whole spaces of Jordan derivations, derivations, antiderivations and inner maps.

Two independent routes:

* ``kernel_mod_p`` writes the basis-level conditions as a homogeneous
  linear system in the d*d image coordinates and solves it exactly over
  GF(p) (bit-packed rows when p = 2);
* ``enumerate_space`` walks every linear map of a small finite algebra
  and keeps the ones the classifiers accept.

Unknown ``k*d + m`` is the coefficient of basis element m in D(b_k).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import AlgebraSpec
from .classify import basis_checks, check_inputs, raw_check_holds
from .errors import BudgetExceeded, InfiniteRing, InputError, NonPrimeModulus
from .linmap import LinearMap, inner_map, map_from_key

KINDS = ("jordan", "derivation", "antiderivation")
DEFAULT_BUDGET = 10**6


@dataclass
class ConstraintSystem:
    algebra: AlgebraSpec
    kind: str
    rows: List[List[int]]
    blocks: List[Tuple[str, Tuple[int, int]]]

    @property
    def n_unknowns(self) -> int:
        return self.algebra.dim ** 2


class _Block:
    """d rows (one per output coordinate) of ``lhs - rhs`` as a linear form in the unknowns."""

    def __init__(self, alg: AlgebraSpec):
        self.alg = alg
        self.d = alg.dim
        self.rows = [[0] * (self.d * self.d) for _ in range(self.d)]

    def d_of(self, coords: Sequence[int], sign: int):
        # D(x), x = sum_k x_k b_k: coordinate m gets x_k * X[k, m]
        d = self.d
        for k, xk in enumerate(coords):
            if xk:
                for m in range(d):
                    self.rows[m][k * d + m] += sign * xk

    def d_times(self, i: int, j: int, sign: int):
        # D(b_i) b_j = sum_l X[i, l] (b_l b_j)
        d, c = self.d, self.alg.structure_constants
        for l in range(d):
            for m, v in enumerate(c[l][j]):
                if v:
                    self.rows[m][i * d + l] += sign * v

    def times_d(self, j: int, i: int, sign: int):
        # b_j D(b_i) = sum_l X[i, l] (b_j b_l)
        d, c = self.d, self.alg.structure_constants
        for l in range(d):
            for m, v in enumerate(c[j][l]):
                if v:
                    self.rows[m][i * d + l] += sign * v


def build_constraints(algebra: AlgebraSpec, kind: str) -> ConstraintSystem:
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}; expected one of {KINDS}")
    d = algebra.dim
    c = algebra.structure_constants
    red = algebra.ring.reduce
    rows: List[List[int]] = []
    blocks = []

    def emit(label, pair, blk):
        blocks.append((label, pair))
        rows.extend([red(v) for v in r] for r in blk.rows)

    if kind == "jordan":
        for i in range(d):
            for j in range(i, d):
                blk = _Block(algebra)
                if i == j:
                    blk.d_of(c[i][i], 1)
                    blk.d_times(i, i, -1)
                    blk.times_d(i, i, -1)
                    emit("square", (i, i), blk)
                else:
                    blk.d_of([x + y for x, y in zip(c[i][j], c[j][i])], 1)
                    blk.d_times(i, j, -1)
                    blk.times_d(i, j, -1)
                    blk.d_times(j, i, -1)
                    blk.times_d(j, i, -1)
                    emit("polarized", (i, j), blk)
    else:
        for i, j in itertools.product(range(d), repeat=2):
            blk = _Block(algebra)
            blk.d_of(c[i][j], 1)
            if kind == "derivation":
                blk.d_times(i, j, -1)
                blk.times_d(i, j, -1)
            else:
                blk.d_times(j, i, -1)
                blk.times_d(j, i, -1)
            emit(kind, (i, j), blk)
    return ConstraintSystem(algebra, kind, rows, blocks)


# ---------------------------------------------------------------------------
# exact elimination over GF(p)
# ---------------------------------------------------------------------------


def _rref_gf2(rows: Iterable[Sequence[int]], ncols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form of bit-packed rows (bit u is column u)."""
    packed = []
    for r in rows:
        v = 0
        for u, x in enumerate(r):
            if x & 1:
                v |= 1 << u
        if v:
            packed.append(v)
    pivots: List[int] = []
    basis: List[int] = []
    for col in range(ncols):
        bit = 1 << col
        pr = next((t for t, v in enumerate(packed) if v & bit), None)
        if pr is None:
            continue
        prow = packed.pop(pr)
        packed = [v ^ prow if v & bit else v for v in packed]
        basis = [v ^ prow if v & bit else v for v in basis]
        basis.append(prow)
        pivots.append(col)
        if not packed:
            break
    return basis, pivots


def _kernel_gf2(rows, ncols: int) -> List[List[int]]:
    basis, pivots = _rref_gf2(rows, ncols)
    pivot_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [0] * ncols
        vec[f] = 1
        fbit = 1 << f
        for prow, pc in zip(basis, pivots):
            if prow & fbit:
                vec[pc] = 1
        out.append(vec)
    return out


def _rref_mod_p(rows: Iterable[Sequence[int]], ncols: int, p: int) -> Tuple[List[List[int]], List[int]]:
    work = [[x % p for x in r] for r in rows]
    work = [r for r in work if any(r)]
    reduced: List[List[int]] = []
    pivots: List[int] = []
    for col in range(ncols):
        pr = next((t for t, r in enumerate(work) if r[col]), None)
        if pr is None:
            continue
        prow = work.pop(pr)
        inv = pow(prow[col], -1, p)
        prow = [x * inv % p for x in prow]
        def elim(r):
            f = r[col]
            return [(x - f * y) % p for x, y in zip(r, prow)] if f else r
        work = [r for r in map(elim, work) if any(r)]
        reduced = [elim(r) for r in reduced]
        reduced.append(prow)
        pivots.append(col)
        if not work:
            break
    return reduced, pivots


def _kernel_mod_p(rows, ncols: int, p: int) -> List[List[int]]:
    reduced, pivots = _rref_mod_p(rows, ncols, p)
    pivot_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [0] * ncols
        vec[f] = 1
        for prow, pc in zip(reduced, pivots):
            if prow[f]:
                vec[pc] = -prow[f] % p
        out.append(vec)
    return out


def rref(rows: Sequence[Sequence[int]], ncols: int, p: int) -> Tuple[Tuple[int, ...], ...]:
    """Canonical reduced echelon basis of the row span over GF(p)."""
    if p == 2:
        basis, pivots = _rref_gf2(rows, ncols)
        order = sorted(range(len(pivots)), key=pivots.__getitem__)
        return tuple(tuple((basis[t] >> u) & 1 for u in range(ncols)) for t in order)
    reduced, pivots = _rref_mod_p(rows, ncols, p)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return tuple(tuple(reduced[t]) for t in order)


# ---------------------------------------------------------------------------
# spaces
# ---------------------------------------------------------------------------


@dataclass
class MapSpace:
    """A space of maps, held either as a basis over GF(p) or as an explicit member list."""

    algebra: AlgebraSpec
    kind: str
    method: str
    basis: Optional[List[LinearMap]] = None
    explicit: Optional[List[LinearMap]] = None
    tested: int = 0
    _keys: Optional[frozenset] = field(default=None, repr=False)

    @property
    def dimension(self) -> Optional[int]:
        if self.basis is not None and self.algebra.ring.is_prime_field:
            return len(self.basis)
        return None

    @property
    def size(self) -> int:
        if self.explicit is not None:
            return len(self.explicit)
        if self.dimension is None:
            raise InfiniteRing("space over the integers has no finite size")
        return self.algebra.ring.modulus ** self.dimension

    def members(self, budget: int = DEFAULT_BUDGET) -> List[LinearMap]:
        if self.explicit is not None:
            return self.explicit
        if self.size > budget:
            raise BudgetExceeded(f"space has {self.size} members, budget is {budget}")
        p = self.algebra.ring.modulus
        d2 = self.algebra.dim ** 2
        vecs = [m.key for m in self.basis]
        out = []
        for coeffs in itertools.product(range(p), repeat=len(vecs)):
            key = [0] * d2
            for c, v in zip(coeffs, vecs):
                if c:
                    for u, x in enumerate(v):
                        if x:
                            key[u] += c * x
            out.append(map_from_key(self.algebra, [x % p for x in key]))
        out.sort(key=lambda m: m.key)
        return out

    def keys(self) -> frozenset:
        if self._keys is None:
            self._keys = frozenset(m.key for m in self.members())
        return self._keys

    def span_key(self) -> Tuple[Tuple[int, ...], ...]:
        """Canonical description of the span (prime modulus only)."""
        ring = self.algebra.ring
        if not ring.is_prime_field:
            raise NonPrimeModulus(f"span comparison needs a prime modulus, ring is {ring}")
        gens = self.basis if self.basis is not None else self.explicit
        return rref([m.key for m in gens], self.algebra.dim ** 2, ring.modulus)

    def contains(self, D: LinearMap) -> bool:
        if self.explicit is not None:
            return D.key in self.keys()
        p = self.algebra.ring.modulus
        ncols = self.algebra.dim ** 2
        base = [m.key for m in self.basis]
        return len(rref(base + [D.key], ncols, p)) == len(rref(base, ncols, p))

    def same_as(self, other: "MapSpace") -> bool:
        if other.algebra is not self.algebra:
            return False
        if self.explicit is None and other.explicit is None:
            return self.span_key() == other.span_key()
        return self.keys() == other.keys()

    def summary(self) -> dict:
        out = {"kind": self.kind, "method": self.method}
        if self.dimension is not None:
            out["dimension"] = self.dimension
        if self.explicit is not None or self.dimension is not None:
            out["count"] = self.size
        if self.basis is not None:
            out["basis_size"] = len(self.basis)
        if self.tested:
            out["tested"] = self.tested
        return out


def _check_prime(algebra: AlgebraSpec) -> int:
    ring = algebra.ring
    if not ring.is_prime_field:
        raise NonPrimeModulus(f"kernel computation needs a prime modulus, ring is {ring}")
    return ring.modulus


def kernel_mod_p(system: ConstraintSystem) -> MapSpace:
    alg = system.algebra
    p = _check_prime(alg)
    ncols = system.n_unknowns
    if p == 2:
        vecs = _kernel_gf2(system.rows, ncols)
    else:
        vecs = _kernel_mod_p(system.rows, ncols, p)
    basis = [map_from_key(alg, v) for v in vecs]
    return MapSpace(alg, system.kind, "kernel", basis=basis)


def _brute_force(algebra: AlgebraSpec, kinds: Sequence[str]) -> Tuple[Dict[str, List[LinearMap]], int]:
    d = algebra.dim
    checks = {kind: basis_checks(d, kind) for kind in kinds}
    found: Dict[str, List[LinearMap]] = {k: [] for k in kinds}
    tested = 0
    for key in itertools.product(range(algebra.ring.modulus), repeat=d * d):
        images = [key[k * d:(k + 1) * d] for k in range(d)]
        tested += 1
        for kind in kinds:
            if all(raw_check_holds(algebra, images, *check) for check in checks[kind]):
                found[kind].append(map_from_key(algebra, key))
    return found, tested


def _pruned_search(algebra: AlgebraSpec, kind: str, budget: int) -> Tuple[List[LinearMap], int]:
    """Depth-first assignment of D(b_0), D(b_1), ... over all of C^d each.

    A basis check is evaluated as soon as every image it reads has been
    assigned, so a branch is cut only when one of the defining checks
    already fails.  Every linear map is therefore either reached as a
    leaf (all checks passed) or excluded by a failing check.
    """
    d = algebra.dim
    by_level: List[list] = [[] for _ in range(d)]
    for check in basis_checks(d, kind):
        by_level[max(check_inputs(algebra, *check))].append(check)
    candidates = list(itertools.product(range(algebra.ring.modulus), repeat=d))
    zero = (0,) * d
    images = [zero] * d
    found: List[LinearMap] = []
    tested = 0

    def descend(level: int):
        nonlocal tested
        for im in candidates:
            tested += 1
            if tested > budget:
                raise BudgetExceeded(f"pruned search for {kind} maps visited more than {budget} nodes")
            images[level] = im
            if all(raw_check_holds(algebra, images, *check) for check in by_level[level]):
                if level == d - 1:
                    found.append(map_from_key(algebra, [x for row in images for x in row]))
                else:
                    descend(level + 1)
        images[level] = zero

    descend(0)
    return found, tested


def enumerate_spaces(
    algebra: AlgebraSpec, kinds: Sequence[str] = KINDS, budget: int = DEFAULT_BUDGET
) -> Dict[str, MapSpace]:
    """Exhaustive search for each kind over every linear map of a finite algebra.

    When ``|C|^(d*d)`` fits in the budget every map is classified outright
    (one pass for all kinds).  Otherwise a pruned depth-first search is
    used and the budget bounds the number of search nodes instead.
    """
    for kind in kinds:
        if kind not in KINDS:
            raise InputError(f"unknown kind {kind!r}")
    if not algebra.ring.is_finite:
        raise InfiniteRing("exhaustive enumeration needs a finite coefficient ring")
    total = algebra.ring.modulus ** (algebra.dim ** 2)
    if total <= budget:
        found, tested = _brute_force(algebra, kinds)
        return {
            k: MapSpace(algebra, k, "enumerate", explicit=v, tested=tested) for k, v in found.items()
        }
    out = {}
    for kind in kinds:
        members, tested = _pruned_search(algebra, kind, budget)
        out[kind] = MapSpace(algebra, kind, "search", explicit=members, tested=tested)
    return out


def enumerate_space(algebra: AlgebraSpec, kind: str, budget: int = DEFAULT_BUDGET) -> MapSpace:
    return enumerate_spaces(algebra, (kind,), budget)[kind]


def inner_space(algebra: AlgebraSpec, method: str = "auto", budget: int = DEFAULT_BUDGET) -> MapSpace:
    """All maps ``x -> Bx - xB``.

    ``enumerate`` walks every B of a finite algebra and deduplicates;
    ``kernel`` (prime modulus) or ``generators`` (any ring) keep the
    images of the basis under B -> ad_B, which span the space since
    ad is linear in B.
    """
    ring = algebra.ring
    if method == "auto":
        if ring.is_finite and algebra.carrier_size() <= budget:
            method = "enumerate"
        elif ring.is_prime_field:
            method = "kernel"
        else:
            method = "generators"
    if method == "enumerate":
        if not ring.is_finite:
            raise InfiniteRing("enumerating inner maps needs a finite coefficient ring")
        if algebra.carrier_size() > budget:
            raise BudgetExceeded(f"{algebra.carrier_size()} elements exceed the budget of {budget}")
        seen = {}
        for B in algebra.elements():
            D = inner_map(algebra, B)
            seen.setdefault(D.key, D)
        members = [seen[k] for k in sorted(seen)]
        return MapSpace(algebra, "inner", "enumerate", explicit=members, tested=algebra.carrier_size())
    gens = [inner_map(algebra, algebra.basis_element(k)) for k in range(algebra.dim)]
    if method == "kernel":
        p = _check_prime(algebra)
        vecs = rref([g.key for g in gens], algebra.dim ** 2, p)
        return MapSpace(algebra, "inner", "kernel", basis=[map_from_key(algebra, v) for v in vecs])
    if method == "generators":
        uniq = {g.key: g for g in gens if not g.is_zero()}
        return MapSpace(algebra, "inner", "generators", basis=[uniq[k] for k in sorted(uniq)])
    raise InputError(f"unknown method {method!r}")


def compute_space(
    algebra: AlgebraSpec, kind: str, method: str = "auto", budget: int = DEFAULT_BUDGET
) -> MapSpace:
    if kind == "inner":
        return inner_space(algebra, method, budget)
    if method == "auto":
        method = "kernel" if algebra.ring.is_prime_field else "enumerate"
    if method == "kernel":
        return kernel_mod_p(build_constraints(algebra, kind))
    if method == "enumerate":
        return enumerate_space(algebra, kind, budget)
    raise InputError(f"unknown method {method!r}")
