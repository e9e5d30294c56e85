"""Unital subalgebras of M_N(C) spanned by disjoint 0/1 pattern matrices.

Every basis element is the sum of the matrix units over a set of
positions; supports are pairwise disjoint, so an element's coordinate is
just the common value of the ambient matrix on that support.  Products
are computed from structure constants fixed at construction time.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .errors import IdentityNotInSpan, InputError, NotClosed
from .ring import RingSpec

Position = Tuple[int, int]
Pattern = FrozenSet[Position]

FULL = "full"
UPPER = "upper"
PATTERN = "pattern"


def _ambient_product(n: int, p: Pattern, q: Pattern) -> Dict[Position, int]:
    rows_of_q: Dict[int, List[int]] = {}
    for t, c in q:
        rows_of_q.setdefault(t, []).append(c)
    out: Dict[Position, int] = {}
    for r, t in p:
        for c in rows_of_q.get(t, ()):
            out[(r, c)] = out.get((r, c), 0) + 1
    return out


def _decompose(
    values: Dict[Position, int], basis: Sequence[Pattern], owner: Dict[Position, int], ring: RingSpec
) -> Tuple[Optional[List[int]], str]:
    """Write an ambient matrix (sparse dict) in the pattern basis, or explain why not."""
    coords = [0] * len(basis)
    seen = set()
    for pos, v in values.items():
        v = ring.reduce(v)
        if v == 0:
            continue
        k = owner.get(pos)
        if k is None:
            return None, f"entry at {pos} lies outside every basis pattern"
        if k in seen:
            continue
        seen.add(k)
        for other in basis[k]:
            if ring.reduce(values.get(other, 0)) != v:
                return None, f"product is not constant on basis pattern {k}"
        coords[k] = v
    return coords, ""


def _check_patterns(ambient_n: int, basis: Sequence[Pattern]) -> Dict[Position, int]:
    if isinstance(ambient_n, bool) or not isinstance(ambient_n, int) or ambient_n < 1:
        raise InputError(f"ambient size must be a positive integer, got {ambient_n!r}")
    if not basis:
        raise InputError("basis must be non-empty")
    owner: Dict[Position, int] = {}
    for k, pat in enumerate(basis):
        if not pat:
            raise InputError(f"basis element {k} has an empty pattern")
        for (r, c) in pat:
            if not (1 <= r <= ambient_n and 1 <= c <= ambient_n):
                raise InputError(f"basis element {k}: position {(r, c)} outside 1..{ambient_n}")
            if (r, c) in owner:
                raise InputError(
                    f"basis elements {owner[(r, c)]} and {k} share position {(r, c)}"
                )
            owner[(r, c)] = k
    return owner


def validate_closure(ambient_n: int, basis: Sequence[Pattern], ring: RingSpec):
    """Structure constants ``c[i][j][k]`` and identity coordinates for a pattern basis.

    Raises :class:`NotClosed` naming the first offending ordered pair and
    :class:`IdentityNotInSpan` when the N x N identity is not a combination
    of the patterns.
    """
    basis = [frozenset(p) for p in basis]
    owner = _check_patterns(ambient_n, basis)
    d = len(basis)
    consts = []
    for i in range(d):
        row = []
        for j in range(d):
            coords, why = _decompose(_ambient_product(ambient_n, basis[i], basis[j]), basis, owner, ring)
            if coords is None:
                raise NotClosed((i, j), why)
            row.append(tuple(coords))
        consts.append(tuple(row))
    ident = {(r, r): 1 for r in range(1, ambient_n + 1)}
    unit, why = _decompose(ident, basis, owner, ring)
    if unit is None:
        raise IdentityNotInSpan(f"identity matrix is not in the span of the basis: {why}")
    return tuple(consts), tuple(unit)


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    ring: RingSpec
    ambient_n: int
    basis: Tuple[Pattern, ...]
    structure_constants: Tuple[Tuple[Tuple[int, ...], ...], ...]
    unit_coords: Tuple[int, ...]
    kind: str = PATTERN
    # derived lookups, filled in __post_init__
    _owner: Dict[Position, int] = field(default_factory=dict, repr=False)
    _products: Tuple[Tuple[Tuple[int, int, int], ...], ...] = field(default=(), repr=False)

    def __post_init__(self):
        owner = {pos: k for k, pat in enumerate(self.basis) for pos in pat}
        products = tuple(
            tuple(
                (j, k, c)
                for j in range(self.dim)
                for k, c in enumerate(self.structure_constants[i][j])
                if c
            )
            for i in range(self.dim)
        )
        object.__setattr__(self, "_owner", owner)
        object.__setattr__(self, "_products", products)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.ambient_n

    @property
    def has_matrix_unit_basis(self) -> bool:
        return self.kind in (FULL, UPPER)

    def carrier_size(self) -> int:
        return self.ring.size ** self.dim

    def index_of(self, i: int, j: int) -> int:
        """Basis index of the pattern containing position ``(i, j)`` (1-based)."""
        try:
            return self._owner[(i, j)]
        except KeyError:
            raise InputError(f"position {(i, j)} is not covered by the basis") from None

    def element(self, coords: Sequence[int]) -> "MatElem":
        if len(coords) != self.dim:
            raise InputError(f"expected {self.dim} coordinates, got {len(coords)}")
        return MatElem(self, tuple(self.ring.reduce(int(c)) for c in coords))

    def zero(self) -> "MatElem":
        return MatElem(self, (0,) * self.dim)

    def unit(self) -> "MatElem":
        return MatElem(self, self.unit_coords)

    def basis_element(self, k: int) -> "MatElem":
        coords = [0] * self.dim
        coords[k] = 1
        return MatElem(self, tuple(coords))

    def e(self, i: int, j: int) -> "MatElem":
        """The basis element whose pattern contains ``(i, j)``; a matrix unit for T_n / M_n."""
        return self.basis_element(self.index_of(i, j))

    def elements(self) -> Iterator["MatElem"]:
        """Every element of a finite algebra in lexicographic coordinate order."""
        for coords in itertools.product(range(self.ring.size), repeat=self.dim):
            yield MatElem(self, coords)

    def from_dense(self, matrix: Sequence[Sequence[int]]) -> "MatElem":
        n = self.ambient_n
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise InputError(f"expected a {n}x{n} matrix")
        values = {
            (r + 1, c + 1): v for r, row in enumerate(matrix) for c, v in enumerate(row) if v
        }
        coords, why = _decompose(values, self.basis, self._owner, self.ring)
        if coords is None:
            raise InputError(f"matrix is not an element of the algebra: {why}")
        return MatElem(self, tuple(coords))

    def to_json(self) -> dict:
        if self.kind in (FULL, UPPER):
            return {"type": self.kind, "n": self.ambient_n}
        return {
            "type": PATTERN,
            "N": self.ambient_n,
            "basis": [sorted([r, c] for r, c in pat) for pat in self.basis],
        }

    def label(self, k: int) -> str:
        return "+".join(f"e{r}{c}" if self.ambient_n < 10 else f"e{r},{c}" for r, c in sorted(self.basis[k]))

    def describe(self) -> str:
        names = {FULL: "M", UPPER: "T"}
        if self.kind in names:
            return f"{names[self.kind]}_{self.ambient_n}({self.ring})"
        return f"pattern algebra in M_{self.ambient_n}({self.ring}), d={self.dim}"


@dataclass(frozen=True)
class MatElem:
    """An algebra element as coordinates over the algebra's basis."""

    algebra: AlgebraSpec
    coords: Tuple[int, ...]

    def _same(self, other: "MatElem"):
        if not isinstance(other, MatElem) or other.algebra is not self.algebra:
            raise InputError("operands belong to different algebras")

    def __add__(self, other: "MatElem") -> "MatElem":
        self._same(other)
        return MatElem(self.algebra, self.algebra.ring.reduce_all([a + b for a, b in zip(self.coords, other.coords)]))

    def __sub__(self, other: "MatElem") -> "MatElem":
        self._same(other)
        return MatElem(self.algebra, self.algebra.ring.reduce_all([a - b for a, b in zip(self.coords, other.coords)]))

    def __neg__(self) -> "MatElem":
        return MatElem(self.algebra, self.algebra.ring.reduce_all([-a for a in self.coords]))

    def __mul__(self, other: "MatElem") -> "MatElem":
        return elem_mul(self, other)

    def scale(self, c: int) -> "MatElem":
        return MatElem(self.algebra, self.algebra.ring.reduce_all([c * a for a in self.coords]))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_dense(self) -> List[List[int]]:
        n = self.algebra.ambient_n
        out = [[0] * n for _ in range(n)]
        for k, v in enumerate(self.coords):
            if v:
                for r, c in self.algebra.basis[k]:
                    out[r - 1][c - 1] = v
        return out

    def __str__(self) -> str:
        terms = []
        ring = self.algebra.ring
        for k, v in enumerate(self.coords):
            if not v:
                continue
            s = ring.signed(v)
            name = self.algebra.label(k)
            if "+" in name:
                name = f"({name})"
            if s == 1:
                terms.append(name)
            elif s == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{s}*{name}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def elem_mul(a: MatElem, b: MatElem) -> MatElem:
    """Product through the structure constants: ``sum_ij a_i b_j c[i][j][k]``."""
    if b.algebra is not a.algebra:
        a._same(b)
    alg = a.algebra
    out = [0] * len(a.coords)
    bc = b.coords
    for i, ai in enumerate(a.coords):
        if ai:
            for j, k, c in alg._products[i]:
                bj = bc[j]
                if bj:
                    out[k] += ai * bj * c
    return MatElem(alg, alg.ring.reduce_all(out))


def dense_mul(x: Sequence[Sequence[int]], y: Sequence[Sequence[int]], ring: RingSpec) -> List[List[int]]:
    """Plain N x N matrix product, used as an independent reference."""
    n = len(x)
    return [
        [ring.reduce(sum(x[r][t] * y[t][c] for t in range(n))) for c in range(n)]
        for r in range(n)
    ]


def make_pattern_algebra(ambient_n: int, basis: Sequence[Sequence[Position]], ring: RingSpec, kind: str = PATTERN) -> AlgebraSpec:
    patterns = tuple(frozenset(tuple(p) for p in pat) for pat in basis)
    consts, unit = validate_closure(ambient_n, patterns, ring)
    return AlgebraSpec(ring, ambient_n, patterns, consts, unit, kind)


def make_full(n: int, ring: RingSpec) -> AlgebraSpec:
    """M_n(C) with the matrix units in row-major order."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    basis = [[(i, j)] for i in range(1, n + 1) for j in range(1, n + 1)]
    return make_pattern_algebra(n, basis, ring, FULL)


def make_upper_triangular(n: int, ring: RingSpec) -> AlgebraSpec:
    """T_n(C): matrix units e_ij with i <= j, row-major."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    basis = [[(i, j)] for i in range(1, n + 1) for j in range(i, n + 1)]
    return make_pattern_algebra(n, basis, ring, UPPER)


EXAMPLE1_BASIS = (
    ((1, 1), (2, 2)),
    ((3, 3), (4, 4)),
    ((1, 2),),
    ((1, 3),),
    ((1, 4),),
    ((2, 4),),
    ((3, 4),),
)


def make_example1_algebra() -> AlgebraSpec:
    """The triangular algebra Tri(A, A, T_2(Z_2)) embedded in M_4(Z_2), A = {[[a, b], [0, a]]}.

    Basis order: e11+e22, e33+e44, e12, e13, e14, e24, e34.
    """
    return make_pattern_algebra(4, EXAMPLE1_BASIS, RingSpec.mod(2))


def algebra_from_json(obj, ring: RingSpec, path: str = "algebra") -> AlgebraSpec:
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected an object")
    kind = obj.get("type")
    if kind in (FULL, UPPER):
        n = obj.get("n")
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InputError(f"{path}.n: expected a positive integer, got {n!r}")
        return make_full(n, ring) if kind == FULL else make_upper_triangular(n, ring)
    if kind == PATTERN:
        big_n = obj.get("N")
        if isinstance(big_n, bool) or not isinstance(big_n, int) or big_n < 1:
            raise InputError(f"{path}.N: expected a positive integer, got {big_n!r}")
        basis = obj.get("basis")
        if not isinstance(basis, list) or not basis:
            raise InputError(f"{path}.basis: expected a non-empty list of patterns")
        patterns = []
        for k, pat in enumerate(basis):
            if not isinstance(pat, list) or not pat:
                raise InputError(f"{path}.basis[{k}]: expected a non-empty list of [row, col] pairs")
            positions = []
            for t, pos in enumerate(pat):
                if (
                    not isinstance(pos, list)
                    or len(pos) != 2
                    or not all(isinstance(v, int) and not isinstance(v, bool) for v in pos)
                ):
                    raise InputError(f"{path}.basis[{k}][{t}]: expected [row, col] integers")
                positions.append((pos[0], pos[1]))
            patterns.append(positions)
        try:
            return make_pattern_algebra(big_n, patterns, ring)
        except InputError as exc:
            raise InputError(f"{path}: {exc}") from exc
    raise InputError(f"{path}.type: expected 'full', 'upper' or 'pattern', got {kind!r}")


__all__ = [
    "AlgebraSpec",
    "MatElem",
    "algebra_from_json",
    "dense_mul",
    "elem_mul",
    "make_example1_algebra",
    "make_full",
    "make_pattern_algebra",
    "make_upper_triangular",
    "validate_closure",
]
