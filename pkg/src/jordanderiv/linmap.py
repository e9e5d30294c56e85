"""C-linear maps of an algebra into itself, stored as images of basis elements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from .algebra import AlgebraSpec, MatElem
from .errors import InputError, PatternAlgebraUnsupported


@dataclass(frozen=True, eq=False)
class LinearMap:
    algebra: AlgebraSpec
    images: Tuple[MatElem, ...]

    @property
    def key(self) -> Tuple[int, ...]:
        """Concatenated canonical image rows; equal maps have equal keys."""
        return tuple(c for im in self.images for c in im.coords)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.algebra is other.algebra and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __call__(self, x: MatElem) -> MatElem:
        return apply(self, x)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if other.algebra is not self.algebra:
            raise InputError("maps act on different algebras")
        return LinearMap(self.algebra, tuple(a + b for a, b in zip(self.images, other.images)))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        if other.algebra is not self.algebra:
            raise InputError("maps act on different algebras")
        return LinearMap(self.algebra, tuple(a - b for a, b in zip(self.images, other.images)))

    def scale(self, c: int) -> "LinearMap":
        return LinearMap(self.algebra, tuple(im.scale(c) for im in self.images))

    def is_zero(self) -> bool:
        return all(im.is_zero() for im in self.images)

    def rows(self) -> List[List[int]]:
        return [list(im.coords) for im in self.images]

    def to_json(self) -> dict:
        return {"images": self.rows()}


def make_map(algebra: AlgebraSpec, images: Sequence) -> LinearMap:
    """Build a map from ``d`` images, given as MatElems or coordinate rows."""
    if len(images) != algebra.dim:
        raise InputError(f"expected {algebra.dim} images, got {len(images)}")
    out = []
    for k, im in enumerate(images):
        if isinstance(im, MatElem):
            if im.algebra is not algebra:
                raise InputError(f"image {k} belongs to a different algebra")
            out.append(im)
        else:
            out.append(algebra.element(im))
    return LinearMap(algebra, tuple(out))


def map_from_rows(algebra: AlgebraSpec, rows: Sequence[Sequence[int]]) -> LinearMap:
    return make_map(algebra, [list(r) for r in rows])


def map_from_key(algebra: AlgebraSpec, key: Sequence[int]) -> LinearMap:
    d = algebra.dim
    return LinearMap(algebra, tuple(MatElem(algebra, tuple(key[k * d:(k + 1) * d])) for k in range(d)))


def zero_map(algebra: AlgebraSpec) -> LinearMap:
    z = algebra.zero()
    return LinearMap(algebra, (z,) * algebra.dim)


def map_from_dense_function(algebra: AlgebraSpec, f: Callable[[List[List[int]]], List[List[int]]]) -> LinearMap:
    """Tabulate a map given on dense N x N matrices by evaluating it on the basis."""
    images = [algebra.from_dense(f(algebra.basis_element(k).to_dense())) for k in range(algebra.dim)]
    return LinearMap(algebra, tuple(images))


def apply(D: LinearMap, x: MatElem) -> MatElem:
    if x.algebra is not D.algebra:
        raise InputError("element and map belong to different algebras")
    alg = D.algebra
    out = [0] * len(x.coords)
    for xk, im in zip(x.coords, D.images):
        if xk:
            for m, v in enumerate(im.coords):
                if v:
                    out[m] += xk * v
    return MatElem(alg, alg.ring.reduce_all(out))


def inner_map(algebra: AlgebraSpec, B: MatElem) -> LinearMap:
    """The inner derivation ``x -> Bx - xB``."""
    if B.algebra is not algebra:
        raise InputError("B belongs to a different algebra")
    images = []
    for k in range(algebra.dim):
        b = algebra.basis_element(k)
        images.append(B * b - b * B)
    return LinearMap(algebra, tuple(images))


class CoefficientTable:
    """``table[(k, l), (i, j)]`` is the coefficient of e_kl in D(e_ij) (1-based).

    Positions outside the algebra's support (below the diagonal in T_n)
    read as 0.
    """

    def __init__(self, D: LinearMap):
        alg = D.algebra
        if not alg.has_matrix_unit_basis:
            raise PatternAlgebraUnsupported(
                "coefficient tables need a matrix-unit basis (full or upper triangular)"
            )
        self.map = D
        self.n = alg.ambient_n
        self.ring = alg.ring
        self._owner = alg._owner

    def __getitem__(self, idx) -> int:
        (k, l), (i, j) = idx
        src = self._owner.get((i, j))
        if src is None:
            raise InputError(f"e_{i}{j} is not a basis element")
        dst = self._owner.get((k, l))
        if dst is None:
            return 0
        return self.map.images[src].coords[dst]

    def a(self, k: int, l: int, i: int, j: int) -> int:
        return self[(k, l), (i, j)]

    def entries(self):
        """Every ``((k, l), (i, j), value)`` with nonzero value, in basis order."""
        alg = self.map.algebra
        for src, im in enumerate(self.map.images):
            (i, j), = alg.basis[src]
            for dst, v in enumerate(im.coords):
                if v:
                    (k, l), = alg.basis[dst]
                    yield (k, l), (i, j), v


def coefficient_table(D: LinearMap) -> CoefficientTable:
    return CoefficientTable(D)
