"""Inner-derivation witnesses: build B with D(X) = BX - XB from D's coefficients."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List

from .algebra import FULL, UPPER, AlgebraSpec, MatElem
from .classify import is_jordan
from .errors import BudgetExceeded, InputError, NotJordan, WitnessPreconditionError, WrongAlgebra
from .linmap import LinearMap, coefficient_table

FORMULA_TRIANGULAR = "formula_triangular"
FORMULA_FULL = "formula_full"
EXTERNAL = "external"


@dataclass(frozen=True)
class Witness:
    B: MatElem
    verified: bool
    source: str

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "verified": self.verified,
            "coords": list(self.B.coords),
            "dense": self.B.to_dense(),
            "text": str(self.B),
        }


def verify_witness(D: LinearMap, B: MatElem) -> bool:
    """True iff ``D(b_k) = B b_k - b_k B`` for every basis element."""
    if B.algebra is not D.algebra:
        raise InputError("witness and map belong to different algebras")
    alg = D.algebra
    for k, im in enumerate(D.images):
        b = alg.basis_element(k)
        if B * b - b * B != im:
            return False
    return True


def _require(D: LinearMap, kind: str, name: str):
    alg = D.algebra
    if alg.kind != kind or alg.ambient_n < 2:
        raise WrongAlgebra(f"{name} needs {'T_n' if kind == UPPER else 'M_n'} with n >= 2, got {alg.describe()}")
    ok, certs = is_jordan(D, first_only=True)
    if not ok:
        raise NotJordan(f"map is not a Jordan derivation (first failure: {certs[0].kind} at {certs[0].pair})")


def _build(D: LinearMap, offdiag_pairs) -> MatElem:
    alg = D.algebra
    a = coefficient_table(D).a
    ring = alg.ring
    n = alg.ambient_n
    dense = [[0] * n for _ in range(n)]
    for l in range(2, n + 1):
        dense[l - 1][l - 1] = ring.neg(a(1, l, 1, l))
    for i, j in offdiag_pairs:
        dense[i - 1][j - 1] = a(i, j, j, j)
    return alg.from_dense(dense)


def synthesize_witness_triangular(D: LinearMap) -> Witness:
    """``B = sum_{l>=2} -a_1l^(1l) e_ll + sum_{i<j} a_ij^(jj) e_ij`` on T_n."""
    _require(D, UPPER, "triangular witness")
    n = D.algebra.ambient_n
    B = _build(D, itertools.combinations(range(1, n + 1), 2))
    return Witness(B, verify_witness(D, B), FORMULA_TRIANGULAR)


def synthesize_witness_full(D: LinearMap) -> Witness:
    """``B = sum_{l>=2} -a_1l^(1l) e_ll + sum_{i!=j} a_ij^(jj) e_ij`` on M_n."""
    _require(D, FULL, "full witness")
    n = D.algebra.ambient_n
    B = _build(D, itertools.permutations(range(1, n + 1), 2))
    return Witness(B, verify_witness(D, B), FORMULA_FULL)


def synthesize_witness(D: LinearMap) -> Witness:
    kind = D.algebra.kind
    if kind == UPPER:
        return synthesize_witness_triangular(D)
    if kind == FULL:
        return synthesize_witness_full(D)
    raise WrongAlgebra(f"no witness formula for {D.algebra.describe()}")


def is_central(z: MatElem) -> bool:
    alg = z.algebra
    for k in range(alg.dim):
        b = alg.basis_element(k)
        if z * b != b * z:
            return False
    return True


def witness_difference_central(D: LinearMap, B1: MatElem, B2: MatElem) -> bool:
    """Whether two witnesses of D differ by a central element (they always should)."""
    for name, B in (("B1", B1), ("B2", B2)):
        if not verify_witness(D, B):
            raise WitnessPreconditionError(f"{name} is not a witness for the map")
    return is_central(B1 - B2)


def center_elements(algebra: AlgebraSpec, budget: int = 10**6) -> List[MatElem]:
    """Central elements, or a generating set of them.

    T_n and M_n: their center is the scalar matrices, so the identity is
    returned as the generator (after checking that it commutes with every
    basis element).  Other algebras over finite rings are enumerated in
    lexicographic coordinate order.
    """
    if algebra.has_matrix_unit_basis:
        unit = algebra.unit()
        if not is_central(unit):
            raise AssertionError("identity failed to commute with the basis")
        return [unit]
    if not algebra.ring.is_finite:
        raise InputError("center enumeration needs a finite coefficient ring")
    size = algebra.carrier_size()
    if size > budget:
        raise BudgetExceeded(f"{size} elements exceed the budget of {budget}")
    return [z for z in algebra.elements() if is_central(z)]
