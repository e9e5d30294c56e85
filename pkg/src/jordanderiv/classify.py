"""Decision procedures for Jordan derivations, derivations and antiderivations.

All three properties are checked on basis elements only.  For the Jordan
property that takes two families of conditions, because the quadratic
condition ``D(a^2) = D(a)a + aD(a)`` does not reduce to pairs by itself
when 2 is a zero divisor:

* squares:    ``D(b_k^2) = D(b_k) b_k + b_k D(b_k)`` for every k, and
* polarized:  ``D(b_i b_j + b_j b_i) = D(b_i) b_j + b_i D(b_j) + D(b_j) b_i + b_j D(b_i)``
  for every i < j.

Writing ``a = sum c_k b_k`` expands ``D(a^2) - D(a)a - aD(a)`` into
``sum c_k^2 (square_k) + sum_{i<j} c_i c_j (polarized_ij)``, so the two
families together are equivalent to the condition on all of the algebra
over any commutative ring; ``a = b_k`` and ``a = b_i + b_j`` give the
converse.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .algebra import FULL, UPPER, AlgebraSpec, MatElem
from .errors import NotApplicable
from .linmap import LinearMap, apply, coefficient_table

JORDAN_SQUARE = "jordan_square"
JORDAN_POLARIZED = "jordan_polarized"
DERIVATION = "derivation"
ANTIDERIVATION = "antiderivation"


@lru_cache(maxsize=128)
def _mult_tables(alg: AlgebraSpec):
    """``left[i]``: (j, k, c) with b_i b_j -> c b_k;  ``right[j]``: (i, k, c) likewise."""
    d = alg.dim
    right = [[] for _ in range(d)]
    for i, row in enumerate(alg._products):
        for j, k, c in row:
            right[j].append((i, k, c))
    return alg._products, tuple(tuple(r) for r in right)


def _raw_sides(alg: AlgebraSpec, images, kind: str, i: int, j: int):
    """Unreduced coordinate lists of both sides of one basis check.

    ``images[k]`` is the coordinate tuple of D(b_k); only the images the
    check reads are touched.
    """
    left, right = _mult_tables(alg)
    c = alg.structure_constants
    d = alg.dim
    lhs = [0] * d
    rhs = [0] * d

    def d_of(coords):
        for k, xk in enumerate(coords):
            if xk:
                for m, v in enumerate(images[k]):
                    if v:
                        lhs[m] += xk * v

    def times_basis(x, jj):  # x * b_jj
        for ii, k, cc in right[jj]:
            if x[ii]:
                rhs[k] += x[ii] * cc

    def basis_times(ii, x):  # b_ii * x
        for jj, k, cc in left[ii]:
            if x[jj]:
                rhs[k] += cc * x[jj]

    if kind == JORDAN_SQUARE:
        d_of(c[i][i])
        times_basis(images[i], i)
        basis_times(i, images[i])
    elif kind == JORDAN_POLARIZED:
        d_of(c[i][j])
        d_of(c[j][i])
        times_basis(images[i], j)
        basis_times(i, images[j])
        times_basis(images[j], i)
        basis_times(j, images[i])
    elif kind == DERIVATION:
        d_of(c[i][j])
        times_basis(images[i], j)
        basis_times(i, images[j])
    elif kind == ANTIDERIVATION:
        d_of(c[i][j])
        times_basis(images[j], i)
        basis_times(j, images[i])
    else:
        raise ValueError(f"unknown check kind {kind!r}")
    return lhs, rhs


def raw_check_holds(alg: AlgebraSpec, images, kind: str, i: int, j: int) -> bool:
    lhs, rhs = _raw_sides(alg, images, kind, i, j)
    m = alg.ring.modulus
    if m is None:
        return lhs == rhs
    return all((a - b) % m == 0 for a, b in zip(lhs, rhs))


@dataclass(frozen=True)
class Certificate:
    """A failed basis-level check: ``lhs != rhs`` at basis indices ``pair`` (0-based)."""

    kind: str
    pair: Tuple[int, int]
    lhs: MatElem
    rhs: MatElem

    def recompute(self, D: LinearMap) -> Tuple[MatElem, MatElem]:
        return _sides(D, self.kind, *self.pair)

    def to_json(self) -> dict:
        alg = self.lhs.algebra
        return {
            "kind": self.kind,
            "pair": list(self.pair),
            "labels": [alg.label(self.pair[0]), alg.label(self.pair[1])],
            "lhs": list(self.lhs.coords),
            "rhs": list(self.rhs.coords),
        }


def _sides(D: LinearMap, kind: str, i: int, j: int) -> Tuple[MatElem, MatElem]:
    alg = D.algebra
    lhs, rhs = _raw_sides(alg, [im.coords for im in D.images], kind, i, j)
    red = alg.ring.reduce_all
    return MatElem(alg, red(lhs)), MatElem(alg, red(rhs))


def check_holds(D: LinearMap, kind: str, i: int, j: int) -> bool:
    return raw_check_holds(D.algebra, [im.coords for im in D.images], kind, i, j)


def check_inputs(alg: AlgebraSpec, kind: str, i: int, j: int) -> frozenset:
    """Basis indices whose images a single check reads."""
    c = alg.structure_constants
    used = {i, j}
    used.update(k for k, v in enumerate(c[i][j]) if v)
    if kind == JORDAN_POLARIZED:
        used.update(k for k, v in enumerate(c[j][i]) if v)
    return frozenset(used)


def basis_checks(d: int, kind: str):
    """The ``(check_kind, i, j)`` triples that make up one property."""
    if kind == "jordan":
        return list(_jordan_checks(d))
    return list(_ordered_checks(kind, d))


def _run(D: LinearMap, checks, first_only: bool) -> Tuple[bool, List[Certificate]]:
    alg = D.algebra
    images = [im.coords for im in D.images]
    certs = []
    for kind, i, j in checks:
        if not raw_check_holds(alg, images, kind, i, j):
            lhs, rhs = _sides(D, kind, i, j)
            certs.append(Certificate(kind, (i, j), lhs, rhs))
            if first_only:
                break
    return not certs, certs


def _jordan_checks(d: int):
    for i in range(d):
        for j in range(i, d):
            yield (JORDAN_SQUARE if i == j else JORDAN_POLARIZED), i, j


def _ordered_checks(kind: str, d: int):
    for i, j in itertools.product(range(d), repeat=2):
        yield kind, i, j


def is_jordan(D: LinearMap, first_only: bool = False) -> Tuple[bool, List[Certificate]]:
    """Jordan property via the square and polarized basis conditions (lexicographic order)."""
    return _run(D, _jordan_checks(D.algebra.dim), first_only)


def is_derivation(D: LinearMap, first_only: bool = False) -> Tuple[bool, List[Certificate]]:
    """Leibniz rule on every ordered basis pair; sufficient by bilinearity."""
    return _run(D, _ordered_checks(DERIVATION, D.algebra.dim), first_only)


def is_antiderivation(D: LinearMap, first_only: bool = False) -> Tuple[bool, List[Certificate]]:
    return _run(D, _ordered_checks(ANTIDERIVATION, D.algebra.dim), first_only)


PREDICATES = {
    "jordan": is_jordan,
    "derivation": is_derivation,
    "antiderivation": is_antiderivation,
}


def holds(D: LinearMap, kind: str) -> bool:
    """Early-exit predicate used by the exhaustive enumerators."""
    return PREDICATES[kind](D, first_only=True)[0]


@dataclass
class ClassificationReport:
    is_jordan: bool
    is_derivation: bool
    is_antiderivation: bool
    certificates: List[Certificate] = field(default_factory=list)

    def flag(self, name: str) -> bool:
        return {"jordan": self.is_jordan, "derivation": self.is_derivation,
                "antiderivation": self.is_antiderivation}[name]

    def to_json(self) -> dict:
        return {
            "is_jordan": self.is_jordan,
            "is_derivation": self.is_derivation,
            "is_antiderivation": self.is_antiderivation,
            "certificates": [c.to_json() for c in self.certificates],
        }


def classify(D: LinearMap, first_only: bool = True) -> ClassificationReport:
    """Run all three checks.  With ``first_only`` each false flag carries its first failure."""
    j, cj = is_jordan(D, first_only)
    dv, cd = is_derivation(D, first_only)
    a, ca = is_antiderivation(D, first_only)
    return ClassificationReport(j, dv, a, cj + cd + ca)


@dataclass
class CounterexampleReport:
    X: MatElem
    Y: MatElem
    d_xy: MatElem
    leibniz_xy: MatElem
    d_yx: MatElem
    leibniz_yx: MatElem

    @property
    def differs(self) -> bool:
        return self.d_xy != self.leibniz_xy

    def to_json(self) -> dict:
        return {
            "X": str(self.X),
            "Y": str(self.Y),
            "D(XY)": str(self.d_xy),
            "D(X)Y+XD(Y)": str(self.leibniz_xy),
            "differs": self.differs,
            "D(YX)": str(self.d_yx),
            "D(Y)X+YD(X)": str(self.leibniz_yx),
        }


EXAMPLE1_X = ((1, 1), (1, 3), (1, 4), (2, 2), (3, 3), (3, 4), (4, 4))
EXAMPLE1_Y = ((1, 3), (1, 4), (3, 3), (3, 4), (4, 4))


def _pattern_elem(alg: AlgebraSpec, positions) -> MatElem:
    n = alg.ambient_n
    dense = [[0] * n for _ in range(n)]
    for r, c in positions:
        dense[r - 1][c - 1] = 1
    return alg.from_dense(dense)


def check_example1_counterexample(D: Optional[LinearMap] = None) -> CounterexampleReport:
    """Evaluate the Leibniz rule on the two elements that break it for the Example 1 map."""
    if D is None:
        from .fixtures import load_fixture

        D = load_fixture("example1").map
    alg = D.algebra
    X = _pattern_elem(alg, EXAMPLE1_X)
    Y = _pattern_elem(alg, EXAMPLE1_Y)
    dX, dY = apply(D, X), apply(D, Y)
    return CounterexampleReport(
        X, Y,
        apply(D, X * Y), dX * Y + X * dY,
        apply(D, Y * X), dY * X + Y * dX,
    )


# ---------------------------------------------------------------------------
# coefficient identities for T_n and M_n
# ---------------------------------------------------------------------------

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"


@dataclass
class IdentityResult:
    tag: str
    status: str
    failures: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"tag": self.tag, "status": self.status, "failures": self.failures}


@dataclass
class IdentityReport:
    algebra: str
    status: str
    reason: str = ""
    results: List[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def result(self, tag: str) -> IdentityResult:
        for r in self.results:
            if r.tag == tag:
                return r
        raise KeyError(tag)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "status": self.status,
            "reason": self.reason,
            "results": [r.to_json() for r in self.results],
        }


def _sym(k, l, i, j) -> str:
    return f"a_{k}{l}^({i}{j})" if max(k, l, i, j) < 10 else f"a_{k},{l}^({i},{j})"


class _Collector:
    def __init__(self, tag: str, table, ring):
        self.tag = tag
        self.a = table.a
        self.ring = ring
        self.failures: List[dict] = []

    def zero(self, k, l, i, j):
        v = self.a(k, l, i, j)
        if v:
            self.failures.append({"indices": [k, l, i, j], "values": {_sym(k, l, i, j): v}, "expected": 0})

    def sum_zero(self, *terms):
        vals = {_sym(*t): self.a(*t) for t in terms}
        total = self.ring.reduce(sum(vals.values()))
        if total:
            self.failures.append({"indices": [list(t) for t in terms], "values": vals, "sum": total})

    def equal(self, lhs, *rhs):
        vals = {_sym(*lhs): self.a(*lhs)}
        vals.update({_sym(*t): self.a(*t) for t in rhs})
        if self.ring.reduce(self.a(*lhs) - sum(self.a(*t) for t in rhs)):
            self.failures.append({"indices": [list(lhs)] + [list(t) for t in rhs], "values": vals})

    def result(self) -> IdentityResult:
        return IdentityResult(self.tag, FAIL if self.failures else PASS, self.failures)


def _upper_identities(table, ring, n: int, derivation: bool) -> List[IdentityResult]:
    cells = [(k, l) for k in range(1, n + 1) for l in range(k, n + 1)]
    out = []

    c = _Collector("Eq4", table, ring)
    for i in range(1, n + 1):
        for k, l in cells:
            if not ((l == i and k < i) or (k == i and l > i)):
                c.zero(k, l, i, i)
    out.append(c.result())

    c = _Collector("Eq5", table, ring)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        c.sum_zero((i, j, i, i), (i, j, j, j))
    out.append(c.result())

    c = _Collector("Eq6", table, ring)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        for k, l in cells:
            if not ((l == j and k < i) or (k == i and l >= j)):
                c.zero(k, l, i, j)
        for k in range(1, i):
            c.equal((k, j, i, j), (k, i, i, i))
    out.append(c.result())

    if derivation:
        c = _Collector("Eq8b", table, ring)
        for i, j, k in itertools.combinations(range(1, n + 1), 3):
            c.equal((i, k, i, k), (i, j, i, j), (j, k, j, k))
        out.append(c.result())
    else:
        out.append(IdentityResult("Eq8b", NOT_APPLICABLE))
    return out


def _full_identities(table, ring, n: int, derivation: bool) -> List[IdentityResult]:
    idx = range(1, n + 1)
    cells = [(k, l) for k in idx for l in idx]
    offdiag = [(i, j) for i in idx for j in idx if i != j]
    out = []

    c = _Collector("Eq9", table, ring)
    for i in idx:
        for k, l in cells:
            if (k == i) == (l == i):
                c.zero(k, l, i, i)
    out.append(c.result())

    c = _Collector("Eq10", table, ring)
    for k, l in offdiag:
        c.sum_zero((k, l, k, k), (k, l, l, l))
    out.append(c.result())

    c = _Collector("Eq11", table, ring)
    for i, j in offdiag:
        c.sum_zero((i, i, i, j), (j, i, i, i))
    out.append(c.result())

    c = _Collector("Eq12", table, ring)
    for i, j in offdiag:
        c.zero(j, i, i, j)
    out.append(c.result())

    c = _Collector("Eq13", table, ring)
    for i, j in offdiag:
        for k, l in cells:
            if not ((l == j and k != i) or k == i):
                c.zero(k, l, i, j)
        for k in idx:
            if k != i:
                c.equal((k, j, i, j), (k, i, i, i))
    out.append(c.result())

    c = _Collector("Eq14", table, ring)
    for i, j in offdiag:
        for l in idx:
            if l != j:
                c.equal((i, l, i, j), (j, l, j, j))
    out.append(c.result())

    if derivation:
        c = _Collector("Eq17a", table, ring)
        for i, j, k in itertools.permutations(idx, 3):
            c.equal((i, k, i, k), (i, j, i, j), (j, k, j, k))
        out.append(c.result())
        c = _Collector("Eq17b", table, ring)
        for i, j in offdiag:
            c.sum_zero((i, j, i, j), (j, i, j, i))
        out.append(c.result())
    else:
        out.append(IdentityResult("Eq17a", NOT_APPLICABLE))
        out.append(IdentityResult("Eq17b", NOT_APPLICABLE))
    return out


def check_structure_identities(D: LinearMap) -> IdentityReport:
    """Check the coefficient identities satisfied by Jordan derivations of T_n / M_n.

    T_n: Eq4, Eq5, Eq6, plus Eq8b when D is a derivation.
    M_n: Eq9 through Eq14, plus Eq17a and Eq17b when D is a derivation.
    A map that is not a Jordan derivation gets a not-applicable report.
    """
    alg = D.algebra
    if alg.kind not in (FULL, UPPER):
        raise NotApplicable("coefficient identities are defined only for T_n and M_n")
    name = alg.describe()
    if not is_jordan(D, first_only=True)[0]:
        return IdentityReport(name, NOT_APPLICABLE, "map is not a Jordan derivation")
    derivation = is_derivation(D, first_only=True)[0]
    table = coefficient_table(D)
    check = _upper_identities if alg.kind == UPPER else _full_identities
    results = check(table, alg.ring, alg.ambient_n, derivation)
    status = FAIL if any(r.status == FAIL for r in results) else PASS
    return IdentityReport(name, status, "", results)


def identity_tags(kind: str) -> Dict[str, bool]:
    """Identity tags per algebra kind; the value says whether it needs a derivation."""
    if kind == UPPER:
        return {"Eq4": False, "Eq5": False, "Eq6": False, "Eq8b": True}
    return {"Eq9": False, "Eq10": False, "Eq11": False, "Eq12": False, "Eq13": False,
            "Eq14": False, "Eq17a": True, "Eq17b": True}
