import itertools

import pytest

from jordanderiv.algebra import make_full, make_upper_triangular
from jordanderiv.classify import PREDICATES, is_jordan
from jordanderiv.errors import BudgetExceeded, InfiniteRing, InputError, NonPrimeModulus
from jordanderiv.linmap import map_from_key
from jordanderiv.solver import (
    build_constraints,
    compute_space,
    enumerate_space,
    enumerate_spaces,
    inner_space,
    kernel_mod_p,
    rref,
)

from conftest import Z, Z2, Z3, Z6, Z7


def test_constraint_counts(ex1_alg):
    s = build_constraints(make_upper_triangular(2, Z2), "jordan")
    assert s.n_unknowns == 9
    assert len(s.blocks) == 6  # 3 squares + 3 polarized pairs
    s = build_constraints(make_full(2, Z2), "derivation")
    assert s.n_unknowns == 16 and len(s.blocks) == 16
    assert build_constraints(ex1_alg, "jordan").n_unknowns == 49


def test_rref_is_canonical():
    rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert rref(rows, 3, 2) == ((1, 0, 1), (0, 1, 1))
    assert rref([[2, 4, 0], [1, 2, 3]], 3, 7) == ((1, 2, 0), (0, 0, 1))
    assert rref(rows[::-1], 3, 2) == rref(rows, 3, 2)


@pytest.mark.parametrize("kind", ["jordan", "derivation", "antiderivation"])
@pytest.mark.parametrize(
    "alg",
    [make_upper_triangular(2, Z2), make_upper_triangular(2, Z3), make_full(2, Z2), make_full(2, Z3)],
    ids=["T2Z2", "T2Z3", "M2Z2", "M2Z3"],
)
def test_kernel_matches_enumeration(alg, kind):
    k = kernel_mod_p(build_constraints(alg, kind))
    e = enumerate_space(alg, kind)
    assert k.keys() == e.keys()
    assert k.size == e.size


def test_example1_kernel_matches_search(ex1_alg):
    spaces = enumerate_spaces(ex1_alg)
    dims = {"jordan": 12, "derivation": 8, "antiderivation": 3}
    for kind, sp in spaces.items():
        assert sp.method == "search"
        k = kernel_mod_p(build_constraints(ex1_alg, kind))
        assert k.dimension == dims[kind]
        assert k.keys() == sp.keys()


def test_members_pass_classifier():
    alg = make_upper_triangular(3, Z2)
    for kind in ("jordan", "derivation", "antiderivation"):
        sp = compute_space(alg, kind)
        for D in sp.members():
            assert PREDICATES[kind](D)[0]


def test_closed_under_addition():
    alg = make_full(2, Z3)
    sp = enumerate_space(alg, "jordan")
    keys = sp.keys()
    ms = sp.members()
    for a, b in itertools.islice(itertools.product(ms, repeat=2), 0, None, 7):
        assert (a + b).key in keys
        assert a.scale(2).key in keys


def test_non_prime_modulus():
    with pytest.raises(NonPrimeModulus):
        kernel_mod_p(build_constraints(make_full(2, Z6), "jordan"))


def test_integers_cannot_be_enumerated():
    with pytest.raises(InfiniteRing):
        enumerate_space(make_full(2, Z), "jordan")
    with pytest.raises(InfiniteRing):
        inner_space(make_full(2, Z), method="enumerate")


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_space(make_full(2, Z3), "jordan", budget=50)
    sp = compute_space(make_full(3, Z2), "jordan")
    with pytest.raises(BudgetExceeded):
        sp.members(budget=10)


def test_unknown_kind_and_method():
    alg = make_full(2, Z2)
    with pytest.raises(InputError):
        enumerate_spaces(alg, ["bogus"])
    with pytest.raises(InputError):
        compute_space(alg, "jordan", method="bogus")


def test_inner_space_methods_agree():
    alg = make_full(2, Z3)
    e = inner_space(alg, method="enumerate")
    k = inner_space(alg, method="kernel")
    assert e.same_as(k) and k.same_as(e)
    # the 81 choices of B collapse modulo scalars
    assert e.size == 27 and e.tested == 81
    g = inner_space(make_full(2, Z), method="generators")
    # a spanning set: ad_e22 = -ad_e11 is kept alongside ad_e11
    assert len(g.basis) == 4
    assert any(
        (a + b).is_zero() for a, b in itertools.combinations(g.basis, 2)
    )


def test_non_prime_enumeration():
    alg = make_upper_triangular(2, Z6)
    inner = inner_space(alg)
    assert inner.size == 6 ** 2
    for D in inner.members():
        assert is_jordan(D)[0]


def test_contains_and_summary():
    alg = make_upper_triangular(2, Z2)
    sp = compute_space(alg, "jordan")
    assert sp.contains(map_from_key(alg, [0] * 9))
    assert not sp.contains(map_from_key(alg, [1] + [0] * 8))
    assert sp.summary() == {"kind": "jordan", "method": "kernel", "dimension": 2, "count": 4, "basis_size": 2}


def test_antiderivation_instances_found_by_solver():
    from jordanderiv.classify import is_antiderivation

    t2 = compute_space(make_upper_triangular(2, Z2), "antiderivation")
    assert t2.dimension == 1
    (D,) = t2.basis
    assert not D.is_zero()
    assert is_antiderivation(D)[0] and is_jordan(D)[0]
    assert compute_space(make_upper_triangular(2, Z3), "antiderivation").dimension == 1
    for ring in (Z2, Z3):
        assert compute_space(make_full(2, ring), "antiderivation").dimension == 0
