import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordanderiv.errors import InputError
from jordanderiv.ring import RingElem, RingSpec, is_two_torsion_free, ring_arith, ring_from_json

Z = RingSpec.integers()


def test_char_two_addition():
    r = RingSpec.mod(2)
    assert ring_arith("add", r.elem(1), r.elem(1)) == r.elem(0)


def test_negation_over_integers():
    assert ring_arith("neg", Z.elem(1)).value == -1


def test_add_mod_6():
    r = RingSpec.mod(6)
    assert ring_arith("add", r.elem(3), r.elem(5)).value == 2


def test_mixed_rings_rejected():
    with pytest.raises(InputError):
        RingSpec.mod(2).elem(1) + RingSpec.mod(3).elem(1)
    with pytest.raises(InputError):
        ring_arith("add", Z.elem(1), RingSpec.mod(5).elem(1))


def test_non_canonical_representative_rejected():
    with pytest.raises(InputError):
        RingElem(RingSpec.mod(4), 5)


@pytest.mark.parametrize("m", [0, 1, -3])
def test_bad_modulus(m):
    with pytest.raises(InputError):
        RingSpec.mod(m)


def _brute_two_torsion_free(m):
    return all(a == 0 for a in range(m) if (2 * a) % m == 0)


@pytest.mark.parametrize("m", range(2, 40))
def test_two_torsion_matches_brute_force(m):
    assert is_two_torsion_free(RingSpec.mod(m)) == _brute_two_torsion_free(m)


def test_two_torsion_examples():
    assert is_two_torsion_free(Z)
    assert not is_two_torsion_free(RingSpec.mod(2))
    assert is_two_torsion_free(RingSpec.mod(7))


def test_json_round_trip():
    for r in (Z, RingSpec.mod(2), RingSpec.mod(12)):
        assert ring_from_json(r.to_json()) == r
    with pytest.raises(InputError, match="ring.m"):
        ring_from_json({"type": "Zmod", "m": 1})
    with pytest.raises(InputError, match="ring.type"):
        ring_from_json({"type": "Q"})


rings = st.sampled_from([None, 2, 3, 6, 7, 12]).map(RingSpec)


@given(rings, st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_ring_axioms(r, a, b, c):
    a, b, c = r.elem(a), r.elem(b), r.elem(c)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == r.elem(0)
    assert a * r.elem(1) == a


@given(rings, st.integers(-10**6, 10**6))
def test_reduce_idempotent(r, v):
    assert r.reduce(r.reduce(v)) == r.reduce(v)
