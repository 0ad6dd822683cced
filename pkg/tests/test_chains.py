import itertools

import pytest
from hypothesis import given, settings, strategies as st

from scoalg.chains import (ChainElement, GradedMap, apply_tensor, boundary_map, hom_diff,
                           identity_map, normalize, tensor_boundary, zero_map)
from scoalg.exceptions import ArityMismatch, MixedGrading
from scoalg.simplicial import iota, phi

B = ChainElement.basis


def faces_of(k):
    return [s for d in range(1, k + 2) for s in itertools.combinations(range(k + 1), d)]


simplices = st.lists(st.integers(0, 5), min_size=1, max_size=4, unique=True).map(lambda v: tuple(sorted(v)))
words = st.lists(simplices, min_size=1, max_size=3).map(tuple)


def phi_map(k):
    return GradedMap(1, lambda s: phi(k, s), name=f"phi{k}")


def augment_map(k):
    return GradedMap(0, lambda s: iota(k) if len(s) == 1 else ChainElement.zero(), name="ie")


# -- normalize ---------------------------------------------------------------

def test_normalize_merges_coefficients():
    x = ((0, 1),)
    assert normalize([(1, x), (1, x)]) == ChainElement({x: 2})


def test_normalize_cancels():
    x = ((0, 1),)
    assert normalize([(1, x), (-1, x)]) == ChainElement.zero()


def test_normalize_canonical_order():
    y = normalize([(2, ((1, 2), (0,))), (3, ((0, 1), (2,)))])
    assert list(y.items()) == [(((0, 1), (2,)), 3), (((1, 2), (0,)), 2)]
    assert str(y) == "+3*[0,1](x)[2] +2*[1,2](x)[0]"


@given(st.lists(st.tuples(st.integers(-3, 3), st.lists(simplices, min_size=2, max_size=2).map(tuple))))
def test_normalize_idempotent(raw):
    raw = [(c, w) for c, w in raw if sum(map(len, w)) == sum(map(len, raw[0][1]))] if raw else []
    x = normalize(raw)
    assert normalize((c, w) for w, c in x.items()) == x


def test_zero_equal_across_gradings():
    a = B([0, 1]) - B([0, 1])
    b = B([0], [1]) - B([0], [1])
    assert a == b == ChainElement.zero()
    assert a.arity is None and a.degree is None


def test_mixed_grading_rejected():
    with pytest.raises(MixedGrading):
        B([0, 1]) + B([0])
    with pytest.raises(MixedGrading):
        ChainElement({((0, 1),): 1, ((0,), (1,)): 1})


# -- Koszul signs --------------------------------------------------------------

def test_apply_tensor_leading_map_has_no_sign():
    x = B([0], [0, 1, 2])
    assert apply_tensor([phi_map(2), identity_map()], x) == phi(2, (0,)).tensor(B([0, 1, 2]))


def test_apply_tensor_sign_from_passing_odd_factor():
    # g of degree 1 passes a of degree 1
    g = phi_map(2)
    x = B([0, 1], [0])
    assert apply_tensor([identity_map(), g], x) == -(B([0, 1]).tensor(phi(2, (0,))))


def test_apply_tensor_degree_zero_is_factorwise():
    ie = augment_map(3)
    x = B([0, 1], [2]) + B([0, 2], [1])
    expected = B([0, 1], [3]) + B([0, 2], [3])
    assert apply_tensor([identity_map(), ie], x) == expected


def test_apply_tensor_arity_checked():
    with pytest.raises(ArityMismatch):
        apply_tensor([identity_map()], B([0], [1]))


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(0, 3), min_size=1, max_size=3, unique=True)
                .map(lambda v: tuple(sorted(v))), min_size=2, max_size=2).map(tuple),
       st.sampled_from(["1", "d", "phi", "ie"]), st.sampled_from(["1", "d", "phi", "ie"]),
       st.sampled_from(["1", "d", "phi", "ie"]), st.sampled_from(["1", "d", "phi", "ie"]))
def test_koszul_composite_law(word, f1, g1, f2, g2):
    maps = {"1": identity_map(), "d": boundary_map(), "phi": phi_map(3), "ie": augment_map(3)}
    F1, G1, F2, G2 = (maps[k] for k in (f1, g1, f2, g2))
    x = ChainElement({word: 1})
    lhs = apply_tensor([F1, G1], apply_tensor([F2, G2], x))
    sign = -1 if (F2.degree * G1.degree) & 1 else 1
    rhs = sign * apply_tensor([F1 @ F2, G1 @ G2], x)
    assert lhs == rhs


# -- differentials -------------------------------------------------------------

@given(words)
def test_tensor_boundary_squares_to_zero(w):
    assert not tensor_boundary(tensor_boundary(ChainElement({w: 1})))


def test_boundary_squares_to_zero_exhaustively_on_delta4_pairs():
    for a, b in itertools.product(faces_of(4), repeat=2):
        assert not tensor_boundary(tensor_boundary(B(a, b)))


def test_hom_diff_of_chain_map_vanishes():
    d = boundary_map()
    for s in faces_of(4):
        assert not hom_diff(identity_map(), d, d).on_simplex(s)


def test_hom_diff_of_phi_is_one_minus_iota_epsilon():
    d = boundary_map()
    D = hom_diff(phi_map(2), d, d)
    one_minus = identity_map() - augment_map(2)
    for s in faces_of(2):
        assert D.on_simplex(s) == one_minus.on_simplex(s)


def test_hom_diff_of_zero_map():
    d = boundary_map()
    for s in faces_of(3):
        assert not hom_diff(zero_map(1), d, d).on_simplex(s)


@pytest.mark.parametrize("k", range(5))
def test_hom_diff_squares_to_zero(k):
    d = boundary_map()
    for f in (phi_map(k), augment_map(k), phi_map(k) @ augment_map(k), d @ phi_map(k)):
        DD = hom_diff(hom_diff(f, d, d), d, d)
        for s in faces_of(k):
            assert not DD.on_simplex(s)
