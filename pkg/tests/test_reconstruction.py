import itertools

import pytest
from hypothesis import given, settings, strategies as st

from scoalg.cartan import CoalgebraEvaluator
from scoalg.chains import ChainElement
from scoalg.corpus import corpus_names, resolve
from scoalg.exceptions import NotVertexDetermined, ScoalgError, TablesIncomplete, TruncationTooShort
from scoalg.operad import e
from scoalg.reconstruction import (CoalgebraPresentation, enumerate_simplex_morphisms,
                                   find_coalgebra_isomorphism, reconstruct_skeleton, simplex_morphism,
                                   unit_map, vandermonde_independent, vertex_map_of)
from scoalg.simplicial import (SimplicialComplex, load_complex, simplex_boundary_complex, skeleton,
                               standard_simplex)

S = ChainElement.simplex
EV = CoalgebraEvaluator()

RP2 = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
       [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]]
POINT = load_complex([[0]])
HOLLOW = load_complex([[0, 1], [1, 2], [0, 2]])


def pres(X, d=3):
    return CoalgebraPresentation.from_complex(X, max_degree=d, evaluator=EV)


def test_presentation_tables():
    C = pres(standard_simplex(2))
    assert C.counts() == (3, 3, 1)
    assert C.differential_squares_to_zero()
    assert C.e0[(0, 1, 2)] == EV.f(2, e(0), (0, 1, 2))
    assert C.diagonal[(0, 1)] == ChainElement({((0, 1), (0, 1)): 1})
    assert C.degree_of((1, 2)) == 1


# -- enumeration ---------------------------------------------------------------

def test_point_has_one_point():
    assert len(enumerate_simplex_morphisms(pres(POINT), 0)) == 1


def test_edges_of_delta2():
    ms = enumerate_simplex_morphisms(pres(standard_simplex(2)), 1)
    assert [m.top for m in ms] == [(0, 1), (0, 2), (1, 2)]


def test_hollow_triangle_has_no_2_simplices():
    C = pres(HOLLOW, 2)
    assert enumerate_simplex_morphisms(C, 2) == []


def test_exhaustive_filter_oracle_for_edges():
    # brute force over every +1 assignment of faces of [0,1] to generators of the right degree
    C = pres(load_complex(RP2))
    brute = []
    for a, b in itertools.product(C.generators[0], repeat=2):
        for g in C.generators[1]:
            if C.differential[g] == S(*b) - S(*a) and C.e0[g] == ChainElement.basis(a, g) + ChainElement.basis(g, b):
                brute.append(g)
    assert sorted(m.top for m in enumerate_simplex_morphisms(C, 1)) == sorted(brute)


@pytest.mark.parametrize("n", range(4))
def test_automorphism_rigidity(n):
    top = tuple(range(n + 1))
    ms = [m for m in enumerate_simplex_morphisms(pres(standard_simplex(n)), n) if m.top == top]
    assert ms == [simplex_morphism(top)]


def test_one_morphism_per_simplex_of_rp2():
    X = load_complex(RP2)
    C = pres(X)
    for n in range(3):
        ms = enumerate_simplex_morphisms(C, n)
        assert sorted(m.top for m in ms) == X.simplices(n)
        assert ms == sorted(simplex_morphism(s) for s in X.simplices(n))


def test_tables_incomplete_and_dimension_cap():
    with pytest.raises(TablesIncomplete):
        enumerate_simplex_morphisms(pres(standard_simplex(3), 1), 2)
    with pytest.raises(ScoalgError):
        enumerate_simplex_morphisms(pres(standard_simplex(3)), 4)


def test_restriction_is_face_map():
    m = simplex_morphism((2, 4, 7))
    assert m.restrict((0, 2)) == simplex_morphism((2, 7))
    assert m.vertex_images() == ((2,), (4,), (7,))


# -- reconstruction ---------------------------------------------------------------

@pytest.mark.parametrize("X,fv", [(simplex_boundary_complex(3), (4, 6, 4)), (standard_simplex(3), (4, 6, 4, 1)),
                                  (POINT, (1,))])
def test_reconstruct_examples(X, fv):
    Y = reconstruct_skeleton(pres(X), 3)
    assert Y == X and Y.f_vector() == fv


def test_reconstruct_caps_dimension():
    with pytest.raises(ScoalgError):
        reconstruct_skeleton(pres(standard_simplex(2)), 4)


def test_non_simplicial_presentation_detected():
    # two edges with the same boundary and the same tables: a multigraph, not a complex
    X = load_complex([[0, 1]])
    C = pres(X)
    fake = (0, 1, 99)
    C.generators[1].append(fake)
    C.differential[fake] = C.differential[(0, 1)]
    for table in (C.e0, C.e1, C.diagonal):
        table[fake] = ChainElement._from_dict(
            {tuple(fake if s == (0, 1) else s for s in w): c for w, c in table[(0, 1)].items()})
    with pytest.raises(NotVertexDetermined):
        reconstruct_skeleton(C, 1)


@pytest.mark.parametrize("name", corpus_names())
def test_round_trip_on_corpus(name):
    X = resolve(name)
    u = unit_map(X)
    assert u.is_isomorphism
    assert u.target == skeleton(X, 3)
    assert set(u.assignment) == set(skeleton(X, 3).simplices())


def test_unit_map_examples():
    for X in (simplex_boundary_complex(3), load_complex(RP2), POINT):
        assert unit_map(X).is_isomorphism


# -- isomorphism search -----------------------------------------------------------

def _relabel(X, perm):
    return load_complex([[perm[v] for v in s] for s in X.facets()])


def _check_witness(X, Y, w):
    P, Q = pres(X), pres(Y)
    assert sorted(w) == sorted(X.simplices()) and sorted(w.values()) == sorted(Y.simplices())
    for g, h in w.items():
        for table_p, table_q in ((P.differential, Q.differential), (P.e0, Q.e0), (P.e1, Q.e1)):
            pushed = ChainElement._from_dict({tuple(w[s] for s in word): c for word, c in table_p[g].items()})
            assert pushed == table_q[h]


def test_identity_witness():
    X = simplex_boundary_complex(3)
    w = find_coalgebra_isomorphism(X, X)
    assert w == {s: s for s in X.simplices()}


def test_sphere_versus_projective_plane():
    assert find_coalgebra_isomorphism(simplex_boundary_complex(3), load_complex(RP2)) is None


def test_monotone_relabel_found_and_checked():
    X = load_complex(RP2)
    perm = {v: 10 + 2 * v for v in X.vertices}
    Y = _relabel(X, perm)
    w = find_coalgebra_isomorphism(X, Y)
    assert w is not None and vertex_map_of(w) == perm
    _check_witness(X, Y, w)


def test_non_monotone_relabel_has_no_positive_witness():
    # coalgebra maps with +1 images preserve vertex order
    X = standard_simplex(2)
    assert find_coalgebra_isomorphism(X, _relabel(X, {0: 2, 1: 0, 2: 1})) == \
        {s: s for s in X.simplices()}
    Y = load_complex(RP2)
    Z = _relabel(Y, {1: 2, 2: 1, 3: 3, 4: 4, 5: 5, 6: 6})
    assert find_coalgebra_isomorphism(Y, Z) is None


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(0, 5), min_size=1, max_size=3, unique=True), min_size=1, max_size=5),
       st.lists(st.integers(0, 40), min_size=6, max_size=6, unique=True))
def test_witness_for_monotone_relabels(facets, targets):
    X = load_complex(facets)
    targets = sorted(targets)
    perm = {v: targets[v] for v in X.vertices}
    Y = _relabel(X, perm)
    w = find_coalgebra_isomorphism(X, Y)
    assert w is not None
    _check_witness(X, Y, w)


# -- Vandermonde ------------------------------------------------------------------

def test_vandermonde_examples():
    assert vandermonde_independent([S(0, 1)], 1)
    assert vandermonde_independent([S(0, 1), S(1, 2)], 2)
    assert not vandermonde_independent([S(0, 1), S(0, 1)], 2)
    with pytest.raises(TruncationTooShort):
        vandermonde_independent([S(0, 1), S(1, 2)], 1)
    with pytest.raises(ScoalgError):
        vandermonde_independent([], 2)


def test_vandermonde_detects_sums_of_generators():
    # distinct elements that are not single generators stay independent
    assert vandermonde_independent([S(0, 1), S(0, 1) + S(1, 2), 2 * S(0, 1)], 3)


generators = st.lists(st.integers(0, 4), min_size=1, max_size=3, unique=True).map(lambda v: tuple(sorted(v)))


@settings(max_examples=60, deadline=None)
@given(st.lists(generators, min_size=2, max_size=4, unique=True), st.data())
def test_vandermonde_distinct_true_duplicate_false(gens, data):
    cs = [S(*g) for g in gens]
    assert vandermonde_independent(cs, len(cs))
    dup = data.draw(st.sampled_from(cs))
    assert not vandermonde_independent(cs + [dup], len(cs) + 1)
