import itertools
import json

import pytest
from hypothesis import given, strategies as st

from scoalg.chains import ChainElement
from scoalg.exceptions import (DimensionZero, DuplicateVertexInFacet, NotAFace, NotInjective,
                               NotOrderPreserving, ScoalgError, SimplexNotInComplex)
from scoalg.simplicial import (SimplicialComplex, VertexMap, augment, boundary, induced_map,
                               intern_labels, iota, load_complex, phi, read_facet_file,
                               simplex_boundary_complex, skeleton, standard_simplex,
                               write_facet_file)

S = ChainElement.simplex

RP2 = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
       [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]]


def faces_of(k):
    return [s for d in range(1, k + 2) for s in itertools.combinations(range(k + 1), d)]


facet_lists = st.lists(st.lists(st.integers(0, 7), min_size=1, max_size=4, unique=True),
                       min_size=1, max_size=6)


def test_load_delta2():
    assert load_complex([[0, 1, 2]]).f_vector() == (3, 3, 1)


def test_load_hollow_triangle():
    X = load_complex([[0, 1], [1, 2], [0, 2]])
    assert X.f_vector() == (3, 3)
    assert X.dimension == 1


def test_load_rp2():
    X = load_complex(RP2)
    assert X.f_vector() == (6, 15, 10)
    # every edge of the six-vertex projective plane is present
    assert len(X.simplices(1)) == 15 == 6 * 5 // 2


def test_duplicate_facets_merge_and_repeats_rejected():
    assert load_complex([[0, 1], [1, 0]]).f_vector() == (2, 1)
    with pytest.raises(DuplicateVertexInFacet):
        load_complex([[0, 1, 1]])


@given(facet_lists)
def test_face_closure_and_idempotent_load(facets):
    X = load_complex(facets)
    for s in X.simplices():
        for k in range(1, len(s)):
            for f in itertools.combinations(s, k):
                assert f in X
    assert load_complex(X.simplices()) == X
    assert load_complex(X.facets()) == X


def test_boundary_examples():
    assert boundary((0, 1, 2)) == S(1, 2) - S(0, 2) + S(0, 1)
    assert boundary((0, 1, 2, 3)) == S(1, 2, 3) - S(0, 2, 3) + S(0, 1, 3) - S(0, 1, 2)
    assert not boundary(boundary((0, 1, 2, 3)))
    with pytest.raises(DimensionZero):
        boundary((4,))


def test_phi_examples():
    assert phi(2, (0, 1)) == S(0, 1, 2)
    assert not phi(2, (0, 2))
    assert phi(2, (0,)) == -S(0, 2)
    with pytest.raises(NotAFace):
        phi(2, (0, 3))


def test_augment_and_iota():
    assert augment(S(0) + S(1)) == 2
    assert augment(S(0, 1)) == 0
    assert iota(2) == S(2)


@pytest.mark.parametrize("k", range(7))
def test_contracting_identity(k):
    for s in faces_of(k):
        x = S(*s)
        lhs = x - (iota(k) * augment(x))
        rhs = (boundary(phi(k, s)) if phi(k, s) else ChainElement.zero()) + \
            (phi(k, boundary(s)) if len(s) > 1 else ChainElement.zero())
        assert lhs == rhs, s


@pytest.mark.parametrize("k", range(7))
def test_phi_squared_and_phi_iota_vanish(k):
    for s in faces_of(k):
        assert not phi(k, phi(k, s))
    assert not phi(k, iota(k))


def test_induced_map_examples():
    D1, D2, D3 = standard_simplex(1), standard_simplex(2), standard_simplex(3)
    assert induced_map(VertexMap(D1, D2, {0: 0, 1: 1}), S(0, 1)) == S(0, 1)
    assert induced_map(VertexMap(D1, D3, {0: 1, 1: 3}), S(0, 1)) == S(1, 3)


def test_induced_map_commutes_with_boundary():
    D3, D5 = standard_simplex(3), standard_simplex(5)
    for images in itertools.combinations(range(6), 4):
        vm = VertexMap(D3, D5, dict(enumerate(images)))
        for s in faces_of(3):
            if len(s) > 1:
                assert induced_map(vm, boundary(s)) == boundary(induced_map(vm, S(*s)))


def test_vertex_map_rejections():
    D1, D2 = standard_simplex(1), standard_simplex(2)
    with pytest.raises(NotOrderPreserving):
        VertexMap(D1, D2, {0: 2, 1: 0})
    with pytest.raises(NotInjective):
        VertexMap(D1, D2, {0: 1, 1: 1})
    with pytest.raises(SimplexNotInComplex):
        VertexMap(D1, simplex_boundary_complex(2).__class__([(0,), (1,)]), {0: 0, 1: 1})


def test_skeleton_examples():
    D3 = standard_simplex(3)
    assert skeleton(D3, 3) == D3
    K4 = skeleton(D3, 1)
    assert K4.f_vector() == (4, 6) and K4.simplices(1) == list(itertools.combinations(range(4), 2))
    assert skeleton(simplex_boundary_complex(4), 2).f_vector() == (5, 10, 10)


def test_intern_labels_sorts_strings():
    ids, labels = intern_labels([["c", "a"], ["b", "a"]])
    assert ids == [[2, 0], [1, 0]]
    assert labels == {0: "a", 1: "b", 2: "c"}


def test_facet_file_round_trip(tmp_path):
    X = load_complex(RP2, name="rp2")
    p = tmp_path / "rp2.json"
    write_facet_file(X, p)
    Y = read_facet_file(p)
    assert Y == X and Y.name == "rp2"


@pytest.mark.parametrize("body", ['{"facets": [[0, 1], [1, true]]}', '[1, 2]', '{"facets": 3}', "not json",
                                  '{"facets": [[0, 1.5]]}'])
def test_facet_file_rejects_bad_input(tmp_path, body):
    p = tmp_path / "bad.json"
    p.write_text(body)
    with pytest.raises(ScoalgError):
        read_facet_file(p)


def test_facet_file_string_labels(tmp_path):
    p = tmp_path / "s1.json"
    p.write_text(json.dumps({"name": "s1", "facets": [["v", "w"], ["u", "w"], ["u", "v"]]}))
    X = read_facet_file(p)
    assert X.f_vector() == (3, 3)
    assert [X.label(v) for v in X.vertices] == ["u", "v", "w"]


def test_complex_equality_ignores_names():
    assert SimplicialComplex([(0, 1)], name="a") == SimplicialComplex([(1, 0)], name="b")
