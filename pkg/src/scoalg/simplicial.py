"""Simplicial complexes and their normalized chain complexes."""

from __future__ import annotations

import itertools
import json
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .chains import ChainElement, Simplex, boundary_simplex
from .exceptions import (DimensionZero, DuplicateVertexInFacet, NotAFace, NotInjective,
                         NotOrderPreserving, ScoalgError, SimplexNotInComplex)


class SimplicialComplex:
    """A face-closed set of strictly increasing vertex tuples.

    Vertex ids are nonnegative ints; their natural order is the vertex order
    used by every construction.  ``labels`` maps ids back to the labels of
    the source file for display.
    """

    def __init__(self, simplices: Iterable[Sequence[int]], name: str = "",
                 labels: Optional[Mapping[int, object]] = None):
        closed = set()
        for s in simplices:
            s = tuple(sorted(s))
            for k in range(1, len(s) + 1):
                closed.update(itertools.combinations(s, k))
        by_dim: Dict[int, List[Simplex]] = {}
        for s in closed:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self._by_dim = {d: sorted(v) for d, v in sorted(by_dim.items())}
        self._all = frozenset(closed)
        self.name = name
        self.labels = dict(labels) if labels else {}

    @property
    def vertices(self) -> List[int]:
        return [s[0] for s in self._by_dim.get(0, [])]

    @property
    def dimension(self) -> int:
        return max(self._by_dim) if self._by_dim else -1

    def simplices(self, d: Optional[int] = None) -> List[Simplex]:
        if d is None:
            return [s for k in self._by_dim for s in self._by_dim[k]]
        return list(self._by_dim.get(d, []))

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self._by_dim.get(d, [])) for d in range(self.dimension + 1))

    def facets(self) -> List[Simplex]:
        out = []
        for s in self.simplices():
            if not any(len(t) == len(s) + 1 and set(s) < set(t) for t in self._by_dim.get(len(s), [])):
                out.append(s)
        return out

    def __contains__(self, s) -> bool:
        return tuple(s) in self._all

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._all == other._all

    def __hash__(self) -> int:
        return hash(self._all)

    def label(self, v: int):
        return self.labels.get(v, v)

    def __repr__(self) -> str:
        nm = f"{self.name!r}, " if self.name else ""
        return f"SimplicialComplex({nm}f_vector={self.f_vector()})"


def load_complex(facets: Iterable[Sequence[int]], name: str = "",
                 labels: Optional[Mapping[int, object]] = None) -> SimplicialComplex:
    """Face closure of a facet list.

    >>> load_complex([[0, 1, 2]]).f_vector()
    (3, 3, 1)
    """
    checked = []
    for f in facets:
        f = list(f)
        if len(set(f)) != len(f):
            raise DuplicateVertexInFacet(f"facet {f} repeats a vertex")
        if not f:
            raise ScoalgError("empty facet")
        checked.append(f)
    return SimplicialComplex(checked, name=name, labels=labels)


def intern_labels(facets: Sequence[Sequence[object]]) -> Tuple[List[List[int]], Dict[int, object]]:
    """Map external labels to vertex ids.

    Nonnegative integer labels are kept as ids.  Otherwise all labels are
    sorted (as strings when mixed) and numbered from 0.
    """
    flat = [v for f in facets for v in f]
    if all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in flat):
        return [list(f) for f in facets], {}
    if all(isinstance(v, str) for v in flat):
        order = sorted(set(flat))
    else:
        order = sorted(set(flat), key=lambda v: (str(type(v)), str(v)))
    ids = {lab: i for i, lab in enumerate(order)}
    return [[ids[v] for v in f] for f in facets], {i: lab for lab, i in ids.items()}


def read_facet_file(path: "str | Path") -> SimplicialComplex:
    """Load a JSON facet file ``{"name": ..., "facets": [[...], ...]}``."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ScoalgError(f"{path}: not valid JSON ({exc.msg})") from None
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ScoalgError(f"{path}: expected an object with a 'facets' field")
    facets = doc["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ScoalgError(f"{path}: 'facets' must be an array of arrays")
    for f in facets:
        for v in f:
            if isinstance(v, bool) or not isinstance(v, (int, str)):
                raise ScoalgError(f"{path}: vertex label {v!r} is neither an integer nor a string")
    ids, labels = intern_labels(facets)
    return load_complex(ids, name=str(doc.get("name", path.stem)), labels=labels)


def write_facet_file(X: SimplicialComplex, path: "str | Path") -> None:
    facets = [[X.label(v) for v in f] for f in X.facets()]
    Path(path).write_text(json.dumps({"name": X.name, "facets": facets}, indent=1) + "\n")


def standard_simplex(k: int) -> SimplicialComplex:
    return SimplicialComplex([range(k + 1)], name=f"Delta^{k}")


def simplex_boundary_complex(k: int) -> SimplicialComplex:
    """The boundary of the standard ``k``-simplex."""
    return SimplicialComplex(itertools.combinations(range(k + 1), k), name=f"dDelta^{k}")


def skeleton(X: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ScoalgError("skeleton dimension must be nonnegative")
    return SimplicialComplex([s for s in X.simplices() if len(s) <= k + 1],
                             name=f"{X.name}^({k})" if X.name else "", labels=X.labels)


# -- chain-level operations ---------------------------------------------

def boundary(s: Sequence[int] | ChainElement) -> ChainElement:
    """Alternating face sum; linear on arity-1 chains.

    >>> str(boundary((0, 1, 2)))
    '+[0,1] -[0,2] +[1,2]'
    """
    if isinstance(s, ChainElement):
        acc: Dict = {}
        for (t,), c in s.items():
            if len(t) == 1:
                continue
            for f, fc in boundary_simplex(t).items():
                acc[(f,)] = acc.get((f,), 0) + c * fc
        return ChainElement(acc)
    s = tuple(s)
    if len(s) < 2:
        raise DimensionZero(f"boundary of the vertex {list(s)}")
    return ChainElement({(f,): c for f, c in boundary_simplex(s).items()})


def phi(k: int, s: Sequence[int] | ChainElement) -> ChainElement:
    """Contracting cochain on the standard ``k``-simplex: cone a face to vertex ``k``.

    ``phi_k([i_0..i_t]) = (-1)^(t+1) [i_0..i_t,k]`` unless ``i_t = k``.
    """
    if isinstance(s, ChainElement):
        acc: Dict = {}
        for (t,), c in s.items():
            for w, d in phi(k, t).items():
                acc[w] = acc.get(w, 0) + c * d
        return ChainElement(acc)
    s = tuple(s)
    if not s or any(v < 0 or v > k for v in s) or any(a >= b for a, b in zip(s, s[1:])):
        raise NotAFace(f"{list(s)} is not a face of Delta^{k}")
    if s[-1] == k:
        return ChainElement.zero()
    return ChainElement({(s + (k,),): -1 if len(s) & 1 else 1})


def augment(x: ChainElement) -> int:
    """Sum of the coefficients of vertices (arity 1)."""
    return sum(c for (s,), c in x.items() if len(s) == 1)


def iota(k: int) -> ChainElement:
    return ChainElement.simplex(k)


class VertexMap:
    """Order-preserving injective vertex map carrying simplices to simplices."""

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex,
                 assignment: Mapping[int, int]):
        self.source, self.target = source, target
        self.assignment = dict(assignment)
        missing = [v for v in source.vertices if v not in self.assignment]
        if missing:
            raise ScoalgError(f"vertex map undefined on {missing}")
        verts = source.vertices
        images = [self.assignment[v] for v in verts]
        if len(set(images)) != len(images):
            raise NotInjective("vertex map identifies vertices")
        if any(a >= b for a, b in zip(images, images[1:])):
            raise NotOrderPreserving("vertex map does not preserve the vertex order")
        for s in source.simplices():
            if tuple(self.assignment[v] for v in s) not in target:
                raise SimplexNotInComplex(f"image of {list(s)} is not a simplex of the target")

    def __call__(self, v: int) -> int:
        return self.assignment[v]


def induced_map(vm: VertexMap, x: ChainElement) -> ChainElement:
    return x.relabel(vm.assignment)
