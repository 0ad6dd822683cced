"""Recovering a simplicial complex from its chain coalgebra.

An ``n``-simplex of the reconstruction is a coalgebra morphism from the
chains of the standard ``n``-simplex.  Such a morphism sends every face of
``[0..n]`` to a single generator with coefficient ``+1``, so morphisms are
found by assigning generators face by face and filtering through the
differential and the ``e_0``/``e_1`` coproduct tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import sympy

from .cartan import CoalgebraEvaluator
from .chains import ChainElement, Simplex, Word
from .exceptions import NotVertexDetermined, ScoalgError, TablesIncomplete, TruncationTooShort
from .operad import e
from .simplicial import SimplicialComplex, boundary, skeleton, standard_simplex

MAX_MORPHISM_DIM = 3


@dataclass
class CoalgebraPresentation:
    """Finite description of a coalgebra up to ``max_degree``.

    Generators are vertex tuples (for ``N(X)`` they are the simplices of
    ``X``).  ``diagonal[g]`` is ``f_2(e_d (x) g)`` for ``g`` of degree ``d``.
    """

    generators: Dict[int, List[Simplex]]
    differential: Dict[Simplex, ChainElement]
    e0: Dict[Simplex, ChainElement]
    e1: Dict[Simplex, ChainElement]
    diagonal: Dict[Simplex, ChainElement]
    max_degree: int
    labels: Dict[int, object] = field(default_factory=dict)

    @classmethod
    def from_complex(cls, X: SimplicialComplex, max_degree: int = 4,
                     evaluator: Optional[CoalgebraEvaluator] = None) -> "CoalgebraPresentation":
        ev = evaluator or CoalgebraEvaluator()
        gens = {d: X.simplices(d) for d in range(min(X.dimension, max_degree) + 1)}
        diff, t0, t1, diag = {}, {}, {}, {}
        for d, ss in gens.items():
            for s in ss:
                diff[s] = boundary(s) if d else ChainElement.zero()
                t0[s] = ev.f(2, e(0), s)
                t1[s] = ev.f(2, e(1), s)
                diag[s] = ev.f(2, e(d), s)
        return cls(gens, diff, t0, t1, diag, max_degree, dict(X.labels))

    def degree_of(self, g: Simplex) -> int:
        for d, ss in self.generators.items():
            if g in ss:
                return d
        raise KeyError(g)

    def counts(self) -> Tuple[int, ...]:
        return tuple(len(self.generators[d]) for d in sorted(self.generators))

    def differential_squares_to_zero(self) -> bool:
        for g, dg in self.differential.items():
            acc = ChainElement.zero()
            for (h,), c in dg.items():
                acc = acc + c * self.differential[h]
            if acc:
                return False
        return True


def _push(x: ChainElement, images: Mapping[Simplex, Simplex]) -> Optional[ChainElement]:
    """Apply a +1 generator assignment to every factor; None if a factor is unassigned."""
    acc = {}
    for w, c in x.items():
        try:
            nw = tuple(images[s] for s in w)
        except KeyError:
            return None
        acc[nw] = acc.get(nw, 0) + c
    return ChainElement(acc)


def _respects(src: CoalgebraPresentation, dst: CoalgebraPresentation,
              images: Mapping[Simplex, Simplex], g: Simplex) -> bool:
    """Check the differential and both coproduct tables at ``g``.

    Returns True when some needed face is not assigned yet; the check is
    repeated once the assignment is complete.
    """
    h = images[g]
    for table_s, table_d in ((src.differential, dst.differential),
                             (src.e0, dst.e0), (src.e1, dst.e1)):
        pushed = _push(table_s[g], images)
        if pushed is None:
            continue
        if pushed != table_d[h]:
            return False
    return True


@dataclass(frozen=True, order=True)
class SimplexMorphism:
    """A coalgebra morphism ``N(Delta^n) -> C``: face of ``[0..n]`` to generator."""

    n: int
    images: Tuple[Tuple[Simplex, Simplex], ...]

    def image(self, face: Sequence[int]) -> Simplex:
        return dict(self.images)[tuple(face)]

    @property
    def top(self) -> Simplex:
        return self.image(tuple(range(self.n + 1)))

    def vertex_images(self) -> Tuple[Simplex, ...]:
        return tuple(self.image((i,)) for i in range(self.n + 1))

    def restrict(self, coface: Sequence[int]) -> "SimplexMorphism":
        """Precompose with the inclusion of ``[0..n-1]`` onto the face ``coface``."""
        coface = tuple(coface)
        table = dict(self.images)
        m = len(coface) - 1
        imgs = []
        for k in range(1, m + 2):
            for f in itertools.combinations(range(m + 1), k):
                imgs.append((f, table[tuple(coface[j] for j in f)]))
        return SimplexMorphism(m, tuple(sorted(imgs)))


def _standard_presentation(n: int) -> CoalgebraPresentation:
    return CoalgebraPresentation.from_complex(standard_simplex(n), max_degree=n)


def enumerate_simplex_morphisms(C: CoalgebraPresentation, n: int) -> List[SimplexMorphism]:
    """All coalgebra morphisms ``N(Delta^n) -> C`` for ``n <= 3``."""
    if not 0 <= n <= MAX_MORPHISM_DIM:
        raise ScoalgError(f"morphism enumeration is implemented for 0 <= n <= {MAX_MORPHISM_DIM}")
    if n > C.max_degree:
        raise TablesIncomplete(f"tables stop at degree {C.max_degree}, need {n}")
    src = _standard_presentation(n)
    top = tuple(range(n + 1))
    # faces from the top down, so each face has an assigned coface when reached
    order = [f for d in range(n, -1, -1) for f in src.generators[d]]
    cofaces = {f: [(g, src.differential[g].coefficient((f,))) for g in order
                   if len(g) == len(f) + 1 and set(f) < set(g)] for f in order}
    # the e_n diagonal of the top cell must match that of the standard simplex
    top_sign = src.diagonal[top].coefficient((top, top))
    found: List[SimplexMorphism] = []

    def candidates(f: Simplex, images: Dict[Simplex, Simplex]) -> Iterator[Simplex]:
        if f == top:
            for g in C.generators.get(n, []):
                if C.diagonal[g] == ChainElement({(g, g): top_sign}):
                    yield g
            return
        pool = None
        for g, c in cofaces[f]:
            allowed = {h for (h,), hc in C.differential[images[g]].items() if hc == c}
            pool = allowed if pool is None else pool & allowed
        yield from sorted(pool or ())

    def extend(i: int, images: Dict[Simplex, Simplex]) -> None:
        if i == len(order):
            if all(_respects(src, C, images, f) for f in order):
                found.append(SimplexMorphism(n, tuple(sorted(images.items()))))
            return
        f = order[i]
        for g in candidates(f, images):
            images[f] = g
            extend(i + 1, images)
            del images[f]

    extend(0, {})
    return sorted(found, key=lambda m: (m.vertex_images(), m.images))


def reconstruct_skeleton(C: CoalgebraPresentation, k: int = 3) -> SimplicialComplex:
    """The ``k``-skeleton rebuilt from morphisms ``N(Delta^n) -> C``, ``n <= k``.

    Vertex ids are taken from the degree-0 generators when these are
    singletons, and numbered in sorted order otherwise.
    """
    if k > MAX_MORPHISM_DIM:
        raise ScoalgError(f"reconstruction is implemented up to dimension {MAX_MORPHISM_DIM}")
    k = min(k, max(C.generators))
    points = enumerate_simplex_morphisms(C, 0)
    if all(len(p.top) == 1 for p in points):
        vid = {p.top: p.top[0] for p in points}
    else:
        vid = {p.top: i for i, p in enumerate(points)}
    simplices = [(vid[p.top],) for p in points]
    for n in range(1, k + 1):
        seen = {}
        for m in enumerate_simplex_morphisms(C, n):
            vs = tuple(vid[v] for v in m.vertex_images())
            if len(set(vs)) != len(vs):
                raise NotVertexDetermined(f"a {n}-simplex morphism repeats a vertex: {vs}")
            if any(a >= b for a, b in zip(vs, vs[1:])):
                raise NotVertexDetermined(f"a {n}-simplex morphism reverses vertex order: {vs}")
            if vs in seen:
                raise NotVertexDetermined(f"two {n}-simplex morphisms share the vertices {vs}")
            seen[vs] = m
        simplices.extend(seen)
    return SimplicialComplex(simplices, name="reconstructed", labels=C.labels)


def simplex_morphism(sigma: Sequence[int]) -> SimplexMorphism:
    """``N(iota)`` for the characteristic map of ``sigma``."""
    sigma = tuple(sigma)
    n = len(sigma) - 1
    imgs = []
    for d in range(1, n + 2):
        for f in itertools.combinations(range(n + 1), d):
            imgs.append((f, tuple(sigma[j] for j in f)))
    return SimplexMorphism(n, tuple(sorted(imgs)))


@dataclass
class UnitMap:
    """``u_X``: each simplex of ``X`` of dimension at most 3 to its characteristic morphism."""

    source: SimplicialComplex
    target: SimplicialComplex
    assignment: Dict[Simplex, SimplexMorphism]
    is_isomorphism: bool


def unit_map(X: SimplicialComplex, presentation: Optional[CoalgebraPresentation] = None) -> UnitMap:
    C = presentation or CoalgebraPresentation.from_complex(X, max_degree=MAX_MORPHISM_DIM)
    top = min(MAX_MORPHISM_DIM, X.dimension)
    morphisms = {n: enumerate_simplex_morphisms(C, n) for n in range(top + 1)}
    target = reconstruct_skeleton(C, top)
    assignment = {s: simplex_morphism(s) for s in skeleton(X, top).simplices()}
    ok = True
    for n, ms in morphisms.items():
        hit = sorted(m for s, m in assignment.items() if len(s) == n + 1)
        ok = ok and hit == sorted(ms)
    # face compatibility: restricting u(s) to a coface is u of the face
    for s, m in assignment.items():
        for i in range(len(s) if len(s) > 1 else 0):
            face = s[:i] + s[i + 1:]
            coface = tuple(j for j in range(len(s)) if j != i)
            ok = ok and m.restrict(coface) == assignment[face]
    ok = ok and target == skeleton(X, top)
    return UnitMap(X, target, assignment, ok)


def find_coalgebra_isomorphism(X: SimplicialComplex, Y: SimplicialComplex,
                               max_degree: int = MAX_MORPHISM_DIM) -> Optional[Dict[Simplex, Simplex]]:
    """A degree-preserving generator bijection ``N(X) -> N(Y)`` respecting the tables, or None.

    Images carry coefficient ``+1``.  Generators are assigned top degree
    first, each cell followed by its faces, so the differential prunes the
    search early; every candidate witness is re-checked in full.
    """
    P = CoalgebraPresentation.from_complex(X, max_degree)
    Q = CoalgebraPresentation.from_complex(Y, max_degree)
    if P.counts() != Q.counts():
        return None
    order: List[Simplex] = []
    placed = set()

    def visit(s: Simplex) -> None:
        if s in placed:
            return
        placed.add(s)
        order.append(s)
        for (f,), _ in P.differential[s].items():
            visit(f)

    for d in sorted(P.generators, reverse=True):
        for s in P.generators[d]:
            visit(s)
    faces = {s: [f for (f,), _ in P.differential[s].items()] for s in order}
    cofaces: Dict[Simplex, List[Simplex]] = {s: [] for s in order}
    for s, fs in faces.items():
        for f in fs:
            cofaces[f].append(s)

    images: Dict[Simplex, Simplex] = {}
    used = set()

    def local_ok(s: Simplex) -> bool:
        for t in [s] + cofaces[s]:
            if t in images and not _respects(P, Q, images, t):
                return False
        return True

    def extend(i: int) -> Optional[Dict[Simplex, Simplex]]:
        if i == len(order):
            if all(_respects(P, Q, images, s) for s in order):
                return dict(images)
            return None
        s = order[i]
        d = len(s) - 1
        pool = set(Q.generators[d]) - used
        for t in cofaces[s]:
            if t in images:
                c = P.differential[t].coefficient((s,))
                pool &= {h for (h,), hc in Q.differential[images[t]].items() if hc == c}
        for h in sorted(pool):
            images[s] = h
            used.add(h)
            if local_ok(s):
                got = extend(i + 1)
                if got is not None:
                    return got
            used.discard(h)
            del images[s]
        return None

    return extend(0)


def vertex_map_of(witness: Mapping[Simplex, Simplex]) -> Dict[int, int]:
    return {s[0]: t[0] for s, t in witness.items() if len(s) == 1}


# -- independence of truncated diagonals -----------------------------------

def _monomial(word: Word, symbols: Dict[Simplex, sympy.Symbol]) -> sympy.Expr:
    out = sympy.Integer(1)
    for s in word:
        out *= symbols[s]
    return out


def vandermonde_independent(cs: Sequence[ChainElement], t: int) -> bool:
    """Linear independence over Q of the truncated diagonals ``(1, c, c(x)c, ...)``.

    Each basis simplex becomes a commuting variable and tensor products
    become products, which turns the truncated diagonal of ``c`` into
    ``1 + g(c) + ... + g(c)^(t-1)``.
    """
    cs = list(cs)
    if not cs:
        raise ScoalgError("need at least one element")
    if t < len(cs):
        raise TruncationTooShort(f"truncation {t} is shorter than the {len(cs)} elements")
    for c in cs:
        if not c or c.arity != 1:
            raise ScoalgError("elements must be nonzero arity-1 chains")
    basis = sorted({s for c in cs for (s,), _ in c.items()})
    symbols = {s: sympy.Symbol("x_" + "_".join(map(str, s))) for s in basis}
    polys = []
    for c in cs:
        total = sympy.Integer(1)
        power = c
        for _ in range(1, t):
            total += sum((v * _monomial(w, symbols) for w, v in power.items()), sympy.Integer(0))
            power = power.tensor(c)
        polys.append(sympy.Poly(total, *symbols.values()))
    monos = sorted({m for p in polys for m in p.as_dict()})
    M = sympy.Matrix([[p.as_dict().get(m, 0) for m in monos] for p in polys])
    return M.rank() == len(cs)
