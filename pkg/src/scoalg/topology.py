"""Edge-path presentations of the fundamental group and integral first homology."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy
from sympy.matrices.normalforms import smith_normal_decomp

from .exceptions import BasepointMissing, NotConnected, PartialRelabeling
from .simplicial import SimplicialComplex

Edge = Tuple[int, int]
Letter = Tuple[Edge, int]


@dataclass(frozen=True)
class Presentation:
    """Generators are edges; a relator is a tuple of ``(edge, +1 | -1)`` letters."""

    generators: Tuple[Edge, ...]
    relators: Tuple[Tuple[Letter, ...], ...]

    def __post_init__(self):
        gens = set(self.generators)
        for r in self.relators:
            for g, _ in r:
                if g not in gens:
                    raise ValueError(f"relator mentions {g}, which is not a generator")

    def format(self, labels: Optional[Mapping[int, object]] = None) -> str:
        lab = (lambda v: labels.get(v, v)) if labels else (lambda v: v)

        def gen(g: Edge) -> str:
            return f"g[{lab(g[0])},{lab(g[1])}]"

        head = f"generators ({len(self.generators)}):"
        lines = [" ".join([head] + [gen(g) for g in self.generators])]
        lines.append(f"relators ({len(self.relators)}):")
        for r in self.relators:
            lines.append("  " + " ".join(gen(g) + ("" if k == 1 else "^-1") for g, k in r))
        return "\n".join(lines)


def _free_reduce(word: Sequence[Letter]) -> Tuple[Letter, ...]:
    out: List[Letter] = []
    for g, k in word:
        if out and out[-1][0] == g and out[-1][1] == -k:
            out.pop()
        else:
            out.append((g, k))
    return tuple(out)


def spanning_tree(X: SimplicialComplex, basepoint: int) -> List[Edge]:
    """Breadth-first tree from ``basepoint``, neighbours visited in vertex order."""
    adj: Dict[int, List[int]] = {v: [] for v in X.vertices}
    for a, b in X.simplices(1):
        adj[a].append(b)
        adj[b].append(a)
    seen = {basepoint}
    tree = []
    queue = deque([basepoint])
    while queue:
        v = queue.popleft()
        for w in sorted(adj[v]):
            if w not in seen:
                seen.add(w)
                tree.append((min(v, w), max(v, w)))
                queue.append(w)
    if len(seen) != len(adj):
        raise NotConnected(f"{X.name or 'complex'} is not connected")
    return tree


def kill_short_relators(gens: Sequence[Edge], relators: Sequence[Tuple[Letter, ...]]
                        ) -> Tuple[Tuple[Edge, ...], Tuple[Tuple[Letter, ...], ...]]:
    """Repeatedly drop a generator that equals a relator of length one."""
    gens = list(gens)
    rels = [r for r in relators if r]
    while True:
        short = next((r for r in rels if len(r) == 1), None)
        if short is None:
            break
        dead = short[0][0]
        gens.remove(dead)
        rels = [_free_reduce([x for x in r if x[0] != dead]) for r in rels]
        rels = [r for r in rels if r]
    return tuple(gens), tuple(rels)


def pi1_presentation(X: SimplicialComplex, basepoint: Optional[int] = None) -> Presentation:
    """Edge-path group presentation of ``pi_1(X, basepoint)``.

    Tree edges are trivial, every triangle ``[a,b,c]`` contributes
    ``g_ab g_bc g_ac^-1``, and relators that become trivial or reduce to a
    single letter are eliminated.
    """
    if not X.vertices:
        raise NotConnected("empty complex")
    if basepoint is None:
        basepoint = X.vertices[0]
    if (basepoint,) not in X:
        raise BasepointMissing(f"vertex {basepoint} is not in {X.name or 'the complex'}")
    tree = set(spanning_tree(X, basepoint))
    gens = [e for e in X.simplices(1) if e not in tree]
    rels = []
    for a, b, c in X.simplices(2):
        word = [((a, b), 1), ((b, c), 1), ((a, c), -1)]
        rels.append(_free_reduce([x for x in word if x[0] not in tree]))
    g, r = kill_short_relators(gens, rels)
    return Presentation(g, r)


def relabel_presentation(p: Presentation, relabel: Mapping[Edge, Edge]) -> Presentation:
    missing = [g for g in p.generators if g not in relabel]
    if missing:
        raise PartialRelabeling(f"relabeling undefined on {missing}")
    return Presentation(tuple(relabel[g] for g in p.generators),
                        tuple(tuple((relabel[g], k) for g, k in r) for r in p.relators))


def presentations_match(p: Presentation, q: Presentation, relabel: Mapping[Edge, Edge]) -> bool:
    """True iff relabeling ``p`` reproduces ``q`` exactly."""
    return relabel_presentation(p, relabel) == q


def edge_relabeling(vertex_map: Mapping[int, int], edges: Sequence[Edge]) -> Dict[Edge, Edge]:
    out = {}
    for a, b in edges:
        x, y = vertex_map[a], vertex_map[b]
        out[(a, b)] = (min(x, y), max(x, y))
    return out


# -- abelian invariants -----------------------------------------------------

def smith_normal_form(M) -> Tuple[List[int], sympy.Matrix, sympy.Matrix]:
    """Invariant factors ``d_1 | d_2 | ...`` of an integer matrix with ``U M V = D``.

    Returns the nonzero-or-zero diagonal of ``D`` (length ``min(rows, cols)``)
    and the unimodular transforms ``U`` and ``V``.
    """
    M = sympy.Matrix(M)
    r, c = M.shape
    if r == 0 or c == 0:
        return [], sympy.eye(r), sympy.eye(c)
    D, U, V = smith_normal_decomp(M, domain=sympy.ZZ)
    for i in range(min(r, c)):
        if D[i, i] < 0:
            D[i, :] = -D[i, :]
            U[i, :] = -U[i, :]
    return [int(D[i, i]) for i in range(min(r, c))], U, V


def boundary_matrix(X: SimplicialComplex, d: int) -> sympy.Matrix:
    """Matrix of ``C_d -> C_{d-1}`` in the sorted simplex bases."""
    rows = {s: i for i, s in enumerate(X.simplices(d - 1))}
    cols = X.simplices(d)
    M = sympy.zeros(len(rows), len(cols))
    for j, s in enumerate(cols):
        for i in range(len(s)):
            M[rows[s[:i] + s[i + 1:]], j] = -1 if i & 1 else 1
    return M


def _rank_and_torsion(diag: Sequence[int]) -> Tuple[int, List[int]]:
    nz = [abs(d) for d in diag if d]
    return len(nz), [d for d in nz if d > 1]


def h1(X: SimplicialComplex) -> Tuple[int, List[int]]:
    """``H_1(X; Z)`` as ``(free rank, torsion invariant factors)``."""
    n_edges = len(X.simplices(1))
    r1 = _rank_and_torsion(smith_normal_form(boundary_matrix(X, 1))[0])[0] if n_edges else 0
    r2, torsion = _rank_and_torsion(smith_normal_form(boundary_matrix(X, 2))[0]) \
        if X.simplices(2) else (0, [])
    return n_edges - r1 - r2, torsion


def abelianization(p: Presentation) -> Tuple[int, List[int]]:
    """Abelian invariants of the group presented by ``p``."""
    if not p.generators:
        return 0, []
    col = {g: j for j, g in enumerate(p.generators)}
    M = sympy.zeros(len(p.relators), len(p.generators))
    for i, r in enumerate(p.relators):
        for g, k in r:
            M[i, col[g]] += k
    rank, torsion = _rank_and_torsion(smith_normal_form(M)[0])
    return len(p.generators) - rank, torsion


def format_h1(rank: int, torsion: Sequence[int]) -> str:
    parts = (["Z^%d" % rank] if rank > 1 else ["Z"] if rank == 1 else []) + [f"Z/{t}" for t in torsion]
    return " + ".join(parts) if parts else "0"
