"""Structure maps ``f_n : RS_n (x) N(X) -> N(X)^{(x) n}`` of the coalgebra.

On a standard simplex ``[0..k]`` the maps are built recursively:

* degree-0 words act through the iterated Alexander-Whitney coproduct,
  permuted by the word's prefix;
* a word ``A`` of positive degree with identity prefix gives
  ``f(A (x) s) = Phi(f(dA (x) s) + (-1)^|A| f(A (x) ds))``
  where ``Phi`` is the telescoped contraction built from ``phi_k`` and the
  values on ``ds`` are transported from ``[0..k-1]`` along the coface maps.

Values on a simplex of an arbitrary complex are obtained by relabelling the
value on the standard simplex of the same dimension.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .chains import ChainElement, Simplex, Word, _add_into, tensor_boundary, word_degree
from .exceptions import ArityMismatch, IndexOutOfRange, ScoalgError, SimplexNotInComplex
from .operad import (BarChain, BarWord, Permutation, act_on_word, as_bar_chain, bar_compose,
                     bar_differential, build_F, e)
from .simplicial import SimplicialComplex, boundary

Terms = Dict[Word, int]


def xi(k: int) -> int:
    """``(-1)^(k(k-1)/2)``."""
    return -1 if (k * (k - 1) // 2) & 1 else 1


# -- building blocks on raw term dictionaries -----------------------------

def _phi_terms(k: int, x: Terms) -> Terms:
    """``Phi = sum_j (iota eps)^{(x) j-1} (x) phi_k (x) 1 ...`` on ``C(Delta^k)^{(x) n}``."""
    top = (k,)
    acc: Terms = {}
    for w, c in x.items():
        for j, s in enumerate(w):
            if s[-1] != k:
                sign = -1 if len(s) & 1 else 1
                _add_into(acc, (top,) * j + (s + (k,),) + w[j + 1:], sign * c)
            if len(s) != 1:
                # iota eps kills positive-dimensional factors
                break
    return acc


def big_phi(n: int, k: int, x: ChainElement) -> ChainElement:
    """Contracting homotopy of ``C(Delta^k)^{(x) n}``.

    >>> x = ChainElement({((0, 1, 2), (2,)): 1, ((0, 1), (1, 2)): 1, ((0,), (0, 1, 2)): 1})
    >>> str(big_phi(2, 2, x))
    '+[0,1,2](x)[1,2] -[0,2](x)[0,1,2]'
    """
    if x and x.arity != n:
        raise ArityMismatch(f"expected arity {n}, got {x.arity}")
    return ChainElement._from_dict(_phi_terms(k, dict(x.items())))


def _aw_terms(n: int, s: Simplex) -> Terms:
    """Iterated Alexander-Whitney coproduct of the simplex ``s`` into ``n`` factors."""
    d = len(s) - 1
    acc: Terms = {}
    for cuts in itertools.combinations_with_replacement(range(d + 1), n - 1):
        bounds = (0,) + cuts + (d,)
        acc[tuple(s[bounds[i]:bounds[i + 1] + 1] for i in range(n))] = 1
    return acc


def _act(sigma: Permutation, x: Terms) -> Terms:
    if sigma.is_identity():
        return x
    acc: Terms = {}
    for w, c in x.items():
        sign, nw = act_on_word(sigma, w)
        _add_into(acc, nw, sign * c)
    return acc


def _coface(i: int):
    return lambda v: v if v < i else v + 1


def _relabel(x: Terms, fn) -> Terms:
    return {tuple(tuple(fn(v) for v in s) for s in w): c for w, c in x.items()}


# -- the evaluator --------------------------------------------------------

class CoalgebraEvaluator:
    """Memoizing evaluator of ``f_n`` on the normalized chains of a complex.

    The memo is keyed by ``(n, letters, dim)``: values are computed once on
    the standard simplex and transported to every simplex of that dimension.
    Prefix permutations are applied after lookup, so only identity-prefix
    words are stored.  Cache writes are idempotent, so sharing an evaluator
    between threads only risks duplicated work.
    """

    def __init__(self, complex: Optional[SimplicialComplex] = None):
        self.complex = complex
        self.memo: Dict[Tuple[int, Tuple[Permutation, ...], int], Terms] = {}

    def _check(self, n: int, A, sigma: Sequence[int]) -> Tuple[BarChain, Simplex]:
        A = as_bar_chain(A)
        if A and A.arity != n:
            raise ArityMismatch(f"bar chain of arity {A.arity} passed to f_{n}")
        sigma = tuple(sigma)
        if self.complex is not None and sigma not in self.complex:
            raise SimplexNotInComplex(f"{list(sigma)} is not a simplex of {self.complex.name or 'the complex'}")
        if not sigma or any(a >= b for a, b in zip(sigma, sigma[1:])):
            raise ScoalgError(f"{list(sigma)} is not a strictly increasing vertex list")
        return A, sigma

    def standard(self, n: int, letters: Tuple[Permutation, ...], d: int) -> Terms:
        """``f_n([letters] (x) [0..d])`` as a raw term dictionary."""
        key = (n, letters, d)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        m = len(letters)
        if m == 0:
            val = _aw_terms(n, tuple(range(d + 1)))
        elif d == 0 or m + d > n * d:
            val = {}
        else:
            y: Terms = {}
            for word, c in bar_differential(BarWord(Permutation.identity(n), letters)).items():
                for w, v in _act(word.prefix, self.standard(n, word.letters, d)).items():
                    _add_into(y, w, c * v)
            lower = self.standard(n, letters, d - 1)
            if lower:
                base = -1 if m & 1 else 1
                for i in range(d + 1):
                    sign = -base if i & 1 else base
                    for w, v in _relabel(lower, _coface(i)).items():
                        _add_into(y, w, sign * v)
            val = _phi_terms(d, y)
        self.memo[key] = val
        return val

    def f(self, n: int, A, sigma: Sequence[int]) -> ChainElement:
        """``f_n(A (x) sigma)`` for a bar word or bar chain ``A`` of arity ``n``."""
        A, sigma = self._check(n, A, sigma)
        acc: Terms = {}
        d = len(sigma) - 1
        for word, c in A.items():
            val = self.standard(n, word.letters, d)
            if not val:
                continue
            for w, v in _act(word.prefix, _relabel(val, lambda j: sigma[j])).items():
                _add_into(acc, w, c * v)
        return ChainElement._from_dict(acc)

    def f_chain(self, n: int, A, x: ChainElement) -> ChainElement:
        """Linear extension of ``f_n(A (x) -)`` to arity-1 chains."""
        out = ChainElement.zero()
        for (s,), c in x.items():
            out = out + c * self.f(n, A, s)
        return out

    def aw_coproduct(self, x: ChainElement) -> ChainElement:
        return self.f_chain(2, e(0), x)


def direct_f(n: int, A, sigma: Sequence[int]) -> ChainElement:
    """Independent evaluation of ``f_n`` without memo or relabelling.

    Works with the actual vertex labels of ``sigma``, contracts onto its
    actual top vertex and expands the simplex boundary before the bar
    differential.  Exponential; intended only as a cross-check.
    """
    A = as_bar_chain(A)
    sigma = tuple(sigma)
    acc: Terms = {}
    for word, c in A.items():
        for w, v in _act(word.prefix, _direct(n, word.letters, sigma)).items():
            _add_into(acc, w, c * v)
    return ChainElement._from_dict(acc)


def _direct(n: int, letters: Tuple[Permutation, ...], sigma: Simplex) -> Terms:
    m, d = len(letters), len(sigma) - 1
    if m == 0:
        return _aw_terms(n, sigma)
    if d == 0 or m + d > n * d:
        return {}
    top = sigma[-1]
    y: Terms = {}
    base = -1 if m & 1 else 1
    for i in range(d + 1):
        sign = -base if i & 1 else base
        for w, v in _direct(n, letters, sigma[:i] + sigma[i + 1:]).items():
            _add_into(y, w, sign * v)
    for word, c in bar_differential(BarWord(Permutation.identity(n), letters)).items():
        for w, v in _act(word.prefix, _direct(n, word.letters, sigma)).items():
            _add_into(y, w, c * v)
    # contraction onto the top vertex of sigma, written with real labels
    acc: Terms = {}
    for w, c in y.items():
        for j, s in enumerate(w):
            if s[-1] != top:
                _add_into(acc, ((top,),) * j + (s + (top,),) + w[j + 1:], (-1 if len(s) & 1 else 1) * c)
            if len(s) != 1:
                break
    return acc


# -- identities -----------------------------------------------------------

@dataclass(frozen=True)
class Sq0Report:
    simplex: Simplex
    xi_observed: Optional[int]
    xi_expected: int
    passed: bool


def verify_sq0(sigma: Sequence[int], evaluator: Optional[CoalgebraEvaluator] = None) -> Sq0Report:
    """Check ``f_2(e_k (x) sigma) = xi_k sigma (x) sigma`` for a ``k``-simplex."""
    ev = evaluator or CoalgebraEvaluator()
    sigma = tuple(sigma)
    k = len(sigma) - 1
    val = ev.f(2, e(k), sigma)
    diag = (sigma, sigma)
    observed = val.coefficient(diag) if len(val) == 1 and val.coefficient(diag) in (1, -1) else None
    return Sq0Report(sigma, observed, xi(k), observed == xi(k))


def invariant_condition(value: ChainElement, sigma: Sequence[int]) -> bool:
    """Every term's leftmost factor contains the top vertex of ``sigma``."""
    top = max(sigma)
    return all(top in w[0] for w, _ in value.items())


def chain_map_defect(ev: CoalgebraEvaluator, n: int, A, sigma: Sequence[int]) -> ChainElement:
    """``d f(A (x) s) - f(dA (x) s) - (-1)^|A| f(A (x) ds)``; zero for a chain map."""
    A = as_bar_chain(A)
    sigma = tuple(sigma)
    lhs = tensor_boundary(ev.f(n, A, sigma))
    rhs = ChainElement.zero()
    if A and A.degree > 0:
        rhs = rhs + ev.f(n, bar_differential(A), sigma)
    if len(sigma) > 1 and A:
        sign = -1 if A.degree & 1 else 1
        rhs = rhs + sign * ev.f_chain(n, A, boundary(sigma))
    return lhs - rhs


def act_on_chain(sigma: Permutation, x: ChainElement) -> ChainElement:
    return ChainElement._from_dict(_act(sigma, dict(x.items())))


@dataclass
class DiagonalSequence:
    """Truncation of an element of ``prod_n C^{(x) n}``: ``entries[k-1]`` has arity ``k``."""

    entries: List[ChainElement]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> ChainElement:
        return self.entries[k - 1]


def iterated_diagonal(sigma: Sequence[int], t: int,
                      evaluator: Optional[CoalgebraEvaluator] = None) -> DiagonalSequence:
    """``(sigma, sigma(x)sigma, ...)`` up to arity ``t``, by iterating ``xi_m f_2(e_m (x) -)`` on the leftmost factor."""
    if t < 1:
        raise ScoalgError("truncation length must be at least 1")
    ev = evaluator or CoalgebraEvaluator()
    sigma = tuple(sigma)
    m = len(sigma) - 1
    sign = xi(m)
    entries = [ChainElement({(sigma,): 1})]
    for _ in range(t - 1):
        acc: Terms = {}
        for w, c in entries[-1].items():
            # f_2(e_m) applied to the leftmost factor: no Koszul sign
            for w2, c2 in ev.f(2, e(m), w[0]).items():
                _add_into(acc, w2 + w[1:], sign * c * c2)
        entries.append(ChainElement._from_dict(acc))
    return DiagonalSequence(entries)


def diagonal_via_operad(sigma: Sequence[int], t: int,
                        evaluator: Optional[CoalgebraEvaluator] = None) -> DiagonalSequence:
    """Same sequence evaluated on ``rho_m``: entry ``k`` is ``xi_m^(k-1) f_k(F_{k,m} (x) sigma)``."""
    ev = evaluator or CoalgebraEvaluator()
    sigma = tuple(sigma)
    m = len(sigma) - 1
    entries = [ChainElement({(sigma,): 1})]
    for k in range(2, t + 1):
        entries.append(xi(m) ** (k - 1) * ev.f(k, build_F(k, m), sigma))
    return DiagonalSequence(entries)


def operad_compat_branches(A, B, i: int, sigma: Sequence[int],
                           evaluator: Optional[CoalgebraEvaluator] = None
                           ) -> Tuple[ChainElement, ChainElement]:
    """Both sides of the coalgebra diagram for ``A o_i B`` evaluated on ``sigma``.

    Upper: ``f_{n+m-1}((A o_i B) (x) sigma)``.  Lower: ``f_n(A (x) -)`` applied
    to factor ``i`` of ``f_m(B (x) sigma)``, with the Koszul sign of moving
    ``A`` past the first ``i-1`` factors.
    """
    ev = evaluator or CoalgebraEvaluator()
    A, B = as_bar_chain(A), as_bar_chain(B)
    n, m = A.arity, B.arity
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"slot {i} outside 1..{m}")
    upper = ev.f(n + m - 1, bar_compose(A, B, i), sigma)
    acc: Terms = {}
    degA = A.degree or 0
    for w, c in ev.f(m, B, sigma).items():
        before = word_degree(w[:i - 1])
        sign = -1 if (degA * before) & 1 else 1
        for w2, c2 in ev.f(n, A, w[i - 1]).items():
            _add_into(acc, w[:i - 1] + w2 + w[i:], sign * c * c2)
    return upper, ChainElement._from_dict(acc)


def check_operad_compat(A, B, i: int, sigma: Sequence[int],
                        evaluator: Optional[CoalgebraEvaluator] = None) -> bool:
    upper, lower = operad_compat_branches(A, B, i, sigma, evaluator)
    return upper == lower
