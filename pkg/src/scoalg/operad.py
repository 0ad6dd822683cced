"""Symmetric groups, T-maps, the degree-0 operad and the normalized bar resolution.

Conventions (used consistently by the coalgebra engine):

* permutations are 1-indexed, stored in one-line notation;
* ``p * q`` is composition of functions, ``(p * q)(i) = p(q(i))``;
* ``sigma`` acts on a tensor word by moving the factor in position ``j`` to
  position ``sigma(j)``, with the Koszul sign of the induced shuffle.  This is a
  left action for ``*``.

A bar word ``a[a_1|...|a_m]`` corresponds to the homogeneous simplex
``(g_0, ..., g_m)`` of the universal ``S_n``-bundle with ``g_0 = a`` and
``g_i = g_{i-1} * a_i``.  Operad compositions are computed on homogeneous
simplices by the Eilenberg-Zilber shuffle map followed by vertexwise
composition in the degree-0 operad.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .exceptions import DegreeZero, IndexOutOfRange, LengthMismatch, MixedGrading, ScoalgError


@dataclass(frozen=True, order=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ScoalgError(f"{list(imgs)} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                if not 1 <= a <= n:
                    raise ScoalgError(f"cycle entry {a} outside 1..{n}")
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        return cls.from_cycles([(i, j)], n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise LengthMismatch(f"cannot compose S_{self.n} with S_{other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cs = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs) if cs else "()"

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: Optional[int] = None) -> Permutation:
    """Parse cycle notation ``"(1,2)(3,4)"`` or one-line notation ``"3 1 2"``."""
    text = text.strip()
    if text.startswith("("):
        if _CYCLE_RE.sub("", text).strip():
            raise ScoalgError(f"bad cycle notation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            body = body.strip()
            if not body:
                continue
            try:
                cycles.append(tuple(int(t) for t in re.split(r"[,\s]+", body)))
            except ValueError:
                raise ScoalgError(f"bad cycle {body!r} in {text!r}") from None
        top = max([max(c) for c in cycles] + [n or 0])
        if n is not None and top > n:
            raise ScoalgError(f"{text!r} moves letters outside 1..{n}")
        return Permutation.from_cycles(cycles, n if n is not None else top)
    try:
        imgs = tuple(int(t) for t in re.split(r"[,\s]+", text) if t)
    except ValueError:
        raise ScoalgError(f"bad one-line permutation {text!r}") from None
    p = Permutation(imgs)
    if n is not None and p.n != n:
        raise LengthMismatch(f"{text!r} has {p.n} letters, expected {n}")
    return p


def act_on_word(sigma: Permutation, word: tuple) -> Tuple[int, tuple]:
    """Move factor ``j`` of ``word`` to position ``sigma(j)``; return (sign, word)."""
    n = len(word)
    if sigma.n != n:
        raise LengthMismatch(f"S_{sigma.n} acting on a word of arity {n}")
    out = [None] * n
    degs = [len(s) - 1 for s in word]
    odd = 0
    for j in range(n):
        out[sigma.images[j] - 1] = word[j]
        if degs[j] & 1:
            for l in range(j + 1, n):
                if sigma.images[j] > sigma.images[l] and degs[l] & 1:
                    odd ^= 1
    return (-1 if odd else 1), tuple(out)


# -- degree-0 operad ------------------------------------------------------

def tmap(alpha: Sequence[int], sigma: Permutation) -> Permutation:
    """Block permutation ``T_alpha(sigma)`` in ``S_{|alpha|}``.

    With consecutive blocks ``L_i`` of sizes ``alpha_i``, the result is the
    permutation whose one-line notation is ``L_{sigma(1)} ... L_{sigma(n)}``.

    >>> tmap((2, 1, 3), Permutation((3, 1, 2))).cycle_string()
    '(1,4)(2,5)(3,6)'
    """
    alpha = [int(a) for a in alpha]
    if len(alpha) != sigma.n:
        raise LengthMismatch(f"{len(alpha)} block sizes for S_{sigma.n}")
    if any(a < 0 for a in alpha):
        raise ScoalgError("block sizes must be nonnegative")
    starts = list(itertools.accumulate([0] + alpha[:-1]))
    blocks = [range(starts[i] + 1, starts[i] + alpha[i] + 1) for i in range(len(alpha))]
    return Permutation(tuple(x for i in sigma.images for x in blocks[i - 1]))


def tunder(n: int, i: int, sigma: Permutation) -> Permutation:
    """The permutation with ``a o_sigma(i) (sigma.b) = tunder(n, i, sigma).(a o_i b)`` for ``a`` of arity ``n``.

    It is ``tmap`` with a block of size ``n`` in position ``sigma(i)`` and
    singleton blocks elsewhere.
    """
    if not 1 <= i <= sigma.n:
        raise IndexOutOfRange(f"slot {i} outside 1..{sigma.n}")
    alpha = [1] * sigma.n
    alpha[sigma(i) - 1] = n
    return tmap(alpha, sigma)


def block_sum(taus: Sequence[Permutation]) -> Permutation:
    out: List[int] = []
    for t in taus:
        off = len(out)
        out.extend(v + off for v in t.images)
    return Permutation(tuple(out))


def s0_gamma(sigmas: Sequence[Permutation], sigma_n: Permutation) -> Permutation:
    """Structure map of the degree-0 operad.

    ``sigma_n`` first permutes the blocks (``T``-map on the block sizes
    ``arity(sigmas[i])``), then each ``sigmas[i]`` acts inside block ``i``.
    """
    if len(sigmas) != sigma_n.n:
        raise LengthMismatch(f"{len(sigmas)} inputs for S_{sigma_n.n}")
    return block_sum(sigmas) * tmap([s.n for s in sigmas], sigma_n)


def s0_compose(a: Permutation, i: int, b: Permutation) -> Permutation:
    """``a o_i b``: insert ``a`` into slot ``i`` of ``b``."""
    if not 1 <= i <= b.n:
        raise IndexOutOfRange(f"slot {i} outside 1..{b.n}")
    sig = [Permutation.identity(1)] * b.n
    sig[i - 1] = a
    return s0_gamma(sig, b)


# -- normalized bar resolution -------------------------------------------

@dataclass(frozen=True, order=True)
class BarWord:
    """Basis element ``prefix[letters_1|...|letters_m]`` of ``RS_n``."""

    prefix: Permutation
    letters: Tuple[Permutation, ...] = ()

    def __post_init__(self):
        n = self.prefix.n
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for l in letters:
            if l.n != n:
                raise LengthMismatch(f"letter {l} not in S_{n}")
            if l.is_identity():
                raise ScoalgError("normalized bar words cannot contain the identity letter")

    @classmethod
    def of(cls, *letters: Permutation, prefix: Optional[Permutation] = None) -> "BarWord":
        if prefix is None:
            if not letters:
                raise ScoalgError("need a prefix or at least one letter to know the arity")
            prefix = Permutation.identity(letters[0].n)
        return cls(prefix, tuple(letters))

    @property
    def arity(self) -> int:
        return self.prefix.n

    @property
    def degree(self) -> int:
        return len(self.letters)

    def homogeneous(self) -> Tuple[Permutation, ...]:
        gs = [self.prefix]
        for l in self.letters:
            gs.append(gs[-1] * l)
        return tuple(gs)

    def __str__(self) -> str:
        body = "[" + "|".join(l.cycle_string() for l in self.letters) + "]"
        return body if self.prefix.is_identity() else f"{self.prefix.cycle_string()}{body}"


def from_homogeneous(gs: Sequence[Permutation]) -> Optional[BarWord]:
    """Bar word of a homogeneous simplex, or ``None`` if it is degenerate."""
    letters = []
    for a, b in zip(gs, gs[1:]):
        l = a.inverse() * b
        if l.is_identity():
            return None
        letters.append(l)
    return BarWord(gs[0], tuple(letters))


class BarChain:
    """Integer combination of bar words of one arity and degree."""

    __slots__ = ("_terms", "arity", "degree")

    def __init__(self, terms: Mapping[BarWord, int] | Iterable[Tuple[BarWord, int]] = ()):
        acc: Dict[BarWord, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            c = acc.get(w, 0) + int(c)
            if c:
                acc[w] = c
            else:
                acc.pop(w, None)
        self._terms = {w: acc[w] for w in sorted(acc)}
        if acc:
            first = next(iter(self._terms))
            self.arity, self.degree = first.arity, first.degree
            for w in self._terms:
                if (w.arity, w.degree) != (self.arity, self.degree):
                    raise MixedGrading("bar chain is not homogeneous")
        else:
            self.arity = self.degree = None

    @classmethod
    def of(cls, word: BarWord, coeff: int = 1) -> "BarChain":
        return cls({word: coeff})

    def __iter__(self) -> Iterator[Tuple[BarWord, int]]:
        return iter(self._terms.items())

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BarChain):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "BarChain") -> "BarChain":
        return BarChain(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "BarChain":
        return BarChain({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "BarChain") -> "BarChain":
        return self + (-other)

    def __rmul__(self, k: int) -> "BarChain":
        return BarChain({w: k * c for w, c in self._terms.items()})

    def act(self, sigma: Permutation) -> "BarChain":
        """Left action of ``S_n`` on prefixes."""
        return BarChain({BarWord(sigma * w.prefix, w.letters): c for w, c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self._terms.items():
            sign = "+" if c > 0 else "-"
            parts.append(f"{sign}{w}" if abs(c) == 1 else f"{sign}{abs(c)}*{w}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BarChain({self})"


def as_bar_chain(a: "BarChain | BarWord") -> BarChain:
    return a if isinstance(a, BarChain) else BarChain.of(a)


def bar_differential(w: "BarWord | BarChain") -> BarChain:
    """``d(a[a_1|...|a_m]) = a a_1[a_2|...] + sum (-1)^i a[..|a_i a_{i+1}|..] + (-1)^m a[a_1|...|a_{m-1}]``.

    Words with an identity letter are dropped.
    """
    if isinstance(w, BarChain):
        out: List[Tuple[BarWord, int]] = []
        for word, c in w.items():
            out.extend((x, c * d) for x, d in bar_differential(word).items())
        return BarChain(out)
    m = w.degree
    if m == 0:
        raise DegreeZero("bar differential of a degree-0 word")
    gs = w.homogeneous()
    out = []
    for i in range(m + 1):
        face = from_homogeneous(gs[:i] + gs[i + 1:])
        if face is not None:
            out.append((face, -1 if i & 1 else 1))
    return BarChain(out)


@lru_cache(maxsize=None)
def _shuffles(p: int, q: int) -> Tuple[Tuple[Tuple[Tuple[int, int], ...], int], ...]:
    """Lattice paths (0,0)->(p,q) with their Eilenberg-Zilber signs."""
    out = []
    for xs in itertools.combinations(range(p + q), p):
        xset = set(xs)
        a = b = 0
        path = [(0, 0)]
        inversions = 0
        for step in range(p + q):
            if step in xset:
                a += 1
                inversions += b
            else:
                b += 1
            path.append((a, b))
        out.append((tuple(path), -1 if inversions & 1 else 1))
    return tuple(out)


def bar_compose(a: "BarChain | BarWord", b: "BarChain | BarWord", i: int) -> BarChain:
    """Operad composition ``a o_i b``: insert ``a`` (in ``RS_m``) into slot ``i`` of ``b`` (in ``RS_k``)."""
    a, b = as_bar_chain(a), as_bar_chain(b)
    if not a or not b:
        return BarChain()
    if not 1 <= i <= b.arity:
        raise IndexOutOfRange(f"slot {i} outside 1..{b.arity}")
    out: List[Tuple[BarWord, int]] = []
    for wa, ca in a.items():
        xs = wa.homogeneous()
        for wb, cb in b.items():
            ys = wb.homogeneous()
            for path, sign in _shuffles(len(xs) - 1, len(ys) - 1):
                word = from_homogeneous([s0_compose(xs[p], i, ys[q]) for p, q in path])
                if word is not None:
                    out.append((word, sign * ca * cb))
    return BarChain(out)


def e(k: int) -> BarWord:
    """``e_k = [(1,2)|...|(1,2)]`` in ``RS_2``."""
    t = Permutation((2, 1))
    return BarWord(Permutation.identity(2), (t,) * k)


def build_F(k: int, m: int) -> BarChain:
    """``F_{2,m} = e_m`` and ``F_{k,m} = e_m o_1 F_{k-1,m}``."""
    if k < 2 or m < 0:
        raise ScoalgError("build_F needs k >= 2 and m >= 0")
    acc = BarChain.of(e(m))
    for _ in range(k - 2):
        acc = bar_compose(e(m), acc, 1)
    return acc


def parse_bar_word(text: str, n: int = 2) -> BarWord:
    """Parse letters separated by ``;``, e.g. ``"(1,2);(1,2)"``.  Empty text is ``[ ]``."""
    text = text.strip().strip("[]").strip()
    if not text:
        return BarWord(Permutation.identity(n))
    letters = tuple(parse_permutation(tok, n) for tok in text.split(";"))
    return BarWord(Permutation.identity(n), letters)


def bar_words(n: int, m: int, prefix_identity: bool = True) -> Iterator[BarWord]:
    """All normalized bar words of arity ``n`` and degree ``m``."""
    perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    nontrivial = [p for p in perms if not p.is_identity()]
    prefixes = [Permutation.identity(n)] if prefix_identity else perms
    for pre in prefixes:
        for letters in itertools.product(nontrivial, repeat=m):
            yield BarWord(pre, letters)
