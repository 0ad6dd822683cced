"""Free chain complexes over the integers.

A *simplex* is a strictly increasing tuple of nonnegative vertex ids, and a
*basis word* is a tuple of simplices, i.e. a basis element of ``C^{(x) n}``.
Its degree is the sum of the factor dimensions.  ``ChainElement`` is a finite
integer combination of basis words of one arity and one degree.

Coefficients are Python ints, so there is no overflow and no modular
reduction anywhere.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .exceptions import ArityMismatch, MixedGrading

Simplex = Tuple[int, ...]
Word = Tuple[Simplex, ...]


def word_degree(word: Word) -> int:
    return sum(len(s) for s in word) - len(word)


def koszul_sign(*exponent_pairs: Tuple[int, int]) -> int:
    e = sum(a * b for a, b in exponent_pairs)
    return -1 if e & 1 else 1


def _add_into(acc: Dict[Word, int], word: Word, coeff: int) -> None:
    c = acc.get(word, 0) + coeff
    if c:
        acc[word] = c
    else:
        acc.pop(word, None)


class ChainElement:
    """Canonical sparse integer combination of basis words.

    Terms iterate in lexicographic order of the factor vertex lists, leftmost
    factor most significant.  The zero element has ``arity is None`` and
    ``degree is None`` and compares equal to every other zero.
    """

    __slots__ = ("_terms", "arity", "degree", "_hash")

    def __init__(self, terms: Mapping[Word, int] | Iterable[Tuple[Word, int]] = ()):
        acc: Dict[Word, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, coeff in items:
            word = tuple(tuple(int(v) for v in s) for s in word)
            _add_into(acc, word, int(coeff))
        self._set(acc, check=True)

    @classmethod
    def _from_dict(cls, acc: Dict[Word, int]) -> "ChainElement":
        # acc must already be free of zero coefficients
        obj = cls.__new__(cls)
        obj._set(acc, check=False)
        return obj

    def _set(self, acc: Dict[Word, int], check: bool) -> None:
        self._terms = {w: acc[w] for w in sorted(acc)}
        self._hash = None
        if not acc:
            self.arity = None
            self.degree = None
            return
        first = next(iter(self._terms))
        self.arity = len(first)
        self.degree = word_degree(first)
        if check:
            for w in self._terms:
                if len(w) != self.arity or word_degree(w) != self.degree:
                    raise MixedGrading(f"word {format_word(w)} does not match arity "
                                       f"{self.arity} and degree {self.degree}")
                for s in w:
                    if not s or any(a >= b for a, b in zip(s, s[1:])):
                        raise ValueError(f"factor {list(s)} is not a strictly increasing "
                                         "nonempty vertex list")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "ChainElement":
        return cls._from_dict({})

    @classmethod
    def basis(cls, *factors: Sequence[int], coeff: int = 1) -> "ChainElement":
        """``ChainElement.basis([0, 1], [1, 2])`` is the word [0,1](x)[1,2]."""
        return cls({tuple(tuple(f) for f in factors): coeff})

    @classmethod
    def simplex(cls, *vertices: int) -> "ChainElement":
        return cls({(tuple(vertices),): 1})

    # -- container protocol ---------------------------------------------

    @property
    def terms(self) -> Dict[Word, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[Tuple[Word, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, word: Word) -> int:
        return self._terms.get(tuple(tuple(s) for s in word), 0)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "ChainElement") -> "ChainElement":
        if not isinstance(other, ChainElement):
            return NotImplemented
        if self and other and (self.arity, self.degree) != (other.arity, other.degree):
            raise MixedGrading(f"cannot add arity/degree {(self.arity, self.degree)} "
                               f"to {(other.arity, other.degree)}")
        acc = dict(self._terms)
        for w, c in other._terms.items():
            _add_into(acc, w, c)
        return ChainElement._from_dict(acc)

    def __neg__(self) -> "ChainElement":
        return ChainElement._from_dict({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "ChainElement") -> "ChainElement":
        return self + (-other)

    def __mul__(self, k: int) -> "ChainElement":
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return ChainElement.zero()
        return ChainElement._from_dict({w: k * c for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def tensor(self, other: "ChainElement") -> "ChainElement":
        acc: Dict[Word, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                _add_into(acc, w1 + w2, c1 * c2)
        return ChainElement._from_dict(acc)

    def map_words(self, fn: Callable[[Word], Tuple[int, Word]]) -> "ChainElement":
        """Apply ``fn(word) -> (sign, new_word)`` termwise and renormalize."""
        acc: Dict[Word, int] = {}
        for w, c in self._terms.items():
            s, nw = fn(w)
            if s:
                _add_into(acc, nw, s * c)
        return ChainElement._from_dict(acc)

    def relabel(self, mapping: Mapping[int, int] | Callable[[int], int]) -> "ChainElement":
        get = mapping.__getitem__ if isinstance(mapping, Mapping) else mapping
        return self.map_words(lambda w: (1, tuple(tuple(get(v) for v in s) for s in w)))

    # -- display --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " ".join(format_term(c, w) for w, c in self._terms.items())

    def __repr__(self) -> str:
        return f"ChainElement({self})"


def format_simplex(s: Sequence, labels: Optional[Mapping[int, object]] = None) -> str:
    if labels is None:
        return "[" + ",".join(str(v) for v in s) + "]"
    return "[" + ",".join(str(labels.get(v, v)) for v in s) + "]"


def format_word(word: Word, labels: Optional[Mapping[int, object]] = None) -> str:
    return "(x)".join(format_simplex(s, labels) for s in word)


def format_term(coeff: int, word: Word, labels: Optional[Mapping[int, object]] = None) -> str:
    sign = "+" if coeff > 0 else "-"
    mag = abs(coeff)
    body = format_word(word, labels)
    return f"{sign}{body}" if mag == 1 else f"{sign}{mag}*{body}"


def normalize(raw: Iterable[Tuple[int, Word]]) -> ChainElement:
    """Merge duplicate words, drop zeros and sort.

    >>> str(normalize([(2, ((1, 2), (0,))), (3, ((0, 1), (2,)))]))
    '+3*[0,1](x)[2] +2*[1,2](x)[0]'
    """
    return ChainElement((w, c) for c, w in raw)


def boundary_simplex(s: Simplex) -> Dict[Simplex, int]:
    return {s[:i] + s[i + 1:]: (-1 if i & 1 else 1) for i in range(len(s))} if len(s) > 1 else {}


def tensor_boundary(x: ChainElement) -> ChainElement:
    """Differential on ``C^{(x) n}``: the Leibniz rule with Koszul signs."""
    acc: Dict[Word, int] = {}
    for w, c in x.items():
        before = 0
        for i, s in enumerate(w):
            sign = -1 if before & 1 else 1
            for face, fs in boundary_simplex(s).items():
                _add_into(acc, w[:i] + (face,) + w[i + 1:], sign * fs * c)
            before += len(s) - 1
    return ChainElement._from_dict(acc)


class GradedMap:
    """Homogeneous linear map ``C -> C`` given by its values on simplices.

    ``action`` takes a simplex (vertex tuple) and returns an arity-1
    ``ChainElement`` of degree ``dim + degree`` (or zero).
    """

    def __init__(self, degree: int, action: Callable[[Simplex], ChainElement], name: str = ""):
        self.degree = degree
        self.action = action
        self.name = name or "f"

    def on_simplex(self, s: Simplex) -> ChainElement:
        return self.action(tuple(s))

    def __call__(self, x: ChainElement) -> ChainElement:
        if x and x.arity != 1:
            raise ArityMismatch(f"{self.name} acts on arity 1, got arity {x.arity}")
        acc: Dict[Word, int] = {}
        for (s,), c in x.items():
            for w, d in self.action(s).items():
                _add_into(acc, w, c * d)
        return ChainElement._from_dict(acc)

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        return GradedMap(self.degree + other.degree,
                         lambda s: self(other.on_simplex(s)),
                         name=f"{self.name}.{other.name}")

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if self.degree != other.degree:
            raise MixedGrading("cannot add maps of different degrees")
        return GradedMap(self.degree, lambda s: self.on_simplex(s) + other.on_simplex(s),
                         name=f"({self.name}+{other.name})")

    def __rmul__(self, k: int) -> "GradedMap":
        return GradedMap(self.degree, lambda s: k * self.on_simplex(s), name=f"{k}{self.name}")

    def __neg__(self) -> "GradedMap":
        return (-1) * self

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + (-other)

    def __repr__(self) -> str:
        return f"GradedMap({self.name}, degree={self.degree})"


def identity_map() -> GradedMap:
    return GradedMap(0, lambda s: ChainElement({(s,): 1}), name="1")


def zero_map(degree: int = 0) -> GradedMap:
    return GradedMap(degree, lambda s: ChainElement.zero(), name="0")


def boundary_map() -> GradedMap:
    return GradedMap(-1, lambda s: ChainElement._from_dict(
        {(f,): c for f, c in boundary_simplex(s).items()}), name="d")


def apply_tensor(fs: Sequence[GradedMap], x: ChainElement) -> ChainElement:
    """Apply ``f_1 (x) ... (x) f_n`` with the Koszul sign convention.

    Moving ``f_i`` (degree d) past the factors ``x_1 .. x_{i-1}`` costs
    ``(-1)^(d * (|x_1| + ... + |x_{i-1}|))``.
    """
    if x and len(fs) != x.arity:
        raise ArityMismatch(f"{len(fs)} maps for arity {x.arity}")
    acc: Dict[Word, int] = {}
    for w, c in x.items():
        partial: Dict[Word, int] = {(): c}
        before = 0
        for f, s in zip(fs, w):
            sign = -1 if (f.degree * before) & 1 else 1
            image = f.on_simplex(s)
            nxt: Dict[Word, int] = {}
            for pw, pc in partial.items():
                for (t,), tc in image.items():
                    _add_into(nxt, pw + (t,), sign * pc * tc)
            partial = nxt
            before += len(s) - 1
            if not partial:
                break
        for w2, c2 in partial.items():
            _add_into(acc, w2, c2)
    return ChainElement._from_dict(acc)


def hom_diff(f: GradedMap, d_src: GradedMap, d_dst: GradedMap) -> GradedMap:
    """Differential of ``f`` in the Hom complex: ``f d - (-1)^|f| d f``."""
    sign = -1 if f.degree & 1 else 1
    return GradedMap(f.degree - 1,
                     lambda s: f(d_src.on_simplex(s)) - sign * d_dst(f.on_simplex(s)),
                     name=f"D({f.name})")
