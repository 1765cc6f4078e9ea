"""Quasi-shuffle algebra over a free commutative algebra without unit.

The base algebra A is spanned by nonempty monomials in a finite set of
generators; its product merges exponent vectors.  The tensor space over A
carries the quasi-shuffle product (interleave or merge leading factors), the
deconcatenation coproduct, and a right action of packed-word elements: a
basis word of length n sends a degree-n tensor to the tensor of blockwise
products and kills every other degree.

Tensor words are stored over monomials only: general tensor factors are
expanded multilinearly at construction, so keys stay canonical and equality
is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import SCALAR_TYPES, WQSymElement, _add_term, _coerce_coeff, format_terms
from .errors import CapExceeded
from .series import TruncatedSeries, eulerian_idempotent, adams

DEFAULT_GENERATORS = ("g1", "g2", "g3", "g4", "g5")

Monomial = tuple[tuple[str, int], ...]  # sorted ((generator, exponent), ...), nonempty
TensorWord = tuple[Monomial, ...]


def monomial(*pairs) -> Monomial:
    """Build a monomial from (generator, exponent) pairs; exponents add."""
    exps: dict[str, int] = {}
    for name, e in pairs:
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        if e:
            exps[str(name)] = exps.get(str(name), 0) + e
    mono = tuple(sorted(exps.items()))
    if not mono:
        raise ValueError("monomials must have positive total degree (A has no unit)")
    return mono


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_str(m: Monomial) -> str:
    return "*".join(name if e == 1 else f"{name}^{e}" for name, e in m)


class AElement:
    """Element of the base algebra: rational combination of nonempty monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[Monomial, object] = {}
        for m, c in (terms or {}).items():
            m = monomial(*m)
            c = _coerce_coeff(c)
            if c:
                _add_term(data, m, c)
        self.terms = data

    @classmethod
    def _raw(cls, data: dict) -> "AElement":
        el = object.__new__(cls)
        el.terms = data
        return el

    @classmethod
    def zero(cls) -> "AElement":
        return cls._raw({})

    @classmethod
    def generator(cls, name: str) -> "AElement":
        return cls._raw({((str(name), 1),): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AElement):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, AElement):
            return NotImplemented
        data = dict(self.terms)
        for m, c in other.terms.items():
            _add_term(data, m, c)
        return AElement._raw(data)

    def __neg__(self):
        return AElement._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SCALAR_TYPES):
            other = _coerce_coeff(other)
            if not other:
                return AElement.zero()
            return AElement._raw({m: other * c for m, c in self.terms.items()})
        if not isinstance(other, AElement):
            return NotImplemented
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _add_term(out, mono_mul(m1, m2), c1 * c2)
        return AElement._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 1:
            raise ValueError("powers in A must be >= 1 (no unit)")
        out = self
        for _ in range(e - 1):
            out = out * self
        return out

    def __str__(self):
        return format_terms(
            sorted(self.terms.items(), key=lambda kv: (mono_degree(kv[0]), kv[0])),
            mono_str,
        )

    def __repr__(self):
        return f"<AElement {self}>"


def _qsh_tensor(a: TensorWord, b: TensorWord) -> dict[TensorWord, int]:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out: dict[TensorWord, int] = {}
    for w, m in _qsh_tensor(a[1:], b).items():
        key = (a[0],) + w
        out[key] = out.get(key, 0) + m
    for w, m in _qsh_tensor(a, b[1:]).items():
        key = (b[0],) + w
        out[key] = out.get(key, 0) + m
    merged = mono_mul(a[0], b[0])
    for w, m in _qsh_tensor(a[1:], b[1:]).items():
        key = (merged,) + w
        out[key] = out.get(key, 0) + m
    return out


class QSElement:
    """Element of the quasi-shuffle algebra: combination of tensor words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[TensorWord, object] = {}
        for word, c in (terms or {}).items():
            word = tuple(monomial(*m) for m in word)
            c = _coerce_coeff(c)
            if c:
                _add_term(data, word, c)
        self.terms = data

    @classmethod
    def _raw(cls, data: dict) -> "QSElement":
        el = object.__new__(cls)
        el.terms = data
        return el

    @classmethod
    def zero(cls) -> "QSElement":
        return cls._raw({})

    @classmethod
    def unit(cls) -> "QSElement":
        return cls._raw({(): Fraction(1)})

    @classmethod
    def word(cls, monomials, coeff=1) -> "QSElement":
        return cls({tuple(monomials): coeff})

    @classmethod
    def generator(cls, name: str) -> "QSElement":
        """Degree-1 tensor word on a single generator."""
        return cls._raw({(((str(name), 1),),): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, QSElement):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, QSElement):
            return NotImplemented
        data = dict(self.terms)
        for w, c in other.terms.items():
            _add_term(data, w, c)
        return QSElement._raw(data)

    def __neg__(self):
        return QSElement._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QSElement):
            return NotImplemented
        return self + (-other)

    def _scaled(self, scalar):
        scalar = _coerce_coeff(scalar)
        if not scalar:
            return QSElement.zero()
        return QSElement._raw({w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other):
        """Quasi-shuffle product (the commutative product of the algebra)."""
        if isinstance(other, SCALAR_TYPES):
            return self._scaled(other)
        if not isinstance(other, QSElement):
            return NotImplemented
        out: dict[TensorWord, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for w, mult in _qsh_tensor(w1, w2).items():
                    _add_term(out, w, c * mult)
        return QSElement._raw(out)

    def __rmul__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return self._scaled(other)
        return NotImplemented

    def __truediv__(self, scalar):
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        if isinstance(scalar, Fraction):
            return self._scaled(1 / scalar)
        return NotImplemented

    # -- right action of packed-word elements -------------------------------

    def act(self, op) -> "QSElement":
        """Right action.  Elements act termwise with length matching; a
        truncated series acts by its component at each tensor degree and
        refuses degrees above its cutoff."""
        if isinstance(op, TruncatedSeries):
            out = QSElement.zero()
            by_degree: dict[int, dict] = {}
            for w, c in self.terms.items():
                by_degree.setdefault(len(w), {})[w] = c
            for d, terms in by_degree.items():
                if d > op.cutoff:
                    raise CapExceeded(
                        f"series cutoff {op.cutoff} cannot act on degree {d}"
                    )
                out = out + QSElement._raw(terms).act(op.component(d))
            return out
        if not isinstance(op, WQSymElement):
            raise TypeError("operators are WQSymElement or TruncatedSeries values")
        out: dict[TensorWord, object] = {}
        for word, c in self.terms.items():
            n = len(word)
            for u, d in op.terms.items():
                if len(u) != n:
                    continue
                _add_term(out, _act_word(word, u), c * d)
        return QSElement._raw(out)

    # -- coalgebra -----------------------------------------------------------

    def deconcatenate(self) -> "QSTensor":
        out: dict[tuple[TensorWord, TensorWord], object] = {}
        for word, c in self.terms.items():
            for i in range(len(word) + 1):
                _add_term(out, (word[:i], word[i:]), c)
        return QSTensor._raw(out)

    def reduced_deconcatenate(self) -> "QSTensor":
        """Deconcatenation with the two unit-sided terms removed; only
        meaningful for elements with zero constant term."""
        if self.counit():
            raise ValueError("reduced coproduct needs zero constant term")
        out = self.deconcatenate().terms.copy()
        for word, c in self.terms.items():
            _add_term(out, ((), word), -c)
            _add_term(out, (word, ()), -c)
        return QSTensor._raw(out)

    def counit(self):
        return self.terms.get((), Fraction(0))

    def degrees(self) -> list[int]:
        return sorted({len(w) for w in self.terms})

    def component(self, d: int) -> "QSElement":
        return QSElement._raw({w: c for w, c in self.terms.items() if len(w) == d})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __str__(self):
        def fmt(word):
            if not word:
                return "1"
            return "(" + " x ".join(mono_str(m) for m in word) + ")"

        return format_terms(self.sorted_terms(), fmt)

    def __repr__(self):
        return f"<QSElement {self}>"


def _act_word(word: TensorWord, u) -> TensorWord:
    if not u:
        return ()
    k = max(u)
    bins: list[Monomial | None] = [None] * k
    for mono, letter in zip(word, u):
        i = letter - 1
        bins[i] = mono if bins[i] is None else mono_mul(bins[i], mono)
    return tuple(bins)  # every bin filled: u is surjective


def tensor(*factors: AElement) -> QSElement:
    """Multilinear expansion of a tensor of base-algebra elements."""
    out: dict[TensorWord, object] = {(): Fraction(1)}
    for f in factors:
        new: dict[TensorWord, object] = {}
        for word, c in out.items():
            for m, d in f.terms.items():
                _add_term(new, word + (m,), c * d)
        out = new
    return QSElement._raw(out)


def concat(x: QSElement, y: QSElement) -> QSElement:
    """Bilinear concatenation of tensor words (not the algebra product)."""
    out: dict[TensorWord, object] = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            _add_term(out, w1 + w2, c1 * c2)
    return QSElement._raw(out)


class QSTensor:
    """Combination of ordered pairs of tensor words (coproduct values)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        for (a, b), c in (terms or {}).items():
            key = (tuple(monomial(*m) for m in a), tuple(monomial(*m) for m in b))
            c = _coerce_coeff(c)
            if c:
                _add_term(data, key, c)
        self.terms = data

    @classmethod
    def _raw(cls, data: dict) -> "QSTensor":
        t = object.__new__(cls)
        t.terms = data
        return t

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, QSTensor):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, QSTensor):
            return NotImplemented
        data = dict(self.terms)
        for k, c in other.terms.items():
            _add_term(data, k, c)
        return QSTensor._raw(data)

    def __sub__(self, other):
        if not isinstance(other, QSTensor):
            return NotImplemented
        return self + QSTensor._raw({k: -c for k, c in other.terms.items()})

    def __mul__(self, other):
        """Componentwise quasi-shuffle on both legs."""
        if not isinstance(other, QSTensor):
            return NotImplemented
        out = {}
        for (a, b), c1 in self.terms.items():
            for (u, v), c2 in other.terms.items():
                c = c1 * c2
                for left, ml in _qsh_tensor(a, u).items():
                    for right, mr in _qsh_tensor(b, v).items():
                        _add_term(out, (left, right), c * ml * mr)
        return QSTensor._raw(out)

    def multiply_legs(self) -> QSElement:
        """Quasi-shuffle the two legs together (the product-of-coproduct map)."""
        out = QSElement.zero()
        for (a, b), c in self.terms.items():
            out = out + (QSElement._raw({a: Fraction(1)}) * QSElement._raw({b: Fraction(1)}))._scaled(c)
        return out

    def __repr__(self):
        return f"<QSTensor {len(self.terms)} terms>"


# -- the identity battery ------------------------------------------------------


def convolution_of_operators(f, g, x: QSElement) -> QSElement:
    """Deconcatenate, act componentwise, quasi-shuffle back together."""
    out = QSElement.zero()
    for (a, b), c in x.deconcatenate().terms.items():
        left = QSElement._raw({a: Fraction(1)}).act(f)
        if not left:
            continue
        right = QSElement._raw({b: Fraction(1)}).act(g)
        if not right:
            continue
        out = out + (left * right)._scaled(c)
    return out


def apply_generator_map(f_spec: dict, x: QSElement) -> QSElement:
    """Extend a substitution generator -> AElement to tensor words.

    The substitution has no constant terms by construction (the base algebra
    has no unit), so it is an algebra map; unknown generators are rejected.
    """
    images = {str(k): v for k, v in f_spec.items()}
    for v in images.values():
        if not isinstance(v, AElement):
            raise ValueError("generator images must be AElement values")
    out = QSElement.zero()
    for word, c in x.terms.items():
        factors = []
        for mono in word:
            acc: AElement | None = None
            for name, e in mono:
                if name not in images:
                    raise ValueError(f"no image for generator {name!r}")
                piece = images[name] ** e
                acc = piece if acc is None else acc * piece
            factors.append(acc)
        out = out + tensor(*factors)._scaled(c)
    return out


def naturality_check(f_spec: dict, u, x: QSElement) -> bool:
    """Substitution commutes with the action of a basis word."""
    op = WQSymElement.monomial(u)
    return apply_generator_map(f_spec, x.act(op)) == apply_generator_map(f_spec, x).act(op)


def series_coproduct_pairs(sigma: TruncatedSeries) -> dict:
    """All tensor-square terms of the coproducts of the series components."""
    pairs: dict = {}
    for comp in sigma.components.values():
        for key, c in comp.coproduct().terms.items():
            _add_term(pairs, key, c)
    return pairs


def car_coproduct_compatibility_check(
    sigma: TruncatedSeries, x: QSElement, y: QSElement
) -> bool:
    """(x # y) . sigma  ==  sum (x . sigma') # (y . sigma'') over the coproduct."""
    lhs = (x * y).act(sigma)
    xdeg = set(x.degrees())
    ydeg = set(y.degrees())
    rhs = QSElement.zero()
    for (a, b), c in series_coproduct_pairs(sigma).items():
        if len(a) not in xdeg or len(b) not in ydeg:
            continue
        left = x.act(WQSymElement.monomial(a))
        if not left:
            continue
        right = y.act(WQSymElement.monomial(b))
        if not right:
            continue
        rhs = rhs + (left * right)._scaled(c)
    return lhs == rhs


def e1_kills_products_check(x: QSElement, y: QSElement, cutoff: int) -> bool:
    """Products of positive-degree elements lie in the kernel of the first
    idempotent."""
    if x.counit() or y.counit():
        raise ValueError("both factors must have zero constant term")
    return not (x * y).act(eulerian_idempotent(1, cutoff))


def adams_on_indecomposables_check(x: QSElement, cutoff: int) -> bool:
    """The square Adams operation minus twice the identity is exactly the
    product of the reduced coproduct legs."""
    if x.counit():
        raise ValueError("needs zero constant term")
    lhs = x.act(adams(2, cutoff)) - x._scaled(2)
    return lhs == x.reduced_deconcatenate().multiply_legs()


def elements_act_equally(f: WQSymElement, g: WQSymElement, generators, max_degree: int) -> bool:
    """Compare two operators on every tensor word of generators up to a degree
    (the recognition principle: on the free algebra this detects equality)."""
    from itertools import product as iproduct

    gens = [QSElement.generator(name) for name in generators]
    for n in range(max_degree + 1):
        for combo in iproduct(range(len(gens)), repeat=n):
            word = QSElement.unit()
            for i in combo:
                word = concat(word, gens[i])
            if word.act(f) != word.act(g):
                return False
    return True
