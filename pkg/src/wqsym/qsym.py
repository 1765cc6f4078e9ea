"""Quasi-symmetric functions as the quasi-shuffle algebra over the positive
integers.

The monomial basis is indexed by compositions; the product is the
quasi-shuffle where overlapping parts add.  Packed-word elements act on the
right by summing parts blockwise, Adams operations come either through that
action or through the internal iterated coproduct/product oracle, and the
first quasi-Eulerian idempotent carves out free polynomial generators
indexed by Lyndon compositions (verified degreewise by exact rank).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import SCALAR_TYPES, WQSymElement, _add_term, _coerce_coeff, format_terms
from .errors import CapExceeded
from .params import ParamPoly
from .series import TruncatedSeries, adams as adams_series, eulerian_idempotent
from .words import Composition, compositions, evaluation, lyndon_compositions

GENERATOR_REPORT_CAP = 6


class QSymElement:
    """Rational (or parameter-polynomial) combination of compositions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[Composition, object] = {}
        for I, c in (terms or {}).items():
            I = tuple(int(p) for p in I)
            if any(p < 1 for p in I):
                raise ValueError(f"composition parts must be positive: {I!r}")
            c = _coerce_coeff(c)
            if c:
                _add_term(data, I, c)
        self.terms = data

    @classmethod
    def _raw(cls, data: dict) -> "QSymElement":
        el = object.__new__(cls)
        el.terms = data
        return el

    @classmethod
    def zero(cls) -> "QSymElement":
        return cls._raw({})

    @classmethod
    def unit(cls) -> "QSymElement":
        return cls._raw({(): Fraction(1)})

    @classmethod
    def monomial(cls, I, coeff=1) -> "QSymElement":
        return cls({tuple(I): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, QSymElement):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        data = dict(self.terms)
        for I, c in other.terms.items():
            _add_term(data, I, c)
        return QSymElement._raw(data)

    def __neg__(self):
        return QSymElement._raw({I: -c for I, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        return self + (-other)

    def _scaled(self, scalar):
        scalar = _coerce_coeff(scalar)
        if not scalar:
            return QSymElement.zero()
        return QSymElement._raw({I: scalar * c for I, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SCALAR_TYPES):
            return self._scaled(other)
        if not isinstance(other, QSymElement):
            return NotImplemented
        out: dict[Composition, object] = {}
        for I, c1 in self.terms.items():
            for J, c2 in other.terms.items():
                c = c1 * c2
                for K, mult in _qsh_comp(I, J).items():
                    _add_term(out, K, c * mult)
        return QSymElement._raw(out)

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

    def act(self, op) -> "QSymElement":
        """Right action: a basis word of length len(I) regroups the parts of I
        by summing over each block; other lengths act by zero.  A series acts
        through its component matching the number of parts."""
        if isinstance(op, TruncatedSeries):
            out = QSymElement.zero()
            by_len: dict[int, dict] = {}
            for I, c in self.terms.items():
                by_len.setdefault(len(I), {})[I] = c
            for l, terms in by_len.items():
                if l > op.cutoff:
                    raise CapExceeded(f"series cutoff {op.cutoff} cannot act on length {l}")
                out = out + QSymElement._raw(terms).act(op.component(l))
            return out
        if not isinstance(op, WQSymElement):
            raise TypeError("operators are WQSymElement or TruncatedSeries values")
        out: dict[Composition, object] = {}
        for I, c in self.terms.items():
            l = len(I)
            for u, d in op.terms.items():
                if len(u) != l:
                    continue
                k = max(u) if u else 0
                parts = [0] * k
                for part, letter in zip(I, u):
                    parts[letter - 1] += part
                _add_term(out, tuple(parts), c * d)
        return QSymElement._raw(out)

    def weights(self) -> list[int]:
        return sorted({sum(I) for I in self.terms})

    def weight_component(self, n: int) -> "QSymElement":
        return QSymElement._raw({I: c for I, c in self.terms.items() if sum(I) == n})

    def counit(self):
        return self.terms.get((), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), len(kv[0]), kv[0]))

    def __str__(self):
        return format_terms(self.sorted_terms(), lambda I: "M(%s)" % ",".join(map(str, I)))

    def __repr__(self):
        return f"<QSymElement {self}>"


def _qsh_comp(I: Composition, J: Composition) -> dict[Composition, int]:
    if not I:
        return {J: 1}
    if not J:
        return {I: 1}
    out: dict[Composition, int] = {}
    for K, m in _qsh_comp(I[1:], J).items():
        key = (I[0],) + K
        out[key] = out.get(key, 0) + m
    for K, m in _qsh_comp(I, J[1:]).items():
        key = (J[0],) + K
        out[key] = out.get(key, 0) + m
    for K, m in _qsh_comp(I[1:], J[1:]).items():
        key = (I[0] + J[0],) + K
        out[key] = out.get(key, 0) + m
    return out


# -- Adams operations ----------------------------------------------------------


def qsym_adams(k: int, F: QSymElement, cutoff: int) -> QSymElement:
    """k-th Adams operation through the action of the Adams series."""
    return F.act(adams_series(k, cutoff))


def qsym_adams_oracle(k: int, F: QSymElement) -> QSymElement:
    """Independent route: cut each composition into k consecutive (possibly
    empty) segments and multiply the segments back together, entirely inside
    the composition algebra."""
    if k < 0:
        raise ValueError("Adams operations are indexed by nonnegative integers")
    if k == 0:
        return QSymElement._raw({(): F.counit()} if F.counit() else {})
    from itertools import combinations_with_replacement

    out = QSymElement.zero()
    for I, c in F.terms.items():
        l = len(I)
        for cuts in combinations_with_replacement(range(l + 1), k - 1):
            bounds = (0,) + cuts + (l,)
            prod = QSymElement.unit()
            for a, b in zip(bounds, bounds[1:]):
                prod = prod * QSymElement._raw({I[a:b]: Fraction(1)})
            out = out + prod._scaled(c)
    return out


def commutative_image(f: WQSymElement) -> QSymElement:
    """Abelianize: each packed word goes to its evaluation composition."""
    out: dict[Composition, object] = {}
    for u, c in f.terms.items():
        _add_term(out, evaluation(u), c)
    return QSymElement._raw(out)


def sigma_hat_series(t, cutoff: int) -> TruncatedSeries:
    """Deformed diagonal series: t^d times the staircase word in degree d.

    ``t`` may be an exact scalar (specialization) or a :class:`ParamPoly`
    variable, in which case the coefficients live in the parameter ring.
    """
    if isinstance(t, int):
        t = Fraction(t)
    if not isinstance(t, (Fraction, ParamPoly)):
        raise TypeError("parameter must be exact: Fraction or ParamPoly")
    comps = {}
    power = t ** 0 if isinstance(t, ParamPoly) else Fraction(1)
    for d in range(cutoff + 1):
        coeff = power
        if coeff:
            comps[d] = WQSymElement.monomial(tuple(range(1, d + 1)), coeff)
        power = power * t
    return TruncatedSeries(cutoff, comps)


# -- free generators through the first idempotent -------------------------------


@dataclass(frozen=True)
class WeightReport:
    weight: int
    lyndon: tuple[Composition, ...]
    rank: int
    dimension: int
    full_rank: bool


def _integer_rank(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) row reduction; exact division throughout."""
    m = [row[:] for row in rows if any(row)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, row, prev = 0, 0, 1
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        for r in range(row + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[r][c] * m[row][col] - m[r][col] * m[row][c]) // prev
            m[r][col] = 0
        prev = m[row][col]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rank_of_elements(elements, basis) -> int:
    """Exact rank of a family of QSym elements on a fixed composition basis."""
    index = {I: j for j, I in enumerate(basis)}
    rows = []
    for el in elements:
        row = [Fraction(0)] * len(basis)
        for I, c in el.terms.items():
            row[index[I]] = c
        denom = math.lcm(*(f.denominator for f in row)) if row else 1
        rows.append([int(f * denom) for f in row])
    return _integer_rank(rows)


def _weighted_multisets(items, total):
    """Multisets (as nondecreasing index tuples) of weighted items hitting a total."""

    def rec(start, remaining):
        if remaining == 0:
            yield ()
            return
        for j in range(start, len(items)):
            w = items[j][1]
            if w <= remaining:
                for rest in rec(j, remaining - w):
                    yield (j,) + rest

    yield from rec(0, total)


def lyndon_generator_report(max_weight: int, cutoff: int | None = None) -> list[WeightReport]:
    """Per weight: Lyndon compositions, the idempotent images of their
    monomials, and the exact rank of all products of those images."""
    if max_weight > GENERATOR_REPORT_CAP:
        raise CapExceeded(f"generator report capped at weight {GENERATOR_REPORT_CAP}")
    cutoff = max_weight if cutoff is None else cutoff
    e1 = eulerian_idempotent(1, cutoff)
    gens: list[tuple[Composition, int, QSymElement]] = []
    for n in range(1, max_weight + 1):
        for L in lyndon_compositions(n):
            gens.append((L, n, QSymElement.monomial(L).act(e1)))
    weighted = [(g, w) for (_, w, g) in gens]
    reports = []
    for n in range(1, max_weight + 1):
        lyndon_here = lyndon_compositions(n)
        family = []
        for combo in _weighted_multisets(weighted, n):
            el = QSymElement.unit()
            for j in combo:
                el = el * weighted[j][0]
            family.append(el)
        rank = rank_of_elements(family, compositions(n))
        dim = 2 ** (n - 1)
        reports.append(
            WeightReport(
                weight=n,
                lyndon=lyndon_here,
                rank=rank,
                dimension=dim,
                full_rank=rank == dim,
            )
        )
    return reports


def e1_projection_check(n: int, cutoff: int | None = None) -> bool:
    """Degreewise facts about the first idempotent acting on weight n:
    it is idempotent, it kills products of positive-weight elements, and its
    image rank is the number of Lyndon compositions."""
    if n > GENERATOR_REPORT_CAP:
        raise CapExceeded(f"projection check capped at weight {GENERATOR_REPORT_CAP}")
    cutoff = n if cutoff is None else cutoff
    e1 = eulerian_idempotent(1, cutoff)
    images = []
    for I in compositions(n):
        if not I:
            continue
        image = QSymElement.monomial(I).act(e1)
        if image.act(e1) != image:
            return False
        images.append(image)
    for a in range(1, n):
        for I in compositions(a):
            for J in compositions(n - a):
                if I and J:
                    prod = QSymElement.monomial(I) * QSymElement.monomial(J)
                    if prod.act(e1):
                        return False
    return rank_of_elements(images, compositions(n)) == len(lyndon_compositions(n))
