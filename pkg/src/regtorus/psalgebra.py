"""Truncated power-sum series kept in factored binomial form.

A :class:`FactoredSeries` is a finite product of factors ``(1 + c X^e)^beta``
where ``X`` is either a plain power sum ``p_j`` or a wreath variable
``p_i(zeta_r^k)`` and ``beta`` is a polynomial in q.  Series stay factored
through both substitutions and are expanded once, into plain variables, as
a :class:`PSeries`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, gcd, lcm

from .combinat import Partition, WreathClass
from .numkit import CPoly, CycNum, QPoly, binom_poly, cyc_embed, root_of_unity

__all__ = [
    "BinomFactor",
    "FactoredSeries",
    "PSeries",
    "TruncationError",
    "expand",
    "subst_character",
    "subst_induction",
    "coefficient",
    "trace_recovery",
]


class TruncationError(ValueError):
    """A coefficient beyond the truncation degree was requested."""


def _as_cyc(c) -> CycNum:
    return c if isinstance(c, CycNum) else CycNum.rational(c)


@dataclass(frozen=True)
class BinomFactor:
    """``(1 + coeff * X**power) ** exponent``.

    ``var`` is an int ``j`` for the plain variable ``p_j`` or a pair
    ``(i, k)`` for the wreath variable ``p_i(zeta_r^k)``.
    """

    var: int | tuple[int, int]
    exponent: QPoly
    power: int = 1
    coeff: CycNum = field(default_factory=lambda: CycNum.rational(1))

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("factor power must be >= 1")
        object.__setattr__(self, "coeff", _as_cyc(self.coeff))
        if self.coeff == 0:
            raise ValueError("factor coefficient must be nonzero")
        if not isinstance(self.exponent, QPoly):
            object.__setattr__(self, "exponent", QPoly(self.exponent))

    @property
    def is_plain(self) -> bool:
        return isinstance(self.var, int)

    def min_degree(self) -> int:
        """Degree of X**power; only meaningful for plain variables."""
        return self.var * self.power


@dataclass(frozen=True)
class FactoredSeries:
    """A product of binomial factors times a scalar.

    ``r`` is None for plain power sums, otherwise the order of the root-of-unity
    alphabet used by wreath variables.
    """

    factors: tuple[BinomFactor, ...]
    r: int | None = None
    scalar: CycNum = field(default_factory=lambda: CycNum.rational(1))

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "scalar", _as_cyc(self.scalar))
        for f in self.factors:
            if f.is_plain != (self.r is None):
                raise ValueError("all factors must use the same variable alphabet")

    def __mul__(self, other: FactoredSeries) -> FactoredSeries:
        if self.r != other.r:
            raise ValueError("cannot multiply series over different alphabets")
        m = lcm(self.scalar.order, other.scalar.order)
        return FactoredSeries(
            self.factors + other.factors,
            self.r,
            cyc_embed(self.scalar, m) * cyc_embed(other.scalar, m),
        )


class PSeries:
    """Power-sum series truncated at total degree ``N``.

    Coefficients are :class:`CPoly` over Q(zeta_order); absent monomials are zero.
    """

    def __init__(self, N: int, order: int, terms=None):
        self.N = N
        self.order = order
        self.terms: dict[Partition, CPoly] = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            if lam.weight > N:
                continue
            c = c if isinstance(c, CPoly) else CPoly(order, ()) + c
            if c.order != order:
                c = c.embed(order)
            if not c.is_zero():
                self.terms[lam] = c

    def coefficient(self, lam) -> CPoly:
        lam = Partition(lam)
        if lam.weight > self.N:
            raise TruncationError(f"monomial of degree {lam.weight} exceeds truncation {self.N}")
        return self.terms.get(lam, CPoly(self.order))

    def monomials(self) -> list[Partition]:
        return sorted(self.terms, key=lambda lam: (lam.weight, [-p for p in lam]))

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def rational_terms(self) -> dict[Partition, QPoly]:
        out = {}
        for lam, c in self.terms.items():
            qp = c.to_qpoly()
            if qp is None:
                raise ArithmeticError(f"coefficient of {lam} is not rational: {c}")
            out[lam] = qp
        return out

    def degrees(self) -> set[int]:
        return {lam.weight for lam in self.terms}

    def truncate(self, N: int) -> PSeries:
        return PSeries(min(N, self.N), self.order, self.terms)

    def __mul__(self, other: PSeries) -> PSeries:
        N = min(self.N, other.N)
        m = lcm(self.order, other.order)
        out: dict[Partition, CPoly] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                if a.weight + b.weight > N:
                    continue
                key = a + b
                prod = ca.embed(m) * cb.embed(m)
                out[key] = out[key] + prod if key in out else prod
        return PSeries(N, m, out)

    def __eq__(self, other):
        if not isinstance(other, PSeries):
            return NotImplemented
        if self.N != other.N:
            return False
        m = lcm(self.order, other.order)
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k).embed(m) == other.coefficient(k).embed(m) for k in keys)

    def __repr__(self):
        body = ", ".join(f"{lam}: {self.terms[lam]}" for lam in self.monomials())
        return f"PSeries(N={self.N}, order={self.order}, {{{body}}})"


def expand(s: FactoredSeries, N: int, m: int | None = None) -> PSeries:
    """Multiply out a plain factored series up to total degree N."""
    if s.r is not None:
        raise ValueError("expand needs plain variables; substitute first")
    orders = [s.scalar.order] + [f.coeff.order for f in s.factors]
    if m is None:
        m = lcm(*orders)
    elif any(m % o for o in orders):
        raise ValueError(f"order {m} does not contain all coefficient fields")

    terms: dict[Partition, CPoly] = {Partition(): CPoly(m, (cyc_embed(s.scalar, m),))}
    for f in s.factors:
        step = f.min_degree()
        if step > N:
            continue
        c = cyc_embed(f.coeff, m)
        series = []
        ck = CycNum.rational(1, m)
        for k in range(N // step + 1):
            series.append(binom_poly(f.exponent, k) * ck)
            ck = ck * c
        new: dict[Partition, CPoly] = {}
        for lam, coef in terms.items():
            room = (N - lam.weight) // step
            for k in range(min(room, len(series) - 1) + 1):
                term = series[k]
                if term.is_zero():
                    continue
                key = lam + (f.var,) * (f.power * k) if k else lam
                prod = coef * term
                new[key] = new[key] + prod if key in new else prod
        terms = {k: v for k, v in new.items() if not v.is_zero()}
    return PSeries(N, m, terms)


def subst_character(s: FactoredSeries, k: int) -> FactoredSeries:
    """Specialize p_i(theta) -> chi(theta) p_i where chi(zeta_n) = zeta_n**k."""
    n = s.r
    if n is None:
        raise ValueError("series already uses plain variables")
    factors = []
    for f in s.factors:
        i, j = f.var
        L = lcm(f.coeff.order, n)
        c = cyc_embed(f.coeff, L) * cyc_embed(root_of_unity(n, k * j * f.power), L)
        factors.append(BinomFactor(i, f.exponent, f.power, c))
    return FactoredSeries(factors, None, s.scalar)


def subst_induction(s: FactoredSeries) -> FactoredSeries:
    """Substitute p_i(theta) -> -theta^{-1} (-p_{i t})^{r/t}, t the order of theta."""
    r = s.r
    if r is None:
        raise ValueError("series already uses plain variables")
    factors = []
    for f in s.factors:
        i, j = f.var
        t = r // gcd(j, r)
        base = -root_of_unity(r, -j) * (-1) ** (r // t)
        L = lcm(f.coeff.order, r)
        c = cyc_embed(f.coeff, L) * cyc_embed(base**f.power, L)
        factors.append(BinomFactor(i * t, f.exponent, f.power * (r // t), c))
    return FactoredSeries(factors, None, s.scalar)


def coefficient(s: PSeries, lam) -> CPoly:
    return s.coefficient(lam)


def trace_recovery(coeff, label, r: int = 1):
    """Multiply a ch-coefficient by the centralizer order of its class."""
    if isinstance(label, WreathClass):
        z = label.centralizer_order()
    else:
        z = 1
        for i, a in Partition(label).multiplicities().items():
            z *= factorial(a) * (r * i) ** a
    return coeff * z
