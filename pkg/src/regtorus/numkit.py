"""Exact arithmetic: arithmetic functions, polynomials in q, cyclotomic fields.

Rationals are :class:`fractions.Fraction`.  Polynomials are immutable and
kept trailing-zero free, so ``==`` is structural equality.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = [
    "Rat",
    "QPoly",
    "CPoly",
    "CycNum",
    "mobius",
    "euler_phi",
    "divisors",
    "cyclotomic_poly",
    "binom_poly",
    "cyc_embed",
    "cyc_is_rational",
    "root_of_unity",
    "falling_product",
]

Rat = Fraction


def _check_positive(n, name):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


def divisors(n: int) -> list[int]:
    _check_positive(n, "n")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(d: int) -> int:
    _check_positive(d, "d")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    if d > 1:
        result = -result
    return result


def euler_phi(r: int) -> int:
    _check_positive(r, "r")
    result = r
    n = r
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _convolve(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = out[i] + y
    return out


def _divmod_monic(num, den):
    """Long division of coefficient lists by a monic divisor."""
    num = list(num)
    dd = len(den) - 1
    if len(num) <= dd:
        return [], num
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        quot[k - dd] = c
        for j in range(dd + 1):
            num[k - dd + j] = num[k - dd + j] - c * den[j]
    return quot, num[:dd]


class QPoly:
    """Polynomial in ``q`` with rational coefficients (lowest degree first)."""

    __slots__ = ("coeffs",)
    var = "q"

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Rational)):
            coeffs = (coeffs,)
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def q(cls) -> QPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> QPoly:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def _lift(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Rational)):
            return QPoly((other,))
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, CPoly):
            return other + self
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QPoly(_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, CPoly):
            return (-other) + self
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (CPoly, CycNum)):
            return other * self
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QPoly(_convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return QPoly(c / Fraction(other) for c in self.coeffs)
        return NotImplemented

    def __pow__(self, e: int):
        result = QPoly(1)
        for _ in range(e):
            result = result * self
        return result

    def __divmod__(self, other: QPoly):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.coeffs[-1]
        monic = [c / lead for c in other.coeffs]
        quot, rem = _divmod_monic(self.coeffs, monic)
        return QPoly(c / lead for c in quot), QPoly(rem)

    def exact_div(self, other) -> QPoly:
        """Divide, raising ``ArithmeticError`` if the remainder is nonzero."""
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticError(f"({self}) is not divisible by ({other})")
        return quot

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, CPoly):
            return other == self
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("QPoly", self.coeffs))

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        return _format_terms(
            [(k, c) for k, c in enumerate(self.coeffs)], self.var, _fmt_rat
        )

    def to_json(self) -> list[str]:
        return [_fmt_rat(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> QPoly:
        return cls(Fraction(s) for s in data)


def _fmt_rat(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_terms(terms, var, fmt):
    parts = []
    for k, c in reversed(terms):
        if c == 0:
            continue
        body = fmt(c)
        neg = body.startswith("-") and "+" not in body[1:] and "-" not in body[1:]
        if neg:
            body = body[1:]
        if k and body == "1":
            body = ""
        elif k and not body.replace("/", "").isdigit():
            body = f"({body})"
        if k == 0:
            mono = body
        else:
            power = var if k == 1 else f"{var}^{k}"
            mono = f"{body}*{power}" if body else power
        if not parts:
            parts.append(f"-{mono}" if neg else mono)
        else:
            parts.append(f"- {mono}" if neg else f"+ {mono}")
    return " ".join(parts) if parts else "0"


_CYC_CACHE: dict[int, tuple[int, ...]] = {}
_CYC_LOCK = threading.Lock()


def cyclotomic_poly(m: int) -> QPoly:
    """The m-th cyclotomic polynomial, by exact division of x^m - 1."""
    return QPoly(_cyclotomic_coeffs(m))


def _cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    _check_positive(m, "m")
    cached = _CYC_CACHE.get(m)
    if cached is not None:
        return cached
    num = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        quot, rem = _divmod_monic(num, _cyclotomic_coeffs(d))
        assert not any(rem)
        num = quot
    coeffs = tuple(int(c) for c in num)
    with _CYC_LOCK:
        return _CYC_CACHE.setdefault(m, coeffs)


def falling_product(base: QPoly, step, count: int) -> QPoly:
    """base * (base - step) * ... * (base - (count-1)*step)."""
    result = QPoly(1)
    for j in range(count):
        result = result * (base - j * step)
    return result


def binom_poly(beta, k: int) -> QPoly:
    """Generalized binomial coefficient beta choose k as a polynomial in q."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    beta = beta if isinstance(beta, QPoly) else QPoly(beta)
    fact = 1
    for j in range(2, k + 1):
        fact *= j
    return falling_product(beta, 1, k) / fact


class CycNum:
    """Element of Q(zeta_m), stored as a residue modulo the m-th cyclotomic polynomial.

    The canonical primitive root ``zeta_m`` is the class of ``x``.
    """

    __slots__ = ("order", "residue")

    def __init__(self, order: int, residue=()):
        _check_positive(order, "order")
        if isinstance(residue, (int, Rational)):
            residue = (residue,)
        phi = _cyclotomic_coeffs(order)
        res = [Fraction(c) for c in residue]
        if len(res) >= len(phi):
            _, res = _divmod_monic(res, phi)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "residue", _trim(res))

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    @classmethod
    def rational(cls, value, order: int = 1) -> CycNum:
        return cls(order, (value,))

    def rational_value(self) -> Fraction | None:
        if len(self.residue) <= 1:
            return self.residue[0] if self.residue else Fraction(0)
        return None

    def _lift(self, other):
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic orders differ ({self.order} vs {other.order}); embed explicitly"
                )
            return other
        if isinstance(other, (int, Rational)):
            return CycNum(self.order, (other,))
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (QPoly, CPoly)):
            return CPoly(self.order, (self,)) + other
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycNum(self.order, _add(self.residue, other.residue))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-c for c in self.residue])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (QPoly, CPoly)):
            return CPoly(self.order, (self,)) * other
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycNum(self.order, _convolve(self.residue, other.residue))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return CycNum(self.order, [c / Fraction(other) for c in self.residue])
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result, base = CycNum(self.order, (1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            return self.residue == _trim((Fraction(other),))
        if isinstance(other, CycNum):
            return self.order == other.order and self.residue == other.residue
        return NotImplemented

    def __hash__(self):
        value = self.rational_value()
        if value is not None:
            return hash(value)
        return hash((self.order, self.residue))

    def __repr__(self):
        return f"CycNum({self.order}, {self})"

    def __str__(self):
        return _format_terms(
            list(enumerate(self.residue)), f"z{self.order}", _fmt_rat
        )


def root_of_unity(m: int, k: int) -> CycNum:
    """zeta_m ** k for any integer k."""
    k %= m
    return CycNum(m, [0] * k + [1])


def cyc_embed(x: CycNum, m: int) -> CycNum:
    t = x.order
    if m % t:
        raise ValueError(f"cannot embed order {t} into order {m}")
    step = m // t
    coeffs = [0] * (step * max(len(x.residue) - 1, 0) + 1)
    for k, c in enumerate(x.residue):
        coeffs[k * step] = c
    return CycNum(m, coeffs)


def cyc_is_rational(x: CycNum) -> Fraction | None:
    return x.rational_value()


class CPoly:
    """Polynomial in ``q`` whose coefficients lie in Q(zeta_m)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if isinstance(coeffs, (int, Rational, CycNum)):
            coeffs = (coeffs,)
        cs = []
        for c in coeffs:
            if isinstance(c, CycNum):
                if c.order != order:
                    raise ValueError("coefficient order mismatch")
                cs.append(c)
            else:
                cs.append(CycNum(order, (c,)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CPoly is immutable")

    @classmethod
    def from_qpoly(cls, order: int, p: QPoly) -> CPoly:
        return cls(order, p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return all(c.rational_value() is not None for c in self.coeffs)

    def to_qpoly(self) -> QPoly | None:
        values = [c.rational_value() for c in self.coeffs]
        if any(v is None for v in values):
            return None
        return QPoly(values)

    def embed(self, m: int) -> CPoly:
        if m == self.order:
            return self
        return CPoly(m, [cyc_embed(c, m) for c in self.coeffs])

    def _lift(self, other):
        if isinstance(other, CPoly):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic orders differ ({self.order} vs {other.order}); embed explicitly"
                )
            return other
        if isinstance(other, QPoly):
            return CPoly(self.order, other.coeffs)
        if isinstance(other, (int, Rational, CycNum)):
            return CPoly(self.order, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CPoly(self.order, _add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return CPoly(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational, CycNum)):
            other = self._lift(other).coeffs
            if not other:
                return CPoly(self.order)
            c = other[0]
            return CPoly(self.order, [x * c for x in self.coeffs])
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CPoly(self.order, _convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return CPoly(self.order, [c / other for c in self.coeffs])
        return NotImplemented

    def __call__(self, x):
        acc = CycNum(self.order)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.to_qpoly() == other
        if isinstance(other, CPoly):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self == CPoly(self.order, (other,))
        return NotImplemented

    def __hash__(self):
        as_q = self.to_qpoly()
        if as_q is not None:
            return hash(as_q)
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CPoly({self.order}, {self})"

    def __str__(self):
        return _format_terms(list(enumerate(self.coeffs)), "q", str)
