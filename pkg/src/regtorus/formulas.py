"""Closed formulas for the weight polynomials of T(r,m), PT(r,m), T^(n)(1,m) and ST(1,n).

Roots of unity are labelled by their exponent ``k`` of a fixed primitive
``zeta_r``; the order of ``zeta_r^k`` is ``r / gcd(k, r)``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .combinat import Partition, WreathClass
from .numkit import (
    CPoly,
    QPoly,
    binom_poly,
    divisors,
    euler_phi,
    falling_product,
    mobius,
    root_of_unity,
)
from .psalgebra import (
    BinomFactor,
    FactoredSeries,
    PSeries,
    expand,
    subst_character,
    subst_induction,
)

q = QPoly.q()
ONE = QPoly(1)

SUMPROP_MAX_M = 5
SUMPROP_MAX_TERMS = 10**6


class EnumerationTooLarge(ValueError):
    pass


@lru_cache(maxsize=None)
def r_small(r: int, i: int) -> QPoly:
    """R_i^(r): sum over d | i coprime to r of mu(d) (q^{i/d} - 1)."""
    return sum(
        (mobius(d) * (QPoly.monomial(i // d) - 1) for d in divisors(i) if gcd(d, r) == 1),
        QPoly(),
    )


@lru_cache(maxsize=None)
def r_theta(r: int, i: int, k: int) -> QPoly:
    """R_{r,i,theta} for theta = zeta_r^k, by direct count of d-th roots of theta."""
    k %= r
    total = QPoly()
    for d in divisors(i):
        roots = sum(1 for j in range(r) if (j * d - k) % r == 0)
        if roots:
            total = total + roots * mobius(d) * (QPoly.monomial(i // d) - 1)
    return total


def root_order(r: int, k: int) -> int:
    return r // gcd(k % r, r)


def r_theta_mobius(r: int, i: int, k: int) -> QPoly:
    """R_{r,i,theta} rewritten through the R_i^(r) polynomials."""
    t = root_order(r, k)
    return sum(
        (s * mobius(s) * r_small(r, i // s) for s in divisors(gcd(r // t, i))),
        QPoly(),
    )


def p_wreath(r: int, N: int) -> FactoredSeries:
    """P(r,q) as a product of (1 + p_i(theta))^{R_{r,i,theta}/(r i)}, i <= N."""
    factors = [
        BinomFactor((i, k), r_theta(r, i, k) / (r * i))
        for i in range(1, N + 1)
        for k in range(r)
    ]
    return FactoredSeries(factors, r)


def trace_T(r: int, y: WreathClass) -> QPoly:
    """Weight polynomial of T(r,m) at an element of class y."""
    if y.r != r:
        raise ValueError(f"class is for W({y.r}, m), expected r = {r}")
    out = ONE
    for (i, k), a in y.multiplicities().items():
        out = out * falling_product(r_theta(r, i, k), r * i, a)
    return out


def trace_PT(r: int, y: WreathClass) -> QPoly:
    return trace_T(r, y).exact_div(q - 1)


@lru_cache(maxsize=None)
def p_factor(r: int, i: int) -> FactoredSeries:
    """P_i^(r) = prod over s | gcd(r,i) of (1 - (-p_i)^{r/s})^{s mu(s) R_{i/s}^(r)/(r i)}."""
    factors = []
    for s in divisors(gcd(r, i)):
        mu = mobius(s)
        if mu == 0:
            continue
        e = r // s
        factors.append(
            BinomFactor(i, s * mu * r_small(r, i // s) / (r * i), e, -((-1) ** e))
        )
    return FactoredSeries(factors)


def _product(series) -> FactoredSeries:
    factors = []
    for s in series:
        factors.extend(s.factors)
    return FactoredSeries(factors)


def _rationalize(s: PSeries) -> PSeries:
    return PSeries(s.N, 1, s.rational_terms())


def p_chi(r: int, N: int) -> PSeries:
    """P(chi, q) for chi of order r, as the product of the P_i^(r)."""
    return _rationalize(expand(_product(p_factor(r, i) for i in range(1, N + 1)), N, 1))


def p_chi_via_wreath(n: int, k: int, N: int) -> PSeries:
    """P(chi, q) by specializing P(n, q) at chi(zeta_n) = zeta_n**k."""
    return _rationalize(expand(subst_character(p_wreath(n, N), k), N, n))


def p_prime(r: int, N: int) -> PSeries:
    """P'(r, q): P(r, q) under p_i(theta) -> -theta^{-1} (-p_{i t})^{r/t}."""
    return _rationalize(expand(subst_induction(p_wreath(r, N)), N, r))


@lru_cache(maxsize=None)
def p_factor_coefficient(r: int, i: int, a: int) -> QPoly:
    """Coefficient of p_i^a in P_i^(r)."""
    s = expand(p_factor(r, i), i * a, 1)
    c = s.coefficient(Partition([i] * a)).to_qpoly()
    assert c is not None
    return c


def trace_Tn1m(w, r: int) -> QPoly:
    """P(w, chi^{-1}, T^(n)(1,m), q) for chi of order r and w of cycle type w."""
    w = Partition(w)
    out = ONE
    for i, a in w.multiplicities().items():
        if a % (r // gcd(r, i)):
            return QPoly()
        out = out * (factorial(a) * i**a * p_factor_coefficient(r, i, a))
    return out


def trace_ST(w, r: int) -> QPoly:
    """P(w, chi, ST(1,n), q) for chi of order r."""
    w = Partition(w)
    if w.weight % r:
        raise ValueError(f"chi order {r} must divide n = {w.weight}")
    return trace_Tn1m(w, r).exact_div(q - 1)


def trace_ST_total(w) -> QPoly:
    w = Partition(w)
    return sum((euler_phi(r) * trace_ST(w, r) for r in divisors(w.weight)), QPoly())


def wreath_class_of(perm_cycles, exponents, n: int) -> WreathClass:
    """Class in W(n, m) of the permutation (given by its cycles) with scalars zeta_n^e."""
    return WreathClass(n, [(len(c), sum(exponents[a] for a in c)) for c in perm_cycles])


def sumprop_direct(w, n: int, k: int) -> QPoly:
    """Average of chi(zeta_1...zeta_m) P(w(zeta), T(n,m), q) over mu_n^m."""
    w = Partition(w)
    m = w.weight
    if m > SUMPROP_MAX_M or n**m > SUMPROP_MAX_TERMS:
        raise EnumerationTooLarge(f"n^m = {n}^{m} exceeds the enumeration guard")
    blocks = []
    start = 0
    for length in w:
        blocks.append(list(range(start, start + length)))
        start += length
    total = CPoly(n)
    for exps in itertools.product(range(n), repeat=m):
        y = wreath_class_of(blocks, exps, n)
        total = total + root_of_unity(n, k * sum(exps)) * trace_T(n, y)
    result = (total / n**m).to_qpoly()
    if result is None:
        raise ArithmeticError(f"non-rational average for w={w}, n={n}, k={k}")
    return result


def coeff_coprime(r: int, i: int, a: int) -> QPoly:
    """Closed form for the coefficient of p_i^a in P_i^(r) when gcd(r, i) = 1."""
    if gcd(r, i) != 1:
        raise ValueError("requires gcd(r, i) = 1")
    if a % r:
        raise ValueError("requires r | a")
    R = r_small(r, i)
    b = a // r
    sign = -1 if (a - b) % 2 else 1
    return sign * falling_product(R, r * i, b) / ((r * i) ** b * factorial(b))


def coeff_r2_even(i: int, a: int) -> QPoly:
    """Coefficient of p_i^a in P_i^(2) for even i, as a double binomial sum."""
    if i % 2:
        raise ValueError("requires even i")
    alpha = r_small(2, i) / (2 * i)
    beta = -r_small(2, i // 2) / i
    return sum(
        ((-1) ** j * binom_poly(alpha, j) * binom_poly(beta, a - 2 * j) for j in range(a // 2 + 1)),
        QPoly(),
    )


def betti_closed_form(n: int, r: int) -> QPoly:
    """Non-equivariant isotypic weight polynomial of ST(1,n) for chi of order r."""
    if n % r:
        raise ValueError("r must divide n")
    b = n // r
    lead = Fraction((-1) ** (n - b) * factorial(n), r**b * factorial(b))
    out = QPoly(lead)
    for j in range(1, b):
        out = out * (q - j * r - 1)
    return out
