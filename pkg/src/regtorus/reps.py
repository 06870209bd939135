"""Symmetric-group characters, induction from wreath subgroups, and the
cohomology characters of ST(1,n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import formulas
from .combinat import (
    Partition,
    WreathClass,
    partitions,
    sign,
    wreath_classes,
    z_lambda,
)
from .numkit import CPoly, CycNum, QPoly, divisors, root_of_unity

CHARACTER_TABLE_BOUND = 10


class ClassFunction:
    """Function on the conjugacy classes of S_n (keyed by cycle type)."""

    def __init__(self, n: int, values):
        self.n = n
        self.values = {Partition(k): v for k, v in dict(values).items()}
        missing = set(partitions(n)) - set(self.values)
        if missing:
            raise ValueError(f"class function undefined on {sorted(missing)}")

    @classmethod
    def zero(cls, n: int) -> ClassFunction:
        return cls(n, {lam: Fraction(0) for lam in partitions(n)})

    def __getitem__(self, lam):
        return self.values[Partition(lam)]

    def classes(self) -> list[Partition]:
        return partitions(self.n)

    def as_tuple(self) -> tuple:
        return tuple(self.values[lam] for lam in partitions(self.n))

    def dimension(self):
        return self.values[Partition([1] * self.n)]

    def twist_sign(self) -> ClassFunction:
        return type(self)(self.n, {lam: sign(lam) * v for lam, v in self.values.items()})

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("class functions on different groups")
        return type(self)(self.n, {lam: v + other.values[lam] for lam, v in self.values.items()})

    def __mul__(self, scalar):
        return type(self)(self.n, {lam: v * scalar for lam, v in self.values.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and all(v == other.values[k] for k, v in self.values.items())

    def __repr__(self):
        body = ", ".join(f"({lam}): {self.values[lam]}" for lam in partitions(self.n))
        return f"{type(self).__name__}({self.n}, {{{body}}})"


class PolyClassFunction(ClassFunction):
    """Class function of S_n with polynomial values, e.g. a weight polynomial.

    ``dim`` is the dimension of the underlying variety when known.
    """

    def __init__(self, n: int, values, dim: int | None = None):
        super().__init__(n, values)
        self.dim = dim

    def at(self, x) -> ClassFunction:
        return ClassFunction(self.n, {lam: v(x) for lam, v in self.values.items()})


class WreathClassFunction:
    """Function on the conjugacy classes of W(r, m)."""

    def __init__(self, r: int, m: int, values, dim: int | None = None):
        self.r = r
        self.m = m
        self.values = dict(values)
        self.dim = dim
        missing = set(wreath_classes(r, m)) - set(self.values)
        if missing:
            raise ValueError(f"wreath class function undefined on {len(missing)} classes")

    def __getitem__(self, y):
        return self.values[y]

    def __eq__(self, other):
        if not isinstance(other, WreathClassFunction):
            return NotImplemented
        return (self.r, self.m) == (other.r, other.m) and all(
            v == other.values[k] for k, v in self.values.items()
        )

    def __repr__(self):
        return f"WreathClassFunction({self.r}, {self.m}, {self.values})"


# -- character table ---------------------------------------------------------


def _beta_set(mu) -> tuple[int, ...]:
    L = len(mu)
    return tuple(mu[i] + (L - 1 - i) for i in range(L))


def _from_beta(beta) -> tuple[int, ...]:
    beads = sorted(beta, reverse=True)
    L = len(beads)
    return tuple(p for p in (beads[i] - (L - 1 - i) for i in range(L)) if p > 0)


@lru_cache(maxsize=None)
def _mn(mu: tuple[int, ...], lam: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama: character of irreducible mu at cycle type lam."""
    if not lam:
        return 1 if not mu else 0
    k, rest = lam[0], lam[1:]
    beta = _beta_set(mu)
    beads = set(beta)
    total = 0
    for x in beta:
        y = x - k
        if y < 0 or y in beads:
            continue
        height = sum(1 for b in beta if y < b < x)
        new = _from_beta([y if b == x else b for b in beta])
        total += (-1) ** height * _mn(new, rest)
    return total


def sn_character(mu, lam) -> int:
    return _mn(tuple(Partition(mu)), tuple(Partition(lam)))


def sn_character_table(n: int, bound: int = CHARACTER_TABLE_BOUND) -> dict:
    """Integer character table of S_n, keyed by (irreducible label, class)."""
    if n > bound:
        raise ValueError(f"n = {n} exceeds the character table bound {bound}")
    return {(mu, lam): sn_character(mu, lam) for mu in partitions(n) for lam in partitions(n)}


def irreducible(mu) -> ClassFunction:
    mu = Partition(mu)
    n = mu.weight
    return ClassFunction(n, {lam: Fraction(sn_character(mu, lam)) for lam in partitions(n)})


def inner_product(f: ClassFunction, g: ClassFunction):
    return sum(
        (f.values[lam] * g.values[lam] / z_lambda(lam) for lam in partitions(f.n)),
        Fraction(0),
    )


def decompose(f: ClassFunction) -> dict[Partition, Fraction]:
    """Multiplicity of each irreducible in f (zero multiplicities omitted)."""
    out = {}
    for mu in partitions(f.n):
        mult = sum(
            (f.values[lam] * sn_character(mu, lam) / z_lambda(lam) for lam in partitions(f.n)),
            Fraction(0),
        )
        if mult != 0:
            out[mu] = Fraction(mult)
    return out


# -- duality -------------------------------------------------------------------


def pd_extract(P, j: int, dim: int | None = None):
    """Traces on H^j from a compactly supported weight polynomial.

    tr(g, H^j) = (-1)^j [q^{dim - j}] P(g^{-1}, q).  For S_n every class is
    closed under inversion; for W(r, m) inversion negates every type index.
    """
    d = P.dim if dim is None else dim
    if d is None:
        raise ValueError("variety dimension unknown")
    s = -1 if j % 2 else 1

    def take(poly):
        if not 0 <= j <= d:
            return Fraction(0)
        return s * poly.coefficient(d - j)

    if isinstance(P, WreathClassFunction):
        return WreathClassFunction(
            P.r, P.m, {y: take(P.values[y.inverse()]) for y in P.values}
        )
    return ClassFunction(P.n, {lam: take(v) for lam, v in P.values.items()})


# -- induction -----------------------------------------------------------------


def _rationalize(value):
    if isinstance(value, CPoly):
        out = value.to_qpoly()
    elif isinstance(value, CycNum):
        out = value.rational_value()
    else:
        return value
    if out is None:
        raise ArithmeticError(f"induced value is not rational: {value}")
    return out


def _finish(n, values, polynomial):
    values = {lam: _rationalize(v) for lam, v in values.items()}
    if polynomial:
        return PolyClassFunction(n, {lam: QPoly() + v for lam, v in values.items()})
    return ClassFunction(n, {lam: Fraction(v) if not isinstance(v, QPoly) else v for lam, v in values.items()})


def _induce(f: WreathClassFunction, weight) -> ClassFunction:
    n = f.r * f.m
    polynomial = any(isinstance(v, QPoly) for v in f.values.values())
    acc = {lam: Fraction(0) for lam in partitions(n)}
    for y, v in f.values.items():
        lam = y.fused_cycle_type()
        acc[lam] = acc[lam] + weight(y) * v * Fraction(z_lambda(lam), y.centralizer_order())
    return _finish(n, acc, polynomial)


def induce_wreath(f: WreathClassFunction) -> ClassFunction:
    """Ind from W(r, m) (the centralizer of m disjoint r-cycles) to S_{rm}."""
    return _induce(f, lambda y: 1)


def wreath_det(y: WreathClass, inverse: bool = False) -> CycNum:
    """Determinant of the monomial matrix of y (or its inverse)."""
    k_total = sum(k for _, k in y.cycles)
    flips = sum(i - 1 for i, _ in y.cycles)
    value = root_of_unity(y.r, -k_total if inverse else k_total)
    return -value if flips % 2 else value


def twisted_induce(f: WreathClassFunction, det_inverse: bool = True) -> ClassFunction:
    """sign (x) Ind_{W(r,m)}^{S_{rm}}(det^{-1} (x) f), or with det when det_inverse is False."""
    induced = _induce(f, lambda y: wreath_det(y, inverse=det_inverse))
    return induced.twist_sign()


def ind_cyclic(n: int, k: int) -> ClassFunction:
    """Ind to S_n of the character c -> zeta_n^k of the group generated by an n-cycle."""
    acc = {lam: CycNum(n) for lam in partitions(n)}
    for j in range(n):
        d = n // gcd(j, n)
        lam = Partition([d] * (n // d))
        acc[lam] = acc[lam] + root_of_unity(n, k * j)
    values = {lam: _rationalize(v * Fraction(z_lambda(lam), n)) for lam, v in acc.items()}
    return ClassFunction(n, values)


# -- cohomology of ST(1,n) -------------------------------------------------------


def weight_poly_ST(n: int, r: int) -> PolyClassFunction:
    return PolyClassFunction(n, {lam: formulas.trace_ST(lam, r) for lam in partitions(n)}, dim=n - 1)


def weight_poly_ST_total(n: int) -> PolyClassFunction:
    return PolyClassFunction(n, {lam: formulas.trace_ST_total(lam) for lam in partitions(n)}, dim=n - 1)


def weight_poly_T(r: int, m: int) -> WreathClassFunction:
    return WreathClassFunction(r, m, {y: formulas.trace_T(r, y) for y in wreath_classes(r, m)}, dim=m)


def weight_poly_PT(r: int, m: int) -> WreathClassFunction:
    return WreathClassFunction(r, m, {y: formulas.trace_PT(r, y) for y in wreath_classes(r, m)}, dim=m - 1)


def weight_poly_Tn1m(m: int, r: int) -> PolyClassFunction:
    return PolyClassFunction(m, {lam: formulas.trace_Tn1m(lam, r) for lam in partitions(m)}, dim=m)


def isotypic_character(n: int, r: int, j: int) -> ClassFunction:
    """Character of S_n on H^j(ST(1,n))_chi for any chi of order r."""
    if n % r:
        raise ValueError(f"chi order {r} must divide n = {n}")
    if not 0 <= j <= n - 1:
        raise ValueError(f"degree {j} outside 0..{n - 1}")
    return pd_extract(weight_poly_ST(n, r), j)


def total_character(n: int, j: int) -> ClassFunction:
    return pd_extract(weight_poly_ST_total(n), j)


def betti_numbers(n: int, r: int | None = None) -> list[int]:
    """Dimensions of H^j(ST(1,n)) (or of its isotypic part for chi of order r)."""
    P = weight_poly_ST_total(n) if r is None else weight_poly_ST(n, r)
    ident = Partition([1] * n)
    return [int(pd_extract(P, j)[ident]) for j in range(n)]


# -- verification suites -----------------------------------------------------------


@dataclass
class Report:
    name: str
    failures: list[str] = field(default_factory=list)
    cases: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str):
        self.cases += 1
        if not ok:
            self.failures.append(message)

    def merge(self, other: Report) -> Report:
        self.failures.extend(other.failures)
        self.cases += other.cases
        return self

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.cases} checks, {len(self.failures)} failures)"


def verify_pcor(r: int, m: int) -> Report:
    """Equivariant weight polynomial of T^(n)(1,m) vs the twisted induction from W(r, m/r)."""
    if m % r:
        raise ValueError("r must divide m")
    report = Report(f"pcor r={r} m={m}")
    lhs = weight_poly_Tn1m(m, r)
    rhs = twisted_induce(weight_poly_T(r, m // r), det_inverse=True)
    s = -1 if (m - m // r) % 2 else 1
    for lam in partitions(m):
        report.check(lhs[lam] == s * rhs[lam], f"class {lam}: {lhs[lam]} != {s * rhs[lam]}")
    return report


def induced_cohomology(n: int, r: int, j: int) -> ClassFunction:
    """sign (x) Ind_{W(r,n/r)}^{S_n}(det (x) H^{j-n+n/r}(PT(r, n/r)))."""
    m = n // r
    jj = j - n + m
    if not 0 <= jj <= m - 1:
        return ClassFunction.zero(n)
    inner = pd_extract(weight_poly_PT(r, m), jj)
    return twisted_induce(inner, det_inverse=False)


def verify_induction(n: int, r: int, j: int) -> Report:
    report = Report(f"induction n={n} r={r} j={j}")
    lhs = isotypic_character(n, r, j)
    rhs = induced_cohomology(n, r, j)
    for lam in partitions(n):
        report.check(lhs[lam] == rhs[lam], f"class {lam}: {lhs[lam]} != {rhs[lam]}")
    return report


def verify_faithful(n: int) -> Report:
    """H^j(ST(1,n))_chi for faithful chi: zero off the top degree, sign (x) Ind(psi) at j = n-1."""
    report = Report(f"faithful n={n}")
    expected_top = ind_cyclic(n, 1).twist_sign()
    for j in range(n):
        got = isotypic_character(n, n, j)
        if j == n - 1:
            report.check(got == expected_top, f"j={j}: {got} != {expected_top}")
        else:
            report.check(got.is_zero(), f"j={j}: expected zero, got {got}")
    return report


def faithful_exponents(n: int) -> list[int]:
    return [k for k in range(n) if gcd(k, n) == 1]


def chi_orders(n: int) -> list[int]:
    return divisors(n)
