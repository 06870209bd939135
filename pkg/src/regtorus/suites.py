"""Verification suites run by ``regtorus verify``."""

from __future__ import annotations

from math import gcd

from . import formulas, oracle
from .combinat import partitions, permutation_of_type, wreath_classes
from .formulas import (
    coeff_coprime,
    coeff_r2_even,
    p_chi,
    p_chi_via_wreath,
    p_factor_coefficient,
    p_prime,
    r_theta,
    r_theta_mobius,
)
from .numkit import CycNum, divisors, root_of_unity
from .reps import Report, verify_faithful, verify_induction, verify_pcor

DEFAULT_ORDERS = (1, 2, 3, 4, 6)
DEFAULT_Q = (5, 7, 13)


def identities(N: int = 6, orders=DEFAULT_ORDERS) -> Report:
    report = Report(f"identities N={N}")
    for r in range(1, 13):
        for i in range(1, 13):
            for k in range(r):
                report.check(
                    r_theta(r, i, k) == r_theta_mobius(r, i, k),
                    f"R_{{{r},{i},{k}}}: divisor sum != Mobius rewrite",
                )
    for r in orders:
        chi = p_chi(r, N)
        report.check(p_prime(r, N) == chi, f"P'({r}) != P(chi) up to degree {N}")
        report.check(all(d % r == 0 for d in chi.degrees()), f"P(chi) for r={r} has degree not divisible by r")
    for n in range(1, N + 1):
        for r in divisors(n):
            k = n // r
            report.check(
                p_chi_via_wreath(n, k, n) == p_chi(r, n),
                f"specialized P({n}) != prod P_i for r={r}",
            )
    for r in range(1, 7):
        for i in range(1, 7):
            for a in range(0, 9):
                direct = p_factor_coefficient(r, i, a)
                if a % (r // gcd(r, i)):
                    report.check(direct.is_zero(), f"[p_{i}^{a}] P_{i}^({r}) should vanish")
                if gcd(r, i) == 1 and a % r == 0:
                    report.check(coeff_coprime(r, i, a) == direct, f"coprime formula r={r} i={i} a={a}")
                if r == 2 and i % 2 == 0:
                    report.check(coeff_r2_even(i, a) == direct, f"r=2 even formula i={i} a={a}")
    for n in range(1, N + 1):
        for r in divisors(n):
            report.check(
                formulas.trace_ST([1] * n, r) == formulas.betti_closed_form(n, r),
                f"closed Betti form n={n} r={r}",
            )
    return report


def induction(max_n: int = 5) -> Report:
    report = Report(f"induction n<={max_n}")
    for m in range(1, max_n + 1):
        for r in divisors(m):
            report.merge(verify_pcor(r, m))
    for n in range(1, max_n + 1):
        report.merge(verify_faithful(n))
        for r in divisors(n):
            for j in range(n):
                report.merge(verify_induction(n, r, j))
    return report


def predicted_twisted_count(n: int, w, k: int, q: int):
    """sum over characters chi of mu_n of chi(zeta_k) P(w, chi, ST(1,n), q)."""
    total = CycNum(n)
    for c in range(n):
        r = n // gcd(c, n)
        total = total + root_of_unity(n, c * k) * formulas.trace_ST(w, r)(q)
    return total


def oracle_suite(ns=(2, 3), qs=DEFAULT_Q, max_m: int = 3, method: str = "auto") -> Report:
    report = Report(f"oracle n in {list(ns)} q in {list(qs)}")
    for n in ns:
        for q in qs:
            if (q - 1) % n:
                continue
            for w in partitions(n):
                perm = permutation_of_type(w)
                for k in range(n):
                    count = oracle.count_ST_twisted(n, q, perm, k, method)
                    pred = predicted_twisted_count(n, w, k, q)
                    report.check(pred == count, f"ST n={n} q={q} w={w} k={k}: {count} != {pred}")
                for r in divisors(n):
                    value = oracle.fourier_isotypic(n, q, perm, r, method)
                    expected = formulas.trace_ST(w, r)(q)
                    report.check(value == expected, f"isotypic n={n} q={q} w={w} r={r}: {value} != {expected}")
    for q in qs:
        for r in divisors(q - 1):
            for m in range(1, max_m + 1):
                if r**m > 64:
                    continue
                for y, perm, ks in wreath_representatives(r, m):
                    count = oracle.count_T_twisted(r, q, perm, ks, method)
                    expected = formulas.trace_T(r, y)(q)
                    report.check(count == expected, f"T r={r} m={m} q={q} {y}: {count} != {expected}")
    return report


def wreath_representatives(r: int, m: int):
    """One explicit element (perm, scalar exponents) per class of W(r, m)."""
    out = []
    for y in wreath_classes(r, m):
        perm, ks, start = [], [], 0
        for length, k in y.cycles:
            perm.extend(start + (j + 1) % length for j in range(length))
            ks.extend([k] + [0] * (length - 1))
            start += length
        out.append((y, tuple(perm), tuple(ks)))
    return out
