"""Brute-force point counts under twisted Frobenius maps.

Every variety here is cut out by multiplicative conditions only (nonzero,
distinct, r-th powers distinct, products), so fixed points can be counted
in two ways:

* ``"field"``: explicit arithmetic in F_{q^L} = F_q[x]/(f), scanning the
  whole field for solutions of each cycle's closing relation;
* ``"log"``: discrete logarithms in the cyclic group F_{q^L}^x of order
  q^L - 1, where Frobenius is multiplication by q and F_q^x is the subgroup
  of multiples of (q^L - 1)/(q - 1).  Cycle relations become linear
  congruences.

Twist convention: a permutation ``w`` (one-line, ``w[a]`` is the image of
``a``) with scalars ``s_a`` fixes a point when ``z_{w(a)} = s_a * z_a**q``.
Scalars are given as fractions ``f`` of a full turn (``exp(2 pi i f)``), whose
denominators must divide q - 1.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .combinat import cycles
from .numkit import CycNum, root_of_unity

FIELD_BUDGET = 10**6
SCAN_BUDGET = 2 * 10**5
TUPLE_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class PrimeField:
    def __init__(self, q: int):
        if not is_prime(q):
            raise ValueError(f"{q} is not prime")
        self.q = q

    @property
    def primitive_root(self) -> int:
        return _primitive_root(self.q)

    def root_of_unity(self, turn: Fraction) -> int:
        """The element g**((q-1)*turn) for the least primitive root g."""
        e = turn * (self.q - 1)
        if e.denominator != 1:
            raise ValueError(f"{turn} is not a ({self.q - 1})-th root of unity")
        return pow(self.primitive_root, int(e) % (self.q - 1), self.q)


@lru_cache(maxsize=None)
def _primitive_root(q: int) -> int:
    if q == 2:
        return 1
    factors = _prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in factors):
            return g
    raise AssertionError("no primitive root")


# -- polynomials over F_q (coefficient lists, lowest degree first) ----------------


def _ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, q):
    a = [c % q for c in a]
    inv = pow(f[-1], -1, q)
    df = len(f) - 1
    for k in range(len(a) - 1, df - 1, -1):
        c = a[k] * inv % q
        if c:
            for j in range(df + 1):
                a[k - df + j] = (a[k - df + j] - c * f[j]) % q
    return _ptrim(a[:df])


def _pmul(a, b, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return out


def _ppowmod(a, e, f, q):
    result, base = [1], _pmod(a, f, q)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, q), f, q)
        base = _pmod(_pmul(base, base, q), f, q)
        e >>= 1
    return result


def _pgcd(a, b, q):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pmod(a, b, q)
    return a


def _is_irreducible(f, q) -> bool:
    L = len(f) - 1
    x = [0, 1]
    xp = x
    for d in range(1, L):
        xp = _ppowmod(xp, q, f, q)
        diff = _ptrim([(c - (x[i] if i < 2 else 0)) % q for i, c in enumerate(xp + [0] * max(0, 2 - len(xp)))])
        if len(_pgcd(f, diff, q)) > 1:
            return False
    xp = _ppowmod(xp, q, f, q) if L > 1 else _ppowmod(x, q, f, q)
    return _pmod(xp, f, q) == _pmod(x, f, q)


class ExtField:
    """F_{q^L} = F_q[x]/(modulus); elements are coefficient tuples of length L."""

    def __init__(self, q: int, L: int, modulus):
        self.q = q
        self.L = L
        self.modulus = tuple(modulus)
        if len(self.modulus) != L + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree L")
        if not _is_irreducible(list(self.modulus), q):
            raise ValueError("modulus is reducible")
        self.size = q**L
        self.zero = (0,) * L
        self.one = self.from_base(1)
        xq = _ppowmod([0, 1], q, list(self.modulus), q)
        rows, cur = [], [1]
        for _ in range(L):
            rows.append(self._pad(cur))
            cur = _pmod(_pmul(cur, xq, q), list(self.modulus), q)
        self._frob_rows = rows

    def _pad(self, a):
        a = list(a)[: self.L]
        return tuple(a + [0] * (self.L - len(a)))

    def from_base(self, c: int):
        return self._pad([c % self.q])

    def mul(self, a, b):
        return self._pad(_pmod(_pmul(list(a), list(b), self.q), list(self.modulus), self.q))

    def scale(self, c: int, a):
        return tuple(c * x % self.q for x in a)

    def pow(self, a, e: int):
        return self._pad(_ppowmod(list(a), e, list(self.modulus), self.q))

    def frobenius(self, a):
        q = self.q
        out = [0] * self.L
        for c, row in zip(a, self._frob_rows):
            if c:
                for j, v in enumerate(row):
                    out[j] = (out[j] + c * v) % q
        return tuple(out)

    def elements(self):
        q, L = self.q, self.L
        for code in range(self.size):
            yield tuple((code // q**j) % q for j in range(L))

    def __repr__(self):
        return f"ExtField(q={self.q}, L={self.L}, modulus={self.modulus})"


def find_irreducible(q: int, L: int) -> ExtField:
    """F_{q^L} built on the lexicographically least monic irreducible of degree L."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q**L > FIELD_BUDGET:
        raise BudgetExceeded(f"{q}^{L} exceeds the field budget {FIELD_BUDGET}")
    return _find_irreducible(q, L)


@lru_cache(maxsize=None)
def _find_irreducible(q: int, L: int) -> ExtField:
    for code in range(q**L):
        # most significant non-leading coefficient varies slowest
        lower = [(code // q ** (L - 1 - j)) % q for j in range(L)]
        f = lower[::-1] + [1]
        if _is_irreducible(f, q):
            return ExtField(q, L, f)
    raise AssertionError("no irreducible polynomial found")


# -- counting engines --------------------------------------------------------------


class _LogModel:
    """F_{q^L}^x as Z/(q^L - 1) under a discrete logarithm."""

    def __init__(self, q: int, L: int):
        self.q = q
        self.N = q**L - 1
        self.one = 0

    def scalar(self, turn: Fraction) -> int:
        e = turn * self.N
        assert e.denominator == 1
        return int(e) % self.N

    def mul(self, a, b):
        return (a + b) % self.N

    def pow(self, a, e):
        return a * e % self.N

    def cycle_solutions(self, scalars) -> list[tuple]:
        q, N = self.q, self.N
        i = len(scalars)
        theta = sum(scalars) % N
        # x = theta * x^(q^i)  <=>  u (q^i - 1) = -theta  (mod N)
        a = (q**i - 1) % N
        g = gcd(a, N)
        rhs = (-theta) % N
        if rhs % g:
            return []
        step = N // g
        u0 = (rhs // g) * pow(a // g, -1, step) % step if step > 1 else 0
        out = []
        for t in range(g):
            u = u0 + t * step
            coords = [u]
            for s in scalars[:-1]:
                coords.append((s + q * coords[-1]) % N)
            out.append(tuple(coords))
        return out


class _FieldModel:
    """Explicit arithmetic in F_{q^L}; cycle relations are solved by scanning."""

    def __init__(self, q: int, L: int):
        if q**L > SCAN_BUDGET:
            raise BudgetExceeded(f"{q}^{L} exceeds the scan budget {SCAN_BUDGET}")
        self.F = find_irreducible(q, L)
        self.base = PrimeField(q)
        self.one = self.F.one
        self._nonzero = [x for x in self.F.elements() if any(x)]

    def scalar(self, turn: Fraction) -> int:
        return self.base.root_of_unity(turn)

    def mul(self, a, b):
        return self.F.mul(a, b)

    def pow(self, a, e):
        return self.F.pow(a, e)

    def cycle_solutions(self, scalars) -> list[tuple]:
        F = self.F
        out = []
        for x in self._nonzero:
            coords = [x]
            for s in scalars[:-1]:
                coords.append(F.scale(s, F.frobenius(coords[-1])))
            if F.scale(scalars[-1], F.frobenius(coords[-1])) == x:
                out.append(tuple(coords))
        return out


def _turn_order(turn: Fraction) -> int:
    return (turn % 1).denominator


def _needed_degree(cycle_scalars) -> int:
    L = 1
    for scalars in cycle_scalars:
        L = lcm(L, len(scalars) * _turn_order(sum(scalars, Fraction(0))))
    return L


def _check_turns(q, turns):
    for t in turns:
        if (q - 1) % Fraction(t).denominator:
            raise ValueError(f"scalar of order {Fraction(t).denominator} is not in F_{q}")


def _make_model(q, L, method):
    if method == "auto":
        method = "field" if q**L <= 2 * 10**4 else "log"
    if method == "field":
        return _FieldModel(q, L)
    if method == "log":
        return _LogModel(q, L)
    raise ValueError(f"unknown method {method!r}")


def _twisted_tuples(q, perm, turns, method, extra=()):
    """Fixed points of the twisted Frobenius on (F-bar^x)^m, cycle by cycle.

    Yields (model, coordinates) where coordinates is a dict position -> element.
    ``extra`` lists additional one-variable relations (as scalar-turn lists).
    """
    _check_turns(q, turns)
    cyc = cycles(perm)
    cycle_turns = [[Fraction(turns[a]) for a in c] for c in cyc]
    L = _needed_degree(cycle_turns + [list(map(Fraction, e)) for e in extra])
    model = _make_model(q, L, method)
    sols = [model.cycle_solutions([model.scalar(t) for t in ct]) for ct in cycle_turns]
    extra_sols = [model.cycle_solutions([model.scalar(Fraction(t)) for t in e]) for e in extra]
    total = 1
    for s in sols:
        total *= max(len(s), 1)
    if total > TUPLE_BUDGET:
        raise BudgetExceeded(f"{total} candidate tuples exceed the budget {TUPLE_BUDGET}")
    return model, cyc, sols, extra_sols


def _enumerate(cyc, sols, key):
    """Depth-first product over cycles, pruning on repeated keys."""
    m = sum(len(c) for c in cyc)
    values = [None] * m

    def rec(idx, used):
        if idx == len(cyc):
            yield values
            return
        for coords in sols[idx]:
            keys = [key(z) for z in coords]
            if len(set(keys)) != len(keys) or used.intersection(keys):
                continue
            for a, z in zip(cyc[idx], coords):
                values[a] = z
            yield from rec(idx + 1, used.union(keys))

    yield from rec(0, frozenset())


def _product(model, values):
    out = model.one
    for z in values:
        out = model.mul(out, z)
    return out


def count_T_twisted(r: int, q: int, perm, scalar_indices, method: str = "auto") -> int:
    """Points of T(r, m) fixed by the Frobenius twisted by y = (perm, zeta_r**k_a)."""
    if (q - 1) % r:
        raise ValueError(f"r = {r} must divide q - 1 = {q - 1}")
    if len(perm) != len(scalar_indices):
        raise ValueError("permutation and scalars differ in length")
    turns = [Fraction(k, r) for k in scalar_indices]
    model, cyc, sols, _ = _twisted_tuples(q, perm, turns, method)
    return sum(1 for _ in _enumerate(cyc, sols, key=lambda z: model.pow(z, r)))


def count_ST_twisted(n: int, q: int, perm, k: int, method: str = "auto") -> int:
    """Points of ST(1,n) with z_{w(a)} = zeta * z_a**q, zeta = g**((q-1)k/n)."""
    if len(perm) != n:
        raise ValueError("permutation must act on n points")
    if k % n and (q - 1) % n:
        raise ValueError(f"n = {n} must divide q - 1 for a twisted count")
    turns = [Fraction(k, n)] * n
    model, cyc, sols, _ = _twisted_tuples(q, perm, turns, method)
    return sum(1 for vals in _enumerate(cyc, sols, key=lambda z: z) if _product(model, vals) == model.one)


def count_Tn1m_twisted(n: int, m: int, q: int, perm, k: int, method: str = "auto") -> int:
    """Points ((z_a), z) of T^(n)(1,m): z_{w(a)} = z_a**q and z = zeta * z**q."""
    if len(perm) != m:
        raise ValueError("permutation must act on m points")
    if k % n and (q - 1) % n:
        raise ValueError(f"n = {n} must divide q - 1 for a twisted count")
    turns = [Fraction(0)] * m
    model, cyc, sols, (zsols,) = _twisted_tuples(q, perm, turns, method, extra=[[Fraction(k, n)]])
    nth_powers = Counter(model.pow(z[0], n) for z in zsols)
    return sum(nth_powers[_product(model, vals)] for vals in _enumerate(cyc, sols, key=lambda z: z))


def fourier_isotypic(n: int, q: int, perm, r: int, method: str = "auto") -> Fraction:
    """(1/n) sum_k chi(zeta_k)^{-1} |ST(1,n)^{(w, zeta_k) F}| for a chi of order r."""
    if n % r:
        raise ValueError("r must divide n")
    if (q - 1) % n:
        raise ValueError(f"n = {n} must divide q - 1")
    chi_index = n // r
    total = CycNum(n)
    for k in range(n):
        total = total + root_of_unity(n, -chi_index * k) * count_ST_twisted(n, q, perm, k, method)
    value = (total / n).rational_value()
    if value is None:
        raise ArithmeticError(f"non-rational isotypic count for n={n}, q={q}, r={r}")
    return value
