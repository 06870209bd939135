"""Partitions and wreath-product class labels."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, gcd


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Doubles as the cycle type of a permutation and as the power-sum
    monomial ``p_{l1} p_{l2} ...``.
    """

    def __new__(cls, parts=()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise ValueError("partition parts must be positive")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiplicities(cls, mults) -> Partition:
        return cls(i for i, a in dict(mults).items() for _ in range(a))

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if not text:
            return cls()
        return cls(int(s) for s in text.split(","))

    @property
    def weight(self) -> int:
        return sum(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self).items()))

    def __add__(self, other):
        return Partition(tuple(self) + tuple(other))

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def __str__(self):
        return ",".join(map(str, self))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def partitions_up_to(n: int) -> list[Partition]:
    return [lam for m in range(n + 1) for lam in partitions(m)]


def z_lambda(lam) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    out = 1
    for i, a in Counter(lam).items():
        out *= factorial(a) * i**a
    return out


def sign(lam) -> int:
    """Sign character of the symmetric group on cycle type lam."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def cycle_type(perm) -> Partition:
    """Cycle type of a permutation given in one-line form on 0..n-1."""
    return Partition(len(c) for c in cycles(perm))


def cycles(perm) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        a = start
        while not seen[a]:
            seen[a] = True
            cyc.append(a)
            a = perm[a]
        out.append(cyc)
    return out


def permutation_of_type(lam) -> tuple[int, ...]:
    """A canonical permutation with cycle type lam: consecutive blocks a -> a+1."""
    perm = []
    start = 0
    for length in lam:
        perm.extend(start + (j + 1) % length for j in range(length))
        start += length
    return tuple(perm)


class WreathClass:
    """Conjugacy class of W(r, m) = mu_r wr S_m.

    ``cycles`` is a sorted tuple of ``(length, k)`` pairs, one per cycle, where
    the cycle has type ``zeta_r ** k``.  For r = 1 this is a cycle type of S_m.
    """

    __slots__ = ("r", "cycles")

    def __init__(self, r: int, cycles):
        if r < 1:
            raise ValueError("r must be positive")
        cyc = []
        for length, k in cycles:
            if length < 1:
                raise ValueError("cycle lengths must be positive")
            cyc.append((int(length), int(k) % r))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "cycles", tuple(sorted(cyc, reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("WreathClass is immutable")

    @classmethod
    def from_multiplicities(cls, r: int, mults) -> WreathClass:
        return cls(r, [key for key, a in dict(mults).items() for _ in range(a)])

    @property
    def weight(self) -> int:
        return sum(length for length, _ in self.cycles)

    def multiplicities(self) -> dict[tuple[int, int], int]:
        return dict(sorted(Counter(self.cycles).items()))

    def centralizer_order(self) -> int:
        out = 1
        for (i, _), a in Counter(self.cycles).items():
            out *= factorial(a) * (self.r * i) ** a
        return out

    def inverse(self) -> WreathClass:
        return WreathClass(self.r, [(i, -k) for i, k in self.cycles])

    def fused_cycle_type(self) -> Partition:
        """Cycle type in S_{rm}: a cycle (i, theta) becomes r/t copies of an (i*t)-cycle."""
        parts = []
        for i, k in self.cycles:
            t = self.r // gcd(k, self.r)
            parts.extend([i * t] * (self.r // t))
        return Partition(parts)

    def __eq__(self, other):
        if not isinstance(other, WreathClass):
            return NotImplemented
        return self.r == other.r and self.cycles == other.cycles

    def __lt__(self, other):
        return (self.r, self.cycles) < (other.r, other.cycles)

    def __hash__(self):
        return hash((self.r, self.cycles))

    def __repr__(self):
        return f"WreathClass({self.r}, {list(self.cycles)})"


def wreath_classes(r: int, m: int) -> list[WreathClass]:
    """All conjugacy classes of W(r, m), in a deterministic order."""
    labels = [(i, k) for i in range(m, 0, -1) for k in range(r)]
    out = []

    def rec(idx, remaining, chosen):
        if remaining == 0:
            out.append(WreathClass(r, chosen))
            return
        if idx == len(labels):
            return
        i, k = labels[idx]
        for a in range(remaining // i, -1, -1):
            rec(idx + 1, remaining - a * i, chosen + [(i, k)] * a)

    rec(0, m, [])
    return out


def wreath_order(r: int, m: int) -> int:
    return r**m * factorial(m)
