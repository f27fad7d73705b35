"""Landau's function and the two parity-restricted variants."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_MAX = 200


@dataclass(frozen=True)
class IntPartition:
    parts: tuple

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def lcm(self) -> int:
        return math.lcm(*self.parts) if self.parts else 1

    def __str__(self):
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class LandauValue:
    n: int
    value: int | None
    witness: IntPartition | None

    @property
    def defined(self) -> bool:
        return self.value is not None


def primes_upto(n: int) -> list:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(n + 1) if sieve[p]]


def _better(a, b):
    """Compare (product, parts-desc) pairs: larger product, then lex larger."""
    return a[0] > b[0] or (a[0] == b[0] and a[1] > b[1])


@lru_cache(maxsize=None)
def _best_table(limit: int, odd_only: bool) -> tuple:
    """best[b] = (max product, parts) over distinct prime powers with sum <= b."""
    best = [(1, ())] * (limit + 1)
    for p in primes_upto(limit):
        if odd_only and p == 2:
            continue
        powers = []
        q = p
        while q <= limit:
            powers.append(q)
            q *= p
        new = list(best)
        for b in range(limit + 1):
            for q in powers:
                if q > b:
                    break
                prod, parts = best[b - q]
                cand = (prod * q, tuple(sorted(parts + (q,), reverse=True)))
                if _better(cand, new[b]):
                    new[b] = cand
        best = new
    return tuple(best)


def _pad(parts: tuple, n: int) -> IntPartition:
    return IntPartition(tuple(parts) + (1,) * (n - sum(parts)))


def _table_for(n):
    return max(n, DEFAULT_MAX)


def landau(n: int) -> LandauValue:
    """lambda(n): the largest lcm of a partition of n."""
    if n < 1:
        raise ValueError("n must be positive")
    prod, parts = _best_table(_table_for(n), False)[n]
    return LandauValue(n, prod, _pad(parts, n))


def landau0(n: int) -> LandauValue:
    """lambda_0(n): largest lcm over partitions of n with no even parts."""
    if n < 1:
        raise ValueError("n must be positive")
    prod, parts = _best_table(_table_for(n), True)[n]
    return LandauValue(n, prod, _pad(parts, n))


def landau2(n: int) -> LandauValue:
    """lambda_2(n): largest lcm over partitions with a positive even number
    of even parts; undefined (value None) for n <= 3."""
    if n < 1:
        raise ValueError("n must be positive")
    table = _best_table(_table_for(n), True)
    best = None
    c = 1
    while 2**c + 2 <= n:
        prod, parts = table[n - 2**c - 2]
        cand = (prod * 2**c, tuple(sorted(parts + (2**c, 2), reverse=True)))
        if best is None or _better(cand, best):
            best = cand
        c += 1
    if best is None:
        return LandauValue(n, None, None)
    return LandauValue(n, best[0], _pad(best[1], n))


def landau_rows(nmax: int) -> list:
    """Rows (n, lambda, lambda0, lambda2) for n = 1..nmax."""
    return [(n, landau(n).value, landau0(n).value, landau2(n).value) for n in range(1, nmax + 1)]
