"""
Euler totient values
"""
from dataclasses import dataclass
from math import prod
from typing import Iterator, Tuple

from .errors import InvalidArgumentError


@dataclass(frozen=True)
class TotientTable:
    """phi(1..N); ``table[n]`` is phi(n)"""

    values: Tuple[int, ...]

    @property
    def limit(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise InvalidArgumentError(f"Totient table covers 1..{len(self.values)}, got {n}")
        return self.values[n - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


def totient(n: int) -> int:
    """Number of integers in [1, n] coprime with n"""
    if n < 1:
        raise InvalidArgumentError(f"totient needs n >= 1, got {n}")
    # imported on first use
    from sympy import factorint

    return int(prod((p - 1) * p ** (e - 1) for p, e in factorint(n).items()))


def totient_sieve(N: int) -> TotientTable:
    """phi(1..N) by an Eratosthenes-style sieve"""
    if N < 1:
        raise InvalidArgumentError(f"totient_sieve needs N >= 1, got {N}")
    phi = list(range(N + 1))
    for p in range(2, N + 1):
        if phi[p] == p:  # untouched so far -> prime
            for k in range(p, N + 1, p):
                phi[k] -= phi[k] // p
    return TotientTable(tuple(phi[1:]))
