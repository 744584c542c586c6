"""Exact integer and modular arithmetic primitives.

Everything here is arbitrary-precision and deterministic: residues carry
their modulus, binomials mod p go through the base-p digit product, and
primes come from a plain sieve. No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Residue:
    """An element of Z (modulus 0) or of Z/m (modulus m >= 2).

    The representative is normalized to 0 <= value < modulus when the
    modulus is positive.
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(f"invalid modulus {self.modulus}")
        if self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def _check(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.value + other.value, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.value - other.value, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue(self.value * other.value, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        if self.modulus:
            return f"{self.value} (mod {self.modulus})"
        return str(self.value)


def gcd_all(values: list[int] | tuple[int, ...]) -> int:
    """Greatest common divisor of a nonempty list, by absolute value."""
    if not values:
        raise ValueError("gcd of an empty list")
    return math.gcd(*values)


def p_adic_valuation(p: int, n: int) -> int:
    """Largest e with p**e dividing n. Undefined (error) for n = 0."""
    if p < 2:
        raise ValueError(f"valuation base must be at least 2, got {p}")
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def lucas_binom(n: int, r: int, p: int) -> Residue:
    """Binomial coefficient C(n, r) mod p via the base-p digit product.

    Each base-p digit pair contributes C(n_i, r_i); any digit with
    r_i > n_i kills the product, which also covers r > n.
    """
    if n < 0 or r < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    result = 1
    while n or r:
        ni, ri = n % p, r % p
        if ri > ni:
            return Residue(0, p)
        result = result * math.comb(ni, ri) % p
        n //= p
        r //= p
    return Residue(result, p)


def primes_upto(bound: int) -> list[int]:
    """All primes <= bound, ascending (sieve of Eratosthenes)."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, int(bound ** 0.5) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray((bound - q * q) // q + 1)
    return [q for q in range(2, bound + 1) if sieve[q]]


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (small ranges only)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
