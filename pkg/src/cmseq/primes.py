"""Prime sieving, p-adic valuations, and exact congruence solving.

All residues and moduli are unbounded Python integers: the word constructions
stack prime-power congruences whose products overflow 64 bits after a handful
of factors, and exactness is non-negotiable for congruence arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Mapping

from . import _kernels


class CongruenceConflictError(ValueError):
    """Two congruences in a system disagree on a shared modulus factor."""

    def __init__(self, first: "Congruence", second: "Congruence"):
        self.first = first
        self.second = second
        super().__init__(f"incompatible congruences {first} and {second}")


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending.  Empty for limit < 2."""
    if limit < 0:
        raise ValueError(f"limit must be non-negative, got {limit}")
    if limit < 2:
        return []
    return _kernels.sieve_primes(limit)


def is_prime(n: int) -> bool:
    """Deterministic trial division; meant for the small primes that appear
    as sequence factors, not for cryptographic sizes."""
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


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n.  n == 0 is rejected, never a sentinel."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2:
        raise ValueError(f"valuation base must be >= 2, got {p}")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


@dataclass(frozen=True)
class Congruence:
    """x ≡ residue (mod modulus); the residue is normalized into [0, modulus)."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def holds(self, n: int) -> bool:
        return n % self.modulus == self.residue

    def __str__(self) -> str:
        return f"x = {self.residue} (mod {self.modulus})"


def _merge(a: Congruence, b: Congruence) -> Congruence:
    g = gcd(a.modulus, b.modulus)
    if (b.residue - a.residue) % g != 0:
        raise CongruenceConflictError(a, b)
    lcm = a.modulus // g * b.modulus
    m2 = b.modulus // g
    if m2 == 1:
        return Congruence(a.residue, lcm)
    t = ((b.residue - a.residue) // g * pow(a.modulus // g, -1, m2)) % m2
    return Congruence(a.residue + a.modulus * t, lcm)


def crt_solve(system: Iterable[Congruence]) -> Congruence:
    """Least simultaneous solution of the system, with the lcm as modulus.

    Moduli need not be coprime; they must agree on shared gcd factors, and the
    first conflicting pair is named in the error otherwise.  The empty system
    yields x ≡ 0 (mod 1).
    """
    merged = Congruence(0, 1)
    for cong in system:
        merged = _merge(merged, cong)
    return merged


@dataclass(frozen=True)
class ValuationMap:
    """Finite map prime -> exponent, the shape of a factored index.

    Keys are checked to be prime and exponents non-negative.
    """

    entries: Mapping[int, int]

    def __post_init__(self):
        frozen = dict(self.entries)
        for p, e in frozen.items():
            if not is_prime(p):
                raise ValueError(f"valuation key {p} is not prime")
            if e < 0:
                raise ValueError(f"negative exponent {e} at prime {p}")
        object.__setattr__(self, "entries", frozen)

    @classmethod
    def of(cls, n: int, primes: Iterable[int]) -> ValuationMap:
        """Valuations of n at the given primes (zero entries omitted)."""
        return cls({p: e for p in primes if (e := valuation(n, p)) > 0})

    def get(self, p: int, default: int = 0) -> int:
        return self.entries.get(p, default)

    def __getitem__(self, p: int) -> int:
        return self.entries.get(p, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.entries.items()))

    def __iter__(self):
        return iter(sorted(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        inner = ", ".join(f"{p}^{e}" for p, e in self.items())
        return "{" + inner + "}"
