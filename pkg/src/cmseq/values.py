"""The value group {0} ∪ {k-th roots of unity}, with exact exponent arithmetic.

Values are stored as integer exponents modulo the group order k, never as
floating-point roots of unity: every case split downstream depends on exact
equality tests.  The absorbing zero is a distinguished element outside the
multiplicative group.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

ZERO_CODE = -1


class GroupOrderMismatch(ValueError):
    """Raised when combining values that live in groups of different order."""


@dataclass(frozen=True)
class GroupValue:
    """Either zero or the root of unity z^r inside the cyclic group of order k.

    ``r is None`` encodes zero.  Zero absorbs under multiplication and has no
    multiplicative order.
    """

    k: int
    r: int | None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"group order must be >= 1, got {self.k}")
        if self.r is not None and not 0 <= self.r < self.k:
            raise ValueError(f"exponent {self.r} outside [0, {self.k})")

    @classmethod
    def zero(cls, k: int) -> GroupValue:
        return cls(k, None)

    @classmethod
    def root(cls, r: int, k: int) -> GroupValue:
        return cls(k, r % k)

    @classmethod
    def one(cls, k: int) -> GroupValue:
        return cls(k, 0)

    @classmethod
    def from_code(cls, code: int, k: int) -> GroupValue:
        """Inverse of :attr:`code`; ``ZERO_CODE`` maps to zero."""
        return cls(k, None) if code == ZERO_CODE else cls(k, code)

    @property
    def is_zero(self) -> bool:
        return self.r is None

    @property
    def is_one(self) -> bool:
        return self.r == 0

    @property
    def code(self) -> int:
        """Compact integer form used by the bulk kernels: -1 for zero, else r."""
        return ZERO_CODE if self.r is None else self.r

    def _check_k(self, other: GroupValue) -> None:
        if self.k != other.k:
            raise GroupOrderMismatch(
                f"cannot combine values of order {self.k} and {other.k}"
            )

    def mul(self, other: GroupValue) -> GroupValue:
        self._check_k(other)
        if self.r is None or other.r is None:
            return GroupValue(self.k, None)
        return GroupValue(self.k, (self.r + other.r) % self.k)

    __mul__ = mul

    def pow(self, e: int) -> GroupValue:
        """Repeated multiplication; x**0 is 1 for every x, zero included."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if e == 0:
            return GroupValue(self.k, 0)
        if self.r is None:
            return self
        return GroupValue(self.k, (self.r * e) % self.k)

    __pow__ = pow

    def order(self) -> int:
        """Least t >= 1 with self**t == 1; undefined for zero."""
        if self.r is None:
            raise ValueError("zero has no multiplicative order")
        return self.k // gcd(self.r, self.k)

    def __str__(self) -> str:
        return "0" if self.r is None else f"z^{self.r}"

    def describe(self) -> str:
        """Rendering that carries the group order, for report headers."""
        return "0" if self.r is None else f"z^{self.r} (mod {self.k})"


@dataclass(frozen=True)
class Subgroup:
    """The cyclic subgroup generated by z^d; never contains zero.

    The generator exponent is canonicalized to gcd(d, k) on construction, so
    membership is simply r ≡ 0 (mod d).  d == k gives the trivial subgroup.
    """

    k: int
    d: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"group order must be >= 1, got {self.k}")
        canonical = gcd(self.d, self.k) or self.k
        object.__setattr__(self, "d", canonical)

    @property
    def order(self) -> int:
        return self.k // self.d

    def contains(self, x: GroupValue) -> bool:
        if x.k != self.k:
            raise GroupOrderMismatch(
                f"value of order {x.k} tested against subgroup of order {self.k}"
            )
        if x.r is None:
            return False
        return x.r % self.d == 0

    def contains_nonidentity(self, x: GroupValue) -> bool:
        """Membership in the subgroup minus the identity, the avoidance set
        used by the word construction."""
        return self.contains(x) and not x.is_one

    def elements(self) -> list[GroupValue]:
        return [GroupValue(self.k, r) for r in range(0, self.k, self.d)]

    def __str__(self) -> str:
        return f"<z^{self.d}> (mod {self.k})"
