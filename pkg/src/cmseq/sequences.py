"""Completely multiplicative sequences over the root-of-unity group.

A sequence is specified by its values at primes: an explicit factor table,
an optional set of primes sent to zero, and a default rule for everything
else.  Indexing starts at n = 0 with a(0) = 0, which makes a(mn) = a(m)a(n)
hold without exceptions and lets subsequence constructions take n >= 0
verbatim.  a(1) = 1 as the empty product.

Dirichlet characters live here too: periodic completely multiplicative maps
that vanish exactly on residues sharing a factor with the modulus.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Mapping, Union

from .primes import ValuationMap, is_prime, sieve_primes, valuation
from .values import GroupValue

DEFAULT_RULE_LIMIT = 10**6


@dataclass(frozen=True)
class AllOne:
    """Default rule: every prime outside the listed ones maps to 1."""

    def __str__(self) -> str:
        return "one"


@dataclass(frozen=True)
class ResidueRule:
    """Default rule assigning prime values by residue class.

    Missing residues map to 1.  A spec with this rule has (in general)
    infinitely many factor primes, so evaluation needs full factorization and
    is bounded by the spec's index limit.
    """

    modulus: int
    table: Mapping[int, GroupValue]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"rule modulus must be >= 1, got {self.modulus}")
        frozen = dict(self.table)
        for res, v in frozen.items():
            if not 0 <= res < self.modulus:
                raise ValueError(f"residue {res} outside [0, {self.modulus})")
            if v.is_zero:
                raise ValueError("residue rules assign roots, not zero")
        object.__setattr__(self, "table", frozen)

    def value_at(self, p: int, k: int) -> GroupValue:
        return self.table.get(p % self.modulus, GroupValue.one(k))

    def __str__(self) -> str:
        inner = ", ".join(f"{r}:{v}" for r, v in sorted(self.table.items()))
        return f"residue mod {self.modulus} {{{inner}}}"


@dataclass(frozen=True)
class ExplicitPrimes:
    """Default rule listing finitely many extra prime values; the rest map
    to 1, so the spec stays finite."""

    table: Mapping[int, GroupValue]

    def __post_init__(self):
        frozen = dict(self.table)
        for p, v in frozen.items():
            if not is_prime(p):
                raise ValueError(f"explicit key {p} is not prime")
            if v.is_zero:
                raise ValueError("explicit lists assign roots, not zero")
        object.__setattr__(self, "table", frozen)

    def value_at(self, p: int, k: int) -> GroupValue:
        return self.table.get(p, GroupValue.one(k))

    def __str__(self) -> str:
        inner = ", ".join(f"{p}:{v}" for p, v in sorted(self.table.items()))
        return f"explicit {{{inner}}}"


DefaultRule = Union[AllOne, ResidueRule, ExplicitPrimes]

ALL_ONE = AllOne()


@dataclass(frozen=True)
class CmsSpec:
    """Prime-value assignment defining a completely multiplicative sequence.

    ``factors`` holds non-identity roots, ``zeros`` the primes sent to 0, and
    ``default`` covers every other prime.  Rule-based specs carry an explicit
    supported index range (``limit``, default 10**6) because their evaluation
    requires full factorization; finite specs evaluate at unbounded indices.
    """

    k: int
    factors: Mapping[int, GroupValue] = field(default_factory=dict)
    zeros: frozenset[int] = frozenset()
    default: DefaultRule = ALL_ONE
    limit: int | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"group order must be >= 1, got {self.k}")
        factors = dict(self.factors)
        zeros = frozenset(self.zeros)
        for p, v in factors.items():
            if not is_prime(p):
                raise ValueError(f"factor key {p} is not prime")
            if v.k != self.k:
                raise ValueError(f"factor at {p} has order {v.k}, spec has {self.k}")
            if v.is_zero:
                raise ValueError(f"zero value at {p} belongs in `zeros`, not `factors`")
            if v.is_one:
                raise ValueError(f"identity value at {p} is not a factor")
        for p in zeros:
            if not is_prime(p):
                raise ValueError(f"zero entry {p} is not prime")
        if factors.keys() & zeros:
            raise ValueError(f"primes in both factors and zeros: {sorted(factors.keys() & zeros)}")
        rule_domain: set[int] = set()
        if isinstance(self.default, ExplicitPrimes):
            rule_domain = set(self.default.table)
            for v in self.default.table.values():
                if v.k != self.k:
                    raise ValueError("explicit rule value order differs from spec order")
        elif isinstance(self.default, ResidueRule):
            for v in self.default.table.values():
                if v.k != self.k:
                    raise ValueError("residue rule value order differs from spec order")
            clash = [
                p for p in factors.keys() | zeros
                if p % self.default.modulus in self.default.table
            ]
            if clash:
                raise ValueError(f"rule domain overlaps factors/zeros at primes {sorted(clash)}")
        if rule_domain & (factors.keys() | zeros):
            raise ValueError(
                f"rule domain overlaps factors/zeros: {sorted(rule_domain & (factors.keys() | zeros))}"
            )
        limit = self.limit
        if isinstance(self.default, ResidueRule) and limit is None:
            limit = DEFAULT_RULE_LIMIT
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "limit", limit)

    @property
    def is_finite(self) -> bool:
        """True when only finitely many primes carry a non-identity value."""
        return not isinstance(self.default, ResidueRule)

    @property
    def spec_primes(self) -> tuple[int, ...]:
        """The finitely many explicitly assigned primes, ascending."""
        extra = self.default.table.keys() if isinstance(self.default, ExplicitPrimes) else set()
        return tuple(sorted(self.factors.keys() | self.zeros | set(extra)))

    def value_at_prime(self, p: int) -> GroupValue:
        if p in self.factors:
            return self.factors[p]
        if p in self.zeros:
            return GroupValue.zero(self.k)
        if isinstance(self.default, AllOne):
            return GroupValue.one(self.k)
        return self.default.value_at(p, self.k)

    def digest(self) -> str:
        """Stable content hash of the canonical file form."""
        blob = json.dumps(spec_to_dict(self), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def __str__(self) -> str:
        inner = ", ".join(f"a_{p}={v}" for p, v in sorted(self.factors.items()))
        zs = f" zeros={sorted(self.zeros)}" if self.zeros else ""
        return f"spec(k={self.k}, {{{inner}}}{zs}, default={self.default})"


def cms_eval(spec: CmsSpec, n: int) -> GroupValue:
    """a(n): 0 at n = 0, 1 at n = 1, else the product of prime values along
    the factorization of n.

    Finite specs evaluate at any index by dividing out their finitely many
    primes; rule-based specs factor n completely and honor ``spec.limit``.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    if n == 0:
        return GroupValue.zero(spec.k)
    if spec.is_finite:
        acc = GroupValue.one(spec.k)
        for p in spec.spec_primes:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                acc = acc.mul(spec.value_at_prime(p).pow(e))
        return acc
    if spec.limit is not None and n > spec.limit:
        raise IndexError(
            f"index {n} beyond the supported range {spec.limit} of this rule-based spec"
        )
    acc = GroupValue.one(spec.k)
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            acc = acc.mul(spec.value_at_prime(d).pow(e))
        d += 1 if d == 2 else 2
    if m > 1:
        acc = acc.mul(spec.value_at_prime(m))
    return acc


def cms_eval_at_valuations(spec: CmsSpec, vals: ValuationMap | Mapping[int, int]) -> GroupValue:
    """Value of the finite spec at any index with the given valuations at the
    spec primes.

    This is the unbounded-index evaluator: congruence constructions certify
    the valuations of astronomically large indices without factoring them.
    Primes mentioned outside the spec contribute 1 and are ignored.
    """
    if not spec.is_finite:
        raise ValueError("valuation-based evaluation needs a finite spec")
    get = vals.get if hasattr(vals, "get") else dict(vals).get
    acc = GroupValue.one(spec.k)
    for p in spec.spec_primes:
        e = get(p, 0)
        if e:
            acc = acc.mul(spec.value_at_prime(p).pow(e))
    return acc


def complete_sequence(spec: CmsSpec) -> CmsSpec:
    """The completion: every zero prime now maps to 1, everything else kept.

    The result agrees with the input wherever the input is non-zero and has
    no zero values at all.
    """
    if not spec.zeros:
        return spec
    return CmsSpec(
        k=spec.k,
        factors=spec.factors,
        zeros=frozenset(),
        default=spec.default,
        limit=spec.limit,
    )


def reciprocal_factor_sum(spec: CmsSpec, n_max: int) -> Fraction:
    """Exact partial sum of 1/p over primes p <= n_max whose value is not 1.

    Zero-valued primes count as contributing.  Boundedness of these partial
    sums as n_max grows is the summability diagnostic; the companion
    `prime_factor_count` probes whether the contributing set keeps growing.
    """
    total = Fraction(0)
    for p in sieve_primes(n_max):
        if not spec.value_at_prime(p).is_one:
            total += Fraction(1, p)
    return total


def prime_factor_count(spec: CmsSpec, n_max: int) -> int:
    """Number of primes p <= n_max whose value is not 1 (zeros included)."""
    return sum(1 for p in sieve_primes(n_max) if not spec.value_at_prime(p).is_one)


@dataclass(frozen=True)
class CharacterSpec:
    """Dirichlet character mod m: the table maps residues coprime to m to
    roots; all other residues are 0.

    The table is validated to be completely multiplicative on residues with
    chi(1) = 1; a bad table is a hard error, never a warning.
    """

    modulus: int
    k: int
    table: Mapping[int, GroupValue]

    def __post_init__(self):
        m = self.modulus
        if m < 1:
            raise ValueError(f"modulus must be >= 1, got {m}")
        frozen = dict(self.table)
        coprime = {r for r in range(m) if gcd(r, m) == 1} or {0}
        if frozen.keys() != coprime:
            missing = sorted(coprime - frozen.keys())
            extra = sorted(frozen.keys() - coprime)
            raise ValueError(
                f"character table must cover exactly the residues coprime to {m}"
                f" (missing {missing}, extra {extra})"
            )
        for r, v in frozen.items():
            if v.k != self.k:
                raise ValueError(f"value at residue {r} has order {v.k}, expected {self.k}")
            if v.is_zero:
                raise ValueError(f"coprime residue {r} must carry a root, not zero")
        one = 1 % m
        if not frozen[one].is_one:
            raise ValueError("chi(1) must be 1")
        for a in sorted(frozen):
            for b in sorted(frozen):
                if frozen[a].mul(frozen[b]) != frozen[(a * b) % m]:
                    raise ValueError(
                        f"table is not multiplicative: chi({a})*chi({b}) != chi({a * b % m})"
                    )
        object.__setattr__(self, "table", frozen)

    def __str__(self) -> str:
        return f"character mod {self.modulus} (order {self.k})"


def char_eval(chi: CharacterSpec, n: int) -> GroupValue:
    """chi(n): periodic with period m, zero exactly when gcd(n, m) > 1."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    r = n % chi.modulus
    v = chi.table.get(r)
    return v if v is not None else GroupValue.zero(chi.k)


def trivial_character(k: int) -> CharacterSpec:
    """The modulus-1 character, constantly 1: the constant-sequence case."""
    return CharacterSpec(modulus=1, k=k, table={0: GroupValue.one(k)})


def product_eval(spec: CmsSpec, chi: CharacterSpec, n: int) -> GroupValue:
    """Pointwise product a(n) = b(n) * chi(n); completely multiplicative."""
    if spec.k != chi.k:
        raise ValueError(f"spec order {spec.k} and character order {chi.k} differ")
    return cms_eval(spec, n).mul(char_eval(chi, n))


# ---------------------------------------------------------------------------
# File formats.  Spec files:
#   {"k": int, "factors": [{"p": int, "r": int}], "zeros": [int],
#    "default": "one" | {"residue_rule": {"modulus": int, "map": {residue: r}}}}
# Character files:
#   {"modulus": int, "table": {residue: r}}


def spec_to_dict(spec: CmsSpec) -> dict:
    if isinstance(spec.default, AllOne):
        default = "one"
    elif isinstance(spec.default, ResidueRule):
        default = {
            "residue_rule": {
                "modulus": spec.default.modulus,
                "map": {str(r): v.r for r, v in sorted(spec.default.table.items())},
            }
        }
    else:  # explicit extra primes fold into the factor list
        default = "one"
    factors = dict(spec.factors)
    if isinstance(spec.default, ExplicitPrimes):
        for p, v in spec.default.table.items():
            if not v.is_one:
                factors[p] = v
    return {
        "k": spec.k,
        "factors": [{"p": p, "r": v.r} for p, v in sorted(factors.items())],
        "zeros": sorted(spec.zeros),
        "default": default,
    }


def spec_from_dict(data: dict, limit: int | None = None) -> CmsSpec:
    try:
        k = int(data["k"])
        raw_factors = data["factors"]
        raw_zeros = data["zeros"]
        raw_default = data["default"]
    except KeyError as exc:
        raise ValueError(f"spec file missing field {exc}") from None
    factors = {int(f["p"]): GroupValue.root(int(f["r"]), k) for f in raw_factors}
    zeros = frozenset(int(p) for p in raw_zeros)
    if raw_default == "one":
        default: DefaultRule = ALL_ONE
    elif isinstance(raw_default, dict) and "residue_rule" in raw_default:
        rule = raw_default["residue_rule"]
        default = ResidueRule(
            modulus=int(rule["modulus"]),
            table={int(r): GroupValue.root(int(c), k) for r, c in rule["map"].items()},
        )
    else:
        raise ValueError(f"unknown default rule {raw_default!r}")
    return CmsSpec(k=k, factors=factors, zeros=zeros, default=default, limit=limit)


def load_spec(path: str | Path, limit: int | None = None) -> CmsSpec:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return spec_from_dict(data, limit=limit)


def save_spec(spec: CmsSpec, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(spec_to_dict(spec), fh, indent=2, sort_keys=True)
        fh.write("\n")


def _infer_character_order(modulus: int, raw: Mapping[int, int]) -> int:
    """Smallest group order consistent with the exponent table: the gcd of
    all multiplicative discrepancies, or max(r)+1 when the table is free."""
    g = 0
    for a in raw:
        for b in raw:
            g = gcd(g, raw[a] + raw[b] - raw[(a * b) % modulus])
    if g:
        return g
    return max(raw.values(), default=0) + 1


def character_to_dict(chi: CharacterSpec) -> dict:
    return {
        "modulus": chi.modulus,
        "table": {str(r): v.r for r, v in sorted(chi.table.items())},
    }


def character_from_dict(data: dict, k: int | None = None) -> CharacterSpec:
    try:
        modulus = int(data["modulus"])
        raw = {int(r): int(c) for r, c in data["table"].items()}
    except KeyError as exc:
        raise ValueError(f"character file missing field {exc}") from None
    if k is None:
        k = _infer_character_order(modulus, raw)
    table = {r: GroupValue.root(c, k) for r, c in raw.items()}
    return CharacterSpec(modulus=modulus, k=k, table=table)


def load_character(path: str | Path, k: int | None = None) -> CharacterSpec:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return character_from_dict(data, k=k)


def save_character(chi: CharacterSpec, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(character_to_dict(chi), fh, indent=2, sort_keys=True)
        fh.write("\n")
