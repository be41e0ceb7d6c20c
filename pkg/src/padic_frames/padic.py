"""Exact arithmetic on points of Q_p with finite p-adic expansion.

Every point handled by the package lies in Z[1/p], so a pair
``(numerator, exponent)`` meaning ``numerator / p**exponent`` is exact.
Floating point is only used at the very end, when a character value
``exp(2*pi*i*t/q)`` is produced from an exactly reduced fraction ``t/q``.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

__all__ = [
    "GroupContext",
    "PAdicRational",
    "PrueferElement",
    "Section",
    "is_prime",
    "valuation",
    "fractional_part",
    "character",
    "root_of_unity",
    "section_decompose",
    "pruefer_add",
]

TWO_PI = 2.0 * math.pi
# largest p**max_level allowed as a coefficient vector length
MAX_INDEX = 2**31 - 1


def is_prime(n: int) -> bool:
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


def _strip(num: int, exp: int, p: int) -> tuple[int, int]:
    """Cancel common powers of ``p`` between numerator and denominator."""
    if num == 0:
        return 0, 0
    while exp > 0 and num % p == 0:
        num //= p
        exp -= 1
    return num, exp


def root_of_unity(t: int, q: int, sign: int = 1) -> complex:
    """Return ``exp(sign * 2*pi*i * t/q)`` with ``t`` reduced mod ``q`` first."""
    t %= q
    if t == 0:
        return 1.0 + 0.0j
    if 2 * t == q:
        return -1.0 + 0.0j
    if 4 * t == q:
        return complex(0.0, float(sign))
    if 4 * t == 3 * q:
        return complex(0.0, -float(sign))
    return cmath.exp(sign * TWO_PI * 1j * (t / q))


@dataclass(frozen=True)
class GroupContext:
    """The group instance G = Q_p, H = Z_p together with a resolution cap.

    ``max_level`` bounds ``m + k`` for every step function, i.e. the DFT
    length ``p**(m + k)``.
    """

    p: int
    max_level: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p must be a prime, got {self.p!r}")
        if self.max_level == 0:
            from .config import default_max_level

            object.__setattr__(self, "max_level", default_max_level(self.p))
        if self.max_level < 1:
            raise ValueError("max_level must be >= 1")
        if self.p**self.max_level > MAX_INDEX:
            raise ValueError(
                f"p**max_level = {self.p}**{self.max_level} exceeds the index range"
            )

    def check_level(self, total: int) -> None:
        if total > self.max_level:
            raise ValueError(
                f"resolution overflow: need m+k = {total}, "
                f"but max_level = {self.max_level} for p = {self.p}"
            )


_RAT_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*\^\s*(\d+))?\s*$")


@dataclass(frozen=True)
class PAdicRational:
    """The point ``numerator / p**exponent`` of Q_p, kept in reduced form."""

    p: int
    numerator: int
    exponent: int = 0

    def __post_init__(self) -> None:
        if self.exponent < 0:
            num = self.numerator * self.p ** (-self.exponent)
            object.__setattr__(self, "numerator", num)
            object.__setattr__(self, "exponent", 0)
        num, exp = _strip(self.numerator, self.exponent, self.p)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    # construction -------------------------------------------------------
    @classmethod
    def from_fraction(cls, p: int, value: Union[int, Fraction]) -> "PAdicRational":
        value = Fraction(value)
        den = value.denominator
        exp = 0
        while den % p == 0:
            den //= p
            exp += 1
        if den != 1:
            raise ValueError(f"{value} is not in Z[1/{p}]")
        return cls(p, value.numerator, exp)

    @classmethod
    def parse(cls, p: int, obj) -> "PAdicRational":
        """Read ``"num/p^e"``, a plain integer, or ``{"num": .., "exp": ..}``."""
        if isinstance(obj, PAdicRational):
            return obj
        if isinstance(obj, bool):
            raise ValueError(f"cannot read a p-adic rational from {obj!r}")
        if isinstance(obj, int):
            return cls(p, obj, 0)
        if isinstance(obj, Mapping):
            try:
                return cls(p, int(obj["num"]), int(obj.get("exp", 0)))
            except KeyError as exc:
                raise ValueError(f"missing key {exc} in {obj!r}") from None
        if isinstance(obj, str):
            match = _RAT_RE.match(obj)
            if not match:
                raise ValueError(f"cannot parse p-adic rational {obj!r}")
            num = int(match.group(1))
            if match.group(2) is None:
                return cls(p, num, 0)
            base, exp = int(match.group(2)), int(match.group(3))
            if base != p:
                raise ValueError(f"{obj!r} uses base {base}, expected p = {p}")
            return cls(p, num, exp)
        raise ValueError(f"cannot read a p-adic rational from {obj!r}")

    # serialisation ------------------------------------------------------
    def to_json(self) -> dict:
        return {"num": self.numerator, "exp": self.exponent}

    def __str__(self) -> str:
        return f"{self.numerator}/{self.p}^{self.exponent}"

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.p**self.exponent)

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "PAdicRational":
        if isinstance(other, int):
            return PAdicRational(self.p, other, 0)
        if not isinstance(other, PAdicRational):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e = max(self.exponent, other.exponent)
        num = (self.numerator * self.p ** (e - self.exponent)
               + other.numerator * self.p ** (e - other.exponent))
        return PAdicRational(self.p, num, e)

    __radd__ = __add__

    def __neg__(self) -> "PAdicRational":
        return PAdicRational(self.p, -self.numerator, self.exponent)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PAdicRational(self.p, self.numerator * other.numerator,
                             self.exponent + other.exponent)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.numerator == 0

    def in_zp(self) -> bool:
        """True when the point lies in Z_p (equivalently, is an integer)."""
        return self.exponent == 0


def valuation(x: PAdicRational) -> int:
    """ord_p(x); the p-adic absolute value is ``p**-valuation(x)``."""
    if x.is_zero():
        raise ValueError("valuation of zero undefined")
    if x.exponent > 0:
        return -x.exponent
    v, n = 0, x.numerator
    while n % x.p == 0:
        n //= x.p
        v += 1
    return v


def fractional_part(x: PAdicRational) -> PAdicRational:
    """The unique representative of ``x + Z_p`` in ``Z[1/p] ∩ [0, 1)``."""
    q = x.p**x.exponent
    return PAdicRational(x.p, x.numerator % q, x.exponent)


def character(x: PAdicRational, gamma: PAdicRational) -> complex:
    """The standard pairing ``(x, gamma) = exp(2*pi*i*{x*gamma}_p)``."""
    prod = x * gamma
    return root_of_unity(prod.numerator, x.p**prod.exponent)


@dataclass(frozen=True)
class PrueferElement:
    """The coset ``residue / p**level + Z_p`` in Q_p / Z_p."""

    p: int
    residue: int
    level: int = 0

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError("level must be >= 0")
        res = self.residue % self.p**self.level
        res, lev = _strip(res, self.level, self.p)
        object.__setattr__(self, "residue", res)
        object.__setattr__(self, "level", lev)

    @classmethod
    def from_point(cls, x: PAdicRational) -> "PrueferElement":
        return cls(x.p, x.numerator, x.exponent)

    @classmethod
    def parse(cls, p: int, obj) -> "PrueferElement":
        if isinstance(obj, PrueferElement):
            return obj
        if isinstance(obj, Mapping) and "res" in obj:
            return cls(p, int(obj["res"]), int(obj.get("level", 0)))
        return cls.from_point(PAdicRational.parse(p, obj))

    def representative(self) -> PAdicRational:
        """The canonical representative in ``[0, 1)``."""
        return PAdicRational(self.p, self.residue, self.level)

    def to_json(self) -> dict:
        return {"res": self.residue, "level": self.level}

    def __str__(self) -> str:
        return f"[{self.residue}/{self.p}^{self.level}]"

    def __add__(self, other: "PrueferElement") -> "PrueferElement":
        return pruefer_add(self, other)

    def __neg__(self) -> "PrueferElement":
        return PrueferElement(self.p, -self.residue, self.level)

    def __sub__(self, other: "PrueferElement") -> "PrueferElement":
        return pruefer_add(self, -other)


def pruefer_add(a: PrueferElement, b: PrueferElement) -> PrueferElement:
    if a.p != b.p:
        raise ValueError(f"prime mismatch: {a.p} vs {b.p}")
    lev = max(a.level, b.level)
    res = a.residue * a.p ** (lev - a.level) + b.residue * b.p ** (lev - b.level)
    return PrueferElement(a.p, res, lev)


@dataclass(frozen=True)
class Section:
    """A set of coset representatives of Q_p / Z_p on the dual side.

    The canonical section is ``Z[1/p] ∩ [0, 1)``.  ``offsets`` moves the
    representative of a coset ``sigma + Z_p`` to ``sigma + delta`` where
    ``delta`` must lie in Z_p; keys are canonical representatives.
    """

    context: GroupContext
    offsets: Mapping[PAdicRational, PAdicRational] = field(default_factory=dict)

    def __post_init__(self) -> None:
        p = self.context.p
        clean: dict[PAdicRational, PAdicRational] = {}
        for key, delta in dict(self.offsets).items():
            key = PAdicRational.parse(p, key)
            delta = PAdicRational.parse(p, delta)
            if fractional_part(key) != key:
                raise ValueError(f"section key {key} is not a canonical representative")
            if key.exponent > self.context.max_level:
                raise ValueError(f"section key {key} is finer than max_level")
            if not delta.in_zp():
                raise ValueError(f"offset {delta} for {key} does not lie in Z_p")
            if not delta.is_zero():
                clean[key] = delta
        object.__setattr__(self, "offsets", clean)

    @classmethod
    def canonical(cls, context: GroupContext) -> "Section":
        return cls(context)

    @property
    def is_canonical(self) -> bool:
        return not self.offsets

    def offset(self, sigma: PAdicRational) -> int:
        """Integer offset attached to the canonical representative ``sigma``."""
        delta = self.offsets.get(sigma)
        return 0 if delta is None else delta.numerator

    def offset_table(self, level: int) -> list[int]:
        """Offsets of the canonical representatives ``s / p**level``, s < p**level."""
        p = self.context.p
        table = [0] * p**level
        for key, delta in self.offsets.items():
            if key.exponent <= level:
                table[key.numerator * p ** (level - key.exponent)] = delta.numerator
        return table

    def to_json(self) -> dict:
        items = sorted(self.offsets.items(), key=lambda kv: kv[0].to_fraction())
        return {
            "p": self.context.p,
            "offsets": [{"sigma": k.to_json(), "delta": v.to_json()} for k, v in items],
        }

    @classmethod
    def from_json(cls, context: GroupContext, obj: Mapping) -> "Section":
        if "p" in obj and int(obj["p"]) != context.p:
            raise ValueError(f"section file is for p = {obj['p']}, expected {context.p}")
        raw = obj.get("offsets", [])
        if isinstance(raw, Mapping):
            pairs = list(raw.items())
        else:
            pairs = [(item["sigma"], item["delta"]) for item in raw]
        p = context.p
        return cls(context, {PAdicRational.parse(p, k): PAdicRational.parse(p, v)
                             for k, v in pairs})


def section_decompose(gamma: PAdicRational,
                      section: Section) -> tuple[PAdicRational, PAdicRational]:
    """Split ``gamma = sigma + eta`` with ``sigma`` in the section, ``eta`` in Z_p."""
    canon = fractional_part(gamma)
    sigma = canon + section.offset(canon)
    return sigma, gamma - sigma
