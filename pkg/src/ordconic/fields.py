"""Exact ground fields for projective geometry.

Two fields are supported: the rationals (arbitrary precision, no rounding
anywhere) and prime fields of odd characteristic.  Homogeneous data is kept
as tuples of plain Python integers in a canonical form, so projective
equality is tuple equality:

* rationals -- coprime integers, first nonzero entry positive;
* F_p       -- entries reduced mod p, first nonzero entry equal to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateInput, UnsupportedField

Coordinate = int | Fraction


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalField:
    """The field of rational numbers (characteristic 0)."""

    characteristic = 0

    @property
    def label(self) -> str:
        return "rational"

    def is_zero(self, value: int) -> bool:
        return value == 0

    def normalize_vector(self, coords) -> tuple[int, ...]:
        """Canonical integer representative of a homogeneous rational vector."""
        fracs = [Fraction(c) for c in coords]
        if all(f == 0 for f in fracs):
            raise DegenerateInput("zero vector has no projective class")
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        ints = [int(f * den) for f in fracs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """The field with p elements, p an odd prime."""

    p: int

    def __post_init__(self) -> None:
        if not _is_odd_prime(self.p):
            raise UnsupportedField(f"characteristic must be an odd prime, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def label(self) -> str:
        return f"fp {self.p}"

    def is_zero(self, value: int) -> bool:
        return value % self.p == 0

    def element(self, value: Coordinate) -> int:
        """Reduce an integer or fraction into {0, ..., p-1}."""
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DegenerateInput(f"denominator not invertible mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

    def normalize_vector(self, coords) -> tuple[int, ...]:
        """Canonical representative mod p: first nonzero entry scaled to 1."""
        vals = [self.element(c) for c in coords]
        lead = next((v for v in vals if v != 0), None)
        if lead is None:
            raise DegenerateInput("zero vector has no projective class")
        inv = pow(lead, -1, self.p)
        return tuple(v * inv % self.p for v in vals)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"GF({self.p})"


Field = RationalField | PrimeField

QQ = RationalField()


def field_from_label(label: str) -> Field:
    """Inverse of Field.label ('rational' or 'fp <p>')."""
    parts = label.split()
    if parts == ["rational"]:
        return QQ
    if len(parts) == 2 and parts[0] == "fp":
        try:
            p = int(parts[1])
        except ValueError:
            raise UnsupportedField(f"bad field label {label!r}") from None
        return PrimeField(p)
    raise UnsupportedField(f"bad field label {label!r}")
