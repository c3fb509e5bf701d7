"""Exact scalar rings: the integers, the rationals and prime fields GF(p).

Scalars are plain Python values owned by a :class:`RingSpec`: ``int`` for
``Z`` and ``GF(p)`` (a residue in ``[0, p)``), and ``int`` or
:class:`fractions.Fraction` for ``Q``.  A rational with denominator one is
always stored as an ``int`` so that the common 0/1 matrices stay on the fast
integer path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

INTEGERS = "Z"
RATIONALS = "Q"
PRIME_FIELD = "GF"

_KINDS = (INTEGERS, RATIONALS, PRIME_FIELD)


class RingError(ValueError):
    """A value or operation is not valid in the requested ring."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, isqrt(p) + 1, 2))


@dataclass(frozen=True)
class RingSpec:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise RingError(f"unknown ring kind {self.kind!r}")
        if self.kind == PRIME_FIELD:
            if self.p is None or not is_prime(self.p):
                raise RingError(f"GF(p) needs a prime modulus, got {self.p!r}")
        elif self.p is not None:
            raise RingError(f"modulus given for non-prime-field ring {self.kind}")

    # -- predicates ---------------------------------------------------------

    def is_field(self) -> bool:
        return self.kind != INTEGERS

    def has_zero_divisors(self) -> bool:
        return False

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME_FIELD else 0

    def __str__(self):
        return f"GF({self.p})" if self.kind == PRIME_FIELD else self.kind

    # -- scalars ------------------------------------------------------------

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def norm(self, x):
        """Bring the result of a Python arithmetic expression to canonical form."""
        if self.kind == PRIME_FIELD:
            return x % self.p
        if self.kind == RATIONALS:
            if type(x) is Fraction and x.denominator == 1:
                return x.numerator
            return x
        return x

    def coerce(self, value):
        """Convert an int, Fraction or ``"p/q"`` string into a canonical scalar."""
        if isinstance(value, bool):
            raise RingError("booleans are not scalars")
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise RingError(f"cannot parse scalar {value!r}") from exc
        if isinstance(value, float):
            raise RingError("floating point scalars are not accepted")
        if not isinstance(value, (int, Fraction)):
            raise RingError(f"cannot interpret {value!r} as a scalar")
        value = Fraction(value)
        if self.kind == INTEGERS:
            if value.denominator != 1:
                raise RingError(f"{value} is not an integer")
            return value.numerator
        if self.kind == RATIONALS:
            return self.norm(value)
        den = value.denominator % self.p
        if den == 0:
            raise RingError(f"{value} has a denominator divisible by {self.p}")
        return value.numerator * pow(den, -1, self.p) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == PRIME_FIELD:
            return pow(x, -1, self.p)
        if self.kind == RATIONALS:
            return self.norm(Fraction(1) / x)
        if x in (1, -1):
            return x
        raise RingError(f"{x} is not a unit in Z")

    def div(self, x, y):
        return self.norm(x * self.inv(y))

    def from_int(self, k: int):
        return k % self.p if self.kind == PRIME_FIELD else k

    def format(self, x) -> str:
        """Serialize a scalar as a string (``"p/q"`` for non-integral rationals)."""
        return str(x)

    def to_json(self) -> dict:
        if self.kind == PRIME_FIELD:
            return {"kind": "GF", "p": self.p}
        return {"kind": self.kind}

    @classmethod
    def from_json(cls, obj) -> "RingSpec":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise RingError("ring must be an object with a 'kind' field")
        return cls(obj["kind"], obj.get("p"))


ZZ = RingSpec(INTEGERS)
QQ = RingSpec(RATIONALS)


def GF(p: int) -> RingSpec:
    return RingSpec(PRIME_FIELD, p)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
