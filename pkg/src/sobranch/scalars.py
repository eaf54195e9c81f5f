"""Exact scalars, sign characters, and group signatures.

Every condition evaluated by this package is an exact integrality or
equality test, so induction parameters are kept as Gaussian rationals
(``fractions.Fraction`` real and imaginary parts).  A distinguished
``GENERIC`` token stands for a parameter that avoids every such
condition; it compares unequal to every exact value and is never an
integer.  Floats are rejected everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class DomainError(ValueError):
    """A parameter is outside the range where a formula is defined."""


class UnsupportedScalarError(ValueError):
    """A scalar of the wrong kind (generic or non-real) was supplied."""


def require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


class Sign(Enum):
    """The order-two group of sign characters, written ``+`` / ``-``."""

    PLUS = 1
    MINUS = -1

    def __mul__(self, other: "Sign") -> "Sign":
        return Sign(self.value * other.value)

    def __neg__(self) -> "Sign":
        return Sign(-self.value)

    def __str__(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    @staticmethod
    def from_parity(k: int) -> "Sign":
        """(-1)**k as a Sign."""
        return Sign.PLUS if k % 2 == 0 else Sign.MINUS

    @staticmethod
    def parse(text: str) -> "Sign":
        if text in ("+", "+1", "plus"):
            return Sign.PLUS
        if text in ("-", "-1", "minus"):
            return Sign.MINUS
        raise ValueError(f"not a sign: {text!r} (expected '+' or '-')")


PLUS = Sign.PLUS
MINUS = Sign.MINUS


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    # bool is an int subclass, floats are inexact: both unwanted here
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class ExactScalar:
    """A Gaussian rational ``re + im*i`` in lowest terms."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def as_integer(self) -> int:
        if not self.is_integer:
            raise UnsupportedScalarError(f"{self} is not an integer")
        return int(self.re)

    def __str__(self) -> str:
        return format_scalar(self)


class GenericScalar:
    """Symbolic scalar avoiding every integrality and equality condition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "GENERIC"

    def __str__(self) -> str:
        return "generic"


GENERIC = GenericScalar()

ScalarParam = ExactScalar | GenericScalar


def exact(re, im=0) -> ExactScalar:
    """Build an exact scalar from ints, Fractions, or rational strings."""
    return ExactScalar(_as_fraction(re), _as_fraction(im))


def as_scalar(value) -> ScalarParam:
    """Coerce ints, Fractions, and strings to a scalar parameter."""
    if isinstance(value, (ExactScalar, GenericScalar)):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    return exact(value)


def scalar_is_integer(s: ScalarParam) -> bool:
    """True exactly for real exact scalars with integral value."""
    return isinstance(s, ExactScalar) and s.is_integer


def scalar_equals_integer(s: ScalarParam, k: int) -> bool:
    """True iff ``s`` is the exact integer ``k``; GENERIC never matches."""
    return isinstance(s, ExactScalar) and s.im == 0 and s.re == k


_SCALAR_RE = re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)"
    r"(?:(?P<imsign>[+-])(?P<im>\d+(?:/\d+)?)\*i)?$"
)


def parse_scalar(text: str) -> ScalarParam:
    """Parse ``a``, ``a/b``, ``a/b+c/d*i``, ``a/b-c/d*i``, or ``generic``."""
    text = text.strip()
    if text == "generic":
        return GENERIC
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"not a scalar: {text!r}")
    re_part = Fraction(m.group("re"))
    if m.group("im") is None:
        return ExactScalar(re_part)
    im_part = Fraction(m.group("im"))
    if m.group("imsign") == "-":
        im_part = -im_part
    return ExactScalar(re_part, im_part)


def format_scalar(s: ScalarParam) -> str:
    """Inverse of :func:`parse_scalar`; round-trips bit-exactly."""
    if isinstance(s, GenericScalar):
        return "generic"
    if s.im == 0:
        return str(s.re)
    connector = "+" if s.im > 0 else "-"
    return f"{s.re}{connector}{abs(s.im)}*i"


@dataclass(frozen=True)
class GroupDescriptor:
    """An indefinite special orthogonal group SO(p, q)."""

    p: int
    q: int
    family: str = "SO"

    def __post_init__(self):
        require(self.p >= 0 and self.q >= 0, "signature entries must be nonnegative")
        require(self.p + self.q >= 1, "SO(0,0) is not a group here")

    @property
    def signature(self) -> tuple[int, int]:
        return (self.p, self.q)

    def __str__(self) -> str:
        return f"{self.family}({self.p},{self.q})"


def so(p: int, q: int) -> GroupDescriptor:
    return GroupDescriptor(p, q)
