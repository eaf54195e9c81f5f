"""Principal series of SO(n+1,1): infinitesimal characters and the
composition series at the reducibility point.

The degree-``i`` principal series with continuous parameter ``lam`` has
infinitesimal character

    (n/2, n/2-1, ..., [n/2-i omitted], ..., n/2-floor(n/2), lam-n/2),

which matches the trivial representation's character exactly when
``lam`` equals ``i`` or ``n-i``.  The Weyl-group equivalence used to
cross-check this is the even-orthogonal one: permutations and evenly
many sign flips, with the parity constraint waived when an entry is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .irreps import IrrepRho, canonical_irrep
from .scalars import (
    DomainError,
    ExactScalar,
    ScalarParam,
    Sign,
    UnsupportedScalarError,
    as_scalar,
    require,
    scalar_equals_integer,
)


def rho_vector(n: int) -> tuple[Fraction, ...]:
    """Infinitesimal character of the trivial representation of SO(n+1,1):
    (n/2, n/2-1, ..., n/2-floor(n/2))."""
    require(n >= 1, f"group parameter n must be >= 1, got {n}")
    half = Fraction(n, 2)
    return tuple(half - k for k in range(n // 2 + 1))


def _check_degree(n: int, i: int) -> None:
    require(n >= 1, f"group parameter n must be >= 1, got {n}")
    require(
        0 <= i <= n // 2,
        f"degree must lie in [0, {n // 2}] for SO({n + 1},1), got {i}",
    )


def infinitesimal_character(n: int, i: int, lam) -> tuple[Fraction, ...]:
    """Infinitesimal character of the degree-``i`` principal series.

    The entry n/2 - i of the trivial character is dropped and lam - n/2
    appended.  Only exact real parameters are supported: a generic or
    non-real ``lam`` has no rational character vector.
    """
    _check_degree(n, i)
    lam = as_scalar(lam)
    if not isinstance(lam, ExactScalar):
        raise UnsupportedScalarError("generic parameter has no character vector")
    if not lam.is_real:
        raise UnsupportedScalarError(f"non-real parameter {lam} is not supported")
    rho = rho_vector(n)
    entries = list(rho[:i]) + list(rho[i + 1 :])
    entries.append(lam.re - Fraction(n, 2))
    return tuple(entries)


def has_rho_infchar(n: int, i: int, lam) -> bool:
    """True iff the degree-``i`` series at ``lam`` has the trivial
    infinitesimal character, i.e. lam = i or lam = n - i."""
    _check_degree(n, i)
    lam = as_scalar(lam)
    return scalar_equals_integer(lam, i) or scalar_equals_integer(lam, n - i)


def weyl_equivalent_type_d(a, b) -> bool:
    """Equivalence of character vectors under the even-orthogonal Weyl
    group: a permutation composed with an even number of sign flips.

    A zero entry makes one flip invisible, so parity is unconstrained in
    that case.  Entries must be real rationals.
    """
    a = tuple(Fraction(x) for x in a)
    b = tuple(Fraction(x) for x in b)
    if len(a) != len(b):
        raise DomainError(f"length mismatch: {len(a)} vs {len(b)}")
    if sorted(map(abs, a)) != sorted(map(abs, b)):
        return False
    if any(x == 0 for x in a):
        return True
    flips = sum(1 for x in b if x < 0) - sum(1 for x in a if x < 0)
    return flips % 2 == 0


def weyl_equivalent_orthogonal(n: int, a, b) -> bool:
    """Weyl equivalence for the algebra so(n+2) ambient to SO(n+1,1).

    For n odd that algebra is odd-orthogonal and its Weyl group flips
    signs freely; for n even it is even-orthogonal and the even-flip
    rule of :func:`weyl_equivalent_type_d` applies (its character
    vectors always carry a zero entry, so the parity constraint is
    vacuous there anyway).
    """
    require(n >= 1, f"group parameter n must be >= 1, got {n}")
    if n % 2 == 1:
        a = tuple(Fraction(x) for x in a)
        b = tuple(Fraction(x) for x in b)
        if len(a) != len(b):
            raise DomainError(f"length mismatch: {len(a)} vs {len(b)}")
        return sorted(map(abs, a)) == sorted(map(abs, b))
    return weyl_equivalent_type_d(a, b)


def normalize_degree(n: int, i: int) -> int:
    """Degree normalized under the exterior-power duality i <-> n-i."""
    require(0 <= i <= n, f"degree must lie in [0, {n}], got {i}")
    return min(i, n - i)


@dataclass(frozen=True)
class PsrDescriptor:
    """A principal series of SO(n+1,1): degree, sign character, and
    continuous parameter.

    ``half_spin`` tags one irreducible summand of the middle exterior
    power and is meaningful only when n = 2*degree.
    """

    n: int
    degree: int
    sign: Sign
    scalar: ScalarParam
    half_spin: Sign | None = None

    def __post_init__(self):
        require(self.n >= 1, f"group parameter n must be >= 1, got {self.n}")
        require(
            0 <= self.degree <= self.n,
            f"degree must lie in [0, {self.n}], got {self.degree}",
        )
        if self.half_spin is not None:
            require(
                self.n == 2 * self.degree,
                "half-spin tag only applies at the middle exterior power",
            )
        object.__setattr__(self, "scalar", as_scalar(self.scalar))

    def __str__(self) -> str:
        spin = f"^({self.half_spin})" if self.half_spin is not None else ""
        return f"I_{self.sign}{spin}({self.degree}, {self.scalar})"


@dataclass(frozen=True)
class CompositionSeries:
    """Irreducible constituents of the degree-``i`` series at lam = i.

    Away from the middle degree the series is a nonsplit extension
    (sub, quotient); at n = 2i it splits into a direct sum and the two
    constituents carry no preferred order.
    """

    n: int
    degree: int
    sign: Sign
    split: bool
    constituents: tuple[IrrepRho, IrrepRho]

    @property
    def sub(self) -> IrrepRho:
        require(not self.split, "a split series has summands, not a sub")
        return self.constituents[0]

    @property
    def quotient(self) -> IrrepRho:
        require(not self.split, "a split series has summands, not a quotient")
        return self.constituents[1]

    @property
    def summands(self) -> tuple[IrrepRho, IrrepRho]:
        require(self.split, "a nonsplit series has sub/quotient, not summands")
        return self.constituents


def composition_series_at_rho(n: int, i: int, delta: Sign) -> CompositionSeries:
    """Composition series of the degree-``i`` principal series at lam = i.

    Nonsplit case (n != 2i): sub Pi_{i,delta}, quotient Pi_{i+1,-delta}.
    Split case (n = 2i): direct sum of those two constituents, which are
    in fact isomorphic after canonicalization.
    """
    _check_degree(n, i)
    first = canonical_irrep(n, i, delta)
    second = canonical_irrep(n, i + 1, -delta)
    return CompositionSeries(n, i, delta, n == 2 * i, (first, second))
