"""Irreducible representations of SO(n+1,1) with trivial infinitesimal character.

The representations handled here form a finite family Pi_{l,s} indexed by
an integer degree ``0 <= l <= n+1`` and a sign character ``s``, subject to
the identifications

    Pi_{l,s} ~ Pi_{n+1-l,-s},        and  sign irrelevant at l = (n+1)/2.

Canonical form keeps ``l`` in the lower half of its range and fixes the
sign to ``+`` at the middle degree, so equality of canonical instances is
plain structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .scalars import (
    DomainError,
    GroupDescriptor,
    Sign,
    require,
)


@dataclass(frozen=True)
class IrrepRho:
    """The irreducible representation Pi_{ell,sign} of SO(n+1,1)."""

    n: int
    ell: int
    sign: Sign

    def __post_init__(self):
        require(self.n >= 0, f"group parameter n must be >= 0, got {self.n}")
        require(
            0 <= self.ell <= self.n + 1,
            f"degree must lie in [0, {self.n + 1}] for SO({self.n + 1},1), got {self.ell}",
        )

    @property
    def canonical(self) -> bool:
        if self.ell > (self.n + 1) // 2:
            return False
        if self.n + 1 == 2 * self.ell and self.sign is Sign.MINUS:
            return False
        return True

    @property
    def middle_identified(self) -> bool:
        """True when both signs name the same module (middle degree)."""
        return self.n + 1 == 2 * self.ell

    def group(self) -> GroupDescriptor:
        return GroupDescriptor(self.n + 1, 1)

    def label(self, prefix: str = "Pi") -> str:
        if self.middle_identified:
            return f"{prefix}_{self.ell}"
        return f"{prefix}_{self.ell}{self.sign}"

    def describe(self, prefix: str = "Pi") -> str:
        return f"{self.label(prefix)} of {self.group()}"

    def __str__(self) -> str:
        return self.label()


def canonical_irrep(n: int, ell: int, sign: Sign) -> IrrepRho:
    """Canonical representative of Pi_{ell,sign} for SO(n+1,1).

    Degrees above the middle fold down via (ell, s) -> (n+1-ell, -s); at
    the middle degree (n odd) the two signs are the same module and the
    representative carries ``+``.
    """
    require(n >= 0, f"group parameter n must be >= 0, got {n}")
    require(
        0 <= ell <= n + 1,
        f"degree must lie in [0, {n + 1}] for SO({n + 1},1), got {ell}",
    )
    if ell > (n + 1) // 2:
        ell, sign = n + 1 - ell, -sign
    if n + 1 == 2 * ell:
        sign = Sign.PLUS
    return IrrepRho(n, ell, sign)


def principal_series_subquotient(n: int, i: int, delta: Sign, part: str) -> IrrepRho:
    """Irreducible subquotient of the degree-``i`` principal series at its
    reducibility point, picked by lowest K-type.

    ``part="flat"`` selects the subquotient containing the exterior power
    of degree ``i`` (the submodule side for i below the middle);
    ``part="sharp"`` the one containing degree ``i+1`` with flipped sign.
    """
    require(0 <= i <= n, f"degree must lie in [0, {n}], got {i}")
    if part == "flat":
        return canonical_irrep(n, i, delta)
    if part == "sharp":
        return canonical_irrep(n, i + 1, -delta)
    raise ValueError(f"part must be 'flat' or 'sharp', got {part!r}")


def irreps_with_rho(n: int) -> list[IrrepRho]:
    """All irreducibles of SO(n+1,1) with trivial infinitesimal character.

    There are n+2 of them: two per degree below the middle, and a single
    (sign-identified) one at the middle degree when n is odd.
    """
    require(n >= 0, f"group parameter n must be >= 0, got {n}")
    out = []
    for ell in range((n + 1) // 2 + 1):
        if n + 1 == 2 * ell:
            out.append(IrrepRho(n, ell, Sign.PLUS))
        else:
            out.append(IrrepRho(n, ell, Sign.PLUS))
            out.append(IrrepRho(n, ell, Sign.MINUS))
    return out


class Classification(Enum):
    FINITE_DIMENSIONAL = "finite-dimensional"
    DISCRETE_SERIES = "discrete-series"
    TEMPERED_PRINCIPAL = "tempered-principal"
    NONTEMPERED_UNITARY = "nontempered-unitary"

    def __str__(self) -> str:
        return self.value


def _require_canonical(r: IrrepRho) -> None:
    if not r.canonical:
        raise DomainError(f"{r} is not in canonical form; use canonical_irrep first")


def classify_irrep(r: IrrepRho) -> Classification:
    """Temperedness class of a canonical irreducible.

    Degree zero is the one-dimensional family; the middle degree is the
    discrete series (n odd) or the pair of tempered principal series
    (n even); everything else is unitary but nontempered.
    """
    _require_canonical(r)
    if r.ell == 0:
        return Classification.FINITE_DIMENSIONAL
    if r.n % 2 == 1 and 2 * r.ell == r.n + 1:
        return Classification.DISCRETE_SERIES
    if r.n % 2 == 0 and 2 * r.ell == r.n:
        return Classification.TEMPERED_PRINCIPAL
    return Classification.NONTEMPERED_UNITARY


def central_character_nontrivial(r: IrrepRho) -> bool:
    """Whether the center of SO(n+1,1) acts nontrivially.

    The center is trivial for n odd; for n even it acts nontrivially
    exactly when the sign equals (-1)**(ell+1).
    """
    _require_canonical(r)
    if r.n % 2 == 1:
        return False
    return r.sign is Sign.from_parity(r.ell + 1)


def levi_factors(n: int, i: int) -> tuple[GroupDescriptor, ...]:
    """Levi subgroup attached to the degree-``i`` theta-stable parabolic:
    SO(2)^i x SO(n+1-2i, 1)."""
    require(
        0 <= i <= (n + 1) // 2,
        f"degree must lie in [0, {(n + 1) // 2}] for SO({n + 1},1), got {i}",
    )
    return tuple([GroupDescriptor(2, 0)] * i + [GroupDescriptor(n + 1 - 2 * i, 1)])


def half_sum_nilradical_roots(n: int, i: int) -> tuple[Fraction, ...]:
    """Half the sum of the roots in the nilradical of the degree-``i``
    theta-stable parabolic, in standard Cartan coordinates.

    For SO(2m+1,1) the nonzero entries are (m, m-1, ..., m-i+1); for
    SO(2m,1) they are (m-1/2, m-3/2, ..., m-i+1/2).  Both are padded
    with zeros to the rank of the complexified Lie algebra.
    """
    require(
        0 <= i <= (n + 1) // 2,
        f"degree must lie in [0, {(n + 1) // 2}] for SO({n + 1},1), got {i}",
    )
    if n % 2 == 0:
        m = n // 2
        rank = m + 1
        head = [Fraction(m - k) for k in range(i)]
    else:
        m = (n + 1) // 2
        rank = m
        head = [Fraction(2 * m - 2 * k - 1, 2) for k in range(i)]
    return tuple(head + [Fraction(0)] * (rank - i))


@dataclass(frozen=True)
class ThetaParam:
    """Cohomological-induction label: SO(2)^l weights plus a character
    of the residual rank-one factor SO(k,1).

    The two characters of SO(0,1) coincide, so the sign is normalized to
    ``+`` when k = 0.
    """

    head: tuple[Fraction, ...]
    char_k: int
    char_sign: Sign

    def __post_init__(self):
        require(self.char_k >= 0, "character index must be nonnegative")
        if self.char_k == 0:
            object.__setattr__(self, "char_sign", Sign.PLUS)

    def __str__(self) -> str:
        entries = ", ".join(str(e) for e in self.head)
        return f"({entries} || chi^{self.char_sign}_{{{self.char_k},1}})"


def theta_stable_parameter(r: IrrepRho) -> ThetaParam:
    """Theta-stable parameter of a canonical irreducible.

    The head collects the SO(2)^ell weights, descending in steps of one
    from m (group SO(2m+1,1)) or m-1/2 (group SO(2m,1)); the residual
    character lives on SO(n+1-2*ell, 1).
    """
    _require_canonical(r)
    if r.n % 2 == 0:
        m = r.n // 2
        head = tuple(Fraction(m - k) for k in range(r.ell))
    else:
        m = (r.n + 1) // 2
        head = tuple(Fraction(2 * m - 2 * k - 1, 2) for k in range(r.ell))
    return ThetaParam(head, r.n + 1 - 2 * r.ell, r.sign)
