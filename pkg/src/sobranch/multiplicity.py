"""Multiplicity of one principal series in the restriction of another.

The multiplicity m(i,j) of the degree-``j`` series of SO(n,1) inside the
restricted degree-``i`` series of SO(n+1,1) is a piecewise function of
(lam, nu, delta*epsilon), constant except on an integral lattice:

    L  = { (lam, nu, gamma) : lam, nu integers, lam <= nu <= 0,
                              gamma = (-1)**(lam+nu) },
    L* = { (lam, nu, gamma) in L : nu != 0 },

plus finitely many isolated points per case.  Values lie in {0, 1, 2, 4},
and only the band |i - j| <= 2 (with j <= i+1) can be nonzero.

Dispatch is an explicit ordered decision table keyed on (j - i, the
position of i in its range, the parity of n); the first matching row
wins and each row carries the case label surfaced to callers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import (
    ExactScalar,
    ScalarParam,
    Sign,
    as_scalar,
    require,
    scalar_equals_integer,
    scalar_is_integer,
)


@dataclass(frozen=True)
class LatticePoint:
    """A triple (lam, nu, gamma) tested against the exceptional sets."""

    lam: ScalarParam
    nu: ScalarParam
    gamma: Sign

    def __post_init__(self):
        object.__setattr__(self, "lam", as_scalar(self.lam))
        object.__setattr__(self, "nu", as_scalar(self.nu))


def in_exceptional_lattice(point: LatticePoint) -> bool:
    """Membership in L: integral lam <= nu <= 0 with matching parity sign."""
    if not (scalar_is_integer(point.lam) and scalar_is_integer(point.nu)):
        return False
    lam = point.lam.as_integer()
    nu = point.nu.as_integer()
    return lam <= nu <= 0 and point.gamma is Sign.from_parity(lam + nu)


def in_punctured_exceptional_lattice(point: LatticePoint) -> bool:
    """Membership in L*: the nu = 0 boundary of L removed."""
    return in_exceptional_lattice(point) and not scalar_equals_integer(point.nu, 0)


@dataclass(frozen=True)
class MultiplicityResult:
    """A multiplicity value together with the table row that produced it."""

    value: int
    case_label: str


def _in_nonpositive_integers(s: ScalarParam) -> bool:
    # lam in {0, -1, -2, ...}; flip `<= 0` to `< 0` to exclude zero.
    return scalar_is_integer(s) and s.as_integer() <= 0


def _at_point(point: LatticePoint, lam: int, nu: int, gamma: Sign) -> bool:
    return (
        scalar_equals_integer(point.lam, lam)
        and scalar_equals_integer(point.nu, nu)
        and point.gamma is gamma
    )


@dataclass(frozen=True)
class _Row:
    label: str
    applies: object  # (n, i, j) -> bool
    evaluate: object  # (n, i, point) -> int


def _lattice_case(high: int, low: int, full_lattice: bool, extras):
    """Value ``high`` on L (or L*) plus finitely many extra points, else ``low``."""

    def evaluate(n: int, i: int, point: LatticePoint) -> int:
        member = (
            in_exceptional_lattice(point)
            if full_lattice
            else in_punctured_exceptional_lattice(point)
        )
        if not member:
            member = any(_at_point(point, *pt) for pt in extras(n, i))
        return high if member else low

    return evaluate


def _points_case(high: int, extras):
    def evaluate(n: int, i: int, point: LatticePoint) -> int:
        return high if any(_at_point(point, *pt) for pt in extras(n, i)) else 0

    return evaluate


def _nonpositive_integer_family(n: int, i: int, point: LatticePoint) -> int:
    # lam on the nonpositive integers, nu = 1, sign tied to the parity of lam.
    if (
        _in_nonpositive_integers(point.lam)
        and scalar_equals_integer(point.nu, 1)
        and point.gamma is Sign.from_parity(point.lam.as_integer() + 1)
    ):
        return 1
    return 0


_PLUS = Sign.PLUS
_MINUS = Sign.MINUS

# Ordered decision table.  Within each j-i block the i = 0 row precedes the
# boundary rows, so the one genuine overlap (n = 3, i = 0, j = 1, where the
# i = 0 family and the odd-n boundary row coincide) resolves to the i = 0 row.
_ROWS: tuple[_Row, ...] = (
    # j = i
    _Row(
        "Thm1.1(1)(a)",
        lambda n, i, j: j == i and i == 0,
        _lattice_case(2, 1, True, lambda n, i: ()),
    ),
    _Row(
        "Thm1.1(1)(b)",
        lambda n, i, j: j == i and 1 <= i and 2 * i < n - 2,
        _lattice_case(2, 1, False, lambda n, i: ((i, i, _PLUS),)),
    ),
    _Row(
        "Thm1.1(1)(c)",
        lambda n, i, j: j == i and n % 2 == 0 and 2 * i == n - 2,
        _lattice_case(2, 1, False, lambda n, i: ((i, i, _PLUS), (i, i + 1, _MINUS))),
    ),
    _Row(
        "Thm1.1(1)(d)",
        lambda n, i, j: j == i and n % 2 == 1 and 2 * i == n - 1,
        _lattice_case(4, 2, False, lambda n, i: ((i, i, _PLUS),)),
    ),
    # j = i - 1
    _Row(
        "Thm1.1(2)(a)",
        lambda n, i, j: j == i - 1 and 1 <= i and 2 * i < n - 1,
        _lattice_case(2, 1, False, lambda n, i: ((n - i, n - i, _PLUS),)),
    ),
    _Row(
        "Thm1.1(2)(b)",
        lambda n, i, j: j == i - 1 and n % 2 == 1 and 2 * i == n - 1,
        _lattice_case(
            2, 1, False, lambda n, i: ((n - i, n - i, _PLUS), (i, i + 1, _MINUS))
        ),
    ),
    _Row(
        "Thm1.1(2)(c)",
        lambda n, i, j: j == i - 1 and n % 2 == 0 and 2 * i == n,
        _lattice_case(4, 2, False, lambda n, i: ((n - i, n - i, _PLUS),)),
    ),
    # j = i - 2
    _Row(
        "Thm1.1(3)(a)",
        lambda n, i, j: j == i - 2 and 2 <= i and 2 * i < n,
        _points_case(1, lambda n, i: ((n - i, n - i + 1, _MINUS),)),
    ),
    _Row(
        "Thm1.1(3)(b)",
        lambda n, i, j: j == i - 2 and n % 2 == 0 and 2 * i == n,
        _points_case(2, lambda n, i: ((n - i, n - i + 1, _MINUS),)),
    ),
    # j = i + 1
    _Row(
        "Thm1.1(4)(a)",
        lambda n, i, j: j == i + 1 and i == 0,
        _nonpositive_integer_family,
    ),
    _Row(
        "Thm1.1(4)(b)",
        lambda n, i, j: j == i + 1 and 1 <= i and 2 * i < n - 3,
        _points_case(1, lambda n, i: ((i, i + 1, _MINUS),)),
    ),
    _Row(
        "Thm1.1(4)(c)",
        lambda n, i, j: j == i + 1 and n % 2 == 1 and 2 * i == n - 3,
        _points_case(2, lambda n, i: ((i, i + 1, _MINUS),)),
    ),
    # |j - i| > 2 or j = i + 1 exhausted above
    _Row(
        "Thm1.1(5)",
        lambda n, i, j: j not in (i - 2, i - 1, i, i + 1),
        lambda n, i, point: 0,
    ),
)


def _check_ranges(n: int, i: int, j: int) -> None:
    require(n >= 3, f"the multiplicity table requires n >= 3, got {n}")
    require(
        0 <= i <= n // 2,
        f"degree i must lie in [0, {n // 2}] for n = {n}, got {i}",
    )
    require(
        0 <= j <= (n - 1) // 2,
        f"degree j must lie in [0, {(n - 1) // 2}] for n = {n}, got {j}",
    )


def principal_series_multiplicity(
    n: int,
    i: int,
    lam,
    delta: Sign,
    j: int,
    nu,
    epsilon: Sign,
) -> MultiplicityResult:
    """Multiplicity of the degree-``j`` series of SO(n,1) at ``nu`` in the
    restriction of the degree-``i`` series of SO(n+1,1) at ``lam``.

    Depends on the signs only through their product.  Non-integral exact
    parameters take the same branch as GENERIC in every condition.
    """
    _check_ranges(n, i, j)
    point = LatticePoint(as_scalar(lam), as_scalar(nu), delta * epsilon)
    for row in _ROWS:
        if row.applies(n, i, j):
            return MultiplicityResult(row.evaluate(n, i, point), row.label)
    raise AssertionError(f"no table row matched (n={n}, i={i}, j={j})")


def multiplicity_support(n: int, i: int, j: int) -> frozenset[int]:
    """The set of values m(i,j) can take as (lam, nu, signs) vary."""
    _check_ranges(n, i, j)
    if j in (i - 1, i):
        return frozenset({1, 2, 4})
    if j in (i - 2, i + 1):
        return frozenset({0, 1, 2})
    return frozenset({0})


def case_labels() -> tuple[str, ...]:
    """All case labels the dispatcher can emit, in table order."""
    return tuple(row.label for row in _ROWS)
