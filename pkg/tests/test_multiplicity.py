import itertools
from fractions import Fraction

import pytest

from sobranch import (
    GENERIC,
    MINUS,
    PLUS,
    DomainError,
    LatticePoint,
    Sign,
    case_labels,
    exact,
    in_exceptional_lattice,
    in_punctured_exceptional_lattice,
    multiplicity_support,
    principal_series_multiplicity,
)

F = Fraction


def enumerate_lattice(bound):
    """Defining-family oracle: the lattice is exactly
    {(-a, -b, (-1)**(a+b)) : 0 <= b <= a <= bound}."""
    points = set()
    for a in range(bound + 1):
        for b in range(a + 1):
            points.add((-a, -b, Sign.from_parity(a + b)))
    return points


def test_lattice_membership_against_enumeration():
    oracle = enumerate_lattice(9)
    for lam in range(-9, 3):
        for nu in range(-9, 3):
            for gamma in (PLUS, MINUS):
                point = LatticePoint(exact(lam), exact(nu), gamma)
                assert in_exceptional_lattice(point) == ((lam, nu, gamma) in oracle)
                assert in_punctured_exceptional_lattice(point) == (
                    (lam, nu, gamma) in oracle and nu != 0
                )


def test_lattice_examples():
    assert in_exceptional_lattice(LatticePoint(exact(0), exact(0), PLUS))
    assert in_exceptional_lattice(LatticePoint(exact(-3), exact(-1), PLUS))
    assert not in_exceptional_lattice(LatticePoint(exact(-2), exact(-1), PLUS))
    assert not in_exceptional_lattice(LatticePoint(exact(-1), exact(-3), PLUS))
    assert not in_punctured_exceptional_lattice(LatticePoint(exact(0), exact(0), PLUS))
    assert in_punctured_exceptional_lattice(LatticePoint(exact(-3), exact(-1), PLUS))
    assert not in_punctured_exceptional_lattice(LatticePoint(GENERIC, exact(0), PLUS))
    # punctured set is contained in the full one
    for lam in range(-5, 2):
        for nu in range(-5, 2):
            for gamma in (PLUS, MINUS):
                point = LatticePoint(exact(lam), exact(nu), gamma)
                if in_punctured_exceptional_lattice(point):
                    assert in_exceptional_lattice(point)


def test_lattice_rejects_nonintegral():
    for lam in (GENERIC, exact(F(1, 2)), exact(0, 1)):
        assert not in_exceptional_lattice(LatticePoint(lam, exact(0), PLUS))


def mult(n, i, lam, delta, j, nu, epsilon):
    return principal_series_multiplicity(n, i, lam, delta, j, nu, epsilon)


PAPER_EXAMPLES = [
    (3, 0, "0", PLUS, 0, "0", PLUS, 2, "Thm1.1(1)(a)"),
    (3, 1, "1", PLUS, 1, "1", PLUS, 4, "Thm1.1(1)(d)"),
    (4, 1, "1", MINUS, 1, "2", PLUS, 2, "Thm1.1(1)(c)"),
    (6, 3, "3", PLUS, 2, "3", PLUS, 4, "Thm1.1(2)(c)"),
    (6, 2, "4", PLUS, 0, "5", MINUS, 1, "Thm1.1(3)(a)"),
    (5, 0, "-2", PLUS, 1, "1", MINUS, 1, "Thm1.1(4)(a)"),
    (7, 0, "generic", PLUS, 3, "generic", PLUS, 0, "Thm1.1(5)"),
    (5, 2, "generic", PLUS, 2, "generic", MINUS, 2, "Thm1.1(1)(d)"),
]


@pytest.mark.parametrize("n,i,lam,delta,j,nu,epsilon,value,case", PAPER_EXAMPLES)
def test_multiplicity_paper_examples(n, i, lam, delta, j, nu, epsilon, value, case):
    result = mult(n, i, lam, delta, j, nu, epsilon)
    assert result.value == value
    assert result.case_label == case


def test_multiplicity_more_case_rows():
    assert mult(6, 1, "1", PLUS, 1, "1", PLUS).case_label == "Thm1.1(1)(b)"
    assert mult(6, 1, "5", PLUS, 0, "5", PLUS) == mult(6, 1, "5", MINUS, 0, "5", MINUS)
    assert mult(6, 1, "5", PLUS, 0, "5", PLUS).value == 2
    assert mult(5, 2, "2", PLUS, 1, "3", MINUS).value == 2
    assert mult(6, 3, "3", PLUS, 1, "4", MINUS).value == 2
    assert mult(6, 3, "3", PLUS, 1, "4", PLUS).value == 0
    assert mult(7, 1, "1", PLUS, 2, "2", MINUS).value == 1
    assert mult(5, 1, "1", PLUS, 2, "2", MINUS).value == 2


def test_overlap_at_n3_goes_to_the_degree_zero_family():
    # at n=3 the (i=0, j=1) cell satisfies two row guards; the ordered
    # table keeps the degree-zero family
    result = mult(3, 0, "0", PLUS, 1, "1", MINUS)
    assert result.case_label == "Thm1.1(4)(a)"
    assert result.value == 1
    assert mult(3, 0, "-4", PLUS, 1, "1", MINUS).value == 1
    assert mult(3, 0, "-3", PLUS, 1, "1", PLUS).value == 1
    assert mult(3, 0, "-3", PLUS, 1, "1", MINUS).value == 0


def test_nonpositive_integer_family_details():
    # value 1 exactly on lam in {0,-1,-2,...}, nu = 1, matched parity
    for lam in range(-5, 1):
        expected_sign = Sign.from_parity(lam + 1)
        assert mult(6, 0, str(lam), PLUS, 1, "1", expected_sign).value == 1
        assert mult(6, 0, str(lam), PLUS, 1, "1", -expected_sign).value == 0
    assert mult(6, 0, "1", PLUS, 1, "1", PLUS).value == 0
    assert mult(6, 0, "-2", PLUS, 1, "2", MINUS).value == 0
    assert mult(6, 0, "generic", PLUS, 1, "1", MINUS).value == 0


def test_multiplicity_support_values():
    assert multiplicity_support(6, 3, 2) == {1, 2, 4}
    assert multiplicity_support(6, 2, 0) == {0, 1, 2}
    assert multiplicity_support(7, 0, 3) == {0}
    assert multiplicity_support(5, 1, 1) == {1, 2, 4}
    assert multiplicity_support(5, 1, 2) == {0, 1, 2}


def test_domain_errors():
    with pytest.raises(DomainError):
        mult(2, 0, "0", PLUS, 0, "0", PLUS)
    with pytest.raises(DomainError):
        mult(4, 3, "0", PLUS, 0, "0", PLUS)
    with pytest.raises(DomainError):
        mult(4, 0, "0", PLUS, 2, "0", PLUS)
    with pytest.raises(DomainError):
        multiplicity_support(2, 0, 0)


def test_nonintegral_exact_scalars_take_the_generic_branch():
    for lam, nu in [(exact(F(1, 2)), exact(F(1, 2))), (exact(1, 1), exact(2, -1))]:
        for n, i, j in [(5, 2, 2), (4, 1, 1), (6, 3, 2), (7, 0, 1)]:
            viaf = mult(n, i, lam, PLUS, j, nu, PLUS)
            vial = mult(n, i, GENERIC, PLUS, j, GENERIC, PLUS)
            assert (viaf.value, viaf.case_label) == (vial.value, vial.case_label)


def test_sign_product_invariance_exhaustively():
    palette = [exact(v) for v in range(-4, 6)] + [GENERIC]
    for n in (3, 4, 5, 6):
        for i in range(n // 2 + 1):
            for j in range((n - 1) // 2 + 1):
                for lam, nu in itertools.product(palette, repeat=2):
                    base = mult(n, i, lam, PLUS, j, nu, PLUS)
                    assert mult(n, i, lam, MINUS, j, nu, MINUS) == base
                    flipped = mult(n, i, lam, PLUS, j, nu, MINUS)
                    assert mult(n, i, lam, MINUS, j, nu, PLUS) == flipped


def test_dispatch_is_total_and_within_support():
    palette = [exact(v) for v in range(-6, 9)] + [GENERIC, exact(F(1, 2))]
    for n in range(3, 9):
        for i in range(n // 2 + 1):
            for j in range((n - 1) // 2 + 1):
                support = multiplicity_support(n, i, j)
                for lam, nu in itertools.product(palette, repeat=2):
                    for gamma in (PLUS, MINUS):
                        result = mult(n, i, lam, PLUS, j, nu, gamma)
                        assert result.value in support
                        assert result.case_label in case_labels()


def test_multiplicity_one_for_nonintegral_parameters():
    nonintegral = [GENERIC, exact(F(1, 2)), exact(F(-7, 3)), exact(1, 1)]
    for n in range(3, 9):
        for i in range(n // 2 + 1):
            for j in range((n - 1) // 2 + 1):
                if n == 2 * i or n == 2 * j + 1:
                    continue
                for lam, nu in itertools.product(nonintegral, repeat=2):
                    for gamma in (PLUS, MINUS):
                        assert mult(n, i, lam, PLUS, j, nu, gamma).value <= 1
