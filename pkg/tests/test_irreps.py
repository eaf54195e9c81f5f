import itertools
from fractions import Fraction

import pytest

from sobranch import (
    MINUS,
    PLUS,
    Classification,
    DomainError,
    IrrepRho,
    canonical_irrep,
    central_character_nontrivial,
    classify_irrep,
    half_sum_nilradical_roots,
    irreps_with_rho,
    levi_factors,
    principal_series_subquotient,
    theta_stable_parameter,
)

F = Fraction


def nilradical_half_sum_oracle(n, i):
    """Root-system oracle: enumerate the positive roots of so(n+2)
    in coordinates, keep those positive on the grading element
    (i, i-1, ..., 1, 0, ..., 0), and halve their sum."""
    ambient = n + 2
    rank = ambient // 2
    xi = [max(i - a, 0) for a in range(rank)]
    roots = []
    for a in range(rank):
        for b in range(a + 1, rank):
            for sb in (1, -1):
                root = [0] * rank
                root[a] = 1
                root[b] = sb
                roots.append(root)
        if ambient % 2 == 1:
            root = [0] * rank
            root[a] = 1
            roots.append(root)
    total = [0] * rank
    for root in roots:
        if sum(r * x for r, x in zip(root, xi)) > 0:
            total = [t + r for t, r in zip(total, root)]
    return tuple(F(t, 2) for t in total)


def test_canonical_irrep_examples():
    assert canonical_irrep(4, 5, PLUS) == IrrepRho(4, 0, MINUS)
    assert canonical_irrep(3, 2, MINUS) == IrrepRho(3, 2, PLUS)
    assert canonical_irrep(4, 2, PLUS) == IrrepRho(4, 2, PLUS)
    with pytest.raises(DomainError):
        canonical_irrep(4, 6, PLUS)


def test_canonical_irrep_idempotent_and_fold_compatible():
    for n in range(0, 13):
        for ell in range(n + 2):
            for sign in (PLUS, MINUS):
                canon = canonical_irrep(n, ell, sign)
                assert canon.canonical
                assert canonical_irrep(canon.n, canon.ell, canon.sign) == canon
                assert canonical_irrep(n, n + 1 - ell, -sign) == canon


def test_subquotient_constructors():
    assert principal_series_subquotient(4, 1, PLUS, "sharp") == IrrepRho(4, 2, MINUS)
    assert principal_series_subquotient(4, 1, PLUS, "flat") == IrrepRho(4, 1, PLUS)
    assert principal_series_subquotient(4, 4, MINUS, "sharp") == IrrepRho(4, 0, MINUS)
    with pytest.raises(ValueError):
        principal_series_subquotient(4, 1, PLUS, "natural")
    with pytest.raises(DomainError):
        principal_series_subquotient(4, 5, PLUS, "flat")


def test_subquotient_coherence():
    # sharp at degree i names the same module as flat at degree i+1 with
    # the opposite sign
    for n in range(1, 13):
        for i in range(n):
            for delta in (PLUS, MINUS):
                assert principal_series_subquotient(
                    n, i, delta, "sharp"
                ) == principal_series_subquotient(n, i + 1, -delta, "flat")


def test_rho_family_enumeration():
    assert len(irreps_with_rho(3)) == 5
    assert len(irreps_with_rho(4)) == 6
    assert len(irreps_with_rho(1)) == 3
    family3 = irreps_with_rho(3)
    assert IrrepRho(3, 2, PLUS) in family3
    assert IrrepRho(3, 2, MINUS) not in family3
    for n in range(0, 13):
        family = irreps_with_rho(n)
        assert len(family) == n + 2
        assert len(set(family)) == len(family)
        assert all(r.canonical for r in family)


def test_classification():
    assert classify_irrep(IrrepRho(3, 2, PLUS)) is Classification.DISCRETE_SERIES
    assert classify_irrep(IrrepRho(4, 2, PLUS)) is Classification.TEMPERED_PRINCIPAL
    assert classify_irrep(IrrepRho(4, 2, MINUS)) is Classification.TEMPERED_PRINCIPAL
    assert classify_irrep(IrrepRho(4, 0, PLUS)) is Classification.FINITE_DIMENSIONAL
    assert classify_irrep(IrrepRho(4, 1, MINUS)) is Classification.NONTEMPERED_UNITARY
    with pytest.raises(DomainError):
        classify_irrep(IrrepRho(4, 4, PLUS))


def test_classification_counts():
    for n in range(1, 13):
        kinds = [classify_irrep(r) for r in irreps_with_rho(n)]
        assert kinds.count(Classification.FINITE_DIMENSIONAL) == 2
        if n % 2 == 1:
            assert kinds.count(Classification.DISCRETE_SERIES) == 1
            assert kinds.count(Classification.TEMPERED_PRINCIPAL) == 0
        else:
            assert kinds.count(Classification.DISCRETE_SERIES) == 0
            assert kinds.count(Classification.TEMPERED_PRINCIPAL) == 2


def test_central_character():
    assert central_character_nontrivial(IrrepRho(4, 1, PLUS))
    assert not central_character_nontrivial(IrrepRho(4, 2, PLUS))
    assert not central_character_nontrivial(IrrepRho(3, 1, MINUS))
    # full hand list for n = 4
    expected = {
        (0, PLUS): False,
        (0, MINUS): True,
        (1, PLUS): True,
        (1, MINUS): False,
        (2, PLUS): False,
        (2, MINUS): True,
    }
    for (ell, sign), value in expected.items():
        assert central_character_nontrivial(IrrepRho(4, ell, sign)) == value


def test_levi_factors():
    assert [g.signature for g in levi_factors(4, 1)] == [(2, 0), (3, 1)]
    assert [g.signature for g in levi_factors(3, 2)] == [(2, 0), (2, 0), (0, 1)]
    assert [g.signature for g in levi_factors(4, 0)] == [(5, 1)]
    with pytest.raises(DomainError):
        levi_factors(4, 3)


def test_half_sum_nilradical_roots_examples():
    assert half_sum_nilradical_roots(4, 1) == (F(2), F(0), F(0))
    assert half_sum_nilradical_roots(3, 2) == (F(3, 2), F(1, 2))
    assert half_sum_nilradical_roots(4, 0) == (F(0), F(0), F(0))


def test_half_sum_nilradical_roots_against_root_system():
    for n in range(1, 13):
        for i in range((n + 1) // 2 + 1):
            assert half_sum_nilradical_roots(n, i) == nilradical_half_sum_oracle(n, i)


def test_theta_stable_parameter_examples():
    p = theta_stable_parameter(IrrepRho(4, 1, PLUS))
    assert p.head == (F(2),)
    assert (p.char_k, p.char_sign) == (3, PLUS)
    assert str(p) == "(2 || chi^+_{3,1})"

    p = theta_stable_parameter(IrrepRho(3, 2, PLUS))
    assert p.head == (F(3, 2), F(1, 2))
    assert (p.char_k, p.char_sign) == (0, PLUS)

    p = theta_stable_parameter(IrrepRho(4, 0, MINUS))
    assert p.head == ()
    assert (p.char_k, p.char_sign) == (5, MINUS)


def test_theta_parameter_bookkeeping():
    for n in range(1, 13):
        for r in irreps_with_rho(n):
            p = theta_stable_parameter(r)
            assert len(p.head) == r.ell
            assert p.char_k + 2 * r.ell == n + 1
            assert all(x - y == 1 for x, y in zip(p.head, p.head[1:]))
            if r.ell > 0:
                expected_top = F(n, 2) if n % 2 == 0 else F(n, 2)
                assert p.head[0] == expected_top


def test_theta_parameter_head_matches_nilradical_half_sum():
    # the head is exactly the nonzero block of the half sum
    for n in range(1, 13):
        for r in irreps_with_rho(n):
            p = theta_stable_parameter(r)
            half = half_sum_nilradical_roots(n, r.ell)
            assert tuple(half[: r.ell]) == p.head
            assert all(x == 0 for x in half[r.ell :])


def test_chi_zero_identification():
    a = theta_stable_parameter(IrrepRho(3, 2, PLUS))
    b = theta_stable_parameter(canonical_irrep(3, 2, MINUS))
    assert a == b
    assert a.char_sign is PLUS


def test_noncanonical_rejected():
    bad = IrrepRho(4, 4, PLUS)
    assert not bad.canonical
    for op in (classify_irrep, central_character_nontrivial, theta_stable_parameter):
        with pytest.raises(DomainError):
            op(bad)


def test_labels():
    assert IrrepRho(4, 1, MINUS).label() == "Pi_1-"
    assert IrrepRho(5, 3, PLUS).label() == "Pi_3"
    assert IrrepRho(3, 2, PLUS).label("pi") == "pi_2"
    assert IrrepRho(4, 2, MINUS).describe() == "Pi_2- of SO(5,1)"
