from fractions import Fraction

import pytest

from torsioncosets.arith import CyclotomicNumber, TorsionPoint
from torsioncosets.cosets import TorsionCoset
from torsioncosets.lattices import IntegerLattice
from torsioncosets.oracle import (
    BudgetExceededError,
    brute_force_points,
    cross_check,
)
from torsioncosets.poly import LaurentPolynomial
from torsioncosets.solver import SolveReport, SolveStats, hypersurface_cosets

L = LaurentPolynomial


def fermat_line():
    return L(2, {(1, 0): 1, (0, 1): 1, (0, 0): -1})


def test_brute_force_examples():
    pts = brute_force_points([fermat_line()], 6)
    assert [p.exponents() for p in pts] == [
        (Fraction(1, 6), Fraction(5, 6)),
        (Fraction(5, 6), Fraction(1, 6)),
    ]
    assert brute_force_points([fermat_line()], 5) == []
    pts = brute_force_points([L(1, {(1,): 1, (0,): -1})], 7)
    assert [p.exponents() for p in pts] == [(Fraction(0),)]


def test_brute_force_monotone():
    f = L(2, {(2, 2): 1, (0, 0): -1})
    small = {p.exponents() for p in brute_force_points([f], 6)}
    large = {p.exponents() for p in brute_force_points([f], 10)}
    assert small <= large


def test_brute_force_binomial_cosets_match():
    # for x*y = 1 the oracle points are exactly the torsion points of
    # the predicted coset up to the order bound
    f = L(2, {(1, 1): 1, (0, 0): -1})
    pts = brute_force_points([f], 8)
    coset = TorsionCoset(TorsionPoint([Fraction(0), Fraction(0)]),
                         IntegerLattice(2, [[1, 1]]))
    for p in pts:
        assert coset.contains_point(p)
    count = sum(1 for m in range(1, 9) for a in range(m)
                if __import__("math").gcd(a, m) == 1)
    assert len(pts) == count


def test_budget():
    with pytest.raises(BudgetExceededError) as exc:
        brute_force_points([fermat_line()], 20, budget=10)
    assert exc.value.attempted == 11


def test_cross_check_pass():
    rep = hypersurface_cosets(fermat_line())
    oracle = cross_check(rep, [fermat_line()], 12)
    assert oracle.passed
    assert oracle.missed_by_solver == []
    assert oracle.spurious_cosets == []
    assert len(oracle.points) == 2


def test_cross_check_detects_missing_coset():
    rep = hypersurface_cosets(fermat_line())
    broken = SolveReport(rep.cosets[:1], SolveStats(), [True])
    oracle = cross_check(broken, [fermat_line()], 12)
    assert not oracle.passed
    assert len(oracle.missed_by_solver) == 1


def test_cross_check_detects_spurious_coset():
    rep = hypersurface_cosets(fermat_line())
    bogus = TorsionCoset(TorsionPoint([Fraction(0), Fraction(0)]),
                         IntegerLattice(2, [[1, 0]]))  # {(1, t)}
    doctored = SolveReport(rep.cosets + [bogus], SolveStats(),
                           [True] * 3)
    oracle = cross_check(doctored, [fermat_line()], 12)
    assert not oracle.passed
    assert [c.canonical_key() for c in oracle.spurious_cosets] == \
        [bogus.canonical_key()]


def test_cross_check_gaussian_coefficients():
    z4 = CyclotomicNumber.zeta(4)
    f = L(2, {(1, 0): 1, (0, 1): z4, (0, 0): -1})
    rep = hypersurface_cosets(f)
    oracle = cross_check(rep, [f], 12)
    assert oracle.passed
