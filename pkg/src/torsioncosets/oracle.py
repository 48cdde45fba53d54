"""Brute-force verification: exhaustive search for torsion points of
bounded order on a polynomial system, and cross-checking of solver
output against it.

The grid scan works in cleared-denominator integer arithmetic: each
polynomial is compiled once per point order into integer coefficient
rows at a common cyclotomic level, a candidate point evaluation is a
handful of integer additions, and the zero test reduces once modulo the
cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd, lcm

from .arith import TorsionPoint, _level


class BudgetExceededError(RuntimeError):
    """Raised when the grid scan would test more points than allowed."""

    def __init__(self, attempted: int, budget: int):
        super().__init__(
            f"brute-force budget exceeded: {attempted} points > {budget}")
        self.attempted = attempted
        self.budget = budget


class OracleReport:
    """Outcome of comparing solver output with the brute-force scan."""

    __slots__ = ("points", "missed_by_solver", "spurious_cosets", "max_order")

    def __init__(self, points, missed_by_solver, spurious_cosets, max_order):
        self.points = points
        self.missed_by_solver = missed_by_solver
        self.spurious_cosets = spurious_cosets
        self.max_order = max_order

    @property
    def passed(self) -> bool:
        return not self.missed_by_solver and not self.spurious_cosets

    def __repr__(self):
        return (f"OracleReport(points={len(self.points)}, "
                f"missed={len(self.missed_by_solver)}, "
                f"spurious={len(self.spurious_cosets)}, "
                f"max_order={self.max_order})")


class _CompiledPoly:
    # integer-only evaluation data for one polynomial at one point order
    __slots__ = ("big", "phi", "rows", "level")

    def __init__(self, f, m: int):
        level = 1
        for c in f.terms.values():
            level = lcm(level, c.level)
        big = lcm(level, m)
        den = 1
        for c in f.terms.values():
            den = lcm(den, c.den)
        rows = []
        for e, c in f.terms.items():
            mult = den // c.den
            step = big // c.level
            coeff_positions = tuple((k * step, x * mult)
                                    for k, x in enumerate(c.num) if x)
            rows.append((e, coeff_positions))
        self.big = big
        self.phi = _level(big).phi
        self.rows = rows
        self.level = _level(big)

    def vanishes(self, k, m: int) -> bool:
        big = self.big
        unit = big // m
        acc = [0] * big
        for e, coeff_positions in self.rows:
            dot = 0
            for x, ki in zip(e, k):
                if x:
                    dot += x * ki
            base = (dot % m) * unit
            for p, c in coeff_positions:
                acc[(base + p) % big] += c
        phi = self.phi
        red = acc[:phi]
        for p in range(phi, big):
            c = acc[p]
            if c:
                pw = self.level.power(p)
                for i, x in enumerate(pw):
                    if x:
                        red[i] += c * x
        return not any(red)


def brute_force_points(system, max_order: int,
                       budget: int = 2_000_000) -> list[TorsionPoint]:
    """All torsion points of order at most max_order satisfying every
    polynomial of the system exactly, sorted lexicographically by
    exponent vectors.  Raises BudgetExceededError when the scan would
    test more than budget points."""
    system = list(system)
    if not system:
        raise ValueError("empty system")
    n = system[0].nvars
    if max_order < 1:
        raise ValueError("max order must be positive")
    total = 0
    found = []
    for m in range(1, max_order + 1):
        compiled = [_CompiledPoly(f, m) for f in system]
        for k in product(range(m), repeat=n):
            g = m
            for x in k:
                g = gcd(g, x)
            if g != 1:
                continue  # the point order is exactly m only when coprime
            total += 1
            if total > budget:
                raise BudgetExceededError(total, budget)
            if all(c.vanishes(k, m) for c in compiled):
                found.append(tuple(Fraction(x, m) for x in k))
    found.sort()
    return [TorsionPoint(f) for f in found]


def cross_check(solve_report, system, max_order: int,
                budget: int = 2_000_000) -> OracleReport:
    """Compare solver output with the exhaustive scan: missed_by_solver
    lists oracle points not covered by any solver coset, and
    spurious_cosets lists solver cosets that fail exact membership in
    the variety.  Both must be empty for a pass."""
    points = brute_force_points(system, max_order, budget)
    cosets = solve_report.cosets
    missed = [p for p in points
              if not any(c.contains_point(p) for c in cosets)]
    spurious = [c for c in cosets if not c.lies_on(system)]
    return OracleReport(points, missed, spurious, max_order)
