"""Closed-form periods: the zig-zag formula and the G_{k,l,m} formula, with exact
rational prefactors times a single odd zeta value."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GraphError
from .families import FamilyParams

# B_2, B_4, ..., B_10
_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
)
_B12 = Fraction(-691, 2730)


def _rising(s: float, count: int) -> float:
    out = 1.0
    for i in range(count):
        out *= s + i
    return out


def _em_remainder_bound(s: int, K: int) -> float:
    # magnitude of the first omitted Euler-Maclaurin term, doubled
    return 2 * abs(float(_B12)) / math.factorial(12) * _rising(s, 11) * K ** (-s - 11)


def zeta(s: int, target_rel_error: float = 1e-14) -> float:
    """Riemann zeta at an integer s >= 2 by Euler-Maclaurin summation.

    Sums k^-s for k < K, then adds the integral tail, the half term at K and
    the Bernoulli corrections through B_10. K is the smallest cutoff (>= 2)
    whose remainder bound meets the requested relative error; zeta(s) > 1,
    so an absolute bound is also a relative one.
    """
    if not isinstance(s, int) or s < 2:
        raise GraphError("zeta is evaluated here for integers s >= 2")
    if target_rel_error < 1e-14:
        raise GraphError("target_rel_error below 1e-14 is not supported in double precision")
    K = 2
    while _em_remainder_bound(s, K) > target_rel_error:
        K += 1
    partial = math.fsum(k ** -float(s) for k in range(1, K))
    tail = [K ** (1.0 - s) / (s - 1), 0.5 * K ** -float(s)]
    for j, b in enumerate(_BERNOULLI, start=1):
        # B_2j / (2j)! * s (s+1) ... (s+2j-2) * K^(-s-2j+1)
        tail.append(float(b) / math.factorial(2 * j) * _rising(s, 2 * j - 1) * K ** (-s - 2 * j + 1))
    return partial + math.fsum(tail)


@dataclass(frozen=True)
class ClosedFormValue:
    coefficient: Fraction
    zeta_argument: int

    def as_float(self, target_rel_error: float = 1e-14) -> float:
        return as_float(self, target_rel_error)

    def __str__(self) -> str:
        return f"{self.coefficient} * zeta({self.zeta_argument})"


def as_float(v: ClosedFormValue, target_rel_error: float = 1e-14) -> float:
    if v.coefficient == 0:
        return 0.0
    # float(Fraction) is correctly rounded; the rest of the budget goes to zeta
    budget = max(target_rel_error / 2, 1e-14)
    return float(v.coefficient) * zeta(v.zeta_argument, budget)


def zigzag_period(n: int) -> ClosedFormValue:
    """4 (2n-2)! / (n! (n-1)!) * (1 - (1 - (-1)^n) / 2^(2n-3)) * zeta(2n-3)."""
    if not isinstance(n, int) or n < 3:
        raise GraphError("zig-zag periods need n >= 3")
    coef = Fraction(4 * math.factorial(2 * n - 2), math.factorial(n) * math.factorial(n - 1))
    parity = 1 - (-1) ** n
    coef *= 1 - Fraction(parity, 2 ** (2 * n - 3))
    return ClosedFormValue(coef, 2 * n - 3)


def family_period(p: FamilyParams) -> ClosedFormValue:
    """4/n * binomial(2n-2, n-1) * zeta(2n-3) with n = 2(k+l+m)."""
    n = p.n
    return ClosedFormValue(Fraction(4, n) * math.comb(2 * n - 2, n - 1), 2 * n - 3)


def family_members(n: int) -> list[FamilyParams]:
    if n % 2 or n < 6:
        return []
    s = n // 2
    return [FamilyParams(k, l, s - k - l) for k in range(1, s - 1) for l in range(1, s - k)]


def table_rows(max_n: int) -> list[dict]:
    """Rows n = 3..max_n: zig-zag period and, for even n >= 6, the family period."""
    if max_n < 3:
        raise GraphError("table needs max_n >= 3")
    rows = []
    for n in range(3, max_n + 1):
        z = zigzag_period(n)
        members = family_members(n)
        row = {
            "n": n,
            "zeta_argument": z.zeta_argument,
            "zigzag_coefficient": str(z.coefficient),
            "zigzag_value": as_float(z),
            "family_members": len(members),
            "family_coefficient": "",
            "family_value": "",
        }
        if members:
            f = family_period(members[0])
            row["family_coefficient"] = str(f.coefficient)
            row["family_value"] = as_float(f)
        rows.append(row)
    return rows
