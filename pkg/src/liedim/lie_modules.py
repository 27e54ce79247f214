"""Exact ratios for the certified projective part of Lie modules.

The degree-r Lie module (the multilinear slice of the free Lie algebra on r
letters, as a module for the symmetric group over a field of characteristic
p) has dimension (r-1)!.  Writing r = p**m * k with p not dividing k, the
part with a certified projective complement has dimension dim_c(r) =
c_r * (r-1)! where the rational ratios c_r satisfy two equivalent exact
recurrences:

factorial form
    sum_{i=0..m} p**(m-i) * (p**m k)! / (p**(m-i) k)**(p**i) * c(p**(m-i) k)**(p**i)
        = (p**m k)! / k

normalized form (the production path; divide through by (p**m k)!/k)
    c(p**m k) = 1 - sum_{i=1..m} a'_i * c(p**(m-i) k)**(p**i),
    a'_i = (p**(m-i) k)**-(p**i - 1)

with base cases c(k) = 1 when p does not divide k (including c(1) = 1) and
c(p**m) = 0 for m >= 1.  check_c_recurrence_identity recomputes the factorial
form from scratch, so both routes stay live.

The coefficients obey the exact ratio identity

    a'_i / a'_(i-s) = p**-s * (p**s / (p**(m-i) k)**(p**s - 1))**(p**(i-s))

(check_a_prime_ratio_identity certifies it as an equality).  For
2 <= i <= m-1 the s = 1 instance is <= 1 because p**(m-i) k >= pk there, so
a'_i <= a'_1 for every i <= m-1, and since each c value lies in [0, 1],

    c(p**m k) >= 1 - sum_{i=1..m} a'_i >= 1 - (m-1) a'_1 - a'_m
              =  1 - (m-1)/(p**(m-1) k)**(p-1) - 1/k**(p**m - 1)

which is lower_bound_c.  At m = 1 the recurrence has the single correction
term a'_1 * c(k)**p = a'_1, so the bound is an equality there.

The weight-space count behind the factorial form is also exposed:
weight_space_dim_formula(q, k) = (qk)!/k, which factors as the number of
block decompositions (qk)!/k! times the bracket-span dimension (k-1)! per
block pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import ExactnessError, IdentityCheck, PAdicSplit, exact_div, factorial, is_prime, p_adic_split


def dim_lie(r: int) -> int:
    """Dimension (r-1)! of the degree-r Lie module."""
    if r < 1:
        raise ValueError("dim_lie() needs r >= 1")
    return factorial(r - 1)


def coeff_a_prime(p: int, m: int, k: int, i: int) -> Fraction:
    """a'_i = (p**(m-i) * k)**-(p**i - 1) for 0 <= i <= m."""
    _check_chain(p, m, k, k_min=1)
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got i={i}, m={m}")
    return Fraction(1, (p ** (m - i) * k) ** (p**i - 1))


def check_a_prime_ratio_identity(p: int, m: int, k: int, i: int, s: int) -> IdentityCheck:
    """Certify a'_i / a'_(i-s) = p**-s * (p**s / (p**(m-i) k)**(p**s - 1))**(p**(i-s)) exactly."""
    _check_chain(p, m, k, k_min=1)
    if not 0 <= s <= i <= m:
        raise ValueError(f"need 0 <= s <= i <= m, got i={i}, s={s}, m={m}")
    lhs = coeff_a_prime(p, m, k, i) / coeff_a_prime(p, m, k, i - s)
    rhs = Fraction(1, p**s) * Fraction(p**s, (p ** (m - i) * k) ** (p**s - 1)) ** (p ** (i - s))
    return IdentityCheck(lhs, rhs, lhs == rhs)


def weight_space_dim_formula(q: int, k: int) -> int:
    """(qk)! / k: the multilinear weight space dimension the oracle measures."""
    if q < 1 or k < 1:
        raise ValueError("weight_space_dim_formula() needs q >= 1 and k >= 1")
    return exact_div(factorial(q * k), k)


def phi_count(q: int, k: int) -> int:
    """(qk)! / k!: number of ordered block decompositions, the coarse factor of the weight space."""
    if q < 1 or k < 1:
        raise ValueError("phi_count() needs q >= 1 and k >= 1")
    return exact_div(factorial(q * k), factorial(k))


def w_phi_dim(k: int) -> int:
    """(k-1)!: bracket-span dimension contributed by each block decomposition."""
    if k < 1:
        raise ValueError("w_phi_dim() needs k >= 1")
    return factorial(k - 1)


def lower_bound_c(p: int, m: int, k: int) -> Fraction:
    """1 - (m-1) a'_1 - a'_m, an exact lower bound for c at degree p**m k; equality at m = 1."""
    _check_chain(p, m, k)
    if m < 1:
        raise ValueError("the lower bound needs m >= 1")
    return 1 - (m - 1) * coeff_a_prime(p, m, k, 1) - coeff_a_prime(p, m, k, m)


@dataclass(frozen=True)
class CRatioReport:
    """Exact per-degree summary for the reporting layer."""

    r: int
    split: PAdicSplit
    dim: int
    lie_dim: int
    ratio: Fraction
    bound: Fraction | None
    a_prime_coeffs: tuple[Fraction, ...]


class LieModuleContext:
    """Memoized c_r table for one prime p (no space dimension is involved)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p
        self._ratio: dict[int, Fraction] = {}

    def split(self, r: int) -> PAdicSplit:
        return p_adic_split(r, self.p)

    def ratio_c(self, r: int) -> Fraction:
        """c_r via the normalized recurrence; always in [0, 1]."""
        cached = self._ratio.get(r)
        if cached is not None:
            return cached
        p = self.p
        _, m, k = self.split(r)
        for j in range(m + 1):
            rj = p**j * k
            if rj in self._ratio:
                continue
            if j == 0:
                value = Fraction(1)
            elif k == 1:
                value = Fraction(0)
            else:
                value = Fraction(1)
                for i in range(1, j + 1):
                    value -= coeff_a_prime(p, j, k, i) * self._ratio[p ** (j - i) * k] ** (p**i)
            self._ratio[rj] = value
        return self._ratio[r]

    def populate(self, max_r: int) -> None:
        """Fill the table for every degree up to max_r."""
        for r in range(1, max_r + 1):
            self.ratio_c(r)

    def dim_c(self, r: int) -> int:
        """c_r * (r-1)!, which must come out an integer."""
        value = self.ratio_c(r) * dim_lie(r)
        if value.denominator != 1:
            raise ExactnessError(f"c_{r} * ({r}-1)! = {value} is not an integer")
        return value.numerator

    def check_c_recurrence_identity(self, m: int, k: int) -> IdentityCheck:
        """Recompute the factorial-form recurrence from scratch against the stored ratios.

        Needs k >= 2 (and p not dividing k); the degenerate chains are covered
        by the base cases directly.
        """
        _check_chain(self.p, m, k)
        p = self.p
        r = p**m * k
        big = factorial(r)
        lhs = Fraction(0)
        for i in range(m + 1):
            coeff = Fraction(p ** (m - i) * big, (p ** (m - i) * k) ** (p**i))
            lhs += coeff * self.ratio_c(p ** (m - i) * k) ** (p**i)
        rhs = Fraction(big, k)
        return IdentityCheck(lhs, rhs, lhs == rhs)

    def report(self, r: int) -> CRatioReport:
        """Bundle the exact quantities for one degree."""
        split = self.split(r)
        ratio = self.ratio_c(r)
        bound = lower_bound_c(self.p, split.m, split.k) if split.m >= 1 and split.k >= 2 else None
        a_coeffs = tuple(coeff_a_prime(self.p, split.m, split.k, i) for i in range(split.m + 1))
        return CRatioReport(
            r=r,
            split=split,
            dim=self.dim_c(r),
            lie_dim=dim_lie(r),
            ratio=ratio,
            bound=bound,
            a_prime_coeffs=a_coeffs,
        )


def _check_chain(p: int, m: int, k: int, k_min: int = 2) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if k < k_min:
        raise ValueError(f"k must be >= {k_min}, got {k}")
    if k % p == 0:
        raise ValueError(f"k must not be divisible by p={p}, got {k}")
