"""Dimension table and convergence bounds for the tensor-split part of Lie powers.

Fix a prime p and an n-dimensional space with n >= 2, and write each degree
as r = p**m * k with p not dividing k.  The degree-r Lie power (dimension
w(n, r)) contains a canonical direct summand that splits off tensor powers;
its dimension dim_b(r) is pinned down by the exact identity

    sum_{i=0..m} p**(m-i) * dim_b(p**(m-i) * k)**(p**i)  =  w(n**(p**m), k)

together with the base cases dim_b(k) = w(n, k) when p does not divide k and
dim_b(p**m) = 0 for m >= 1.  Solving the identity for the i = 0 term gives a
recurrence whose division by p**m is always exact; a remainder raises
ExactnessError rather than rounding.

The ratio b_r = dim_b(r) / w(n, r) lies in [0, 1], is 1 when p does not
divide r, is 0 at r = p**m, and for k >= 2 approaches 1 along each chain
k, pk, p**2 k, ...  The normalized correction coefficients

    a_i = w(n, p**(m-i) k)**(p**i) / (p**i * w(n, p**m k)),   0 <= i <= m

control the speed: check_a_ratio_bound certifies the ratio inequality

    a_i / a_(i-s) <= p**-s * (2 p**s / (p**(m-i) k)**(p**s - 1))**(p**(i-s))

for 0 < s <= i <= m (valid for n >= 2, k >= 2, p**(m-i+s) k >= 6), and
lower_bound_b packages the resulting explicit bound

    b_r >= 1 - k / (2 n**(r/2)) - 2(m-1) / (p**(m-1) k)**(p-1) - 2 / k**(p**m - 1)

keeping the n**(r/2) term in squared form when r is odd so every comparison
stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import BoundCheck, IdentityCheck, PAdicSplit, checked_sub, exact_div, is_prime, p_adic_split
from .render import DEFAULT_FLOAT_BITS, render_fraction, sqrt_dyadic
from .witt import witt_dim


@dataclass(frozen=True)
class RatioBoundB:
    """Explicit lower bound for b at degree p**m * k, kept in exact pieces.

    bound = 1 - half - tower - tail where

        half  = k / (2 n**(p**m k / 2))   (irrational when p**m k is odd,
                                           so only its square is stored;
                                           half_exact is set when even)
        tower = 2 (m-1) / (p**(m-1) k)**(p-1)
        tail  = 2 / k**(p**m - 1)

    Comparisons against rationals are decided exactly via the squared form.
    """

    p: int
    n: int
    m: int
    k: int
    half_sq: Fraction
    half_exact: Fraction | None
    tower: Fraction
    tail: Fraction

    @property
    def value_exact(self) -> Fraction | None:
        """The bound as a single rational, available when p**m * k is even."""
        if self.half_exact is None:
            return None
        return 1 - self.half_exact - self.tower - self.tail

    def holds_for(self, ratio: Fraction) -> bool:
        """Decide bound <= ratio exactly."""
        shortfall = 1 - self.tower - self.tail - ratio
        if shortfall <= 0:
            return True
        return shortfall * shortfall <= self.half_sq

    def gap_below(self, eps: Fraction) -> bool:
        """Decide 1 - bound < eps exactly."""
        room = eps - self.tower - self.tail
        if room <= 0:
            return False
        return self.half_sq < room * room

    def float_str(self, bits: int = DEFAULT_FLOAT_BITS) -> str:
        """Decimal rendering; the only place the square root is approximated."""
        half = self.half_exact if self.half_exact is not None else sqrt_dyadic(self.half_sq, bits)
        return render_fraction(1 - half - self.tower - self.tail, bits)


@dataclass(frozen=True)
class BRatioReport:
    """Everything the reporting layer needs about one degree."""

    r: int
    split: PAdicSplit
    dim: int
    witt: int
    ratio: Fraction
    bound: RatioBoundB | None
    a_coeffs: tuple[Fraction, ...]


class LiePowerContext:
    """Memoized dim_b table for one (p, n).

    The table fills bottom-up along each chain k, pk, p**2 k, ... on demand.
    Call populate() first if the context is to be shared across threads; after
    that all accesses are reads.
    """

    def __init__(self, p: int, n: int):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if n < 2:
            raise ValueError(f"n must be >= 2, got {n}")
        self.p = p
        self.n = n
        self._dim: dict[int, int] = {}

    def split(self, r: int) -> PAdicSplit:
        return p_adic_split(r, self.p)

    def dim_b(self, r: int) -> int:
        """Dimension of the tensor-split summand in degree r."""
        cached = self._dim.get(r)
        if cached is not None:
            return cached
        p = self.p
        _, m, k = self.split(r)
        for j in range(m + 1):
            rj = p**j * k
            if rj in self._dim:
                continue
            if j == 0:
                value = witt_dim(self.n, k)
            elif k == 1:
                value = 0
            else:
                total = witt_dim(self.n ** (p**j), k)
                for i in range(1, j + 1):
                    total = checked_sub(total, p ** (j - i) * self._dim[p ** (j - i) * k] ** (p**i))
                value = exact_div(total, p**j)
            self._dim[rj] = value
        return self._dim[r]

    def populate(self, max_r: int) -> None:
        """Fill the table for every degree up to max_r."""
        for r in range(1, max_r + 1):
            self.dim_b(r)

    def ratio_b(self, r: int) -> Fraction:
        """Exact dim_b(r) / w(n, r); always in [0, 1]."""
        return Fraction(self.dim_b(r), witt_dim(self.n, r))

    def coeff_a(self, m: int, k: int, i: int) -> Fraction:
        """Normalized correction coefficient a_i for the chain of k at level m."""
        self._check_chain(m, k, k_min=1)
        if not 0 <= i <= m:
            raise ValueError(f"need 0 <= i <= m, got i={i}, m={m}")
        p = self.p
        num = witt_dim(self.n, p ** (m - i) * k) ** (p**i)
        return Fraction(num, p**i * witt_dim(self.n, p**m * k))

    def check_a_ratio_bound(self, m: int, k: int, i: int, s: int) -> BoundCheck:
        """Certify a_i / a_(i-s) <= p**-s * (2 p**s / (p**(m-i) k)**(p**s - 1))**(p**(i-s)).

        Requires 0 < s <= i <= m, k >= 2 and p**(m-i+s) * k >= 6 (the region
        where the inequality is asserted).
        """
        self._check_chain(m, k)
        if not 0 < s <= i <= m:
            raise ValueError(f"need 0 < s <= i <= m, got i={i}, s={s}, m={m}")
        p = self.p
        if p ** (m - i + s) * k < 6:
            raise ValueError("the coefficient bound needs p**(m-i+s) * k >= 6")
        lhs = self.coeff_a(m, k, i) / self.coeff_a(m, k, i - s)
        rhs = Fraction(1, p**s) * Fraction(2 * p**s, (p ** (m - i) * k) ** (p**s - 1)) ** (p ** (i - s))
        return BoundCheck(lhs, rhs, lhs <= rhs)

    def lower_bound_b(self, m: int, k: int) -> RatioBoundB:
        """Explicit lower bound object for b at degree p**m * k (m >= 1, k >= 2)."""
        self._check_chain(m, k)
        if m < 1:
            raise ValueError("the lower bound needs m >= 1")
        p, n = self.p, self.n
        r = p**m * k
        tower = Fraction(2 * (m - 1), (p ** (m - 1) * k) ** (p - 1))
        tail = Fraction(2, k ** (p**m - 1))
        half_sq = Fraction(k * k, 4 * n**r)
        half_exact = Fraction(k, 2 * n ** (r // 2)) if r % 2 == 0 else None
        return RatioBoundB(p=p, n=n, m=m, k=k, half_sq=half_sq, half_exact=half_exact, tower=tower, tail=tail)

    def check_dimension_identity(self, m: int, k: int) -> IdentityCheck:
        """Recompute both sides of the defining identity in plain integers."""
        self._check_chain(m, k, k_min=1)
        p = self.p
        lhs = sum(p ** (m - i) * self.dim_b(p ** (m - i) * k) ** (p**i) for i in range(m + 1))
        rhs = witt_dim(self.n ** (p**m), k)
        return IdentityCheck(lhs, rhs, lhs == rhs)

    def report(self, r: int) -> BRatioReport:
        """Bundle the exact quantities for one degree."""
        split = self.split(r)
        dim = self.dim_b(r)
        w = witt_dim(self.n, r)
        bound = self.lower_bound_b(split.m, split.k) if split.m >= 1 and split.k >= 2 else None
        a_coeffs = tuple(self.coeff_a(split.m, split.k, i) for i in range(split.m + 1))
        return BRatioReport(r=r, split=split, dim=dim, witt=w, ratio=Fraction(dim, w), bound=bound, a_coeffs=a_coeffs)

    def _check_chain(self, m: int, k: int, k_min: int = 2) -> None:
        if m < 0:
            raise ValueError(f"m must be >= 0, got {m}")
        if k < k_min:
            raise ValueError(f"k must be >= {k_min}, got {k}")
        if k % self.p == 0:
            raise ValueError(f"k must not be divisible by p={self.p}, got {k}")
