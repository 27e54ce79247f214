"""Self-check suites: every exact identity, bound and oracle agreement on fixed grids.

Each suite walks a deterministic grid and records one check per point, so two
runs produce identical reports.  A failure carries the offending
(p, n, m, k) tuple.  The suites are intentionally redundant with the unit
tests: they are the runtime-facing way to re-certify an installation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle
from .arith import ExactnessError, divisors, mobius, p_adic_split
from .lie_modules import (
    LieModuleContext,
    check_a_prime_ratio_identity,
    dim_lie,
    lower_bound_c,
    phi_count,
    w_phi_dim,
    weight_space_dim_formula,
)
from .lie_powers import LiePowerContext
from .witt import check_witt_bounds, witt_dim

SUITE_NAMES = ("all", "witt", "b", "c", "oracle")

GAP_EPS = Fraction(1, 100)
GAP_MIN_R = 2000

# identity / range grids
SMALL_PRIMES = (2, 3, 5)
SMALL_DIMS = (2, 3, 5)
SMALL_MAX_R = 200

# convergence grids
CONV_PRIMES = (2, 3)
CONV_DIMS = (2, 3)
CONV_KS = (2, 3, 5)
CONV_MAX_R = 5000

# oracle grids
WEIGHT_SPACE_FAST = ((1, 2), (1, 3), (1, 4), (2, 2), (3, 2))
WEIGHT_SPACE_SLOW = ((2, 3),)
ORACLE_POWER_MAX_N = 3
ORACLE_POWER_MAX_R = 6
ORACLE_MODULE_MAX_R = 6
ORACLE_MODULE_SLOW_R = 7
ORACLE_FIELDS = (None, 2, 3)

SLOW_BUDGET = 100 * oracle.DEFAULT_BUDGET


@dataclass
class CheckFamily:
    """One named family of checks with its failure details."""

    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, where: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(where)


def conv_chain(p: int, k: int) -> list[tuple[int, int]]:
    """(m, r) pairs of the convergence chain for k under p, up to CONV_MAX_R."""
    out = []
    m, r = 0, k
    while r <= CONV_MAX_R:
        out.append((m, r))
        m += 1
        r *= p
    return out


def arith_suite() -> list[CheckFamily]:
    mob = CheckFamily("arith/mobius-divisor-sum")
    cache: dict[int, int] = {}
    for r in range(1, 10_001):
        total = 0
        for d in divisors(r):
            mu = cache.get(d)
            if mu is None:
                mu = mobius(d)
                cache[d] = mu
            total += mu
        mob.checks += 1
        if total != (1 if r == 1 else 0):
            mob.failures.append(f"(r={r})")

    padic = CheckFamily("arith/p-adic-round-trip")
    for p in (2, 3, 5, 7):
        for r in range(1, 100_001):
            s = p_adic_split(r, p)
            padic.checks += 1
            if s.p**s.m * s.k != r or s.k % p == 0:
                padic.failures.append(f"(p={p}, r={r})")
    return [mob, padic]


def witt_suite() -> list[CheckFamily]:
    bounds = CheckFamily("witt/two-sided-bounds")
    for n in range(1, 11):
        for r in range(1, 65):
            bounds.record(check_witt_bounds(n, r).holds, f"(n={n}, r={r})")

    degenerate = CheckFamily("witt/one-letter-alphabet")
    degenerate.record(witt_dim(1, 1) == 1, "(n=1, r=1)")
    for r in range(2, 101):
        degenerate.record(witt_dim(1, r) == 0, f"(n=1, r={r})")
    return [bounds, degenerate]


def b_suite() -> list[CheckFamily]:
    identity = CheckFamily("b/dimension-identity")
    ratio_range = CheckFamily("b/ratio-range")
    coeff = CheckFamily("b/coefficient-bounds")
    bound = CheckFamily("b/lower-bound")
    conv = CheckFamily("b/convergence")

    for p in SMALL_PRIMES:
        for n in SMALL_DIMS:
            ctx = LiePowerContext(p, n)
            chains = set()
            for r in range(1, SMALL_MAX_R + 1):
                _, m, k = ctx.split(r)
                where = f"(p={p}, n={n}, m={m}, k={k})"
                try:
                    identity.record(ctx.check_dimension_identity(m, k).holds, where)
                except ExactnessError as exc:
                    identity.record(False, f"{where}: {exc}")
                    continue
                b = ctx.ratio_b(r)
                ratio_range.record(0 <= b <= 1, where + " out of range")
                is_zero_point = k == 1 and m >= 1
                ratio_range.record((b == 0) == is_zero_point, where + " zero-locus")
                if m == 0:
                    ratio_range.record(b == 1, where + " ratio at m=0")
                if m >= 1 and k >= 2:
                    chains.add((m, k))
                    bound.record(ctx.lower_bound_b(m, k).holds_for(b), where)

            for m, k in sorted(chains):
                where = f"(p={p}, n={n}, m={m}, k={k})"
                a = [ctx.coeff_a(m, k, i) for i in range(m + 1)]
                coeff.record(a[1] <= Fraction(2, (p ** (m - 1) * k) ** (p - 1)), where + " a_1 cap")
                coeff.record(a[m] <= Fraction(2, k ** (p**m - 1)), where + " a_m cap")
                for i in range(2, m):
                    coeff.record(a[i] <= a[i - 1], f"{where} a_{i} monotone")
                for i in range(1, m + 1):
                    for s in range(1, i + 1):
                        if p ** (m - i + s) * k >= 6:
                            chk = ctx.check_a_ratio_bound(m, k, i, s)
                            coeff.record(chk.holds, f"{where} i={i} s={s}")

    for p in CONV_PRIMES:
        for n in CONV_DIMS:
            ctx = LiePowerContext(p, n)
            for k in CONV_KS:
                if k % p == 0:
                    continue
                for m, r in conv_chain(p, k):
                    where = f"(p={p}, n={n}, m={m}, k={k})"
                    b = ctx.ratio_b(r)
                    if m == 0:
                        conv.record(b == 1, where + " ratio at m=0")
                        continue
                    conv.record(ctx.lower_bound_b(m, k).holds_for(b), where + " bound")
                    if r >= GAP_MIN_R:
                        conv.record(1 - b < GAP_EPS, where + " gap")
    return [identity, ratio_range, coeff, bound, conv]


def c_suite(slow: bool = False) -> list[CheckFamily]:
    integ = CheckFamily("c/integrality-and-range")
    recur = CheckFamily("c/recurrence-cross-check")
    ratio_ident = CheckFamily("c/coefficient-ratio-identity")
    bound = CheckFamily("c/lower-bound")
    weight = CheckFamily("c/weight-space-formula")
    agree = CheckFamily("c/weight-space-oracle")
    conv = CheckFamily("c/convergence")

    for p in SMALL_PRIMES:
        ctx = LieModuleContext(p)
        chains = set()
        for r in range(1, SMALL_MAX_R + 1):
            _, m, k = ctx.split(r)
            where = f"(p={p}, m={m}, k={k})"
            try:
                ctx.dim_c(r)
            except ExactnessError as exc:
                integ.record(False, f"{where}: {exc}")
                continue
            c = ctx.ratio_c(r)
            integ.record(0 <= c <= 1, where + " out of range")
            if m == 0:
                integ.record(c == 1, where + " ratio at m=0")
            if k == 1 and m >= 1:
                integ.record(c == 0, where + " ratio at k=1")
            if k >= 2:
                chains.add((m, k))

        for m, k in sorted(chains):
            where = f"(p={p}, m={m}, k={k})"
            recur.record(ctx.check_c_recurrence_identity(m, k).holds, where)
            for i in range(m + 1):
                for s in range(i + 1):
                    chk = check_a_prime_ratio_identity(p, m, k, i, s)
                    ratio_ident.record(chk.holds, f"{where} i={i} s={s}")
            if m >= 1:
                lb = lower_bound_c(p, m, k)
                c = ctx.ratio_c(p**m * k)
                bound.record(lb <= c, where + " bound")
                if m == 1:
                    bound.record(lb == c, where + " tight at m=1")
                if (p ** (m - 1) * k) ** (p - 1) >= 200 * (m - 1) and k ** (p**m - 1) >= 400:
                    bound.record(1 - lb < GAP_EPS, where + " bound gap")

    for q in range(1, 9):
        for k in range(1, 9):
            weight.record(
                weight_space_dim_formula(q, k) == phi_count(q, k) * w_phi_dim(k),
                f"(q={q}, k={k})",
            )

    points = WEIGHT_SPACE_FAST + (WEIGHT_SPACE_SLOW if slow else ())
    for q, k in points:
        budget = SLOW_BUDGET if (q, k) in WEIGHT_SPACE_SLOW else None
        rank = oracle.weight_space_rank(q, k, None, budget)
        agree.record(rank == weight_space_dim_formula(q, k), f"(q={q}, k={k})")

    for p in CONV_PRIMES:
        ctx = LieModuleContext(p)
        for k in CONV_KS:
            if k % p == 0:
                continue
            for m, r in conv_chain(p, k):
                where = f"(p={p}, m={m}, k={k})"
                c = ctx.ratio_c(r)
                if m == 0:
                    conv.record(c == 1, where + " ratio at m=0")
                    continue
                lb = lower_bound_c(p, m, k)
                conv.record(lb <= c, where + " bound")
                if m == 1:
                    conv.record(lb == c, where + " tight at m=1")
                if (p ** (m - 1) * k) ** (p - 1) >= 200 * (m - 1) and k ** (p**m - 1) >= 400:
                    conv.record(1 - lb < GAP_EPS, where + " bound gap")
                if r >= GAP_MIN_R:
                    conv.record(1 - c < GAP_EPS, where + " gap")
                recur.record(ctx.check_c_recurrence_identity(m, k).holds, where + " conv-grid")
                for i in range(m + 1):
                    for s in range(i + 1):
                        chk = check_a_prime_ratio_identity(p, m, k, i, s)
                        ratio_ident.record(chk.holds, f"{where} i={i} s={s} conv-grid")
    return [integ, recur, ratio_ident, bound, weight, agree, conv]


def oracle_suite(slow: bool = False) -> list[CheckFamily]:
    lyndon = CheckFamily("oracle/lyndon-count")
    for n in range(1, 5):
        for r in range(1, 13):
            lyndon.record(len(oracle.lyndon_words(n, r)) == witt_dim(n, r), f"(n={n}, r={r})")

    aper = CheckFamily("oracle/aperiodic-count")
    for n in range(1, 4):
        for r in range(1, 11):
            aper.record(
                oracle.aperiodic_count_bruteforce(n, r) == r * witt_dim(n, r), f"(n={n}, r={r})"
            )

    power = CheckFamily("oracle/lie-power-rank")
    basis = CheckFamily("oracle/lyndon-basis-rank")
    for n in range(1, ORACLE_POWER_MAX_N + 1):
        for r in range(1, ORACLE_POWER_MAX_R + 1):
            w = witt_dim(n, r)
            for f in ORACLE_FIELDS:
                power.record(oracle.lie_power_rank(n, r, f) == w, f"(n={n}, r={r}, field={f})")
                basis.record(
                    oracle.lyndon_bracketing_rank(n, r, f) == w, f"(n={n}, r={r}, field={f})"
                )

    module = CheckFamily("oracle/lie-module-rank")
    for r in range(1, ORACLE_MODULE_MAX_R + 1):
        for f in ORACLE_FIELDS:
            module.record(oracle.lie_module_rank(r, f) == dim_lie(r), f"(r={r}, field={f})")
    if slow:
        r = ORACLE_MODULE_SLOW_R
        module.record(
            oracle.lie_module_rank(r, 2, SLOW_BUDGET) == dim_lie(r), f"(r={r}, field=2, slow)"
        )

    wspace = CheckFamily("oracle/weight-space-rank")
    for q, k in WEIGHT_SPACE_FAST:
        expected = weight_space_dim_formula(q, k)
        for f in (None, 2):
            wspace.record(oracle.weight_space_rank(q, k, f) == expected, f"(q={q}, k={k}, field={f})")
    if slow:
        for q, k in WEIGHT_SPACE_SLOW:
            expected = weight_space_dim_formula(q, k)
            wspace.record(
                oracle.weight_space_rank(q, k, None, SLOW_BUDGET) == expected,
                f"(q={q}, k={k}, slow)",
            )

    smoke = CheckFamily("oracle/bracket-smoke")
    from itertools import product as _product

    for r in range(1, 6):
        for word in _product(range(2), repeat=r):
            vec = oracle.left_normed_expand(word)
            smoke.record(oracle.weight_of(vec) != oracle.INHOMOGENEOUS, f"(word={word})")
    for a in range(3):
        for b in range(3):
            one = oracle.left_normed_expand((a, b))
            two = oracle.left_normed_expand((b, a))
            total = dict(one)
            for idx, cval in two.items():
                total[idx] = total.get(idx, 0) + cval
            smoke.record(all(v == 0 for v in total.values()), f"(antisymmetry a={a}, b={b})")
    return [lyndon, aper, power, basis, module, wspace, smoke]


def run_suites(suite: str, slow: bool = False) -> list[CheckFamily]:
    """Run one named suite ('all' chains every family, including the arith grids)."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")
    families: list[CheckFamily] = []
    if suite == "all":
        families += arith_suite()
    if suite in ("all", "witt"):
        families += witt_suite()
    if suite in ("all", "b"):
        families += b_suite()
    if suite in ("all", "c"):
        families += c_suite(slow)
    if suite in ("all", "oracle"):
        families += oracle_suite(slow)
    return families


def failure_count(families: list[CheckFamily]) -> int:
    return sum(len(fam.failures) for fam in families)
