"""Convergence tables and their CSV / JSON renderings.

Row schema (shared by the b and c tables): the degree and its p-adic split,
the summand dimension, the reference dimension it is measured against
(w(n, r) for Lie powers, (r-1)! for Lie modules), the exact ratio as a
normalized fraction, and decimal renderings of the ratio, the explicit lower
bound and the gap 1 - ratio.  Big integers are emitted as strings in JSON so
consumers without arbitrary precision stay safe; CSV uses LF line endings and
a fixed column order, and all number formatting is locale-independent, so
both formats are byte-identical across runs.

Bound column conventions: at m = 0 the ratio is exactly 1 and the bound
column renders the trivial bound 1; on the degenerate chain k = 1 (ratio 0,
no bound is defined) the bound column is empty.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .lie_modules import LieModuleContext
from .lie_powers import LiePowerContext
from .render import DEFAULT_FLOAT_BITS, render_fraction

CSV_COLUMNS = (
    "r",
    "p",
    "m",
    "k",
    "dim_num",
    "dim_den_context",
    "ratio_num",
    "ratio_den",
    "ratio_float",
    "bound_float",
    "gap_float",
)


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters for one table run."""

    p: int
    k_list: tuple[int, ...]
    m_max: int
    n: int | None = None
    float_bits: int = DEFAULT_FLOAT_BITS
    fmt: str = "csv"

    def __post_init__(self):
        from .arith import is_prime

        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not self.k_list:
            raise ValueError("at least one k is required")
        if len(set(self.k_list)) != len(self.k_list):
            raise ValueError(f"duplicate k values: {self.k_list}")
        for k in self.k_list:
            if k < 1:
                raise ValueError(f"k must be >= 1, got {k}")
            if k % self.p == 0:
                raise ValueError(f"k must not be divisible by p={self.p}, got {k}")
        if self.m_max < 0:
            raise ValueError(f"m_max must be >= 0, got {self.m_max}")
        if self.n is not None and self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.float_bits < 1:
            raise ValueError(f"float_bits must be >= 1, got {self.float_bits}")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.fmt}")


@dataclass(frozen=True)
class ConvergenceRow:
    """One fully rendered table row; exact fields plus their decimal strings."""

    r: int
    p: int
    m: int
    k: int
    dim_num: int
    dim_den_context: int
    ratio: Fraction
    ratio_float: str
    bound_float: str
    gap: Fraction
    gap_float: str


def _points(cfg: RunConfig) -> list[tuple[int, int, int]]:
    pts = [(cfg.p**m * k, m, k) for k in cfg.k_list for m in range(cfg.m_max + 1)]
    pts.sort()
    return pts


def build_b_rows(cfg: RunConfig) -> list[ConvergenceRow]:
    """Rows of the b-ratio table for one (p, n), ordered by degree."""
    if cfg.n is None:
        raise ValueError("the b table needs n")
    ctx = LiePowerContext(cfg.p, cfg.n)
    bits = cfg.float_bits
    rows = []
    for r, m, k in _points(cfg):
        rep = ctx.report(r)
        if rep.bound is not None:
            bound_float = rep.bound.float_str(bits)
        elif m == 0:
            bound_float = render_fraction(Fraction(1), bits)
        else:
            bound_float = ""
        gap = 1 - rep.ratio
        rows.append(
            ConvergenceRow(
                r=r,
                p=cfg.p,
                m=m,
                k=k,
                dim_num=rep.dim,
                dim_den_context=rep.witt,
                ratio=rep.ratio,
                ratio_float=render_fraction(rep.ratio, bits),
                bound_float=bound_float,
                gap=gap,
                gap_float=render_fraction(gap, bits),
            )
        )
    return rows


def build_c_rows(cfg: RunConfig) -> list[ConvergenceRow]:
    """Rows of the c-ratio table for one p, ordered by degree."""
    ctx = LieModuleContext(cfg.p)
    bits = cfg.float_bits
    rows = []
    for r, m, k in _points(cfg):
        rep = ctx.report(r)
        if rep.bound is not None:
            bound_float = render_fraction(rep.bound, bits)
        elif m == 0:
            bound_float = render_fraction(Fraction(1), bits)
        else:
            bound_float = ""
        gap = 1 - rep.ratio
        rows.append(
            ConvergenceRow(
                r=r,
                p=cfg.p,
                m=m,
                k=k,
                dim_num=rep.dim,
                dim_den_context=rep.lie_dim,
                ratio=rep.ratio,
                ratio_float=render_fraction(rep.ratio, bits),
                bound_float=bound_float,
                gap=gap,
                gap_float=render_fraction(gap, bits),
            )
        )
    return rows


def to_csv(rows: list[ConvergenceRow]) -> str:
    """Fixed-column CSV with LF endings and a trailing newline."""
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(
            ",".join(
                (
                    str(row.r),
                    str(row.p),
                    str(row.m),
                    str(row.k),
                    str(row.dim_num),
                    str(row.dim_den_context),
                    str(row.ratio.numerator),
                    str(row.ratio.denominator),
                    row.ratio_float,
                    row.bound_float,
                    row.gap_float,
                )
            )
        )
    return "\n".join(lines) + "\n"


def to_json(rows: list[ConvergenceRow]) -> str:
    """JSON array of row objects; big integers are encoded as strings."""
    payload = [
        {
            "r": row.r,
            "p": row.p,
            "m": row.m,
            "k": row.k,
            "dim_num": str(row.dim_num),
            "dim_den_context": str(row.dim_den_context),
            "ratio_num": str(row.ratio.numerator),
            "ratio_den": str(row.ratio.denominator),
            "ratio_float": row.ratio_float,
            "bound_float": row.bound_float,
            "gap_float": row.gap_float,
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def rows_from_json(text: str) -> list[ConvergenceRow]:
    """Inverse of to_json; the exact ratio and gap are rebuilt from the strings."""
    rows = []
    for obj in json.loads(text):
        ratio = Fraction(int(obj["ratio_num"]), int(obj["ratio_den"]))
        rows.append(
            ConvergenceRow(
                r=obj["r"],
                p=obj["p"],
                m=obj["m"],
                k=obj["k"],
                dim_num=int(obj["dim_num"]),
                dim_den_context=int(obj["dim_den_context"]),
                ratio=ratio,
                ratio_float=obj["ratio_float"],
                bound_float=obj["bound_float"],
                gap=1 - ratio,
                gap_float=obj["gap_float"],
            )
        )
    return rows
