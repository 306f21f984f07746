"""Ranked (Zipf-style) series, rank-exponent power-law fits, Poisson fits.

Values are sorted descending and plotted value-vs-rank on log-log axes;
the magnitude of the fitted slope is the rank exponent gamma.  The fit is
an ordinary least-squares line in log-log space over a configurable rank
window; by default the window drops the top 5% and bottom 15% of ranks,
where ranked plots of centralities deviate most from a straight line.

Shortest-path distance distributions are fitted by a Poisson on (d - 1),
since distances start at 1 while Poisson support starts at 0; the ML
estimate is then simply the average distance minus 1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDistribution, MalformedLine, TooFewPoints

RANKPLOT_HEADER = "rank,value"

# fraction of ranks dropped from the head / tail by the default fit window
DEFAULT_HEAD_DROP = 0.05
DEFAULT_TAIL_DROP = 0.15


@dataclass(frozen=True)
class RankedSeries:
    measure: str  # degree | closeness | betweenness
    points: tuple[tuple[int, float], ...]  # (rank, value), ranks 1..k

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class PowerLawFit:
    measure: str
    gamma: float
    intercept: float  # log-domain (natural log of the rank-1 level)
    r_squared: float
    fit_range: tuple[int, int]

    def to_json_dict(self) -> dict:
        return {
            "measure": self.measure,
            "gamma": self.gamma,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "fit_range": [self.fit_range[0], self.fit_range[1]],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


@dataclass(frozen=True)
class PoissonFit:
    lam: float
    support_shift: int = 1


def ranked_values(values: dict[str, float], measure: str = "degree") -> RankedSeries:
    """Sort strictly positive values descending into ranks 1..k.

    Ties break by node id ascending so the series is deterministic; zero
    and negative values are excluded (they have no place on log axes).
    """
    ordered = sorted(
        ((v, node) for node, v in values.items() if v > 0),
        key=lambda item: (-item[0], item[1]),
    )
    points = tuple((rank, float(v)) for rank, (v, _) in enumerate(ordered, start=1))
    return RankedSeries(measure=measure, points=points)


def default_fit_range(k: int) -> tuple[int, int]:
    lo = int(math.floor(DEFAULT_HEAD_DROP * k)) + 1
    hi = k - int(math.floor(DEFAULT_TAIL_DROP * k))
    return lo, max(lo, hi)


def fit_rank_exponent(
    series: RankedSeries, fit_range: tuple[int, int] | None = None
) -> PowerLawFit:
    """Least-squares line on (log rank, log value); gamma = -slope.

    A flat series yields gamma 0 with r_squared 0 by convention.
    """
    if fit_range is None:
        fit_range = default_fit_range(len(series))
    lo, hi = fit_range
    in_range = [(r, v) for r, v in series.points if lo <= r <= hi]
    if len(in_range) < 3:
        raise TooFewPoints(
            f"need >= 3 points in rank range [{lo}, {hi}], got {len(in_range)}"
        )
    x = np.log([r for r, _ in in_range])
    y = np.log([v for _, v in in_range])
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    ss_res = float(np.dot(residuals, residuals))
    ss_tot = float(np.dot(y - y.mean(), y - y.mean()))
    # a flat series has no variance to explain; report 0 by convention
    if ss_tot <= 1e-12 * len(y):
        r_squared = 0.0
    else:
        r_squared = 1.0 - ss_res / ss_tot
    return PowerLawFit(
        measure=series.measure,
        gamma=float(-slope) + 0.0,
        intercept=float(intercept),
        r_squared=r_squared,
        fit_range=(lo, hi),
    )


def fit_poisson(dist: dict[int, float]) -> PoissonFit:
    """ML Poisson fit on (d - 1): lambda = mean distance - 1."""
    if not dist:
        raise InvalidDistribution("empty distribution")
    for d, p in dist.items():
        if not isinstance(d, int) or d < 1:
            raise InvalidDistribution(f"support must be positive integers, got {d!r}")
        if p < 0:
            raise InvalidDistribution(f"negative probability {p!r} at distance {d}")
    total = sum(dist.values())
    if abs(total - 1.0) > 1e-9:
        raise InvalidDistribution(f"probabilities sum to {total!r}, not 1")
    mean = sum(d * p for d, p in dist.items())
    return PoissonFit(lam=max(0.0, mean - 1.0))


def serialize_rank_series(series: RankedSeries) -> str:
    lines = [RANKPLOT_HEADER]
    for rank, value in series.points:
        lines.append(f"{rank},{value}")
    return "\n".join(lines) + "\n"


def parse_rank_series(text: str, measure: str = "degree") -> RankedSeries:
    points = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\r")
        if line_no == 1 and line == RANKPLOT_HEADER:
            continue
        fields = line.split(",")
        if len(fields) != 2:
            raise MalformedLine(line_no, f"expected 2 fields, got {len(fields)}")
        try:
            points.append((int(fields[0]), float(fields[1])))
        except ValueError:
            raise MalformedLine(line_no, "unparsable rank/value") from None
    return RankedSeries(measure=measure, points=tuple(points))
