"""Sampling domains for residual checks."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

DEFAULT_FD_STEP = 1e-4


@dataclass(frozen=True, slots=True)
class Point3:
    """A point of R^3; all coordinates must be finite."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for c in (self.x, self.y, self.z):
            if not math.isfinite(c):
                raise ValueError(f"coordinates must be finite, got {(self.x, self.y, self.z)}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


def as_point(p) -> Point3:
    if isinstance(p, Point3):
        return p
    x, y, z = p
    return Point3(float(x), float(y), float(z))


@dataclass(frozen=True, slots=True)
class SampleSpec:
    """Where and how densely to sample, and which tolerances to apply.

    Points are drawn uniformly from box^3 with the ball of radius
    `excluded_radius` around the origin removed.  The point stream is a
    pure function of `seed`, and a spec with a larger `count` extends
    the smaller sample rather than redrawing it.
    """

    box: tuple[float, float] = (-2.0, 2.0)
    excluded_radius: float = 0.25
    count: int = 500
    seed: int = 42
    abs_tol: float = 1e-9
    rel_tol: float = 1e-9

    def __post_init__(self):
        lo, hi = self.box
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise ValueError(f"box must satisfy lo < hi, got {self.box}")
        if self.excluded_radius < 0:
            raise ValueError("excluded_radius must be >= 0")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("tolerances must be > 0")

    def summary(self) -> dict:
        return {
            "box": [self.box[0], self.box[1]],
            "excluded_radius": self.excluded_radius,
            "count": self.count,
            "seed": self.seed,
            "abs_tol": self.abs_tol,
            "rel_tol": self.rel_tol,
        }


def sample_points(spec: SampleSpec) -> np.ndarray:
    """Deterministic (count, 3) array of sample points for `spec`."""
    rng = random.Random(spec.seed)
    lo, hi = spec.box
    r2 = spec.excluded_radius**2
    pts = np.empty((spec.count, 3), dtype=np.float64)
    accepted = 0
    attempts_left = 1000 * spec.count
    while accepted < spec.count:
        if attempts_left == 0:
            raise ValueError("excluded ball rejects nearly every point of the box")
        attempts_left -= 1
        x = rng.uniform(lo, hi)
        y = rng.uniform(lo, hi)
        z = rng.uniform(lo, hi)
        if x * x + y * y + z * z > r2:
            pts[accepted] = (x, y, z)
            accepted += 1
    return pts
