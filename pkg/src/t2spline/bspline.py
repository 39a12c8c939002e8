"""Rational B-spline machinery: clamped knots, Cox-de Boor basis, evaluation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    OrderExceedsControlCount,
    ParameterOutOfDomain,
    T2SplineError,
    TooFewSamples,
)


@dataclass(frozen=True, eq=False)
class KnotVector:
    """Non-decreasing knot sequence of length n + order, clamped at both ends."""

    knots: np.ndarray
    order: int

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=float)
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "order", int(self.order))
        k = self.order
        if k < 2:
            raise T2SplineError(f"order must be at least 2, got {k}")
        n = knots.size - k
        if n < k:
            raise OrderExceedsControlCount(f"order {k} curve needs at least {k} control points, got {n}")
        if np.any(np.diff(knots) < 0.0):
            raise T2SplineError("knots must be non-decreasing")
        if knots[k - 1] != knots[0] or knots[n] != knots[-1]:
            raise T2SplineError("knot vector must be clamped (end multiplicity = order)")

    @property
    def n_controls(self) -> int:
        return self.knots.size - self.order

    @property
    def domain(self) -> tuple[float, float]:
        """Parameter interval on which the full basis is defined."""
        return (float(self.knots[self.order - 1]), float(self.knots[self.n_controls]))


def clamped_uniform_knots(n: int, k: int) -> KnotVector:
    """Clamped uniform knot vector on [0, 1] for n control points, order k."""
    if k < 2:
        raise T2SplineError(f"order must be at least 2, got {k}")
    if k > n:
        raise OrderExceedsControlCount(f"order {k} exceeds control count {n}")
    interior = np.arange(1, n - k + 1, dtype=float) / (n - k + 1)
    return KnotVector(np.concatenate([np.zeros(k), interior, np.ones(k)]), order=k)


def _cox_de_boor(knots: np.ndarray, i: int, order: int, t: float) -> float:
    # 0/0 := 0 convention for repeated knots; the final non-empty span is
    # closed on the right so the curve reaches its last control point.
    if order == 1:
        if knots[i] <= t < knots[i + 1]:
            return 1.0
        if t == knots[-1] and knots[i] < knots[i + 1] == knots[-1]:
            return 1.0
        return 0.0
    total = 0.0
    left_den = knots[i + order - 1] - knots[i]
    if left_den > 0.0:
        total += (t - knots[i]) / left_den * _cox_de_boor(knots, i, order - 1, t)
    right_den = knots[i + order] - knots[i + 1]
    if right_den > 0.0:
        total += (knots[i + order] - t) / right_den * _cox_de_boor(knots, i + 1, order - 1, t)
    return total


def basis(kv: KnotVector, i: int, order: int, t: float) -> float:
    """Basis function N_i of the given order at parameter t (i is 0-based).

    Non-negative, zero outside [knots[i], knots[i + order]], and the basis
    functions of one knot vector sum to 1 across the domain.
    """
    knots = kv.knots
    n = knots.size - order
    if not 0 <= i < n:
        raise IndexError(f"basis index {i} out of range for {n} basis functions")
    lo, hi = knots[order - 1], knots[n]
    if not lo <= t <= hi:
        raise ParameterOutOfDomain(f"t={t!r} outside domain [{lo}, {hi}]")
    return _cox_de_boor(knots, i, order, float(t))


def basis_row(kv: KnotVector, t: float) -> np.ndarray:
    """All n basis values of the knot vector's own order at parameter t."""
    knots = kv.knots
    lo, hi = kv.domain
    if not lo <= t <= hi:
        raise ParameterOutOfDomain(f"t={t!r} outside domain [{lo}, {hi}]")
    t = float(t)
    return np.array([_cox_de_boor(knots, i, kv.order, t) for i in range(kv.n_controls)])


@dataclass(frozen=True, eq=False)
class RationalCurveModel:
    """Crisp rational B-spline: n planar controls, n positive weights, order k."""

    controls: np.ndarray
    weights: np.ndarray
    order: int
    knots: KnotVector

    def __post_init__(self):
        controls = np.asarray(self.controls, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "controls", controls)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "order", int(self.order))
        if controls.ndim != 2 or controls.shape[1] != 2:
            raise T2SplineError(f"controls must be an (n, 2) array, got shape {controls.shape}")
        n = controls.shape[0]
        if self.order < 2:
            raise T2SplineError(f"order must be at least 2, got {self.order}")
        if self.order > n:
            raise OrderExceedsControlCount(f"order {self.order} exceeds control count {n}")
        if weights.shape != (n,):
            raise T2SplineError(f"expected {n} weights, got shape {weights.shape}")
        if np.any(weights <= 0.0) or not np.all(np.isfinite(weights)):
            raise T2SplineError("weights must all be finite and > 0")
        if self.knots.order != self.order or self.knots.n_controls != n:
            raise T2SplineError(
                f"knot vector (order {self.knots.order}, {self.knots.n_controls} controls) "
                f"does not match model (order {self.order}, {n} controls)"
            )

    @classmethod
    def with_uniform_knots(cls, controls, weights=None, order: int = 3) -> "RationalCurveModel":
        controls = np.asarray(controls, dtype=float)
        n = controls.shape[0]
        if weights is None:
            weights = np.ones(n)
        return cls(controls, weights, order, clamped_uniform_knots(n, order))


@dataclass(frozen=True, eq=False)
class Polyline:
    """A sampled curve: points[i] evaluated at strictly increasing params[i]."""

    points: np.ndarray
    params: np.ndarray

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        params = np.asarray(self.params, dtype=float)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "params", params)
        if points.ndim != 2 or points.shape[1] != 2:
            raise T2SplineError(f"points must be an (m, 2) array, got shape {points.shape}")
        if params.shape != (points.shape[0],):
            raise T2SplineError("params must match points in length")
        if np.any(np.diff(params) <= 0.0):
            raise T2SplineError("params must be strictly increasing")

    def __len__(self) -> int:
        return self.points.shape[0]


def rational_point(m: RationalCurveModel, t: float) -> np.ndarray:
    """Evaluate sum(w_i N_i(t) P_i) / sum(w_r N_r(t)) at parameter t.

    The denominator is positive everywhere on the domain (positive weights
    and partition of unity), so no pole handling is needed.
    """
    coeff = m.weights * basis_row(m.knots, t)
    return (coeff @ m.controls) / coeff.sum()


def sample_curve(m: RationalCurveModel, samples: int) -> Polyline:
    """Evaluate the curve at `samples` uniform parameters across the domain."""
    if samples < 2:
        raise TooFewSamples(f"need at least 2 samples, got {samples}")
    lo, hi = m.knots.domain
    ts = np.linspace(lo, hi, samples)
    pts = np.array([rational_point(m, t) for t in ts])
    return Polyline(points=pts, params=ts)
