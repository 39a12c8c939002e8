"""Fuzzy rational B-spline curves: component bands, type-reduced and
defuzzified solution curves, and sample-wise deviation reports.

All processing happens on CONTROL points: the seven component control
polygons (or the type-reduced / defuzzified ones) share a single weight
vector and knot vector, and one rational curve is evaluated per polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bspline import KnotVector, Polyline, RationalCurveModel, clamped_uniform_knots, sample_curve
from .errors import OrderExceedsControlCount, SampleMismatch, T2SplineError
from .fuzzy import NT2FuzzyPoint
from .pipeline import alpha_cut_scalar, defuzzify, pipeline_point, type_reduce

#: Band labels in control-polygon order; "crisp" extracts the c component.
COMPONENT_LABELS = ("ll", "l", "rl", "crisp", "lr", "r", "rr")

_LABEL_TO_FIELD = {label: ("c" if label == "crisp" else label) for label in COMPONENT_LABELS}

DEFAULT_SAMPLES = 101


@dataclass(frozen=True, eq=False)
class FuzzyCurveModel:
    """Rational curve over fuzzy control points plus the pipeline cut level."""

    fuzzy_controls: tuple[NT2FuzzyPoint, ...]
    weights: np.ndarray
    order: int
    knots: KnotVector
    alpha: float

    def __post_init__(self):
        controls = tuple(self.fuzzy_controls)
        object.__setattr__(self, "fuzzy_controls", controls)
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))
        object.__setattr__(self, "order", int(self.order))
        object.__setattr__(self, "alpha", float(self.alpha))
        n = len(controls)
        if not all(isinstance(p, NT2FuzzyPoint) for p in controls):
            raise T2SplineError("fuzzy_controls must be NT2FuzzyPoint instances")
        if self.order < 2:
            raise T2SplineError(f"order must be at least 2, got {self.order}")
        if self.order > n:
            raise OrderExceedsControlCount(f"order {self.order} exceeds control count {n}")
        if self.weights.shape != (n,):
            raise T2SplineError(f"expected {n} weights, got shape {self.weights.shape}")
        if np.any(self.weights <= 0.0) or not np.all(np.isfinite(self.weights)):
            raise T2SplineError("weights must all be finite and > 0")
        if self.knots.order != self.order or self.knots.n_controls != n:
            raise T2SplineError("knot vector does not match model order/control count")
        if not 0.0 <= self.alpha < 1.0:
            raise T2SplineError(f"alpha must lie in [0, 1), got {self.alpha}")

    @classmethod
    def with_uniform_knots(cls, points, weights=None, order: int = 3, alpha: float = 0.8) -> "FuzzyCurveModel":
        points = tuple(points)
        if weights is None:
            weights = np.ones(len(points))
        return cls(points, weights, order, clamped_uniform_knots(len(points), order), alpha)

    def crisp_model(self) -> RationalCurveModel:
        """The rational curve through the crisp (c, c) control polygon."""
        return self._component_model("crisp")

    def _component_model(self, label: str) -> RationalCurveModel:
        polygon = component_polygons(self)[label]
        return RationalCurveModel(polygon, self.weights, self.order, self.knots)


@dataclass(frozen=True, eq=False)
class CurveBand:
    """Seven component curves sampled at identical parameter values."""

    ll: Polyline
    l: Polyline
    rl: Polyline
    crisp: Polyline
    lr: Polyline
    r: Polyline
    rr: Polyline

    def __post_init__(self):
        ref = self.crisp.params
        for label, line in self.items():
            if line.params.shape != ref.shape or np.any(line.params != ref):
                raise SampleMismatch(f"band component {label} sampled at different parameters")

    def items(self) -> tuple[tuple[str, Polyline], ...]:
        return tuple((label, getattr(self, label)) for label in COMPONENT_LABELS)


class ReducedCurves(NamedTuple):
    """Type-reduced curve triple: left interval curve, crisp, right."""

    left: Polyline
    crisp: Polyline
    right: Polyline


@dataclass(frozen=True)
class DeviationReport:
    """Sample-wise Euclidean distances between two matched polylines."""

    max_distance: float
    mean_distance: float
    per_sample: np.ndarray


def component_polygons(model: FuzzyCurveModel) -> dict[str, np.ndarray]:
    """Extract the seven crisp control polygons, one per component label."""
    out = {}
    for label in COMPONENT_LABELS:
        field = _LABEL_TO_FIELD[label]
        out[label] = np.array(
            [(getattr(p.x, field), getattr(p.y, field)) for p in model.fuzzy_controls]
        )
    return out


def fuzzy_curve_band(model: FuzzyCurveModel, samples: int = DEFAULT_SAMPLES) -> CurveBand:
    """Sample the rational curve over each of the seven component polygons.

    All seven curves share the model's weights, order and knots; only the
    control positions differ.
    """
    sampled = {
        label: sample_curve(model._component_model(label), samples) for label in COMPONENT_LABELS
    }
    return CurveBand(**{label: sampled[label] for label in COMPONENT_LABELS})


def reduced_curves(model: FuzzyCurveModel, samples: int = DEFAULT_SAMPLES) -> ReducedCurves:
    """Cut and type-reduce every control point, then sample the rational
    curve over the left-interval, crisp, and right-interval polygons."""
    left_polygon, crisp_polygon, right_polygon = [], [], []
    for p in model.fuzzy_controls:
        tr_x = type_reduce(alpha_cut_scalar(p.x, model.alpha))
        tr_y = type_reduce(alpha_cut_scalar(p.y, model.alpha))
        left_polygon.append((tr_x.left, tr_y.left))
        crisp_polygon.append((tr_x.c, tr_y.c))
        right_polygon.append((tr_x.right, tr_y.right))
    def make(poly):
        return sample_curve(
            RationalCurveModel(np.array(poly), model.weights, model.order, model.knots), samples
        )

    return ReducedCurves(left=make(left_polygon), crisp=make(crisp_polygon), right=make(right_polygon))


def defuzzified_curve(model: FuzzyCurveModel, samples: int = DEFAULT_SAMPLES) -> Polyline:
    """Sample the rational curve over the defuzzified control polygon
    (the crisp solution curve)."""
    polygon = np.array([pipeline_point(p, model.alpha) for p in model.fuzzy_controls])
    return sample_curve(RationalCurveModel(polygon, model.weights, model.order, model.knots), samples)


def deviation(a: Polyline, b: Polyline) -> DeviationReport:
    """Per-sample Euclidean distance between two polylines sampled at the
    same parameters (matched-parameter distance, not closest-point)."""
    if len(a) != len(b) or np.any(a.params != b.params):
        raise SampleMismatch("polylines must be sampled at identical parameters")
    d = np.linalg.norm(a.points - b.points, axis=1)
    return DeviationReport(
        max_distance=float(d.max()), mean_distance=float(d.mean()), per_sample=d
    )
