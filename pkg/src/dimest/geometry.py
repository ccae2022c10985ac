"""Core geometric types shared by every estimator.

Point clouds, bounding boxes, grid partitions and scale schedules. All types
are immutable after construction and all operations are pure functions, so
everything here can be used concurrently without locking.

Grid cells are half-open: a point ``x`` belongs to the cell with index
``floor((x[i] - anchor[i]) / epsilon)`` on each axis, so boundary points are
owned by exactly one cell. Coordinates are 64-bit floats throughout; index
arithmetic uses exact integer floor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InputError

__all__ = [
    "PointCloud",
    "BoundingBox",
    "GridSpec",
    "ScaleSchedule",
    "bounding_box",
    "box_index",
    "box_indices",
]

# Indices beyond this magnitude would be unsafe to cast to int64.
_INDEX_LIMIT = 2.0**62


def _as_vector(value, name: str, dim: int | None = None) -> np.ndarray:
    vec = np.asarray(value, dtype=float)
    if vec.ndim != 1:
        raise InputError(f"{name} must be a 1-d vector, got shape {vec.shape}")
    if dim is not None and vec.shape[0] != dim:
        raise InputError(f"{name} has dimension {vec.shape[0]}, expected {dim}")
    if not np.all(np.isfinite(vec)):
        raise InputError(f"{name} has non-finite coordinates")
    return vec


@dataclass(frozen=True, eq=False)
class PointCloud:
    """A finite ordered set of points in R^d.

    Stored as an immutable ``(n, d)`` float64 array. A 1-d input array is
    interpreted as ``n`` points in R^1. All coordinates must be finite;
    estimators additionally require the cloud to be non-empty.
    """

    points: np.ndarray

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
        if pts.ndim != 2:
            raise InputError(f"points must be an (n, d) array, got shape {pts.shape}")
        if pts.shape[1] == 0:
            raise InputError("points must have at least one coordinate per point")
        if pts.size and not np.all(np.isfinite(pts)):
            raise InputError("point cloud has non-finite coordinates")
        pts = pts.copy()
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def dim(self) -> int:
        """Ambient dimension d."""
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True, eq=False)
class BoundingBox:
    """Axis-aligned box given by componentwise ``min`` and ``max`` corners."""

    min: np.ndarray
    max: np.ndarray

    def __post_init__(self) -> None:
        lo = _as_vector(self.min, "min corner")
        hi = _as_vector(self.max, "max corner", dim=lo.shape[0])
        if np.any(lo > hi):
            raise InputError("bounding box has min > max on some axis")
        lo.setflags(write=False)
        hi.setflags(write=False)
        object.__setattr__(self, "min", lo)
        object.__setattr__(self, "max", hi)

    @property
    def dim(self) -> int:
        return self.min.shape[0]

    @property
    def widths(self) -> np.ndarray:
        return self.max - self.min

    def contains(self, points: np.ndarray) -> bool:
        """True when every row of ``points`` lies inside the box."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return bool(np.all(pts >= self.min) and np.all(pts <= self.max))

    def inflated(self, margin: float) -> "BoundingBox":
        """The box grown by ``margin`` on every face."""
        if margin < 0:
            raise InputError("margin must be non-negative")
        return BoundingBox(self.min - margin, self.max + margin)


def bounding_box(cloud: PointCloud) -> BoundingBox:
    """Tight axis-aligned bounding box of a cloud.

    Raises:
        InputError: for an empty cloud.
    """
    if len(cloud) == 0:
        raise InputError("empty point set")
    return BoundingBox(cloud.points.min(axis=0), cloud.points.max(axis=0))


@dataclass(frozen=True, eq=False)
class GridSpec:
    """An infinite grid of half-open cubes of side ``epsilon``.

    The cell with index ``i`` on one axis covers
    ``[anchor + i*epsilon, anchor + (i+1)*epsilon)``.
    """

    anchor: np.ndarray
    epsilon: float

    def __post_init__(self) -> None:
        anchor = _as_vector(self.anchor, "grid anchor")
        anchor.setflags(write=False)
        eps = float(self.epsilon)
        if not np.isfinite(eps) or eps <= 0:
            raise InputError(f"epsilon must be a positive real, got {self.epsilon}")
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "epsilon", eps)

    @property
    def dim(self) -> int:
        return self.anchor.shape[0]


def box_indices(grid: GridSpec, points: np.ndarray) -> np.ndarray:
    """Cell indices for an ``(n, d)`` array of points, as ``(n, d)`` int64.

    Vectorized form of :func:`box_index`; the two always agree row by row.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    if pts.ndim != 2 or pts.shape[1] != grid.dim:
        raise InputError(
            f"points of dimension {pts.shape[-1]} do not match grid dimension {grid.dim}"
        )
    if pts.size and not np.all(np.isfinite(pts)):
        raise InputError("points have non-finite coordinates")
    scaled = np.floor((pts - grid.anchor) / grid.epsilon)
    if scaled.size and np.max(np.abs(scaled)) >= _INDEX_LIMIT:
        raise InputError("box index overflow: epsilon too small for coordinate range")
    return scaled.astype(np.int64)


def box_index(grid: GridSpec, point) -> np.ndarray:
    """Index vector of the unique half-open cell containing ``point``."""
    vec = _as_vector(point, "point", dim=grid.dim)
    return box_indices(grid, vec.reshape(1, -1))[0]


@dataclass(frozen=True, eq=False)
class ScaleSchedule:
    """A strictly decreasing sequence of box sides with log-scale labels.

    ``ks`` holds ``log2(1/epsilon)`` for each scale; on dyadic schedules these
    are the integer exponents k of ``epsilon = 2**-k``. A schedule may carry a
    single scale (enough for plain counting); regressions require at least
    two scales and enforce that themselves.
    """

    epsilons: np.ndarray
    ks: np.ndarray

    def __post_init__(self) -> None:
        eps = np.asarray(self.epsilons, dtype=float)
        ks = np.asarray(self.ks, dtype=float)
        if eps.ndim != 1 or eps.size == 0:
            raise InputError("schedule needs at least one scale")
        if ks.shape != eps.shape:
            raise InputError("schedule labels do not match scales")
        if not np.all(np.isfinite(eps)) or np.any(eps <= 0):
            raise InputError("scales must be finite and positive")
        if eps.size > 1 and not np.all(np.diff(eps) < 0):
            raise InputError("scales must be strictly decreasing")
        eps.setflags(write=False)
        ks.setflags(write=False)
        object.__setattr__(self, "epsilons", eps)
        object.__setattr__(self, "ks", ks)

    @classmethod
    def dyadic(cls, k_min: int, k_max: int) -> "ScaleSchedule":
        """Scales ``2**-k`` for k = k_min..k_max (inclusive)."""
        if int(k_min) != k_min or int(k_max) != k_max:
            raise InputError("dyadic exponents must be integers")
        if k_min > k_max:
            raise InputError(f"k_min={k_min} exceeds k_max={k_max}")
        ks = np.arange(int(k_min), int(k_max) + 1, dtype=float)
        return cls(epsilons=2.0**-ks, ks=ks)

    @classmethod
    def from_epsilons(cls, values: Iterable[float]) -> "ScaleSchedule":
        """A schedule from an explicit strictly decreasing epsilon list."""
        eps = np.asarray(list(values), dtype=float)
        if eps.ndim != 1 or eps.size == 0:
            raise InputError("schedule needs at least one scale")
        if not np.all(np.isfinite(eps)) or np.any(eps <= 0):
            raise InputError("scales must be finite and positive")
        return cls(epsilons=eps, ks=np.log2(1.0 / eps))

    def __len__(self) -> int:
        return self.epsilons.size

    def __iter__(self):
        return iter(zip(self.ks, self.epsilons))
