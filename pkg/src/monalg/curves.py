"""Curves in the real k-dimensional parameter space.

Three kinds cover the verification needs: planar circles (periodic, smooth),
polylines (open or closed), and triangles (closed three-vertex polylines with
a quality measure).  Reversal flips an orientation flag instead of reshuffling
vertices, so a reversed integral reuses the same quadrature nodes and negates
term by term.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

__all__ = [
    "Circle2D",
    "Polyline",
    "QuadratureOptions",
    "Triangle",
    "TriangleSampler",
    "coordinate_plane",
    "triangle_quality",
]


@dataclass(frozen=True)
class QuadratureOptions:
    """Initial node counts and the refinement cap for one curve."""

    nodes_on_circle: int = 64
    nodes_per_segment: int = 16
    cap: int = 2**16
    segment_cap: int = 4096


def coordinate_plane(k: int, i: int, j: int) -> np.ndarray:
    """Orthonormal plane spanned by coordinate axes ``i`` and ``j`` (1-based)."""
    plane = np.zeros((2, k))
    plane[0, i - 1] = 1.0
    plane[1, j - 1] = 1.0
    return plane


@dataclass(frozen=True)
class Circle2D:
    """Circle of given radius around ``center`` inside a 2-plane of R^k."""

    center: np.ndarray
    radius: float
    plane: np.ndarray  # (2, k), orthonormal rows
    orientation: int = 1
    quadrature: QuadratureOptions = field(default_factory=QuadratureOptions)

    def __post_init__(self):
        center = np.asarray(self.center, dtype=np.float64)
        plane = np.asarray(self.plane, dtype=np.float64)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "plane", plane)
        if self.radius <= 0:
            raise ValueError("circle radius must be positive")
        if plane.shape != (2, center.shape[0]):
            raise ValueError(f"plane must have shape (2, {center.shape[0]})")
        gram = plane @ plane.T
        if not np.allclose(gram, np.eye(2), atol=1e-10):
            raise ValueError("plane vectors must be orthonormal")
        if self.orientation not in (-1, 1):
            raise ValueError("orientation must be +1 or -1")

    @property
    def k(self) -> int:
        return self.center.shape[0]

    def points(self, tau) -> np.ndarray:
        """Canonical (counterclockwise-in-plane) points, shape (len(tau), k)."""
        tau = np.asarray(tau, dtype=np.float64)
        circ = np.cos(tau)[:, None] * self.plane[0] + np.sin(tau)[:, None] * self.plane[1]
        return self.center + self.radius * circ

    def tangents(self, tau) -> np.ndarray:
        """Canonical velocity d(points)/d(tau); orientation applied by callers."""
        tau = np.asarray(tau, dtype=np.float64)
        vel = -np.sin(tau)[:, None] * self.plane[0] + np.cos(tau)[:, None] * self.plane[1]
        return self.radius * vel

    def length(self) -> float:
        return 2.0 * np.pi * self.radius

    def reversed(self) -> "Circle2D":
        return replace(self, orientation=-self.orientation)

    def sample(self, count: int = 256) -> np.ndarray:
        return self.points(np.arange(count) * (2.0 * np.pi / count))


@dataclass(frozen=True)
class Polyline:
    """Straight segments through ``vertices``; closed polylines repeat nothing."""

    vertices: np.ndarray  # (V, k)
    closed: bool = False
    orientation: int = 1
    quadrature: QuadratureOptions = field(default_factory=QuadratureOptions)

    def __post_init__(self):
        vertices = np.asarray(self.vertices, dtype=np.float64)
        object.__setattr__(self, "vertices", vertices)
        if vertices.ndim != 2 or vertices.shape[0] < 2:
            raise ValueError("polyline needs at least two vertices")
        if self.orientation not in (-1, 1):
            raise ValueError("orientation must be +1 or -1")

    @property
    def k(self) -> int:
        return self.vertices.shape[1]

    def segments(self):
        """Canonical (A, B) pairs; the closing edge included when closed."""
        verts = self.vertices
        pairs = [(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]
        if self.closed:
            pairs.append((verts[-1], verts[0]))
        return pairs

    def length(self) -> float:
        return float(sum(np.linalg.norm(b - a) for a, b in self.segments()))

    def reversed(self) -> "Polyline":
        return replace(self, orientation=-self.orientation)

    def sample(self, per_segment: int = 64) -> np.ndarray:
        taus = np.linspace(0.0, 1.0, per_segment, endpoint=False)
        chunks = [a + taus[:, None] * (b - a) for a, b in self.segments()]
        return np.concatenate(chunks, axis=0)


def triangle_quality(vertices: np.ndarray) -> float:
    """Shape quality in (0, 1]: 4*sqrt(3)*area / sum of squared sides."""
    a, b, c = np.asarray(vertices, dtype=np.float64)
    sides = (b - a, c - b, a - c)
    sq = sum(float(np.dot(s, s)) for s in sides)
    u, v = b - a, c - a
    area_sq = np.dot(u, u) * np.dot(v, v) - np.dot(u, v) ** 2
    area = np.sqrt(max(area_sq, 0.0)) / 2.0
    if sq == 0.0:
        return 0.0
    return float(4.0 * np.sqrt(3.0) * area / sq)


@dataclass(frozen=True)
class Triangle:
    """Closed triangle boundary; vertices must be affinely independent."""

    vertices: np.ndarray  # (3, k)
    orientation: int = 1
    quadrature: QuadratureOptions = field(default_factory=QuadratureOptions)

    def __post_init__(self):
        vertices = np.asarray(self.vertices, dtype=np.float64)
        object.__setattr__(self, "vertices", vertices)
        if vertices.shape[0] != 3 or vertices.ndim != 2:
            raise ValueError("triangle needs exactly three vertices")
        if triangle_quality(vertices) <= 0.0:
            raise ValueError("triangle vertices are affinely dependent")
        if self.orientation not in (-1, 1):
            raise ValueError("orientation must be +1 or -1")

    @property
    def k(self) -> int:
        return self.vertices.shape[1]

    def boundary(self) -> Polyline:
        return Polyline(self.vertices, closed=True, orientation=self.orientation,
                        quadrature=self.quadrature)

    def segments(self):
        return self.boundary().segments()

    def length(self) -> float:
        return self.boundary().length()

    def quality(self) -> float:
        return triangle_quality(self.vertices)

    def reversed(self) -> "Triangle":
        return replace(self, orientation=-self.orientation)


Curve = Circle2D | Polyline | Triangle


def is_closed(curve) -> bool:
    if isinstance(curve, Circle2D) or isinstance(curve, Triangle):
        return True
    return bool(curve.closed)


@dataclass
class TriangleSampler:
    """Random well-shaped triangles in a ball, on random 2-planes.

    Vertices are drawn on an arbitrary oriented 2-plane through a random
    interior point; candidates thinner than ``min_quality`` are redrawn so
    the boundary quadrature stays well-conditioned.
    """

    center: np.ndarray
    radius: float
    min_quality: float = 0.1

    def __post_init__(self):
        self.center = np.asarray(self.center, dtype=np.float64)

    def sample(self, rng: np.random.Generator) -> Triangle:
        k = self.center.shape[0]
        for _ in range(1000):
            basis = rng.standard_normal((k, 2)) if k > 2 else np.eye(2)
            q, _ = np.linalg.qr(basis)
            plane = q[:, :2].T  # (2, k) orthonormal
            mid = self.center + 0.4 * self.radius * _ball_point(rng, k)
            local = 0.45 * self.radius * rng.uniform(-1.0, 1.0, size=(3, 2))
            verts = mid + local @ plane
            if np.any(np.linalg.norm(verts - self.center, axis=1) > self.radius):
                continue
            if triangle_quality(verts) < self.min_quality:
                continue
            return Triangle(verts)
        raise RuntimeError("failed to sample an admissible triangle")


def _ball_point(rng: np.random.Generator, k: int) -> np.ndarray:
    v = rng.standard_normal(k)
    v /= max(np.linalg.norm(v), 1e-30)
    return v * rng.uniform(0.0, 1.0) ** (1.0 / k)
