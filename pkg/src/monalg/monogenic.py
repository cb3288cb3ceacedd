"""Monogenic functions of the embedded variable and differentiability checks.

Three variants are built in: polynomials in the variable, resolvent kernels
``zeta -> (t e_1 - zeta)^{-1}``, and the principal extension that assembles a
function from per-component holomorphic scalars by contour integration
against the resolvent.  Gateaux quotients and finite-difference residuals of
the characteristic differential conditions probe monogenicity numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraSpec, Element, basis_element, multiply, zero_element
from .algebra import _multiply_coords
from .errors import PoleError
from .frames import Frame, embed_many, frame_coordinates
from .quadrature import trapezoid_periodic
from .resolvent import _resolvent_coords

__all__ = [
    "HolomorphicScalarSpec",
    "MonogenicFunction",
    "Polynomial",
    "PrincipalExtension",
    "ResolventKernel",
    "ScalarCircle",
    "constant",
    "cr_residual",
    "eval_function",
    "gateaux_quotient",
    "zeta",
    "zeta_power",
]


@dataclass(frozen=True)
class HolomorphicScalarSpec:
    """A scalar function of one complex variable, one of three kinds.

    ``polynomial``: coeffs c_0..c_d meaning sum c_p t^p.
    ``exponential``: coeffs (c, a) meaning c * exp(a t).
    ``rational``: coeffs is the numerator, ``denom`` the denominator
    polynomial; evaluable away from the denominator roots.
    """

    kind: str
    coeffs: tuple
    denom: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("polynomial", "exponential", "rational"):
            raise ValueError(f"unknown scalar kind {self.kind!r}")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if self.kind == "exponential" and len(self.coeffs) != 2:
            raise ValueError("exponential scalars take exactly (c, a)")
        if self.kind == "rational":
            if not self.denom:
                raise ValueError("rational scalars need a denominator")
            object.__setattr__(self, "denom", tuple(complex(c) for c in self.denom))
        elif self.denom is not None:
            raise ValueError("denom is only meaningful for rational scalars")

    def poles(self) -> np.ndarray:
        if self.kind != "rational":
            return np.zeros(0, dtype=np.complex128)
        return np.roots(np.asarray(self.denom[::-1], dtype=np.complex128))

    def __call__(self, t):
        t = np.asarray(t, dtype=np.complex128)
        if self.kind == "exponential":
            c, a = self.coeffs
            return c * np.exp(a * t)
        num = _polyval(self.coeffs, t)
        if self.kind == "polynomial":
            return num
        den = _polyval(self.denom, t)
        if np.any(np.abs(den) < 1e-13 * (1.0 + np.abs(t))):
            raise PoleError("rational scalar evaluated at one of its poles")
        return num / den


def _polyval(coeffs, t):
    acc = np.zeros_like(t)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


@dataclass(frozen=True)
class ScalarCircle:
    """A circle in the complex plane for the principal-extension contours."""

    center: complex
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("contour radius must be positive")
        object.__setattr__(self, "center", complex(self.center))


@dataclass(frozen=True)
class Polynomial:
    """The function ``sum_p coeffs[p] * zeta^p`` with element coefficients."""

    coeffs: tuple  # of Element

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = self.coeffs[0].n
        size = max(len(self.coeffs), len(other.coeffs))
        out = []
        for p in range(size):
            a = self.coeffs[p] if p < len(self.coeffs) else zero_element(n)
            b = other.coeffs[p] if p < len(other.coeffs) else zero_element(n)
            out.append(a + b)
        return Polynomial(tuple(out))

    def scale(self, factor: complex) -> "Polynomial":
        return Polynomial(tuple(factor * c for c in self.coeffs))


@dataclass(frozen=True)
class ResolventKernel:
    """The function ``zeta -> (t e_1 - zeta)^{-1}`` for a fixed scalar t."""

    t: complex

    def __post_init__(self):
        object.__setattr__(self, "t", complex(self.t))


@dataclass(frozen=True)
class PrincipalExtension:
    """Assembles a function from holomorphic scalars F_u (idempotent parts)
    and G_s (nilpotent parts) via contour integrals against the resolvent.

    ``contours[u-1]`` must wind once around the u-th spectral value and
    exclude the others; ``None`` picks circles centred on the spectral
    values with radius half the separation.
    """

    F: tuple  # length m of HolomorphicScalarSpec or None
    G: tuple = ()  # length n - m of HolomorphicScalarSpec or None
    contours: tuple | None = None  # length m of ScalarCircle

    def __post_init__(self):
        object.__setattr__(self, "F", tuple(self.F))
        object.__setattr__(self, "G", tuple(self.G))
        if self.contours is not None:
            object.__setattr__(self, "contours", tuple(self.contours))


MonogenicFunction = Polynomial | ResolventKernel | PrincipalExtension


def constant(value: Element) -> Polynomial:
    return Polynomial((value,))


def zeta(spec: AlgebraSpec) -> Polynomial:
    """The identity function of the embedded variable."""
    return Polynomial((zero_element(spec.n), spec.unit()))


def zeta_power(p: int, spec: AlgebraSpec) -> Polynomial:
    """The monomial ``zeta^p`` (p >= 0)."""
    if p < 0:
        raise ValueError("power must be nonnegative")
    coeffs = [zero_element(spec.n) for _ in range(p)] + [spec.unit()]
    return Polynomial(tuple(coeffs))


# -- evaluation ---------------------------------------------------------------


def eval_function(phi: MonogenicFunction, frame: Frame, x, spec: AlgebraSpec) -> Element:
    """Evaluate a built-in function variant at the point ``x``."""
    x = np.asarray(x, dtype=np.float64)
    out = eval_batch(phi, frame, x.reshape(1, -1), spec)
    return Element(out[0])


def eval_batch(phi, frame: Frame, xs, spec: AlgebraSpec) -> np.ndarray:
    """Coordinates of ``phi`` at many points; ``xs`` has shape (N, k).

    ``phi`` is a built-in variant or any callable ``x -> Element`` (plain
    callables are evaluated pointwise).
    """
    xs = np.asarray(xs, dtype=np.float64)
    emb = embed_many(frame, xs)
    if isinstance(phi, Polynomial):
        return _eval_polynomial(phi, emb, spec)
    if isinstance(phi, ResolventKernel):
        return _eval_kernel(phi, emb, spec)
    if isinstance(phi, PrincipalExtension):
        return np.stack([_eval_principal(phi, e, spec) for e in emb])
    if callable(phi):
        rows = []
        for x in xs:
            out = phi(x)
            rows.append(out.coords if isinstance(out, Element) else np.asarray(out))
        return np.stack(rows).astype(np.complex128)
    raise TypeError(f"not an evaluable function: {type(phi).__name__}")


def _eval_polynomial(phi: Polynomial, emb: np.ndarray, spec: AlgebraSpec) -> np.ndarray:
    acc = np.broadcast_to(phi.coeffs[-1].coords, emb.shape).copy()
    for coeff in reversed(phi.coeffs[:-1]):
        acc = _multiply_coords(acc, emb, spec) + coeff.coords
    return acc


def _eval_kernel(phi: ResolventKernel, emb: np.ndarray, spec: AlgebraSpec) -> np.ndarray:
    t = phi.t
    xi = emb[..., : spec.m]
    dist = np.abs(t - xi)
    if np.any(dist <= 1e-13 * (1.0 + abs(t))):
        u = int(np.argwhere(dist <= 1e-13 * (1.0 + abs(t)))[0][-1]) + 1
        raise PoleError(f"kernel parameter t={t} meets spectral value {u}", u=u, t=t)
    return _resolvent_coords(t, emb, spec)


def _auto_contours(xi: np.ndarray, phi: PrincipalExtension, spec: AlgebraSpec):
    """Separating circles around each spectral value."""
    m = spec.m
    contours = []
    for u in range(m):
        constraints = [abs(xi[u] - xi[v]) for v in range(m) if v != u]
        scalars = [phi.F[u]] + [
            g for s, g in enumerate(phi.G) if g is not None and spec.u_map[m + 1 + s] == u + 1
        ]
        for scalar in scalars:
            if scalar is not None:
                constraints.extend(abs(p - xi[u]) for p in scalar.poles())
        if any(c == 0.0 for c in constraints):
            raise PoleError(
                f"cannot separate spectral value {u + 1} from a coincident pole"
            )
        radius = 0.5 * min(constraints) if constraints else 1.0
        contours.append(ScalarCircle(complex(xi[u]), radius))
    return contours


def _check_contour(circle: ScalarCircle, u: int, xi: np.ndarray, scalar_poles=()):
    """Enclosure of xi_u, exclusion of the others, no pole on or inside."""
    margin = 1e-8 * circle.radius
    inside = abs(xi[u] - circle.center)
    if inside >= circle.radius - margin:
        raise PoleError(
            f"contour {u + 1} does not strictly enclose its spectral value", u=u + 1
        )
    for v, val in enumerate(xi):
        if v == u:
            continue
        d = abs(val - circle.center)
        if abs(d - circle.radius) <= margin:
            raise PoleError(f"spectral value {v + 1} lies on contour {u + 1}", u=v + 1)
        if d < circle.radius:
            raise PoleError(
                f"contour {u + 1} also encloses spectral value {v + 1}", u=v + 1
            )
    for p in scalar_poles:
        if abs(p - circle.center) <= circle.radius + margin:
            raise PoleError(
                f"a scalar pole at {p} meets or enters contour {u + 1}", t=p
            )


def _contour_integral(scalar, circle: ScalarCircle, emb: np.ndarray, spec: AlgebraSpec):
    """``integral over the circle of scalar(t) * resolvent(t) dt``."""

    def integrand(theta):
        t = circle.center + circle.radius * np.exp(1j * theta)
        dt = 1j * circle.radius * np.exp(1j * theta)
        vals = _resolvent_coords(t, emb[None, :], spec)
        return (scalar(t) * dt)[:, None] * vals

    res = trapezoid_periodic(integrand, tol=1e-12)
    return res.value


def _eval_principal(phi: PrincipalExtension, emb: np.ndarray, spec: AlgebraSpec) -> np.ndarray:
    n, m = spec.n, spec.m
    if len(phi.F) != m:
        raise ValueError(f"expected {m} idempotent scalars, got {len(phi.F)}")
    if phi.G and len(phi.G) != n - m:
        raise ValueError(f"expected {n - m} nilpotent scalars, got {len(phi.G)}")
    xi = emb[:m]
    contours = list(phi.contours) if phi.contours is not None else _auto_contours(xi, phi, spec)
    if len(contours) != m:
        raise ValueError(f"expected {m} contours, got {len(contours)}")
    for u in range(m):
        poles = []
        scalars = [phi.F[u]] + [
            g for s, g in enumerate(phi.G)
            if g is not None and spec.u_map[m + 1 + s] == u + 1
        ]
        for scalar in scalars:
            if scalar is not None:
                poles.extend(scalar.poles())
        _check_contour(contours[u], u, xi, poles)

    total = np.zeros(n, dtype=np.complex128)
    for u in range(m):
        if phi.F[u] is None:
            continue
        block = _contour_integral(phi.F[u], contours[u], emb, spec)
        total += _multiply_coords(basis_element(u + 1, n).coords, block, spec)
    for s_off, g in enumerate(phi.G):
        if g is None:
            continue
        s = m + 1 + s_off
        u = spec.u_map[s]
        block = _contour_integral(g, contours[u - 1], emb, spec)
        total += _multiply_coords(basis_element(s, n).coords, block, spec)
    return total / (2j * np.pi)


# -- differentiability probes -------------------------------------------------


def cr_residual(phi: MonogenicFunction, frame: Frame, x, h: float, spec: AlgebraSpec):
    """Central-difference residuals of the differential conditions.

    Returns the k-1 norms ``|| D_j phi - (D_1 phi) e_j ||`` for j = 2..k,
    where D_j is the second-order central difference in the j-th coordinate.
    For monogenic functions these decay like h^2 (or sit at roundoff when
    the difference is exact).
    """
    if h <= 0:
        raise ValueError("step must be positive")
    x = np.asarray(x, dtype=np.float64)
    k = frame.k
    stencil = np.concatenate([x + h * np.eye(k), x - h * np.eye(k)], axis=0)
    vals = eval_batch(phi, frame, stencil, spec)
    derivs = (vals[:k] - vals[k:]) / (2.0 * h)  # row j-1 is D_j
    residuals = []
    for j in range(2, k + 1):
        model = _multiply_coords(derivs[0], frame.a[j - 1], spec)
        residuals.append(float(np.linalg.norm(derivs[j - 1] - model)))
    return residuals


def gateaux_quotient(phi: MonogenicFunction, frame: Frame, x, direction: Element,
                     eps: float, spec: AlgebraSpec) -> Element:
    """Difference quotient ``(phi(zeta + eps h) - phi(zeta)) / eps``.

    The direction must lie in the span of the frame; its real coordinates
    are recovered and the shift happens in parameter space.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    x = np.asarray(x, dtype=np.float64)
    alpha = frame_coordinates(frame, direction)
    vals = eval_batch(phi, frame, np.stack([x + eps * alpha, x]), spec)
    return Element((vals[0] - vals[1]) / eps)
