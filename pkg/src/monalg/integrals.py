"""Curvilinear integrals and the integral-theorem verification checks.

The line integral of an algebra-valued function against ``dzeta`` is the
quadrature of ``psi(zeta(tau)) * zeta'(tau)``.  On top of it sit the checks:
closed-curve integrals of monogenic functions vanish, triangle boundaries
give the Morera-style identity, and the integral formula reproduces function
values after scaling by the algebra constant ``lambda = integral of
zeta^{-1} dzeta`` over an admissible circle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraSpec, Element, multiply
from .algebra import _multiply_coords
from .curves import Circle2D, Triangle, TriangleSampler, is_closed
from .errors import EmbracingError, IntegrationError, MonalgError
from .frames import Frame, embed_many
from .monogenic import eval_batch, eval_function
from .quadrature import gauss_segment, trapezoid_periodic
from .resolvent import _inverse_coords

__all__ = [
    "EmbraceCertificate",
    "IntegralResult",
    "LambdaResult",
    "VerificationReport",
    "cauchy_formula_check",
    "cauchy_theorem_check",
    "compute_lambda",
    "line_integral",
    "matched_lambda_circle",
    "morera_check",
    "winding_certificate",
]


@dataclass
class IntegralResult:
    """Line-integral value with quadrature diagnostics."""

    value: Element
    error_estimate: float
    nodes: int
    converged: bool
    history: list = field(default_factory=list)


@dataclass(frozen=True)
class EmbraceCertificate:
    """Winding numbers of the spectral images of a curve around a point."""

    windings: tuple

    @property
    def embraces_once(self) -> bool:
        return all(w == 1 for w in self.windings)

    @property
    def orientation_reversed(self) -> bool:
        return all(w == -1 for w in self.windings)


@dataclass
class VerificationReport:
    """One named check: residual against tolerance plus diagnostics.

    A ``None`` tolerance marks a purely informational measurement that
    cannot fail.
    """

    name: str
    residual: float
    tolerance: float | None
    value: object = None
    reference: object = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        if self.tolerance is None:
            return True
        return self.residual <= self.tolerance


@dataclass
class LambdaResult:
    """The constant ``lambda`` and its component decomposition."""

    value: Element
    idempotent_part: np.ndarray
    nilpotent_residuals: np.ndarray
    windings: tuple
    deviation_from_two_pi_i: float
    error_estimate: float
    nodes: int
    history: list = field(default_factory=list)


# -- line integrals ----------------------------------------------------------


def _locate_failure(psi, frame, xs, taus, spec, exc) -> IntegrationError:
    """Re-evaluate pointwise to name the parameter where evaluation failed."""
    for tau, x in zip(taus, xs):
        try:
            _evaluate(psi, frame, x.reshape(1, -1), spec)
        except MonalgError:
            return IntegrationError(
                f"integrand evaluation failed at tau={float(tau):.6g}: {exc}",
                tau=float(tau),
            )
    return IntegrationError(f"integrand evaluation failed: {exc}")


def line_integral(psi, gamma, frame: Frame, spec: AlgebraSpec,
                  tol: float = 1e-10) -> IntegralResult:
    """Integral of ``psi`` against ``dzeta`` along the curve.

    ``psi`` may be a built-in function variant, an object with an
    ``eval_many(frame, xs, spec)`` method, or a pointwise callable
    ``x -> Element``.  Circles refine by node doubling, polylines by
    per-segment Gauss panels.
    """
    if isinstance(gamma, Triangle):
        gamma = gamma.boundary()
    if isinstance(gamma, Circle2D):
        return _circle_integral(psi, gamma, frame, spec, tol)
    return _polyline_integral(psi, gamma, frame, spec, tol)


def _evaluate(psi, frame, xs, spec):
    if hasattr(psi, "eval_many"):
        return psi.eval_many(frame, xs, spec)
    return eval_batch(psi, frame, xs, spec)


def _circle_integral(psi, gamma, frame, spec, tol):
    def integrand(taus):
        xs = gamma.points(taus)
        try:
            vals = _evaluate(psi, frame, xs, spec)
        except MonalgError as exc:
            raise _locate_failure(psi, frame, xs, taus, spec, exc) from exc
        dz = gamma.tangents(taus) @ frame.a
        return _multiply_coords(vals, dz, spec)

    opts = gamma.quadrature
    res = trapezoid_periodic(integrand, tol=tol, start=opts.nodes_on_circle, cap=opts.cap)
    value = Element(gamma.orientation * res.value)
    return IntegralResult(value, res.error_estimate, res.nodes, res.converged, res.history)


def _polyline_integral(psi, gamma, frame, spec, tol):
    total = np.zeros(spec.n, dtype=np.complex128)
    error = 0.0
    nodes = 0
    converged = True
    history = []
    seg_tol = tol / max(1, len(gamma.segments()))
    for a_pt, b_pt in gamma.segments():
        direction = np.asarray(b_pt) - np.asarray(a_pt)
        dz = direction @ frame.a

        def integrand(taus, a_pt=a_pt, direction=direction):
            xs = a_pt + taus[:, None] * direction
            try:
                return _evaluate(psi, frame, xs, spec)
            except MonalgError as exc:
                raise _locate_failure(psi, frame, xs, taus, spec, exc) from exc

        opts = gamma.quadrature
        res = gauss_segment(integrand, tol=seg_tol, order=opts.nodes_per_segment,
                            cap=opts.segment_cap)
        total = total + _multiply_coords(res.value, dz, spec)
        error += res.error_estimate * float(np.linalg.norm(dz))
        nodes += res.nodes
        converged = converged and res.converged
        history.extend(res.history)
    value = Element(gamma.orientation * total)
    return IntegralResult(value, error, nodes, converged, history)


# -- winding numbers ----------------------------------------------------------


def _curve_loop_points(gamma, density: int) -> np.ndarray:
    """Closed loop of sample points in canonical traversal order."""
    if isinstance(gamma, Triangle):
        gamma = gamma.boundary()
    if isinstance(gamma, Circle2D):
        return gamma.sample(density)
    if not gamma.closed:
        raise ValueError("winding numbers need a closed curve")
    return gamma.sample(per_segment=density)


def winding_certificate(gamma, frame: Frame, center_x, spec: AlgebraSpec,
                        density: int = 256) -> EmbraceCertificate:
    """Winding number of each spectral image around the image of the center.

    Computed by summed argument increments with node doubling until every
    increment stays below pi/2.  Raises :class:`IntegrationError` when the
    curve meets the shifted noninvertible locus.
    """
    center = np.asarray(center_x, dtype=np.float64)
    xi0 = (center @ frame.a)[: spec.m]
    orientation = getattr(gamma, "orientation", 1)
    scale = 1.0 + float(np.linalg.norm(center))
    for _ in range(12):
        pts = _curve_loop_points(gamma, density)
        w = (pts @ frame.a)[:, : spec.m] - xi0  # (N, m)
        radii = np.abs(w)
        if np.min(radii) <= 1e-12 * scale:
            tau_idx = int(np.argmin(np.min(radii, axis=1)))
            raise IntegrationError(
                "curve passes through the shifted noninvertible locus "
                f"near sample {tau_idx}",
                tau=float(tau_idx) / len(pts),
            )
        ratios = np.roll(w, -1, axis=0) / w
        steps = np.angle(ratios)
        if np.max(np.abs(steps)) < 0.5 * np.pi:
            sums = steps.sum(axis=0) / (2.0 * np.pi)
            windings = np.rint(sums)
            if np.max(np.abs(sums - windings)) < 1e-6:
                return EmbraceCertificate(
                    windings=tuple(int(orientation * v) for v in windings)
                )
        density *= 2
    raise IntegrationError("winding computation failed to stabilise")


# -- the constant lambda -------------------------------------------------------


class _InverseIntegrand:
    """Batch evaluator of ``x -> (embedded x)^{-1}`` with a spectral floor."""

    def __init__(self, shift=None, floor=1e-8):
        self.shift = shift
        self.floor = floor

    def eval_many(self, frame, xs, spec):
        pts = xs if self.shift is None else xs - self.shift
        emb = embed_many(frame, pts)
        xi = emb[..., : spec.m]
        if np.any(np.abs(xi) <= self.floor):
            bad = int(np.argwhere(np.abs(xi) <= self.floor)[0][0])
            raise IntegrationError(
                f"curve sample {bad} lies within {self.floor:g} of the "
                "noninvertible locus"
            )
        return _inverse_coords(emb, spec)


def compute_lambda(spec: AlgebraSpec, frame: Frame, circle, tol: float = 1e-10,
                   singular_floor: float = 1e-8) -> LambdaResult:
    """The element ``integral of zeta^{-1} dzeta`` over the circle.

    Also reports the idempotent projection (equal to 2 pi i times the unit
    for winding-one circles) and the leftover nilpotent component integrals.
    """
    cert = winding_certificate(circle, frame, np.zeros(circle.k), spec)
    res = line_integral(_InverseIntegrand(floor=singular_floor), circle, frame, spec, tol=tol)
    lam = res.value
    two_pi_i = 2j * np.pi * spec.unit_coords()
    return LambdaResult(
        value=lam,
        idempotent_part=lam.coords[: spec.m].copy(),
        nilpotent_residuals=lam.coords[spec.m:].copy(),
        windings=cert.windings,
        deviation_from_two_pi_i=float(np.linalg.norm(lam.coords - two_pi_i)),
        error_estimate=res.error_estimate,
        nodes=res.nodes,
        history=res.history,
    )


def matched_lambda_circle(gamma, center_x) -> Circle2D:
    """A circle through the origin-centred copy of ``gamma`` for lambda.

    A circle translates directly; a closed polyline contributes its best-fit
    plane and its mean vertex distance as the radius.
    """
    center = np.asarray(center_x, dtype=np.float64)
    if isinstance(gamma, Circle2D):
        return Circle2D(np.zeros(gamma.k), gamma.radius, gamma.plane,
                        orientation=gamma.orientation, quadrature=gamma.quadrature)
    if isinstance(gamma, Triangle):
        gamma = gamma.boundary()
    rel = gamma.vertices - center
    _, sv, vh = np.linalg.svd(rel, full_matrices=False)
    if sv.size < 2 or sv[1] <= 1e-12 * sv[0]:
        raise ValueError("curve is degenerate; cannot fit a plane for lambda")
    plane = vh[:2].copy()
    # match the rotational sense of the polyline inside the fitted plane
    a = rel @ plane[0]
    b = rel @ plane[1]
    signed_area = 0.5 * float(np.sum(a * np.roll(b, -1) - np.roll(a, -1) * b))
    if signed_area < 0:
        plane[1] = -plane[1]
    radius = float(np.mean(np.linalg.norm(rel, axis=1)))
    return Circle2D(np.zeros(gamma.k), radius, plane,
                    orientation=gamma.orientation, quadrature=gamma.quadrature)


# -- named checks ---------------------------------------------------------------


def _max_norm_on_curve(psi, gamma, frame, spec, samples: int = 128) -> float:
    if isinstance(gamma, Triangle):
        gamma = gamma.boundary()
    pts = gamma.sample(samples) if isinstance(gamma, Circle2D) else gamma.sample(per_segment=32)
    vals = _evaluate(psi, frame, pts, spec)
    return float(np.max(np.linalg.norm(vals, axis=-1)))


def cauchy_theorem_check(phi, gamma_closed, frame: Frame, spec: AlgebraSpec,
                         tol: float | None = None) -> VerificationReport:
    """Closed-curve integral of a monogenic function; the residual is its norm."""
    if not is_closed(gamma_closed):
        raise ValueError("the integral-theorem check needs a closed curve")
    res = line_integral(phi, gamma_closed, frame, spec)
    if tol is None:
        scale = gamma_closed.length() * max(1.0, _max_norm_on_curve(phi, gamma_closed, frame, spec))
        tol = 1e-9 * scale
    return VerificationReport(
        name="closed-curve-integral",
        residual=res.value.norm(),
        tolerance=tol,
        value=res.value,
        reference=0.0,
        diagnostics={
            "nodes": res.nodes,
            "converged": res.converged,
            "quadrature_error": res.error_estimate,
            "history": res.history,
        },
    )


def morera_check(phi, frame: Frame, spec: AlgebraSpec, sampler: TriangleSampler,
                 n_triangles: int = 200, tol: float = 1e-8,
                 rng: np.random.Generator | None = None) -> VerificationReport:
    """Worst triangle-boundary integral over randomly sampled triangles."""
    rng = rng if rng is not None else np.random.default_rng(0)
    worst = 0.0
    worst_triangle = None
    nodes = 0
    for _ in range(n_triangles):
        tri = sampler.sample(rng)
        res = line_integral(phi, tri, frame, spec)
        nodes += res.nodes
        norm = res.value.norm()
        if norm > worst:
            worst = norm
            worst_triangle = tri.vertices.tolist()
    return VerificationReport(
        name="triangle-boundary-integral",
        residual=worst,
        tolerance=tol,
        value=worst,
        reference=0.0,
        diagnostics={
            "triangles": n_triangles,
            "nodes": nodes,
            "worst_triangle": worst_triangle,
        },
    )


class _FormulaIntegrand:
    """Batch evaluator of ``x -> phi(x) * (embedded (x - x0))^{-1}``."""

    def __init__(self, phi, center, floor=1e-8):
        self.phi = phi
        self.center = np.asarray(center, dtype=np.float64)
        self.floor = floor

    def eval_many(self, frame, xs, spec):
        vals = _evaluate(self.phi, frame, xs, spec)
        emb = embed_many(frame, xs - self.center)
        xi = emb[..., : spec.m]
        if np.any(np.abs(xi) <= self.floor):
            raise IntegrationError(
                f"curve approaches the shifted noninvertible locus (within {self.floor:g})"
            )
        return _multiply_coords(vals, _inverse_coords(emb, spec), spec)


def cauchy_formula_check(phi, center_x, gamma, frame: Frame, spec: AlgebraSpec,
                         lambda_circle: Circle2D | None = None,
                         tol: float = 1e-8) -> VerificationReport:
    """Compare ``lambda * phi(center)`` with the formula integral around it."""
    center = np.asarray(center_x, dtype=np.float64)
    cert = winding_certificate(gamma, frame, center, spec)
    if not cert.embraces_once:
        raise EmbracingError(
            f"curve does not embrace the center once: windings {cert.windings}",
            certificate=cert,
        )
    if lambda_circle is None:
        lambda_circle = matched_lambda_circle(gamma, center)
    lam = compute_lambda(spec, frame, lambda_circle)
    if any(w != 1 for w in lam.windings):
        raise EmbracingError(
            f"lambda circle does not wind once: {lam.windings}",
            certificate=EmbraceCertificate(lam.windings),
        )
    res = line_integral(_FormulaIntegrand(phi, center), gamma, frame, spec)
    reference = multiply(lam.value, eval_function(phi, frame, center, spec), spec)
    residual = (reference - res.value).norm()
    return VerificationReport(
        name="integral-formula",
        residual=residual,
        tolerance=tol,
        value=res.value,
        reference=reference,
        diagnostics={
            "windings": cert.windings,
            "lambda_deviation": lam.deviation_from_two_pi_i,
            "nodes": res.nodes,
            "converged": res.converged,
            "history": res.history,
        },
    )
