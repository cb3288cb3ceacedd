"""Closed-form resolvent and inverse of embedded points.

For ``zeta = sum_j x_j e_j`` the resolvent ``(t e_1 - zeta)^{-1}`` expands as

    sum_u (t - xi_u)^{-1} I_u
        + sum_{s > m} sum_{r=2}^{s-m+1} Q_{r,s} (t - xi_{u_s})^{-r} I_s

with coefficients built from the nilpotent components ``T_s`` of ``zeta``
through the recurrences

    Q_{2,s} = T_s,      Q_{r,s} = sum_{q=r+m-2}^{s-1} Q_{r-1,q} B_{q,s},
    B_{q,s} = sum_{p=m+1}^{s-1} T_p * (I_s-coefficient of I_q I_p).

The inverse uses the mirrored coefficients ``Qt_{r,s} = (-1)^(r-1) Q_{r,s}``
evaluated at ``t = 0``:  ``zeta^{-1} = sum_u xi_u^{-1} I_u + sum_s A_s I_s``
with ``A_s = sum_r Qt_{r,s} xi_{u_s}^{-r}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraSpec, Element
from .errors import PoleError, SingularElementError
from .frames import Frame, embed_many

__all__ = [
    "ResolventCoefficients",
    "inverse",
    "recurrence_coefficients",
    "resolvent",
]


@dataclass(frozen=True)
class ResolventCoefficients:
    """The maps T_s, B_{q,s}, Q_{r,s} and the sign-mirrored Qt_{r,s}.

    Keys are 1-based basis indices: ``T[s]``, ``B[(q, s)]``, ``Q[(r, s)]``
    with r the pole order.  Empty for a semisimple algebra.
    """

    T: dict
    B: dict
    Q: dict
    Qt: dict


def _b_value(spec: AlgebraSpec, q: int, s: int, t_of):
    """B_{q,s} given a lookup ``t_of(p)`` for the nilpotent components."""
    acc = 0.0 + 0.0j
    for p, coeff in spec._b_support.get((q, s), ()):
        if p <= s - 1:
            acc = acc + t_of(p) * coeff
    return acc


def _q_tables(spec: AlgebraSpec, t_of, sign: float):
    """Recurrence tables Q (sign=+1) or Qt (sign=-1) as {(r, s): value}.

    ``t_of(p)`` may return scalars or arrays; the recurrences broadcast.
    """
    n, m = spec.n, spec.m
    b: dict = {}
    q_map: dict = {}
    for s in range(m + 1, n + 1):
        q_map[(2, s)] = sign * t_of(s)
        for r in range(3, s - m + 2):
            acc = 0.0 + 0.0j
            for q in range(r + m - 2, s):
                key = (q, s)
                if key not in b:
                    b[key] = _b_value(spec, q, s, t_of)
                acc = acc + q_map[(r - 1, q)] * b[key]
            q_map[(r, s)] = sign * acc
    return q_map, b


def recurrence_coefficients(frame: Frame, x, spec: AlgebraSpec) -> ResolventCoefficients:
    """Evaluate T, B, Q, Qt at one point ``x``."""
    x = np.asarray(x, dtype=np.float64)
    coords = x @ frame.a
    n, m = spec.n, spec.m
    t_map = {s: complex(coords[s - 1]) for s in range(m + 1, n + 1)}
    t_of = t_map.__getitem__
    q_map, b_partial = _q_tables(spec, t_of, +1.0)
    qt_map, _ = _q_tables(spec, t_of, -1.0)
    # complete B over the full documented index range
    b_map = {}
    for s in range(m + 1, n + 1):
        for q in range(m + 1, s):
            b_map[(q, s)] = complex(b_partial.get((q, s), _b_value(spec, q, s, t_of)))
    return ResolventCoefficients(
        T=t_map,
        B=b_map,
        Q={k: complex(v) for k, v in q_map.items()},
        Qt={k: complex(v) for k, v in qt_map.items()},
    )


# -- batch kernels -----------------------------------------------------------


def _inverse_coords(emb: np.ndarray, spec: AlgebraSpec) -> np.ndarray:
    """Inverse coordinates for embedded points; ``emb`` has shape (..., n).

    No invertibility guard here; callers check the spectrum first.
    """
    n, m = spec.n, spec.m
    xi = emb[..., :m]
    out = np.empty_like(emb)
    out[..., :m] = 1.0 / xi
    if m == n:
        return out
    t_of = lambda p: emb[..., p - 1]
    qt_map, _ = _q_tables(spec, t_of, -1.0)
    for s in range(m + 1, n + 1):
        xius = xi[..., spec.u_map[s] - 1]
        acc = np.zeros(emb.shape[:-1], dtype=np.complex128)
        for r in range(2, s - m + 2):
            acc = acc + qt_map[(r, s)] * xius ** (-r)
        out[..., s - 1] = acc
    return out


def _resolvent_coords(t, emb: np.ndarray, spec: AlgebraSpec) -> np.ndarray:
    """Resolvent coordinates; ``t`` broadcasts against ``emb[..., 0]``."""
    n, m = spec.n, spec.m
    t = np.asarray(t, dtype=np.complex128)
    xi = emb[..., :m]
    shape = np.broadcast_shapes(t.shape, emb.shape[:-1])
    out = np.empty(shape + (n,), dtype=np.complex128)
    out[..., :m] = 1.0 / (t[..., None] - xi)
    if m == n:
        return out
    t_of = lambda p: emb[..., p - 1]
    q_map, _ = _q_tables(spec, t_of, +1.0)
    for s in range(m + 1, n + 1):
        denom = t - xi[..., spec.u_map[s] - 1]
        acc = np.zeros(shape, dtype=np.complex128)
        for r in range(2, s - m + 2):
            acc = acc + q_map[(r, s)] * denom ** (-r)
        out[..., s - 1] = acc
    return out


# -- public operations -------------------------------------------------------


def resolvent(t: complex, frame: Frame, x, spec: AlgebraSpec) -> Element:
    """The element ``(t e_1 - zeta)^{-1}`` for ``zeta = embed(frame, x)``.

    Raises :class:`PoleError` when ``t`` collides with a spectral value
    (relative threshold 1e-13).
    """
    x = np.asarray(x, dtype=np.float64)
    emb = x @ frame.a
    t = complex(t)
    for u in range(spec.m):
        if abs(t - emb[u]) <= 1e-13 * (1.0 + abs(t)):
            raise PoleError(
                f"t={t} collides with spectral value xi_{u + 1}={complex(emb[u])}",
                u=u + 1,
                t=t,
            )
    return Element(_resolvent_coords(t, emb, spec))


def inverse(frame: Frame, x, spec: AlgebraSpec) -> Element:
    """Closed-form inverse of the embedded point ``zeta = embed(frame, x)``.

    Raises :class:`SingularElementError` when some ``xi_u`` vanishes.
    """
    x = np.asarray(x, dtype=np.float64)
    emb = x @ frame.a
    scale = max(1.0, float(np.linalg.norm(x)))
    offending = [u + 1 for u in range(spec.m) if abs(emb[u]) <= 1e-13 * scale]
    if offending:
        raise SingularElementError(
            f"embedded point is not invertible (xi vanishes at u={offending})",
            xi=emb[: spec.m],
            offending=offending,
        )
    return Element(_inverse_coords(emb, spec))


def inverse_many(frame: Frame, xs, spec: AlgebraSpec, min_abs_xi: float = 0.0) -> np.ndarray:
    """Batch inverse coordinates for points ``xs`` of shape (..., k).

    Raises :class:`SingularElementError` when any point comes within
    ``max(min_abs_xi, 1e-13)`` of the noninvertible locus.
    """
    emb = embed_many(frame, xs)
    xi = emb[..., : spec.m]
    floor = max(min_abs_xi, 1e-13)
    bad = np.abs(xi) <= floor
    if np.any(bad):
        where = np.argwhere(bad)[0]
        raise SingularElementError(
            f"batch contains a point within {floor:g} of the noninvertible locus "
            f"(entry {tuple(int(i) for i in where[:-1])}, u={int(where[-1]) + 1})",
            offending=[int(where[-1]) + 1],
        )
    return _inverse_coords(emb, spec)
