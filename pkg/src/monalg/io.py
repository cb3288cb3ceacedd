"""File formats: algebra, frame, curve, and function specs plus reports.

All files are JSON.  Complex scalars are stored as explicit re/im fields or
two-element arrays so the files stay diffable; loaders reject malformed
content with position information where available.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .algebra import AlgebraSpec, Element
from .curves import Circle2D, Polyline, QuadratureOptions, Triangle
from .errors import MonalgError, SpecFormatError
from .frames import Frame, validate_frame
from .integrals import VerificationReport
from .monogenic import (
    HolomorphicScalarSpec,
    Polynomial,
    PrincipalExtension,
    ResolventKernel,
    ScalarCircle,
)

__all__ = [
    "load_algebra",
    "load_curve",
    "load_frame",
    "load_function",
    "reports_to_csv",
    "reports_to_json",
    "reports_to_text",
    "save_algebra",
    "save_frame",
]


def _read_json(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecFormatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _as_complex(obj, where):
    if isinstance(obj, (int, float)):
        return complex(obj)
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return complex(float(obj[0]), float(obj[1]))
    raise SpecFormatError(f"{where}: expected a number or [re, im] pair, got {obj!r}")


# -- algebra files ------------------------------------------------------------


def load_algebra(path) -> AlgebraSpec:
    """Read {n, m, u_map: [{s, u}], products: [{left, right, target, ...}]}."""
    data = _read_json(path)
    try:
        n = int(data["n"])
        m = int(data["m"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecFormatError(f"{path}: need integer fields 'n' and 'm'") from exc
    u_map = None
    if "u_map" in data and data["u_map"] is not None:
        u_map = {}
        for entry in data["u_map"]:
            try:
                u_map[int(entry["s"])] = int(entry["u"])
            except (KeyError, TypeError, ValueError) as exc:
                raise SpecFormatError(
                    f"{path}: u_map entries need integer 's' and 'u': {entry!r}"
                ) from exc
    products = []
    for entry in data.get("products", []):
        try:
            key = (int(entry["left"]), int(entry["right"]), int(entry["target"]))
            value = complex(float(entry.get("value_re", 0.0)), float(entry.get("value_im", 0.0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecFormatError(
                f"{path}: product entries need left/right/target and value_re/value_im: {entry!r}"
            ) from exc
        products.append((key, value))
    try:
        return AlgebraSpec(n, m, products, u_map=u_map)
    except MonalgError as exc:
        raise SpecFormatError(f"{path}: {exc}") from exc


def save_algebra(spec: AlgebraSpec, path) -> None:
    data = {
        "n": spec.n,
        "m": spec.m,
        "u_map": [{"s": s, "u": u} for s, u in sorted(spec.u_map.items())],
        "products": [
            {
                "left": left,
                "right": right,
                "target": target,
                "value_re": value.real,
                "value_im": value.imag,
            }
            for (left, right, target), value in sorted(spec.products.items())
        ],
    }
    Path(path).write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")


# -- frame files ---------------------------------------------------------------


def load_frame(path, spec: AlgebraSpec) -> Frame:
    """Read {k, rows: [[[re, im] x n] x k]} and validate against the spec."""
    data = _read_json(path)
    try:
        k = int(data["k"])
        rows = data["rows"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecFormatError(f"{path}: need fields 'k' and 'rows'") from exc
    if len(rows) != k:
        raise SpecFormatError(f"{path}: expected {k} rows, found {len(rows)}")
    a = np.zeros((k, spec.n), dtype=np.complex128)
    for j, row in enumerate(rows):
        if len(row) != spec.n:
            raise SpecFormatError(
                f"{path}: row {j + 1} has {len(row)} coefficients, expected {spec.n}"
            )
        for r, pair in enumerate(row):
            a[j, r] = _as_complex(pair, f"{path}: row {j + 1}, coefficient {r + 1}")
    frame = Frame(a)
    try:
        validate_frame(frame, spec)
    except MonalgError as exc:
        raise SpecFormatError(f"{path}: {exc}") from exc
    return frame


def save_frame(frame: Frame, path) -> None:
    rows = [[[c.real, c.imag] for c in row] for row in frame.a]
    Path(path).write_text(
        json.dumps({"k": frame.k, "rows": rows}, indent=2, sort_keys=True) + "\n"
    )


# -- curve files -----------------------------------------------------------------


def load_curve(path):
    """Read a tagged curve record: circle2d, polyline, or triangle."""
    data = _read_json(path)
    kind = data.get("kind")
    quad = QuadratureOptions(
        nodes_on_circle=int(data.get("nodes_on_circle", 64)),
        nodes_per_segment=int(data.get("nodes_per_segment", 16)),
        cap=int(data.get("refinement_cap", 2**16)),
    )
    try:
        if kind == "circle2d":
            return Circle2D(
                np.asarray(data["center"], dtype=float),
                float(data["radius"]),
                np.asarray(data["plane"], dtype=float),
                orientation=int(data.get("orientation", 1)),
                quadrature=quad,
            )
        if kind == "polyline":
            return Polyline(
                np.asarray(data["vertices"], dtype=float),
                closed=bool(data.get("closed", False)),
                quadrature=quad,
            )
        if kind == "triangle":
            return Triangle(np.asarray(data["vertices"], dtype=float), quadrature=quad)
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecFormatError(f"{path}: malformed {kind} record: {exc}") from exc
    raise SpecFormatError(f"{path}: unknown curve kind {kind!r}")


# -- function files ----------------------------------------------------------------


def _load_scalar(data, where) -> HolomorphicScalarSpec:
    try:
        kind = data["kind"]
        coeffs = tuple(_as_complex(c, where) for c in data["coeffs"])
        denom = data.get("denom")
        if denom is not None:
            denom = tuple(_as_complex(c, where) for c in denom)
        return HolomorphicScalarSpec(kind, coeffs, denom=denom)
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecFormatError(f"{where}: malformed scalar spec: {exc}") from exc


def load_function(path, spec: AlgebraSpec):
    """Read a tagged function record for one of the three variants."""
    data = _read_json(path)
    variant = data.get("variant")
    if variant == "polynomial":
        coeffs = []
        for i, row in enumerate(data.get("coeffs", [])):
            if len(row) != spec.n:
                raise SpecFormatError(
                    f"{path}: coefficient {i} has {len(row)} coordinates, expected {spec.n}"
                )
            coeffs.append(
                Element([_as_complex(c, f"{path}: coefficient {i}") for c in row])
            )
        if not coeffs:
            raise SpecFormatError(f"{path}: polynomial needs at least one coefficient")
        return Polynomial(tuple(coeffs))
    if variant == "resolvent_kernel":
        return ResolventKernel(_as_complex(data.get("t"), f"{path}: field 't'"))
    if variant == "principal_extension":
        f_specs = tuple(
            None if entry is None else _load_scalar(entry, f"{path}: F[{i}]")
            for i, entry in enumerate(data.get("F", []))
        )
        g_specs = tuple(
            None if entry is None else _load_scalar(entry, f"{path}: G[{i}]")
            for i, entry in enumerate(data.get("G", []))
        )
        contours = data.get("contours")
        if contours is not None:
            contours = tuple(
                ScalarCircle(
                    _as_complex(c["center"], f"{path}: contour {i}"), float(c["radius"])
                )
                for i, c in enumerate(contours)
            )
        if len(f_specs) != spec.m:
            raise SpecFormatError(f"{path}: expected {spec.m} F entries, got {len(f_specs)}")
        if g_specs and len(g_specs) != spec.n - spec.m:
            raise SpecFormatError(
                f"{path}: expected {spec.n - spec.m} G entries, got {len(g_specs)}"
            )
        return PrincipalExtension(F=f_specs, G=g_specs, contours=contours)
    raise SpecFormatError(f"{path}: unknown function variant {variant!r}")


# -- reports -------------------------------------------------------------------------


def _jsonable(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Element):
        return [[c.real, c.imag] for c in value.coords]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, np.complexfloating):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return repr(value)


def report_record(report: VerificationReport) -> dict:
    return {
        "name": report.name,
        "passed": report.passed,
        "residual": report.residual,
        "tolerance": report.tolerance,
        "value": _jsonable(report.value),
        "reference": _jsonable(report.reference),
        "diagnostics": _jsonable(report.diagnostics),
    }


def reports_to_json(reports, config: dict | None = None) -> str:
    """Deterministic structured report: same inputs give identical bytes."""
    payload = {
        "config": _jsonable(config or {}),
        "checks": [report_record(r) for r in reports],
        "all_passed": all(r.passed for r in reports),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def reports_to_text(reports) -> str:
    lines = []
    width = max((len(r.name) for r in reports), default=10)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        tol = "unconditional" if r.tolerance is None else f"tol={r.tolerance:.3g}"
        lines.append(f"{status}  {r.name:<{width}}  residual={r.residual:.3e}  {tol}")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def reports_to_csv(reports, path) -> None:
    """Refinement series (nodes vs successive change) for convergence plots."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["check", "nodes", "delta"])
        for r in reports:
            for nodes, delta in r.diagnostics.get("history", []):
                writer.writerow([r.name, nodes, repr(float(delta))])
