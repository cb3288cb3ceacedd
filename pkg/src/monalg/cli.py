"""Command-line front end.

Subcommands: ``validate`` an algebra file, ``verify`` named suites,
``lambda`` for the integral constant across several circles, ``predicates``
for the structure-constant and frame conditions, and ``list`` for the
built-ins.  Experiments can be described by a JSON config file; flags
override file fields.  Exit status 0 means every check passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .algebra import validate_algebra
from .catalog import builtin_algebra, builtin_frames, list_builtins
from .curves import Circle2D, QuadratureOptions, coordinate_plane
from .errors import MonalgError, SpecFormatError
from .integrals import VerificationReport, compute_lambda
from .io import (
    load_algebra,
    load_frame,
    reports_to_csv,
    reports_to_json,
    reports_to_text,
)
from .predicates import theorem5_predicate, theorem6_predicate, theorem7_predicate
from .suites import SUITES, run_suites

__all__ = ["ExperimentConfig", "main", "run_experiment"]


@dataclass
class ExperimentConfig:
    """One archivable experiment: inputs, checks, tolerances, outputs."""

    algebra: str = ""
    frame: str | None = None
    suites: list = field(default_factory=lambda: ["all"])
    tol: float | None = None
    seed: int = 0
    out: str | None = None
    nodes_cap: int = 2**16

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        try:
            data = json.loads(Path(path).read_text())
        except OSError as exc:
            raise SpecFormatError(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise SpecFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise SpecFormatError(f"{path}: unknown config fields {sorted(unknown)}")
        return cls(**data)

    def merge_flags(self, args) -> "ExperimentConfig":
        if args.algebra:
            self.algebra = args.algebra
        if getattr(args, "frame", None):
            self.frame = args.frame
        if getattr(args, "suite", None):
            self.suites = [s for chunk in args.suite for s in chunk.split(",")]
        if getattr(args, "tol", None) is not None:
            self.tol = args.tol
        if getattr(args, "seed", None) is not None:
            self.seed = args.seed
        if getattr(args, "out", None):
            self.out = args.out
        if getattr(args, "nodes_cap", None) is not None:
            self.nodes_cap = args.nodes_cap
        return self


def _resolve_algebra(name: str):
    """A built-in name or a JSON file path; returns (spec, display_name)."""
    if not name:
        raise SpecFormatError("no algebra given; use --algebra NAME_OR_FILE")
    path = Path(name)
    if path.suffix == ".json" or path.exists():
        return load_algebra(path), str(path)
    return builtin_algebra(name), name


def _resolve_frames(spec, frame_ref, algebra_name) -> dict:
    if frame_ref is None:
        try:
            return builtin_frames(spec)
        except SpecFormatError as exc:
            raise SpecFormatError(
                f"{algebra_name} has no built-in frames; pass --frame FILE ({exc})"
            ) from exc
    if frame_ref in ("default", "in-s"):
        # suites address the primary frame by the "default" key
        return {"default": builtin_frames(spec)[frame_ref]}
    return {"default": load_frame(frame_ref, spec)}


def _suite_options(config: ExperimentConfig, spec, algebra_name) -> dict:
    options = {"nodes_cap": config.nodes_cap}
    if config.tol is not None:
        for key in ("axiom_tol", "oracle_tol", "cr_tol", "lambda_tol",
                    "morera_tol", "formula_tol"):
            options[key] = config.tol
    if algebra_name.startswith("example"):
        options["expected_theorem5_condition"] = 4
    elif algebra_name.startswith("semisimple"):
        options["expected_theorem5_condition"] = 1
    return options


def _emit(reports, config: ExperimentConfig, meta: dict) -> int:
    text = reports_to_text(reports)
    sys.stdout.write(text)
    if config.out:
        prefix = Path(config.out)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        payload = reports_to_json(reports, config=meta)
        Path(str(prefix) + ".json").write_text(payload)
        Path(str(prefix) + ".txt").write_text(text)
        reports_to_csv(reports, str(prefix) + ".csv")
    return 0 if all(r.passed for r in reports) else 1


# -- subcommands ----------------------------------------------------------------


def _cmd_list(args) -> int:
    for name, description in list_builtins():
        sys.stdout.write(f"{name:<16} {description}\n")
    return 0


def _cmd_validate(args) -> int:
    config = _config_from(args)
    spec, name = _resolve_algebra(config.algebra)
    tol = config.tol if config.tol is not None else 1e-12
    report = validate_algebra(spec, tolerance=tol)
    rows = [
        ("rule1_ok", report.rule1_ok),
        ("rule2_support_ok", report.rule2_support_ok),
        ("rule3_ok", report.rule3_ok),
        ("unit_ok", report.unit_ok),
        ("assoc_A1_max_residual", f"{report.assoc_A1_max_residual:.3e}"),
        ("assoc_A2_max_residual", f"{report.assoc_A2_max_residual:.3e}"),
        ("nilpotency_index", report.nilpotency_index),
        ("ok", report.ok),
    ]
    for key, value in rows:
        sys.stdout.write(f"{key:<24} {value}\n")
    for warning in report.warnings:
        sys.stdout.write(f"warning: {warning}\n")
    return 0 if report.ok else 1


def run_experiment(config: ExperimentConfig, extra_options: dict | None = None) -> int:
    """Resolve the config, run its suites, emit reports; 0 iff all passed."""
    spec, name = _resolve_algebra(config.algebra)
    frames = _resolve_frames(spec, config.frame, name)
    options = _suite_options(config, spec, name)
    options.update(extra_options or {})
    reports = run_suites(config.suites, spec, frames, seed=config.seed, options=options)
    meta = {
        "algebra": name,
        "frames": sorted(frames),
        "suites": config.suites,
        "seed": config.seed,
        "tol": config.tol,
        "nodes_cap": config.nodes_cap,
    }
    return _emit(reports, config, meta)


def _cmd_verify(args) -> int:
    config = _config_from(args)
    extra = {}
    if getattr(args, "triangles", None) is not None:
        extra["triangles"] = args.triangles
    if getattr(args, "points", None) is not None:
        extra["points"] = args.points
    return run_experiment(config, extra)


def _lambda_circles(k: int, cap: int):
    quad = QuadratureOptions(cap=cap)
    circles = [
        ("plane(1,2) r=0.5", Circle2D(np.zeros(k), 0.5, coordinate_plane(k, 1, 2), quadrature=quad)),
        ("plane(1,2) r=1.0", Circle2D(np.zeros(k), 1.0, coordinate_plane(k, 1, 2), quadrature=quad)),
        ("plane(1,2) r=2.0", Circle2D(np.zeros(k), 2.0, coordinate_plane(k, 1, 2), quadrature=quad)),
    ]
    if k >= 3:
        tilt = np.zeros((2, k))
        tilt[0, 0] = 1.0
        tilt[1, 1], tilt[1, 2] = np.cos(0.4), np.sin(0.4)
        circles.append(("tilted plane r=1.0", Circle2D(np.zeros(k), 1.0, tilt, quadrature=quad)))
    return circles


def _cmd_lambda(args) -> int:
    config = _config_from(args)
    spec, name = _resolve_algebra(config.algebra)
    frames = _resolve_frames(spec, config.frame, name)
    tol = config.tol if config.tol is not None else 1e-8
    reports = []
    for fname, frame in frames.items():
        values = []
        for label, circle in _lambda_circles(frame.k, config.nodes_cap):
            lam = compute_lambda(spec, frame, circle)
            values.append(lam.value.coords)
            reports.append(
                VerificationReport(
                    f"lambda[{fname}][{label}]",
                    lam.deviation_from_two_pi_i,
                    tol,
                    value=lam.value,
                    diagnostics={
                        "windings": lam.windings,
                        "nodes": lam.nodes,
                        "nilpotent_residuals": lam.nilpotent_residuals,
                        "history": lam.history,
                    },
                )
            )
        spread = 0.0
        for row in values[1:]:
            spread = max(spread, float(np.max(np.abs(row - values[0]))))
        reports.append(
            VerificationReport(
                f"lambda[{fname}][plane-radius-variation]",
                spread,
                None,
                diagnostics={"circles": len(values)},
            )
        )
    meta = {"algebra": name, "frames": sorted(frames), "seed": config.seed,
            "tol": tol, "nodes_cap": config.nodes_cap}
    return _emit(reports, config, meta)


def _cmd_predicates(args) -> int:
    config = _config_from(args)
    spec, name = _resolve_algebra(config.algebra)
    frames = _resolve_frames(spec, config.frame, name)
    th5 = theorem5_predicate(spec)
    sys.stdout.write(
        f"structure-constant conditions: holds={th5.holds} "
        f"condition={th5.condition} reason={th5.reason}\n"
    )
    if th5.products:
        sys.stdout.write(
            "  product magnitudes: "
            + ", ".join(f"{v:.2e}" for v in th5.products)
            + "\n"
        )
    for warning in th5.warnings:
        sys.stdout.write(f"  warning: {warning}\n")
    for fname, frame in frames.items():
        th6 = theorem6_predicate(frame, spec)
        line = f"frame {fname}: semisimple-span={th6}"
        if spec.dim_nilpotent == 4:
            line += f" sparsity-condition={theorem7_predicate(frame, spec)}"
        sys.stdout.write(line + "\n")
    reports = run_suites(["predicates"], spec, frames, seed=config.seed,
                         options=_suite_options(config, spec, name))
    meta = {"algebra": name, "frames": sorted(frames), "seed": config.seed}
    return _emit(reports, config, meta)


def _config_from(args) -> ExperimentConfig:
    config = ExperimentConfig()
    if getattr(args, "config", None):
        config = ExperimentConfig.from_file(args.config)
    return config.merge_flags(args)


def _add_common(parser, with_suite=False):
    parser.add_argument("--algebra", default="", help="built-in name or algebra JSON file")
    parser.add_argument("--frame", default=None,
                        help="'default', 'in-s', or a frame JSON file")
    parser.add_argument("--config", default=None, help="experiment config JSON file")
    parser.add_argument("--tol", type=float, default=None, help="tolerance override")
    parser.add_argument("--seed", type=int, default=None, help="seed for sampled checks")
    parser.add_argument("--out", default=None,
                        help="output prefix for .json/.txt/.csv reports")
    parser.add_argument("--nodes-cap", dest="nodes_cap", type=int, default=None,
                        help="quadrature refinement cap")
    if with_suite:
        parser.add_argument("--suite", action="append", default=None,
                            help=f"suites to run (comma-separated); known: "
                                 f"{', '.join(SUITES)}, all")
        parser.add_argument("--triangles", type=int, default=None,
                            help="triangle count for the Morera suite")
        parser.add_argument("--points", type=int, default=None,
                            help="sample count for the oracle suite")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monalg",
        description="Verification harness for monogenic-function integral "
                    "theorems in commutative algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_common(sub.add_parser("validate", help="check the algebra axioms"))
    _add_common(sub.add_parser("verify", help="run verification suites"), with_suite=True)
    _add_common(sub.add_parser("lambda", help="compute the integral constant"))
    _add_common(sub.add_parser("predicates", help="evaluate the 2-pi-i conditions"))
    sub.add_parser("list", help="list built-in algebras")
    return parser


_COMMANDS = {
    "list": _cmd_list,
    "validate": _cmd_validate,
    "verify": _cmd_verify,
    "lambda": _cmd_lambda,
    "predicates": _cmd_predicates,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (SpecFormatError, MonalgError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
