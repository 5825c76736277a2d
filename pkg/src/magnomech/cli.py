"""Command-line entry point.

Reads a JSON config, dispatches one of four modes (steady, evolve, sweep,
couplings), and serializes results as CSV or JSON.  Reals are printed with
17 significant digits so identical configs produce byte-identical files.
Diagnostics go to stderr only; data and error records go to the output
target.  Exit codes: 0 success, 2 config error, 3 unstable drift, 4
numerical failure.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys

import numpy as np

from . import dynamics as dyn
from . import measures as ms
from .errors import (ConfigError, DegenerateDiscriminant, InsufficientSamples,
                     MagnomechError, NonFinite, NotConverged, SingularState,
                     UnphysicalState, UnstableDrift)
from .meanfield import effective_couplings
from .params import DriveConfig, DriveMode, SystemParams, validate
from .sweep import SweepGrid, default_grid, run_sweep

__all__ = ["main", "load_config", "execute", "format_real"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_UNSTABLE = 3
EXIT_NUMERICAL = 4

_MODES = ("steady", "evolve", "sweep", "couplings")
_VARIANTS = {"full": dyn.Variant.FULL,
             "asymptotic": dyn.Variant.ASYMPTOTIC,
             "rwa": dyn.Variant.RWA}


def format_real(x: float) -> str:
    return "%.17g" % float(x)


def _as_complex(value, name: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if (isinstance(value, (list, tuple)) and len(value) == 2
            and all(isinstance(v, (int, float)) for v in value)):
        return complex(value[0], value[1])
    raise ConfigError(f"{name} must be a real number or a [re, im] pair")


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise ConfigError(f"missing field '{key}' in {where}")
    return obj[key]


def _parse_params(obj) -> SystemParams:
    if not isinstance(obj, dict):
        raise ConfigError("'params' must be an object")
    known = {"delta_a", "delta_m", "g", "eta", "kappa_a", "kappa_m",
             "gamma", "nbar_b", "omega_b"}
    extra = set(obj) - known
    if extra:
        raise ConfigError(f"unknown params fields: {sorted(extra)}")
    try:
        p = SystemParams(**{k: float(v) for k, v in obj.items()})
        validate(p)
    except MagnomechError as exc:
        raise ConfigError(f"invalid params: {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid params: {exc}") from exc
    return p


def _parse_drive(obj) -> DriveConfig:
    if not isinstance(obj, dict):
        raise ConfigError("'drive' must be an object")
    mode = _require(obj, "mode", "drive")
    if mode == "amplitudes":
        return DriveConfig.amplitudes(float(_require(obj, "e1", "drive")),
                                      float(obj.get("e2", 0.0)))
    if mode == "couplings":
        return DriveConfig.couplings(_as_complex(_require(obj, "g1", "drive"), "g1"),
                                     _as_complex(obj.get("g2", 0.0), "g2"))
    raise ConfigError(f"drive mode must be 'amplitudes' or 'couplings', got {mode!r}")


def load_config(path: str) -> dict:
    """Parse and validate a JSON run config into resolved objects."""
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a JSON object")
    mode = _require(raw, "mode", "config")
    if mode not in _MODES:
        raise ConfigError(f"mode must be one of {_MODES}, got {mode!r}")
    params = _parse_params(_require(raw, "params", "config"))
    drive = _parse_drive(_require(raw, "drive", "config"))
    cfg = {
        "mode": mode,
        "params": params,
        "drive": drive,
        "output_path": raw.get("output_path"),
        "output_format": raw.get("output_format", "csv"),
        "threads": 1,
    }
    if cfg["output_format"] not in ("csv", "json"):
        raise ConfigError("output_format must be 'csv' or 'json'")
    variant = raw.get("variant", "rwa")
    if variant not in _VARIANTS:
        raise ConfigError(f"variant must be one of {sorted(_VARIANTS)}")
    cfg["variant"] = _VARIANTS[variant]
    if mode == "evolve":
        t_end = float(_require(raw, "t_end", "config"))
        dt = float(_require(raw, "dt", "config"))
        if t_end <= 0 or dt <= 0:
            raise ConfigError("t_end and dt must be positive")
        cfg["t_end"] = t_end
        cfg["dt"] = dt
        cfg["sample_every"] = int(raw.get("sample_every", 1))
        if cfg["sample_every"] < 1:
            raise ConfigError("sample_every must be a positive integer")
    if mode == "sweep":
        grid = raw.get("grid")
        if grid is None:
            cfg["grid"] = None
        else:
            if not isinstance(grid, dict):
                raise ConfigError("'grid' must be an object")
            try:
                cfg["grid"] = {
                    "gamma_values": tuple(float(v) for v in
                                          _require(grid, "gamma_values", "grid")),
                    "nbar_values": tuple(float(v) for v in
                                         _require(grid, "nbar_values", "grid")),
                }
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"invalid grid: {exc}") from exc
    return cfg


# ---------------------------------------------------------------------------
# mode handlers; each returns (header, rows) with rows of printable strings
# ---------------------------------------------------------------------------


def _run_steady(cfg):
    p = cfg["params"]
    coup = effective_couplings(p, cfg["drive"])
    m = dyn.drift_rwa(dyn.DriftModel.rwa(p, coup))
    diff = dyn.diffusion(p)
    sig = dyn.steady_state(m, diff)
    res = dyn.stability(m)
    residual = float(np.linalg.norm(m @ sig + sig @ m.T + diff))
    red = ms.reduce_photon_phonon(sig)
    if "r2" in coup.undefined:
        n_beta = ""
    else:
        n_beta = format_real(ms.bogoliubov_occupation(sig, coup.r2))
    header = ["e_n", "g_a", "g_b", "stable", "max_real_part",
              "lyapunov_residual", "bogoliubov_occupation"]
    row = [format_real(ms.log_negativity(red)),
           format_real(ms.steering_a_to_b(red)),
           format_real(ms.steering_b_to_a(red)),
           "true" if res.stable else "false",
           format_real(res.max_real_part),
           format_real(residual),
           n_beta]
    return header, [row]


def _build_model(cfg, coup):
    p = cfg["params"]
    variant = cfg["variant"]
    if variant is dyn.Variant.RWA:
        return dyn.DriftModel.rwa(p, coup)
    if variant is dyn.Variant.ASYMPTOTIC:
        return dyn.DriftModel.asymptotic(p, coup)
    if cfg["drive"].mode is not DriveMode.AMPLITUDES:
        raise ConfigError("the full variant needs an amplitude-mode drive")
    return dyn.DriftModel.full(p, drive=cfg["drive"])


def _run_evolve(cfg):
    p = cfg["params"]
    coup = effective_couplings(p, cfg["drive"])
    model = _build_model(cfg, coup)
    diff = dyn.diffusion(p)
    sig0 = dyn.vacuum_thermal_sigma(p.nbar_b)
    times, sigs = dyn.evolve_covariance(model, diff, sig0, cfg["t_end"],
                                        cfg["dt"], cfg["sample_every"])
    header = ["t", "e_n", "g_a", "g_b", "min_symplectic_eig",
              "mech_min_rotated_variance"]
    rows = []
    for t, sig in zip(times, sigs):
        red = ms.reduce_photon_phonon(sig)
        mech_var = ms.quadrature_variances(sig, "phonon")[2]
        rows.append([format_real(t),
                     format_real(ms.log_negativity(red)),
                     format_real(ms.steering_a_to_b(red)),
                     format_real(ms.steering_b_to_a(red)),
                     format_real(dyn.min_symplectic_eigenvalue(sig)),
                     format_real(mech_var)])
    return header, rows


def _run_sweep_mode(cfg):
    p = cfg["params"]
    coup = effective_couplings(p, cfg["drive"])
    if cfg["grid"] is None:
        grid = default_grid(p, coup, cfg["variant"])
    else:
        grid = SweepGrid(gamma_values=cfg["grid"]["gamma_values"],
                         nbar_values=cfg["grid"]["nbar_values"],
                         base=p, couplings=coup, variant=cfg["variant"])
    results = run_sweep(grid, threads=cfg["threads"])
    header = ["gamma", "nbar", "peak_e_n", "peak_g_a", "peak_g_b",
              "stable", "regime"]
    rows = []
    for r in results:
        if not r.stable or math.isnan(r.peak_e_n):
            if r.error:
                print(f"point ({r.gamma}, {r.nbar_b}): {r.error}",
                      file=sys.stderr)
            rows.append([format_real(r.gamma), format_real(r.nbar_b),
                         "", "", "", "false", ""])
        else:
            rows.append([format_real(r.gamma), format_real(r.nbar_b),
                         format_real(r.peak_e_n), format_real(r.peak_g_a),
                         format_real(r.peak_g_b),
                         "true" if r.stable else "false",
                         r.regime.value if r.regime else ""])
    return header, rows


def _run_couplings(cfg):
    coup = effective_couplings(cfg["params"], cfg["drive"])
    header = ["g1_re", "g1_im", "g2_re", "g2_im", "r1", "r2",
              "gt1", "gt2", "reason"]
    fields = {"r1": coup.r1, "r2": coup.r2, "gt1": coup.gt1, "gt2": coup.gt2}
    row = [format_real(coup.g1.real), format_real(coup.g1.imag),
           format_real(coup.g2.real), format_real(coup.g2.imag)]
    reasons = []
    for name, value in fields.items():
        if name in coup.undefined:
            row.append("")
            reasons.append(f"{name}: {coup.undefined[name]}")
        else:
            row.append(format_real(value))
    row.append("; ".join(reasons))
    return header, [row]


_HANDLERS = {"steady": _run_steady, "evolve": _run_evolve,
             "sweep": _run_sweep_mode, "couplings": _run_couplings}


def _render_csv(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def _render_json(header, rows) -> str:
    records = [dict(zip(header, row)) for row in rows]
    return json.dumps(records, indent=2) + "\n"


def _write_output(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def execute(cfg) -> int:
    """Run one mode and write its table; returns the process exit code."""
    try:
        header, rows = _HANDLERS[cfg["mode"]](cfg)
    except ConfigError as exc:
        _emit_error(cfg, exc, EXIT_CONFIG)
        return EXIT_CONFIG
    except UnstableDrift as exc:
        _emit_error(cfg, exc, EXIT_UNSTABLE)
        return EXIT_UNSTABLE
    except (NonFinite, UnphysicalState, NotConverged,
            DegenerateDiscriminant, SingularState,
            InsufficientSamples) as exc:
        _emit_error(cfg, exc, EXIT_NUMERICAL)
        return EXIT_NUMERICAL
    except MagnomechError as exc:
        _emit_error(cfg, exc, EXIT_CONFIG)
        return EXIT_CONFIG
    render = _render_csv if cfg["output_format"] == "csv" else _render_json
    _write_output(render(header, rows), cfg["output_path"])
    return EXIT_OK


def _emit_error(cfg, exc, code):
    record = json.dumps({"error": type(exc).__name__,
                         "message": str(exc),
                         "exit_code": code}) + "\n"
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    _write_output(record, cfg.get("output_path") if isinstance(cfg, dict) else None)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="magnomech",
        description="Gaussian-state simulator of a driven cavity "
                    "magnomechanical system")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="execute a JSON run config")
    run.add_argument("--config", required=True, help="path to the JSON config")
    run.add_argument("--output", default=None,
                     help="output file (overrides the config; default stdout)")
    run.add_argument("--format", default=None, choices=("csv", "json"),
                     help="output format (overrides the config)")
    run.add_argument("--threads", type=int, default=1,
                     help="worker threads for sweeps; never changes output bytes")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code not in (0, None) else 0
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        _emit_error({}, exc, EXIT_CONFIG)
        return EXIT_CONFIG
    if args.output is not None:
        cfg["output_path"] = args.output
    if args.format is not None:
        cfg["output_format"] = args.format
    if args.threads < 1:
        _emit_error(cfg, ConfigError("--threads must be a positive integer"),
                    EXIT_CONFIG)
        return EXIT_CONFIG
    cfg["threads"] = args.threads
    return execute(cfg)


if __name__ == "__main__":
    sys.exit(main())
