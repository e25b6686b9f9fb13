"""Command-line interface.

Subcommands: occupation, bounds, eos, virial, fock, verify, limits.
Outputs are CSV or JSON with the full resolved configuration embedded
for reproducibility, and identical configurations produce byte-identical
files.  Exit codes: 0 success, 1 internal check or convergence failure,
2 usage error, 3 domain error.

Options may also come from a config file (INI sections named after the
subcommands plus a [constants] section); command-line flags override the
file, and the environment variables ANYONGAS_H / ANYONGAS_K override the
constants section only.
"""

import argparse
import configparser
import functools
import json
import math
import multiprocessing
import os
import sys

from . import distributions, oracle, thermo
from .algebra import build_b_rep, build_f_rep, rep_report
from .errors import ConvergenceError, DomainError
from .plotscript import emit_plot_script
from .qcore import Family, as_family, as_qparam
from .thermo import GasParams
from .units import UnitSystem

SCHEMA_VERSION = "1"
ENV_CONSTANTS = {"h": "ANYONGAS_H", "k": "ANYONGAS_K"}

_FLOAT_KEYS = {
    "q", "eta_min", "eta_max", "z", "z_min", "z_max", "temperature",
    "t_min", "t_max", "density", "mass", "volume", "h", "k",
}
_INT_KEYS = {"steps", "order", "dim", "jobs", "z_steps", "t_steps",
             "multiplicity", "k_levels", "precision"}


def _convert(key, raw):
    if key in _FLOAT_KEYS:
        return float(raw)
    if key in _INT_KEYS:
        return int(raw)
    return raw


def _load_config_file(path):
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise DomainError(f"config file not found: {path}")
    return parser


def _resolve(args, key, default=None):
    """Precedence: flag > env (constants only) > config file > default."""
    cli_value = getattr(args, key, None)
    if cli_value is not None:
        return cli_value
    if key in ENV_CONSTANTS:
        env_raw = os.environ.get(ENV_CONSTANTS[key])
        if env_raw is not None:
            return _convert(key, env_raw)
    if args._config_file is not None:
        for section in (args.command, "constants"):
            if section == "constants" and key not in ("h", "k"):
                continue
            if args._config_file.has_option(section, key):
                return _convert(key, args._config_file.get(section, key))
    return default


def _fmt(value, precision):
    if isinstance(value, float):
        return format(value, f".{precision}g")
    return str(value)


def _jsonable(value, precision):
    if isinstance(value, float):
        return float(format(value, f".{precision}g"))
    return value


def _linspace(lo, hi, steps):
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    if steps == 1:
        return [lo]
    h = (hi - lo) / (steps - 1)
    return [lo + i * h for i in range(steps)]


def _map_rows(func, items, jobs):
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(func, items)


def _write(dataset, fmt, out_path, precision, extra_comments=()):
    if fmt == "json":
        payload = {
            "schema_version": dataset["schema_version"],
            "command": dataset["command"],
            "config": dataset["config"],
            "columns": dataset["columns"],
            "rows": [
                [_jsonable(v, precision) for v in row] for row in dataset["rows"]
            ],
        }
        for key in ("report", "metadata"):
            if key in dataset:
                payload[key] = dataset[key]
        text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    else:
        lines = [f"# schema_version = {dataset['schema_version']}",
                 f"# command = {dataset['command']}"]
        for key in sorted(dataset["config"]):
            lines.append(f"# {key} = {dataset['config'][key]}")
        lines.extend(extra_comments)
        lines.append(",".join(dataset["columns"]))
        for row in dataset["rows"]:
            lines.append(",".join(_fmt(v, precision) for v in row))
        text = "\n".join(lines) + "\n"
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def _maybe_plot(dataset, kind, out_path, plot):
    if not plot:
        return
    if out_path in (None, "-"):
        raise DomainError("--plot needs --output so the script has a sibling path")
    base, _ = os.path.splitext(out_path)
    script = emit_plot_script(dataset, kind, png_name=os.path.basename(base) + ".png")
    with open(base + ".gp", "w") as fh:
        fh.write(script)


# ---------------------------------------------------------------------------
# per-command row builders (top level so worker pools can pickle them)


def _occupation_row_b(q, eta):
    pair = distributions.cf_bounds(q, eta)
    n_jd = distributions.b_occupation_jd(q, math.exp(-eta))
    return (eta, pair.exact, n_jd, pair.lower, pair.upper)


def _occupation_row_f(q, eta):
    return (
        eta,
        distributions.f_occupation(q, eta),
        distributions.f_occupation_arcsin(q, eta),
    )


def _bounds_row(q, eta):
    pair = distributions.cf_bounds(q, eta)
    second = distributions.cf_convergent(q, eta, 2)
    return (eta, pair.lower, second, pair.upper, pair.exact,
            pair.upper - pair.lower)


def _eos_row(family, units, mass, volume, multiplicity, item):
    q, temperature, z, density = item
    params = GasParams(
        family=family, q=q, temperature=temperature, fugacity=z,
        density=density, mass=mass, volume=volume,
        multiplicity=multiplicity, units=units,
    )
    state = thermo.b_state(params) if params.family is Family.B \
        else thermo.f_state(params)
    return (
        q, temperature, state.fugacity, state.thermal_wavelength ** 3,
        state.pressure, state.number_density, state.internal_energy,
        state.entropy, state.grand_potential,
    )


def _check_eta_grid(family, q, etas):
    qp = as_qparam(q)
    if family is Family.B:
        floor = math.log(qp.q_inv)
        bad = [e for e in etas if e <= floor]
        if bad:
            raise DomainError(
                f"B-family occupation requires eta > ln(1/q) = {floor:.6g}; "
                f"grid point(s) down to {min(bad):.6g} violate it. "
                "Raise --eta-min or raise q."
            )


# ---------------------------------------------------------------------------
# subcommand drivers


def _cmd_occupation(args):
    family = as_family(_resolve(args, "family", "b"))
    q = _resolve(args, "q", 0.5)
    etas = _linspace(_resolve(args, "eta_min", 1.0),
                     _resolve(args, "eta_max", 6.0),
                     _resolve(args, "steps", 50))
    _check_eta_grid(family, q, etas)
    jobs = _resolve(args, "jobs", os.cpu_count() or 1)
    if family is Family.B:
        rows = _map_rows(functools.partial(_occupation_row_b, q), etas, jobs)
        columns = ["eta", "n_exact", "n_jd", "n_lower", "n_upper"]
    else:
        rows = _map_rows(functools.partial(_occupation_row_f, q), etas, jobs)
        columns = ["eta", "n_exact", "n_arcsin"]
    config = {
        "family": family.value.lower(), "q": q, "eta_min": etas[0],
        "eta_max": etas[-1], "steps": len(etas), "jobs": jobs,
    }
    return {
        "schema_version": SCHEMA_VERSION, "command": "occupation",
        "config": config, "columns": columns, "rows": rows,
    }, "occupation", 0


def _cmd_bounds(args):
    q = _resolve(args, "q", 0.5)
    etas = _linspace(_resolve(args, "eta_min", 1.0),
                     _resolve(args, "eta_max", 6.0),
                     _resolve(args, "steps", 50))
    _check_eta_grid(Family.B, q, etas)
    jobs = _resolve(args, "jobs", os.cpu_count() or 1)
    rows = _map_rows(functools.partial(_bounds_row, q), etas, jobs)
    config = {
        "q": q, "eta_min": etas[0], "eta_max": etas[-1],
        "steps": len(etas), "jobs": jobs,
        "upper_shift": 1.0 / q,
    }
    dataset = {
        "schema_version": SCHEMA_VERSION, "command": "bounds",
        "config": config, "columns":
            ["eta", "n_lower", "n_second", "n_upper", "n_exact", "width"],
        "rows": rows,
    }
    dataset["metadata"] = {
        "errata": ["convergent-bracketing", "bounds-upper-shift"],
        "detail": "n_lower is the first convergent; n_second the second "
                  "convergent (a sharper lower bound, not an upper bound); "
                  "n_upper the rigorous bound with denominator shift 1/q",
    }
    return dataset, "bounds", 0


def _parse_q_list(raw):
    try:
        return [float(tok) for tok in str(raw).split(",") if tok.strip()]
    except ValueError:
        raise DomainError(f"could not parse q list from {raw!r}") from None


def _cmd_eos(args):
    family = as_family(_resolve(args, "family", "b"))
    qs = _parse_q_list(_resolve(args, "q", "0.5"))
    units = UnitSystem(h=_resolve(args, "h", 1.0), k=_resolve(args, "k", 1.0))
    mass = _resolve(args, "mass", 1.0)
    volume = _resolve(args, "volume", 1.0)
    multiplicity = _resolve(args, "multiplicity", 1)
    density = _resolve(args, "density")
    z_fixed = _resolve(args, "z")
    z_min, z_max, z_steps = (_resolve(args, "z_min"), _resolve(args, "z_max"),
                             _resolve(args, "z_steps", 20))
    t_fixed = _resolve(args, "temperature", 1.0)
    t_min, t_max, t_steps = (_resolve(args, "t_min"), _resolve(args, "t_max"),
                             _resolve(args, "t_steps", 20))
    z_sweep = z_min is not None and z_max is not None
    t_sweep = t_min is not None and t_max is not None
    if z_sweep and t_sweep:
        raise DomainError("sweep either fugacity or temperature, not both")
    if density is not None and (z_fixed is not None or z_sweep):
        raise DomainError("give either a density or a fugacity, not both")

    items = []
    if z_sweep:
        for q in qs:
            for z in _linspace(z_min, z_max, z_steps):
                items.append((q, t_fixed, z, None))
    elif t_sweep:
        for q in qs:
            for t in _linspace(t_min, t_max, t_steps):
                items.append((q, t, z_fixed, density if z_fixed is None else None))
    else:
        z_val = z_fixed if density is None else None
        if z_val is None and density is None:
            z_val = 0.25
        for q in qs:
            items.append((q, t_fixed, z_val, density))
    for q, _, z, _ in items:
        if family is Family.B and z is not None and z >= min(q, 1.0):
            raise DomainError(
                f"B-family fugacity must satisfy z < q; z={z:.6g} at q={q:.6g} "
                "is at or beyond the condensation-analog boundary"
            )

    jobs = _resolve(args, "jobs", os.cpu_count() or 1)
    worker = functools.partial(_eos_row, family, units, mass, volume, multiplicity)
    rows = _map_rows(worker, items, jobs)
    config = {
        "family": family.value.lower(), "q": ",".join(map(str, qs)),
        "temperature": t_fixed, "mass": mass, "volume": volume,
        "multiplicity": multiplicity, "h": units.h, "k": units.k, "jobs": jobs,
    }
    if z_sweep:
        config.update(z_min=z_min, z_max=z_max, z_steps=z_steps)
    elif t_sweep:
        config.update(t_min=t_min, t_max=t_max, t_steps=t_steps)
    if density is not None:
        config["density"] = density
    elif not z_sweep:
        config["z"] = items[0][2]
    columns = ["q", "temperature", "fugacity", "lambda3", "pressure",
               "number_density", "internal_energy", "entropy",
               "grand_potential"]
    return {
        "schema_version": SCHEMA_VERSION, "command": "eos", "config": config,
        "columns": columns, "rows": rows,
    }, "eos-isotherms", 0


def _cmd_virial(args):
    family = as_family(_resolve(args, "family", "b"))
    q = _resolve(args, "q", 0.5)
    order = _resolve(args, "order", 4)
    coeffs = thermo.virial_coefficients(family, q, order)
    rows = [(k + 1, c) for k, c in enumerate(coeffs)]
    config = {"family": family.value.lower(), "q": q, "order": order}
    dataset = {
        "schema_version": SCHEMA_VERSION, "command": "virial",
        "config": config, "columns": ["k", "coefficient"], "rows": rows,
    }
    if family is Family.F:
        dataset["metadata"] = {
            "q_independent": True,
            "detail": "F-family virial coefficients carry no q dependence; "
                      "the deformation enters only through z/q",
        }
    return dataset, "virial-bars", 0


def _cmd_fock(args):
    family = as_family(_resolve(args, "family", "b"))
    q = _resolve(args, "q", 0.5)
    dim = _resolve(args, "dim", 32)
    rep = build_b_rep(q, dim) if family is Family.B else build_f_rep(q)
    checks = rep_report(rep)
    rows = [
        (c.check_id, c.residual, c.threshold, "PASS" if c.passed else "FAIL")
        for c in checks
    ]
    config = {"family": family.value.lower(), "q": q, "dim": rep.dim}
    dataset = {
        "schema_version": SCHEMA_VERSION, "command": "fock", "config": config,
        "columns": ["check", "residual", "threshold", "status"], "rows": rows,
    }
    status = 0 if all(c.passed for c in checks) else 1
    return dataset, None, status


def _cmd_verify(args):
    report = oracle.run_verification()
    rows = [
        (c.check_id, c.residual, c.threshold, "PASS" if c.passed else "FAIL")
        for c in report.checks
    ]
    config = {"suite": "full"}
    extra = [f"# erratum {e.erratum_id}: printed [{e.printed}] "
             f"-> adopted [{e.adopted}]" for e in report.errata]
    extra += [f"# note {n.note_id}: {n.detail}" for n in report.notes]
    dataset = {
        "schema_version": SCHEMA_VERSION, "command": "verify",
        "config": config,
        "columns": ["check", "residual", "threshold", "status"], "rows": rows,
        "report": report.to_dict(),
        "_csv_comments": extra,
    }
    return dataset, None, 0 if report.all_passed else 1


def _cmd_limits(args):
    rows = []
    ok = True
    for family in (Family.B, Family.F):
        for eta in (0.5, 1.0, 2.0, 4.0):
            reference = (1.0 / math.expm1(eta) if family is Family.B
                         else 1.0 / (math.exp(eta) + 1.0))
            for q, tol, relative in ((1.0, 1e-14, False), (1.0 - 1e-9, 1e-6, True)):
                value = (distributions.b_occupation(q, eta)
                         if family is Family.B
                         else distributions.f_occupation(q, eta))
                err = abs(value - reference) / (abs(reference) if relative else 1.0)
                passed = err < tol
                ok &= passed
                rows.append((family.value.lower(), q, eta, value, reference,
                             err, tol, "PASS" if passed else "FAIL"))
    dataset = {
        "schema_version": SCHEMA_VERSION, "command": "limits",
        "config": {"suite": "classical-limit regression"},
        "columns": ["family", "q", "eta", "value", "reference", "error",
                    "tolerance", "status"],
        "rows": rows,
    }
    return dataset, None, 0 if ok else 1


_COMMANDS = {
    "occupation": _cmd_occupation,
    "bounds": _cmd_bounds,
    "eos": _cmd_eos,
    "virial": _cmd_virial,
    "fock": _cmd_fock,
    "verify": _cmd_verify,
    "limits": _cmd_limits,
}


def _add_common(sub):
    sub.add_argument("--format", choices=("csv", "json"), default=None)
    sub.add_argument("--output", default=None, metavar="PATH")
    sub.add_argument("--precision", type=int, default=None,
                     help="significant digits in emitted numbers (default 15)")
    sub.add_argument("--jobs", type=int, default=None,
                     help="worker processes for sweeps (default: cpu count)")
    sub.add_argument("--plot", action="store_true", default=None,
                     help="also emit a gnuplot script next to --output")
    sub.add_argument("--config", default=None, metavar="FILE",
                     help="INI config file; flags override it")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="anyongas",
        description="Thermostatistics of q-interpolating (anyon) gases",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("occupation", help="occupation curves on an eta grid")
    p.add_argument("--family", choices=("b", "f", "B", "F"), default=None)
    p.add_argument("--q", type=float, default=None)
    p.add_argument("--eta-min", dest="eta_min", type=float, default=None)
    p.add_argument("--eta-max", dest="eta_max", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("bounds", help="continued-fraction convergent bounds (B)")
    p.add_argument("--q", type=float, default=None)
    p.add_argument("--eta-min", dest="eta_min", type=float, default=None)
    p.add_argument("--eta-max", dest="eta_max", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("eos", help="equation-of-state sweep")
    p.add_argument("--family", choices=("b", "f", "B", "F"), default=None)
    p.add_argument("--q", default=None, help="value or comma list")
    p.add_argument("--z", type=float, default=None)
    p.add_argument("--z-min", dest="z_min", type=float, default=None)
    p.add_argument("--z-max", dest="z_max", type=float, default=None)
    p.add_argument("--z-steps", dest="z_steps", type=int, default=None)
    p.add_argument("--density", type=float, default=None,
                   help="lam^3 N/V as the independent variable")
    p.add_argument("--temperature", type=float, default=None)
    p.add_argument("--t-min", dest="t_min", type=float, default=None)
    p.add_argument("--t-max", dest="t_max", type=float, default=None)
    p.add_argument("--t-steps", dest="t_steps", type=int, default=None)
    p.add_argument("--mass", type=float, default=None)
    p.add_argument("--volume", type=float, default=None)
    p.add_argument("--multiplicity", type=int, default=None)
    p.add_argument("--h", type=float, default=None, help="Planck constant")
    p.add_argument("--k", type=float, default=None, help="Boltzmann constant")
    _add_common(p)

    p = sub.add_parser("virial", help="virial coefficients b_1..b_K")
    p.add_argument("--family", choices=("b", "f", "B", "F"), default=None)
    p.add_argument("--q", type=float, default=None)
    p.add_argument("--order", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("fock", help="algebra checks on a Fock representation")
    p.add_argument("--family", choices=("b", "f", "B", "F"), default=None)
    p.add_argument("--q", type=float, default=None)
    p.add_argument("--dim", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("verify", help="full oracle suite; nonzero exit on failure")
    _add_common(p)

    p = sub.add_parser("limits", help="q -> 1 regression against Bose/Fermi")
    _add_common(p)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config_path = getattr(args, "config", None)
        args._config_file = (_load_config_file(config_path)
                             if config_path else None)
        dataset, plot_kind, status = _COMMANDS[args.command](args)
        fmt = _resolve(args, "format", "csv")
        out_path = _resolve(args, "output")
        precision = _resolve(args, "precision", 15)
        comments = dataset.pop("_csv_comments", ())
        _write(dataset, fmt, out_path, precision, extra_comments=comments)
        plot = getattr(args, "plot", None)
        if plot:
            if plot_kind is None:
                raise DomainError(f"command {args.command} has no plot kind")
            _maybe_plot(dataset, plot_kind, out_path, plot)
        return status
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
