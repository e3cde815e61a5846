# cli.py
"""
Command-line surface: eval, norm, verify and load-hypergroup.

Exit codes: 0 ok, 1 failed check, 2 bad flags, 3 numerical non-convergence,
4 declared tail divergence, 5 invalid hypergroup file.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import pandas as pd
from pydantic import ValidationError

from hypergroup_amalgam.constants.constants import (
    DEFAULT_Y_STEP,
    EXIT_BAD_FLAGS,
    EXIT_BAD_HYPERGROUP,
    EXIT_CHECK_FAILED,
    EXIT_NON_CONVERGENCE,
    EXIT_OK,
    EXIT_TAIL_DIVERGENCE,
)
from hypergroup_amalgam.log.logger_singleton import getLogger
from hypergroup_amalgam.models.Alpha import Alpha
from hypergroup_amalgam.models.ExponentPair import ExponentPair, format_exponent, parse_exponent
from hypergroup_amalgam.models.FiniteHypergroup import HypergroupTableError
from hypergroup_amalgam.models.RunConfig import RunConfig
from hypergroup_amalgam.models.TestFunction import TestFunction
from hypergroup_amalgam.models.VerificationReport import ReportSchemaError
from hypergroup_amalgam.services.amalgam import continuous_norm_p_inf, default_y_grid, discrete_norm
from hypergroup_amalgam.services.bessel_kingman import CATALOG, get_function, kernel, lp_norm, translate
from hypergroup_amalgam.services.file_manager import FileManager
from hypergroup_amalgam.services.finite_hypergroup import haar_weights, load_hypergroup
from hypergroup_amalgam.services.fourier import (
    TailDominatesError,
    fourier_transform,
    indicator_hat_closed_form,
    indicator_hat_dual,
)
from hypergroup_amalgam.services.quadrature import NonConvergenceError
from hypergroup_amalgam.services.specfun import DomainError, GammaOverflowError
from hypergroup_amalgam.services.utils import parse_range
from hypergroup_amalgam.services.verify import SUITES, run_suite

SUBJECTS = ("kernel", "translate", "fourier", "indicator-hat")
NORMS = ("discrete", "continuous", "lp")
ECHO_ROWS = 20


class FlagError(ValueError):
    """Raised when flags parse but do not make sense together."""
    pass


def _finite_or_none(v):
    if v is None:
        return None
    v = float(v)
    return v if math.isfinite(v) else None


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON file mirroring RunConfig")
    parser.add_argument("--output-dir", dest="output_dir")
    parser.add_argument("--format", choices=("json", "csv"))
    parser.add_argument("--threads", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--lambda-cut", dest="lambda_cut", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypergroup-amalgam",
        description="Bessel-Kingman hypergroup numerics and amalgam-norm verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a kernel, translate or transform on a grid")
    _add_common(p_eval)
    p_eval.add_argument("--subject", choices=SUBJECTS, required=True)
    p_eval.add_argument("--alpha", type=float, default=0.5)
    p_eval.add_argument("--x", help="value or range a:b:step")
    p_eval.add_argument("--y", help="value or range a:b:step")
    p_eval.add_argument("--z", help="value or range a:b:step")
    p_eval.add_argument("--lambda", dest="lam", help="value or range a:b:step")
    p_eval.add_argument("--f", dest="function", default="unit-indicator")

    p_norm = sub.add_parser("norm", help="amalgam or L^p norm of a catalog function")
    _add_common(p_norm)
    p_norm.add_argument("--norm", choices=NORMS, required=True)
    p_norm.add_argument("--alpha", type=float, default=0.5)
    p_norm.add_argument("--f", dest="function", required=True,
                        help=f"one of {', '.join(sorted(CATALOG))}, indicator-hat or hat:<name>")
    p_norm.add_argument("--p", default="1")
    p_norm.add_argument("--q", default="inf")
    p_norm.add_argument("--y-step", dest="y_step", type=float, default=DEFAULT_Y_STEP)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    _add_common(p_verify)
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument("--alpha", help="alpha list a,b,c or range a:b:step")
    p_verify.add_argument("--file", dest="files", action="append", default=[],
                          help="hypergroup file for the finite suite (repeatable)")
    p_verify.add_argument("--recheck-refined", dest="recheck_refined", action="store_true", default=None,
                          help="re-run passing checks with quadrature tolerances halved")

    p_load = sub.add_parser("load-hypergroup", help="validate a hypergroup file and print its Haar weights")
    p_load.add_argument("path")
    return parser


def _config(args: argparse.Namespace, **extra) -> RunConfig:
    return RunConfig.load(
        getattr(args, "config", None),
        output_dir=getattr(args, "output_dir", None),
        format=getattr(args, "format", None),
        threads=getattr(args, "threads", None),
        seed=getattr(args, "seed", None),
        lambda_cut=getattr(args, "lambda_cut", None),
        **extra,
    )


def _grid(text: Optional[str], flag: str) -> List[float]:
    if text is None:
        raise FlagError(f"--{flag} is required for this subject")
    return parse_range(text)


def _scalar(text: Optional[str], flag: str) -> float:
    values = _grid(text, flag)
    if len(values) != 1:
        raise FlagError(f"--{flag} takes a single value here, got {len(values)}")
    return values[0]


def _resolve_function(name: str, alpha: Alpha, config: RunConfig) -> TestFunction:
    if name == "indicator-hat":
        return indicator_hat_dual(alpha)
    if name.startswith("hat:"):
        return fourier_transform(alpha, get_function(name[4:]), config.quad)
    try:
        return get_function(name)
    except KeyError as e:
        raise FlagError(str(e.args[0])) from None


def _write_grid(config: RunConfig, stem: str, frame: pd.DataFrame) -> Path:
    manager = FileManager(config.output_dir)
    if config.format == "csv":
        return manager.write_csv(f"{stem}.csv", frame)
    return manager.write_json(f"{stem}.json", frame.to_dict(orient="records"))


def cmd_eval(args: argparse.Namespace) -> int:
    config = _config(args)
    al = Alpha(value=args.alpha)
    subject = args.subject
    if subject == "kernel":
        x, y = _scalar(args.x, "x"), _scalar(args.y, "y")
        zs = _grid(args.z, "z")
        frame = pd.DataFrame({"z": zs, "value": [float(v) for v in kernel(al, x, y, zs)]})
    elif subject == "translate":
        y = _scalar(args.y, "y")
        xs = _grid(args.x, "x")
        shifted = translate(al, y, _resolve_function(args.function, al, config), config.quad)
        frame = pd.DataFrame({"x": xs, "value": [float(shifted(v)) for v in xs]})
    elif subject == "fourier":
        lams = _grid(args.lam, "lambda")
        f_hat = fourier_transform(al, _resolve_function(args.function, al, config), config.quad)
        frame = pd.DataFrame({"lambda": lams, "value": [float(f_hat(v)) for v in lams]})
    else:
        lams = _grid(args.lam, "lambda")
        frame = pd.DataFrame({"lambda": lams, "value": [float(indicator_hat_closed_form(al, v)) for v in lams]})

    path = _write_grid(config, f"eval_{subject}_alpha{al.value:g}", frame)
    if len(frame) <= ECHO_ROWS:
        for value in frame["value"]:
            print(f"{value:.17g}")
    else:
        print(f"wrote {len(frame)} rows to {path}")
    return EXIT_OK


def cmd_norm(args: argparse.Namespace) -> int:
    config = _config(args)
    al = Alpha(value=args.alpha)
    f = _resolve_function(args.function, al, config)
    p = parse_exponent(args.p)
    q = parse_exponent(args.q)
    record = {"function": args.function, "alpha": al.value, "norm": args.norm, "p": format_exponent(p), "q": format_exponent(q)}
    diverges = False

    if args.norm == "discrete":
        result = discrete_norm(al, f, ExponentPair(p=p, q=q), config.tail, config.quad)
        value, tail = result
        diverges = result.diverges
        record.update(
            blocks=[float(b) for b in result.blocks],
            diverges=diverges,
            slope=_finite_or_none(result.slope),
            tail_exponent=_finite_or_none(result.tail_exponent),
        )
    elif args.norm == "continuous":
        if p == "inf":
            raise FlagError("the continuous norm needs a finite --p")
        value, tail = continuous_norm_p_inf(al, f, p, default_y_grid(f, args.y_step), config.quad), 0.0
        record.update(y_step=args.y_step)
    else:
        value, tail = lp_norm(al, f, p, config.quad, config.tail), 0.0

    record.update(value=_finite_or_none(value), tail_estimate=_finite_or_none(tail))
    stem = f"norm_{args.norm}_{args.function.replace(':', '-')}_alpha{al.value:g}"
    FileManager(config.output_dir).write_json(f"{stem}.json", record)
    print(f"{value:.17g} {tail:.17g}")
    if diverges:
        getLogger().logMessage(f"[norm] {args.function} {ExponentPair(p=p, q=q)}: tail diverges; value is partial")
        return EXIT_TAIL_DIVERGENCE
    return EXIT_OK


def summary_table(reports) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "check": r.check_name,
                "alpha": "-" if r.alpha is None else f"{r.alpha:g}",
                "passed": r.passed,
                "failures": len(r.failures()),
                "details": len(r.details),
            }
            for r in reports
        ],
        columns=["check", "alpha", "passed", "failures", "details"],
    )


def cmd_verify(args: argparse.Namespace) -> int:
    extra = {}
    if args.alpha:
        extra["alpha_list"] = parse_range(args.alpha)
    config = _config(args, recheck_refined=args.recheck_refined, **extra)
    hypergroups = [load_hypergroup(path) for path in args.files] or None
    reports, errors = run_suite(args.suite, config, hypergroups)

    FileManager(config.output_dir).write_reports(reports)
    if reports:
        print(summary_table(reports).to_string(index=False))
    for (name, alpha), err in errors:
        where = name if alpha is None else f"{name} alpha={alpha:g}"
        print(f"{where}: {err}", file=sys.stderr)
    if any(isinstance(err, (NonConvergenceError, TailDominatesError, GammaOverflowError)) for _, err in errors):
        return EXIT_NON_CONVERGENCE
    if errors:
        raise errors[0][1]
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def cmd_load_hypergroup(args: argparse.Namespace) -> int:
    try:
        H = load_hypergroup(args.path)
    except HypergroupTableError as e:
        print(f"invalid hypergroup ({e.invariant}, indices {list(e.indices)}): {e}", file=sys.stderr)
        return EXIT_BAD_HYPERGROUP
    except (ValidationError, json.JSONDecodeError) as e:
        print(f"invalid hypergroup file: {e}", file=sys.stderr)
        return EXIT_BAD_HYPERGROUP
    print(" ".join(f"{w:g}" for w in haar_weights(H)))
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "norm": cmd_norm,
    "verify": cmd_verify,
    "load-hypergroup": cmd_load_hypergroup,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logger = getLogger()
    try:
        return COMMANDS[args.command](args)
    except (NonConvergenceError, TailDominatesError, GammaOverflowError) as e:
        logger.logMessage(f"[cli] {e}")
        print(str(e), file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    except ReportSchemaError as e:
        logger.logMessage(f"[cli] {e}")
        print(str(e), file=sys.stderr)
        return EXIT_CHECK_FAILED
    except HypergroupTableError as e:
        print(f"invalid hypergroup ({e.invariant}, indices {list(e.indices)}): {e}", file=sys.stderr)
        return EXIT_BAD_HYPERGROUP
    except (FlagError, DomainError, ValidationError, ValueError, KeyError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_FLAGS


if __name__ == "__main__":
    sys.exit(main())
