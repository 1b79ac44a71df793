"""Command-line frontend: evaluation, verification suites, transforms, limit runs.

Rational parameters are written as 'p/q' and parsed exactly; plain decimals
are accepted only where the computation is numeric anyway.  Exit codes:
0 all checks passed / value emitted, 1 check failure (JSON report still on
stdout), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import besselfam, families, limits, opalgebra, report, transforms
from .errors import QawError

__all__ = ["main", "RunConfig", "parse_number"]


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output: str = "pretty"
    tolerance: float | None = None
    truncation: int | None = None
    seed: int = 0
    degree: int = 16


def parse_number(text: str):
    """'p/q' and integer strings parse to exact Fractions, decimals to float."""
    s = text.strip()
    if "/" in s or s.lstrip("+-").isdigit():
        return Fraction(s)
    return float(s)


def _require_exact(value, flag: str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    raise SystemExit(
        _usage_error(f"{flag} must be an exact rational 'p/q' for this command")
    )


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _emit(doc, output: str) -> None:
    if output == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    elif output == "csv":
        rows = doc if isinstance(doc, list) else [doc]
        for row in rows:
            if isinstance(row, (tuple, list)):
                print(",".join(str(v) for v in row))
            else:
                print(row)
    else:
        if isinstance(doc, dict):
            for k in sorted(doc):
                print(f"{k}: {doc[k]}")
        elif isinstance(doc, list):
            for row in doc:
                print(row)
        else:
            print(doc)


EVAL_FUNCTIONS = {
    "bessel-norm": (("alpha", "x"), lambda p, tol: besselfam.bessel_norm(p["alpha"], p["x"], tol)),
    "dunkl-kernel": (("alpha", "x"), lambda p, tol: besselfam.dunkl_kernel(p["alpha"], p["x"], tol)),
    "minus1-bessel": (("alpha", "x"), lambda p, tol: besselfam.minus1_bessel(p["alpha"], p["x"], tol)),
    "cas": (("x",), lambda p, tol: besselfam.cas(p["x"])),
    "q-bessel3": (("x", "a", "q"), lambda p, tol: besselfam.q_bessel3_norm(p["x"], p["a"], p["q"], tol)),
    "q-bessel2": (("x", "a", "q"), lambda p, tol: besselfam.q_bessel2_norm(p["x"], p["a"], p["q"], tol)),
    "jackson-q-bessel": (
        ("kind", "nu", "x", "q"),
        lambda p, tol: besselfam.jackson_q_bessel(int(p["kind"]), p["nu"], p["x"], p["q"], tol),
    ),
    "little-q-jacobi": (
        ("n", "q", "a", "b", "x"),
        lambda p, tol: families.little_q_jacobi(int(p["n"]), p["q"], p["a"], p["b"])(p["x"]),
    ),
    "q-laguerre": (
        ("n", "q", "a", "x"),
        lambda p, tol: families.q_laguerre(int(p["n"]), p["q"], p["a"])(p["x"]),
    ),
    "minus1-jacobi": (
        ("n", "alpha", "beta", "x"),
        lambda p, tol: families.minus1_jacobi(int(p["n"]), p["alpha"], p["beta"])(p["x"]),
    ),
}

REP_FLAGS = {
    "little-q-jacobi": ("q", "a", "b", "r"),
    "minus1-jacobi": ("alpha", "beta"),
    "q-bessel3": ("q", "a"),
    "dunkl": ("alpha",),
    "q-laguerre": ("q", "a"),
    "q-bessel2": ("q", "a"),
}

REP_BUILDERS = {
    "little-q-jacobi": opalgebra.rep_little_q_jacobi,
    "minus1-jacobi": opalgebra.rep_minus1_jacobi,
    "q-bessel3": opalgebra.rep_qbessel3,
    "dunkl": opalgebra.rep_dunkl,
    "q-laguerre": opalgebra.rep_qlaguerre,
    "q-bessel2": opalgebra.rep_qbessel2,
}


def _cmd_eval(cfg: RunConfig) -> int:
    fn = cfg.params.get("fn")
    if fn not in EVAL_FUNCTIONS:
        return _usage_error(f"unknown --fn {fn!r}; choose from {sorted(EVAL_FUNCTIONS)}")
    needed, call = EVAL_FUNCTIONS[fn]
    missing = [k for k in needed if cfg.params.get(k) is None]
    if missing:
        return _usage_error(f"--fn {fn} needs {', '.join('--' + m for m in missing)}")
    tol = cfg.tolerance if cfg.tolerance is not None else 1e-12
    value = call(cfg.params, tol)
    if isinstance(value, Fraction):
        rendered = str(value)
    elif isinstance(value, complex):
        rendered = f"{value.real!r}{'+' if value.imag >= 0 else ''}{value.imag!r}j"
    else:
        rendered = repr(float(value))
    if cfg.output == "json":
        _emit({"fn": fn, "value": rendered}, "json")
    elif cfg.output == "csv":
        _emit([(cfg.params.get("x"), rendered)], "csv")
    else:
        print(rendered)
    return 0


def _cmd_verify_algebra(cfg: RunConfig) -> int:
    name = cfg.params.get("rep")
    if name == "daha":
        k = _require_exact(cfg.params.get("k"), "--k")
        t = opalgebra.rep_daha(k)
        deg = cfg.degree
        checks = {
            "sZs=-Z": opalgebra.op_is_zero(t.s @ t.Z @ t.s + t.Z, deg),
            "sDs=-D": opalgebra.op_is_zero(t.s @ t.D @ t.s + t.D, deg),
            "[D,Z]=1+2ks": opalgebra.ops_equal(
                opalgebra.LinOp(lambda p: t.D(t.Z(p)) - t.Z(t.D(p))),
                opalgebra.identity() + (2 * t.k) * t.s,
                deg,
            ),
        }
        doc = {"rep": "daha", "k": str(k), "degree": deg, "relations": checks}
        _emit(doc, "json" if cfg.output == "csv" else cfg.output)
        return 0 if all(checks.values()) else 1
    if name not in REP_BUILDERS:
        return _usage_error(f"unknown --rep {name!r}; choose from {sorted(REP_BUILDERS) + ['daha']}")
    args = []
    for flag in REP_FLAGS[name]:
        v = cfg.params.get(flag)
        if v is None:
            return _usage_error(f"--rep {name} needs --{flag}")
        args.append(_require_exact(v, f"--{flag}"))
    rep = REP_BUILDERS[name](*args)
    reports = [
        opalgebra.check_relation(rep, rid, cfg.degree) for rid in rep.relations
    ]
    doc = {
        "rep": rep.name,
        "params": {k: str(v) for k, v in sorted(rep.params.items())},
        "degree": cfg.degree,
        "relations": [r.to_json_dict() for r in reports],
    }
    ok = all(r.measured_residuals_zero for r in reports)
    if rep.casimir is not None:
        try:
            val = opalgebra.casimir_value(rep, cfg.degree)
            doc["casimir"] = str(val)
            doc["casimir_reference"] = str(rep.casimir_reference_value)
            ok = ok and val == rep.casimir_reference_value
        except QawError as exc:
            doc["casimir_error"] = str(exc)
            ok = False
    _emit(doc, "json" if cfg.output == "csv" else cfg.output)
    return 0 if ok else 1


def _cmd_verify_eigen(cfg: RunConfig) -> int:
    fam = cfg.params.get("family")
    nmax = int(cfg.params.get("nmax") or 12)
    if fam == "little-q-jacobi":
        q = _require_exact(cfg.params.get("q"), "--q")
        a = _require_exact(cfg.params.get("a"), "--a")
        b = _require_exact(cfg.params.get("b"), "--b")
        op = opalgebra.little_q_jacobi_operator(q, a, b)
        results = {
            n: op(families.little_q_jacobi(n, q, a, b).coeffs)
            == families.little_q_jacobi(n, q, a, b).coeffs.scale(
                families.little_q_jacobi_eigenvalue(n, q, a, b)
            )
            for n in range(nmax + 1)
        }
    elif fam == "q-laguerre":
        q = _require_exact(cfg.params.get("q"), "--q")
        a = _require_exact(cfg.params.get("a"), "--a")
        op = opalgebra.qlaguerre_operator(q, a)
        results = {
            n: op(families.q_laguerre(n, q, a).coeffs)
            == families.q_laguerre(n, q, a).coeffs.scale(
                families.q_laguerre_eigenvalue(n, q, a)
            )
            for n in range(nmax + 1)
        }
    elif fam == "minus1-jacobi":
        alpha = _require_exact(cfg.params.get("alpha"), "--alpha")
        beta = _require_exact(cfg.params.get("beta"), "--beta")
        op = opalgebra.minus1_jacobi_operator(alpha, beta)
        results = {
            n: op(families.minus1_jacobi(n, alpha, beta).coeffs)
            == families.minus1_jacobi(n, alpha, beta).coeffs.scale(
                families.minus1_jacobi_eigenvalue(n, alpha, beta)
            )
            for n in range(nmax + 1)
        }
    else:
        return _usage_error(
            "--family must be one of little-q-jacobi, q-laguerre, minus1-jacobi"
        )
    doc = {"family": fam, "nmax": nmax, "eigenchecks": {str(n): v for n, v in results.items()}}
    _emit(doc, "json" if cfg.output == "csv" else cfg.output)
    return 0 if all(results.values()) else 1


def _cmd_verify_limits(cfg: RunConfig) -> int:
    case_id = cfg.params.get("case")
    cases = limits.registered_cases()
    if case_id == "bessoula" and cfg.params.get("alpha") is not None:
        cases = {"bessoula": limits.case_bessoula(float(cfg.params["alpha"]))}
    elif case_id is not None:
        if case_id not in cases:
            return _usage_error(f"unknown --case {case_id!r}; choose from {sorted(cases)}")
        cases = {case_id: cases[case_id]}
    reports = [limits.run_limit(c) for _, c in sorted(cases.items())]
    doc = {"cases": [r.to_json_dict() for r in reports]}
    _emit(doc, "json" if cfg.output == "csv" else cfg.output)
    return 0 if all(r.passed for r in reports) else 1


TEST_FUNCTIONS = {
    "gaussian": lambda x: math.exp(-0.5 * x * x),
    "gaussian-sq": lambda x: math.exp(-x * x),
    "odd-gaussian": lambda x: x * math.exp(-0.5 * x * x),
}


def _cmd_transform(cfg: RunConfig) -> int:
    kind = cfg.params.get("kind")
    fn = cfg.params.get("fn") or "gaussian"
    if fn not in TEST_FUNCTIONS:
        return _usage_error(f"--fn must be one of {sorted(TEST_FUNCTIONS)}")
    alpha = float(cfg.params.get("alpha"))
    spec = transforms.TransformSpec(
        kind,
        alpha,
        R=float(cfg.params.get("R") or 12.0),
        tolerance=cfg.tolerance if cfg.tolerance is not None else 1e-9,
    )
    lam_max = float(cfg.params.get("lambda_max") or 4.0)
    points = int(cfg.params.get("points") or 17)
    lams = [lam_max * i / (points - 1) for i in range(points)]
    table = transforms.transform_table(spec, TEST_FUNCTIONS[fn], lams)
    if cfg.output == "json":
        _emit({"kind": kind, "alpha": alpha, "fn": fn, "table": table}, "json")
    else:
        _emit([("lambda", "value")] + table, "csv")
    return 0


def _cmd_report(cfg: RunConfig) -> int:
    doc = report.run_battery(degree=cfg.degree, seed=cfg.seed)
    if cfg.output == "pretty":
        for c in doc["checks"]:
            print(f"{'PASS' if c['passed'] else 'FAIL'}  {c['id']}")
        s = doc["summary"]
        print(f"passed {s['passed']}/{s['total']}")
    else:
        _emit(doc, "json")
    return 0 if doc["summary"]["all_passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qaw",
        description="Exact and numeric verification toolkit for q-Bessel functions and their operator algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", choices=("json", "csv", "pretty"), default="pretty")
        p.add_argument("--tolerance", type=float, default=None)
        p.add_argument("--truncation", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--degree", type=int, default=16)

    p = sub.add_parser("eval", help="evaluate one function")
    p.add_argument("--fn", required=True)
    for flag in ("x", "alpha", "beta", "a", "b", "q", "nu", "kind", "n"):
        p.add_argument(f"--{flag}", type=parse_number, default=None)
    common(p)

    p = sub.add_parser("verify-algebra", help="check one representation's relations and Casimir")
    p.add_argument("--rep", required=True)
    for flag in ("q", "a", "b", "r", "alpha", "beta", "k"):
        p.add_argument(f"--{flag}", type=parse_number, default=None)
    common(p)

    p = sub.add_parser("verify-eigen", help="exact eigenvalue checks for one family")
    p.add_argument("--family", required=True)
    p.add_argument("--nmax", type=int, default=12)
    for flag in ("q", "a", "b", "alpha", "beta"):
        p.add_argument(f"--{flag}", type=parse_number, default=None)
    common(p)

    p = sub.add_parser("verify-limits", help="run registered limit cases")
    p.add_argument("--case", default=None)
    p.add_argument("--alpha", type=parse_number, default=None)
    common(p)

    p = sub.add_parser("transform", help="emit a (lambda, value) transform table")
    p.add_argument("--kind", required=True, choices=transforms.KINDS)
    p.add_argument("--alpha", type=parse_number, required=True)
    p.add_argument("--fn", default="gaussian")
    p.add_argument("--R", type=parse_number, default=None)
    p.add_argument("--lambda-max", dest="lambda_max", type=parse_number, default=None)
    p.add_argument("--points", type=int, default=None)
    common(p)

    p = sub.add_parser("report", help="run the full verification battery")
    common(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    tol = args.tolerance
    if tol is None and os.environ.get("QAW_TOLERANCE"):
        tol = float(os.environ["QAW_TOLERANCE"])
    params = {
        k: v
        for k, v in vars(args).items()
        if k not in ("command", "output", "tolerance", "truncation", "seed", "degree")
        and v is not None
    }
    return RunConfig(
        command=args.command,
        params=params,
        output=args.output,
        tolerance=tol,
        truncation=args.truncation,
        seed=args.seed,
        degree=args.degree,
    )


COMMANDS = {
    "eval": _cmd_eval,
    "verify-algebra": _cmd_verify_algebra,
    "verify-eigen": _cmd_verify_eigen,
    "verify-limits": _cmd_verify_limits,
    "transform": _cmd_transform,
    "report": _cmd_report,
}


_NEGATIVE_NUMBER = None


def _merge_negative_numbers(argv: list[str]) -> list[str]:
    """Join '--flag -1/2' into '--flag=-1/2' so argparse accepts negative values."""
    global _NEGATIVE_NUMBER
    if _NEGATIVE_NUMBER is None:
        import re

        _NEGATIVE_NUMBER = re.compile(r"-\d+(/\d+)?|-\d*\.\d+([eE][+-]?\d+)?")
    out = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if (
            tok.startswith("--")
            and "=" not in tok
            and i + 1 < len(argv)
            and _NEGATIVE_NUMBER.fullmatch(argv[i + 1])
        ):
            out.append(f"{tok}={argv[i + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_negative_numbers(list(argv)))
    cfg = _config_from_args(args)
    try:
        return COMMANDS[cfg.command](cfg)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except QawError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
