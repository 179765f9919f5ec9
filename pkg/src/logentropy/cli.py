"""
Command-line front end.

Exit status: 0 success, 1 usage error, 2 data error, 3 verification failure.
"""

import argparse
from dataclasses import dataclass
import json
import logging
import math
import sys
from typing import Optional

from logentropy import families
from logentropy.entropy_variance import (
    cross_moments_closed_form_exponential,
    cross_moments_closed_form_uniform,
    hv_after_transform,
)
from logentropy.errors import LogEntropyError
from logentropy.estimator import POLICIES, estimate_entropy_banded, estimate_log_moments, preprocess
from logentropy.gg import GGParams, gg_entropy, gg_K, gg_log_moments, table1_rows
from logentropy.ingest import ingest
from logentropy.oracle import mc_hv
from logentropy.rank import from_probs, rank_dilation_report
from logentropy.transform import DEFAULT_K, K_LOGNORMAL, K_UNIFORM, entropy_from_log_moments
from logentropy.verify import run_verification

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3
LN2 = math.log(2.0)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input_path: Optional[str] = None
    column: Optional[str] = None
    k_policy: tuple = ("default", DEFAULT_K)
    n: int = 1_000_000
    seed: int = 0
    output_format: str = "text"
    policy: str = "reject"
    lenient: bool = False
    partitions: int = 1
    probs: Optional[list] = None
    split: int = 4
    a: float = 1.0
    b: float = 1.0
    nu: float = 1.0
    base: str = "exponential"

    def __post_init__(self):
        kind, value = self.k_policy
        if kind == "explicit" and not math.isfinite(value):
            raise UsageError("--k must be finite")
        if kind == "gg_nu" and not value > 0.0:
            raise UsageError("--nu must be > 0")


def _k_from_policy(cfg):
    kind, value = cfg.k_policy
    if kind == "gg_nu":
        return gg_K(value)
    if kind == "band":
        return 0.5 * (K_UNIFORM + K_LOGNORMAL)
    return value


def cmd_estimate(cfg):
    raw = ingest(cfg.input_path, cfg.column, lenient=cfg.lenient)
    batch = preprocess(raw, cfg.policy)
    m = estimate_log_moments(batch)
    k = _k_from_policy(cfg)
    h = entropy_from_log_moments(m, k)
    low, high = estimate_entropy_banded(batch)
    return {
        "n": batch.n,
        "shift": batch.shift,
        "n_excluded": batch.n_excluded,
        "mean_log": m.mean_log,
        "var_log": m.var_log,
        "k_policy": cfg.k_policy[0],
        "k_used": k,
        "entropy_nats": h,
        "entropy_bits": h / LN2,
        "band_low": low,
        "band_high": high,
    }


def cmd_table1(cfg):
    return {"rows": table1_rows()}


def cmd_verify(cfg):
    items = run_verification(cfg.n, cfg.seed, cfg.partitions)
    return {
        "n": cfg.n,
        "seed": cfg.seed,
        "partitions": cfg.partitions,
        "n_items": len(items),
        "n_failed": sum(not it["pass"] for it in items),
        "items": items,
    }


def cmd_rank(cfg):
    probs = cfg.probs
    if probs is None:
        if cfg.input_path is None:
            raise UsageError("rank needs --probs or --input")
        probs = ingest(cfg.input_path, cfg.column, lenient=cfg.lenient)
    return rank_dilation_report(from_probs(probs), cfg.split)


def cmd_gg(cfg):
    params = GGParams(cfg.a, cfg.b, cfg.nu)
    m = gg_log_moments(params)
    h = gg_entropy(params)
    return {
        "a": params.a,
        "b": params.b,
        "nu": params.nu,
        "entropy_nats": h,
        "entropy_bits": h / LN2,
        "mean_log": m.mean_log,
        "var_log": m.var_log,
        "K": gg_K(params.nu),
    }


_HV_BASES = {
    "exponential": (families.exponential, cross_moments_closed_form_exponential),
    "uniform": (families.uniform, cross_moments_closed_form_uniform),
}


def cmd_hv(cfg):
    make_family, make_cm = _HV_BASES[cfg.base]
    cm = make_cm()
    predicted = hv_after_transform(cm, cfg.b)
    report = {
        "base": cfg.base,
        "a": cfg.a,
        "b": cfg.b,
        "hv_base": cm.hv,
        "hv_transformed": predicted,
    }
    if cfg.n:
        fam = families.power_transform(make_family(), cfg.a, cfg.b)
        est = mc_hv(fam.log_pdf, fam.sampler, cfg.n, cfg.seed, cfg.partitions)
        report.update(mc_value=est.value, std_error=est.std_error, n=cfg.n, seed=cfg.seed)
    return report


COMMANDS = {
    "estimate": cmd_estimate,
    "table1": cmd_table1,
    "verify": cmd_verify,
    "rank": cmd_rank,
    "gg": cmd_gg,
    "hv": cmd_hv,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _probs_arg(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad probability list {text!r}")


def build_parser():
    parser = _Parser(prog="logentropy", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, mc=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if mc:
            p.add_argument("--n", type=int, default=1_000_000)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--partitions", type=int, default=1)

    p = sub.add_parser("estimate", help="entropy from the log-moments of a data column")
    p.add_argument("--input", required=True)
    p.add_argument("--column")
    p.add_argument("--policy", choices=POLICIES, default="reject")
    p.add_argument("--lenient", action="store_true")
    k = p.add_mutually_exclusive_group()
    k.add_argument("--k", type=float, help="explicit K")
    k.add_argument("--nu", type=float, help="use K(nu) of the generalized gamma")
    k.add_argument("--band", action="store_true", help="report the K in [1, 1.4189] band midpoint")
    common(p)

    common(sub.add_parser("table1", help="K(nu) table for the generalized gamma"))
    common(sub.add_parser("verify", help="Monte Carlo check of every closed form"), mc=True)

    p = sub.add_parser("rank", help="prefix-split report for a rank distribution")
    p.add_argument("--probs", type=_probs_arg)
    p.add_argument("--input")
    p.add_argument("--column")
    p.add_argument("--lenient", action="store_true")
    p.add_argument("--split", type=int, default=4)
    common(p)

    p = sub.add_parser("gg", help="closed forms for GG(a, b, nu)")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--nu", type=float, default=1.0)
    common(p)

    p = sub.add_parser("hv", help="entropy variance of a*X^b for a reference X")
    p.add_argument("--base", choices=sorted(_HV_BASES), default="exponential")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--n", type=int, default=0, help="Monte Carlo sample size (0 = skip)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--partitions", type=int, default=1)
    common(p)
    return parser


def config_from_args(args):
    if getattr(args, "k", None) is not None:
        k_policy = ("explicit", args.k)
    elif getattr(args, "nu", None) is not None and args.command == "estimate":
        k_policy = ("gg_nu", args.nu)
    elif getattr(args, "band", False):
        k_policy = ("band", None)
    else:
        k_policy = ("default", DEFAULT_K)
    fields = {
        "input_path": getattr(args, "input", None),
        "column": getattr(args, "column", None),
        "n": getattr(args, "n", 1_000_000),
        "seed": getattr(args, "seed", 0),
        "policy": getattr(args, "policy", "reject"),
        "lenient": getattr(args, "lenient", False),
        "partitions": getattr(args, "partitions", 1),
        "probs": getattr(args, "probs", None),
        "split": getattr(args, "split", 4),
        "a": getattr(args, "a", 1.0),
        "b": getattr(args, "b", 1.0),
        "base": getattr(args, "base", "exponential"),
    }
    if args.command == "gg":
        fields["nu"] = args.nu
    return RunConfig(command=args.command, k_policy=k_policy, output_format=args.format, **fields)


def _fmt(value):
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def render_text(command, report):
    lines = []
    if command == "table1":
        for row in report["rows"]:
            lines.append(" ".join(f"{key}={_fmt(val)}" for key, val in row.items()))
        return "\n".join(lines)
    if command == "verify":
        for it in report["items"]:
            status = "PASS" if it["pass"] else "FAIL"
            body = " ".join(f"{k}={_fmt(v)}" for k, v in it.items() if k not in ("target", "pass"))
            lines.append(f"{status} {it['target']}: {body}")
        lines.append(f"n_items={report['n_items']} n_failed={report['n_failed']}")
        return "\n".join(lines)
    for key, val in report.items():
        lines.append(f"{key}: {_fmt(val)}")
    if command == "estimate":
        lines.append("note: with K unknown the entropy lies between band_low (K = 1) and band_high (lognormal K)")
        if report["shift"]:
            lines.append("note: data were shifted by `shift` before taking logs")
    return "\n".join(lines)


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        cfg = config_from_args(args)
        report = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except LogEntropyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    if cfg.output_format == "json":
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        print(render_text(cfg.command, report))
    if cfg.command == "verify" and report["n_failed"]:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
