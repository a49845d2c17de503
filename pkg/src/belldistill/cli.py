"""Command-line front end.

Subcommands: analyze (full pipeline report for one coefficient table),
verify (Monte-Carlo invariant campaign), sweep (white-noise grid scan to
CSV) and sample (emit random coefficient tables). Exit codes are a stable
contract: 0 success, 1 failure or invalid input, 2 for a valid input whose
state is not NPT (the analysis is still written).
"""

import argparse
import json
import sys

import numpy as np

from .filtering import add_white_noise, filter_report
from .linalg import partial_transpose
from .report import (
    analysis_report,
    coefficients_to_json,
    dump_report,
    parse_coefficients,
)
from .simplex import (
    NPT,
    InvalidCoefficientsError,
    SamplingExhaustedError,
    build_state,
    sample_npt,
    sample_simplex,
)
from .verify import run_campaign, summary_text, trial_seeds
from .witness import NotNPTError, construct_witness_vector, detect, witness_operator

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_NOT_NPT = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage, which would collide with the
    # "valid but not NPT" exit code; route usage errors to code 1 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_FAIL)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_FAIL


def _read_input(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_analyze(args) -> int:
    try:
        obj = _read_input(args.input)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"cannot read input: {exc}")
    try:
        coeffs, renormalized = parse_coefficients(obj)
        report = analysis_report(coeffs, renormalized=renormalized)
    except InvalidCoefficientsError as exc:
        return _fail(str(exc))
    try:
        _write_text(args.output, dump_report(report))
    except OSError as exc:
        return _fail(f"cannot write report: {exc}")
    if report["classification"]["classification"] != NPT:
        print(f"state is {report['classification']['classification']}: {report['reason']}")
        return EXIT_NOT_NPT
    print(f"report written to {args.output}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.count < 1:
        return _fail(f"--count must be >= 1, got {args.count}")
    if args.jobs < 1:
        return _fail(f"--jobs must be >= 1, got {args.jobs}")
    campaign = run_campaign(args.count, args.seed, jobs=args.jobs)
    sys.stdout.write(summary_text(campaign))
    return EXIT_OK if campaign.ok else EXIT_FAIL


def cmd_sweep(args) -> int:
    if not (0.0 <= args.p_min < args.p_max <= 1.0):
        return _fail(f"need 0 <= p-min < p-max <= 1, got {args.p_min} .. {args.p_max}")
    if args.steps < 2:
        return _fail(f"--steps must be >= 2, got {args.steps}")
    try:
        obj = _read_input(args.input)
        coeffs, _ = parse_coefficients(obj)
    except (OSError, json.JSONDecodeError, InvalidCoefficientsError) as exc:
        return _fail(f"bad input: {exc}")
    try:
        wc = construct_witness_vector(coeffs)
    except NotNPTError as exc:
        return _fail(str(exc))
    rho = build_state(coeffs)
    wop = witness_operator(wc)
    rep = filter_report(rho, wc)
    lines = [
        f"# p_rho_max = {rep.p_rho_max!r}",
        f"# p_sigma_max = {rep.p_sigma_max!r}",
        "p,witness_value,detected,sigma_npt",
    ]
    for p in np.linspace(args.p_min, args.p_max, args.steps):
        p = float(p)
        value = detect(wop, add_white_noise(rho, p))
        noisy_sigma = add_white_noise(rep.sigma, p)
        sigma_npt = bool(np.linalg.eigvalsh(partial_transpose(noisy_sigma, 2, 2))[0] < 0.0)
        lines.append(
            f"{p!r},{value!r},{'true' if value < 0 else 'false'},"
            f"{'true' if sigma_npt else 'false'}"
        )
    try:
        _write_text(args.output, "\n".join(lines) + "\n")
    except OSError as exc:
        return _fail(f"cannot write sweep: {exc}")
    print(f"sweep written to {args.output}")
    return EXIT_OK


def cmd_sample(args) -> int:
    if args.count < 1:
        return _fail(f"--count must be >= 1, got {args.count}")
    tables = []
    try:
        for seed in trial_seeds(args.seed, args.count):
            if args.npt_only:
                coeffs = sample_npt(seed)
            else:
                coeffs = sample_simplex(seed)
            tables.append(coefficients_to_json(coeffs))
    except SamplingExhaustedError as exc:
        return _fail(str(exc))
    try:
        _write_text(args.output, json.dumps(tables, indent=2) + "\n")
    except OSError as exc:
        return _fail(f"cannot write samples: {exc}")
    print(f"{args.count} tables written to {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="belldistill", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full pipeline report for one coefficient table")
    p.add_argument("input", help="input JSON file with keys d and c")
    p.add_argument("--output", required=True, help="path of the JSON report to write")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="Monte-Carlo verification campaign")
    p.add_argument("--count", type=int, default=1000, help="number of NPT trials")
    p.add_argument("--seed", type=int, default=0, help="master seed")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="white-noise grid scan to CSV")
    p.add_argument("input", help="input JSON file with keys d and c")
    p.add_argument("--p-min", type=float, default=0.0)
    p.add_argument("--p-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=21)
    p.add_argument("--output", required=True, help="path of the CSV to write")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("sample", help="emit random coefficient tables as JSON")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--npt-only", action="store_true", help="rejection-sample NPT tables only")
    p.add_argument("--output", required=True, help="path of the JSON array to write")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
