"""Command-line front end: ``bound``, ``sweep`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .bounds import full_report
from .errors import GMEBoundError
from .oracle import DEFAULT_SAMPLES
from .states import ghz_w_mixture, load_state, maximally_mixed, mix, noisy_ghz, noisy_w
from .verify import format_report, run_verification

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INPUT = 0, 1, 2
FAMILIES = ("ghz-noise", "w-noise", "ghz-w-noise", "file")
# bounds that need a C_N or tangle value, unavailable for mixed input by default
NEEDS_ESTIMATE = ("thm4", "thm5", "thm6")


@dataclass
class SweepSpec:
    family: str
    out: str
    steps: int = 101
    alpha_steps: int = 51
    beta_steps: int = 51
    a: float = 1.0
    b: float = 1.0
    mode: str = "paper"
    state: Optional[str] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GMEBoundError(f"unknown family {self.family!r}")
        if min(self.steps, self.alpha_steps, self.beta_steps) < 2:
            raise GMEBoundError("grids need at least 2 points per axis")
        if self.family == "file" and not self.state:
            raise GMEBoundError("family 'file' needs --state")

    def points(self):
        """``(params, state)`` in row-major grid order."""
        if self.family == "ghz-w-noise":
            na, nb = self.alpha_steps - 1, self.beta_steps - 1
            for i in range(na + 1):
                for j in range(nb + 1):
                    alpha, beta = i / na, j / nb
                    if alpha + beta <= 1 + 1e-12:
                        yield {"alpha": alpha, "beta": beta}, ghz_w_mixture(alpha, beta)
            return
        last = self.steps - 1
        if self.family == "file":
            target = load_state(self.state)
            noise = maximally_mixed(target.dims)
        for k in range(self.steps):
            t = k / last
            if self.family == "ghz-noise":
                yield {"p": t}, noisy_ghz(t)
            elif self.family == "w-noise":
                yield {"s": t}, noisy_w(t)
            else:
                yield {"p": t}, mix([noise, target], [1 - t, t])


def _num(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(int(x))
    return f"{x:.12g}"


def sweep_rows(spec):
    """Header and rows of a sweep as lists of strings."""
    header, rows = None, []
    for params, state in spec.points():
        report = full_report(state, a=spec.a, b=spec.b, mode=spec.mode)
        row = dict(params)
        row["pure"] = report.pure
        for name, entry in report.entries.items():
            row[f"{name}_raw"] = entry.raw
            row[f"{name}_clamped"] = entry.clamped
            if name.split(":")[0] in NEEDS_ESTIMATE:
                row[f"{name}_available"] = entry.available
        for label, norms in report.norms.items():
            row[f"pt_norm[{label}]"] = norms["pt_norm"]
            row[f"realign_norm[{label}]"] = norms["realign_norm"]
        if "L1" in report.entries:
            row["M"] = report["L1"].components["M"]
            row["N"] = report["L1"].components["N"]
            row["Mab"] = report["L2"].components["Mab"]
        if header is None:
            header = list(row)
        rows.append([_num(row.get(k)) for k in header])
    return header, rows


def write_sweep(spec):
    header, rows = sweep_rows(spec)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    with open(spec.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(buf.getvalue())
    return len(rows)


def cmd_bound(args):
    state = load_state(args.state)
    report = full_report(state, a=args.a, b=args.b, mode=args.mode)
    doc = {"state": args.state, **report.to_dict()}
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_sweep(args):
    spec = SweepSpec(
        family=args.family, out=args.out, steps=args.steps, alpha_steps=args.alpha_steps,
        beta_steps=args.beta_steps, a=args.a, b=args.b, mode=args.mode, state=args.state,
    )
    n = write_sweep(spec)
    print(f"wrote {n} rows to {spec.out}", file=sys.stderr)
    return EXIT_OK


def fault_hook(name):
    """Report hook that inflates bound ``name`` by 1, for exercising ``verify``."""

    def hook(report):
        if name in report.entries and report.entries[name].available:
            report.entries[name].raw += 1.0
        return report

    return hook


def cmd_verify(args):
    hook = fault_hook(args.inject_fault) if args.inject_fault else None
    results = run_verification(seed=args.seed, samples=args.samples, count=args.count, hook=hook)
    sys.stdout.write(format_report(results, args.seed, args.samples, args.count))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def build_parser():
    parser = argparse.ArgumentParser(prog="gmebound", description="Lower bounds on GME concurrence.")
    sub = parser.add_subparsers(dest="command", required=True)

    def bound_options(p):
        p.add_argument("--a", type=float, default=1.0, help="L2 parameter a (default 1)")
        p.add_argument("--b", type=float, default=1.0, help="L2 parameter b (default 1)")
        p.add_argument("--mode", choices=["paper", "corrected"], default="paper")

    p = sub.add_parser("bound", help="report every bound for a state file as JSON")
    p.add_argument("--state", required=True)
    bound_options(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="evaluate bounds over a state family and write CSV")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--alpha-steps", type=int, default=51)
    p.add_argument("--beta-steps", type=int, default=51)
    p.add_argument("--state", help="state file for --family file (mixed with white noise)")
    p.add_argument("--out", required=True)
    bound_options(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the seeded property suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--inject-fault", metavar="BOUND", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GMEBoundError, OSError) as exc:
        print(f"gmebound {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
