"""Command-line front end.

Subcommands::

    ppt-minors analyze FILE [--tolerance T] [--transpose-side A|B] [--pretty]
    ppt-minors gen {bell,werner,product,random,separable} [flags] [--out PATH]
    ppt-minors sweep werner --p-start 0 --p-end 1 --steps 101 [--out PATH]
    ppt-minors bench [--trials N] [--seed S]

Exit codes: 0 success, 1 input/IO error, 2 invalid density matrix,
3 internal cross-check failure.
"""

import argparse
import csv
import json
import math
import sys
import time

import numpy as np

from .errors import CrossCheckError, DensityMatrixError, NoConvergence, NonFiniteEntry, ResidualTooLarge
from .hermitian import Subsystem, partial_transpose, validate_density
from .minors import (
    NEGATIVE_MINOR_TOL,
    minor_label,
    minor_sums,
    negative_minor_sum,
    negativity_minors,
    principal_minors,
    sylvester_separable,
)
from .oracle import negativity_eigen
from .quartic import quartic_real_roots
from .states import (
    bell_state,
    bloch_state,
    box_muller,
    ensemble_seeds,
    make_rng,
    product_state,
    random_density,
    random_separable,
    werner_state,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVALID = 2
EXIT_CROSSCHECK = 3

AGREEMENT_TOL = 1e-8


class MatrixFileError(ValueError):
    pass


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # bad flags are an input error (exit 1), not argparse's default 2
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


# ---------------------------------------------------------------------------
# Matrix files
# ---------------------------------------------------------------------------


def _grid(obj, key):
    rows = obj.get(key)
    if not isinstance(rows, list) or len(rows) != 4:
        raise MatrixFileError(f"'{key}' must be a 4x4 grid of numbers")
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != 4:
            raise MatrixFileError(f"'{key}' must be a 4x4 grid of numbers")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise MatrixFileError(f"'{key}' contains a non-numeric entry {x!r}")
            if not math.isfinite(x):
                raise MatrixFileError(f"'{key}' contains a non-finite entry {x!r}")
        out.append([float(x) for x in row])
    return out


def parse_matrix(text):
    """Parse matrix-file text into a 4x4 complex array."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MatrixFileError("matrix file must be a JSON object with keys dim, re, im")
    if obj.get("dim") != 4:
        raise MatrixFileError(f"'dim' must be 4, got {obj.get('dim')!r}")
    re = np.array(_grid(obj, "re"))
    im = np.array(_grid(obj, "im"))
    return re + 1j * im


def load_matrix(path):
    if str(path) == "-":
        return parse_matrix(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_matrix(text)


def _num(x):
    # shortest repr round-trips exactly; + 0.0 folds -0.0
    return repr(float(x) + 0.0)


def format_matrix(m):
    """Serialize a 4x4 complex matrix; one grid row per line."""
    m = np.asarray(m)

    def grid(part):
        rows = ["    [" + ", ".join(_num(x) for x in row) + "]" for row in part]
        return "[\n" + ",\n".join(rows) + "\n  ]"

    return '{\n  "dim": 4,\n  "re": ' + grid(m.real) + ',\n  "im": ' + grid(m.imag) + "\n}\n"


def _write_text(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise MatrixFileError(f"cannot write {out}: {exc.strerror}") from exc


# ---------------------------------------------------------------------------
# Analysis
# ---------------------------------------------------------------------------


def analyze(matrix, tolerance=NEGATIVE_MINOR_TOL, side=Subsystem.A):
    """Full report for one state: minors, sums, roots, both negativities, verdict.

    Raises the density-matrix errors for invalid input and the arithmetic
    errors of either route.
    """
    side = Subsystem(side)
    rho = validate_density(matrix)
    pt = partial_transpose(rho.matrix, side)
    minors = principal_minors(pt)
    sums = minor_sums(minors)
    roots = quartic_real_roots(sums)
    by_minors = negativity_minors(rho, side)
    by_eigen = negativity_eigen(rho, side)
    verdict = sylvester_separable(pt, tolerance)
    return {
        "input_valid": True,
        "violation": None,
        "transpose_side": side.value,
        "tolerance": tolerance,
        "minors": [
            {"label": minor_label(k, l), "order": k, "index": l, "value": v}
            for k, l, v in minors.labeled()
        ],
        "coefficients": {"S1": sums.s1, "S2": sums.s2, "S3": sums.s3, "S4": sums.s4},
        "roots": list(roots),
        "negativity_minors": by_minors.negativity,
        "negativity_eigen": by_eigen.negativity,
        "agreement": abs(by_minors.negativity - by_eigen.negativity),
        "verdict": "separable" if verdict.separable else "entangled",
        "negative_minors": [
            {"label": minor_label(k, l), "order": k, "index": l, "value": v}
            for k, l, v in verdict.negative_minors
        ],
        "negative_minor_sum": negative_minor_sum(pt),
    }


def format_pretty(report):
    if not report["input_valid"]:
        v = report["violation"]
        return f"input_valid  false\nviolation    {v['kind']}: {v['detail']}\n"
    lines = [f"{'input_valid':<20} true", f"{'transpose_side':<20} {report['transpose_side']}", "minors:"]
    for m in report["minors"]:
        lines.append(f"  {m['label']:<8} {m['value']: .17g}")
    lines.append("coefficients:")
    for key, value in report["coefficients"].items():
        lines.append(f"  {key:<8} {value: .17g}")
    lines.append("roots:    " + "  ".join(f"{r: .17g}" for r in report["roots"]))
    for key in ("negativity_minors", "negativity_eigen", "agreement", "negative_minor_sum"):
        lines.append(f"{key:<20} {report[key]:.17g}")
    lines.append(f"{'verdict':<20} {report['verdict']}")
    if report["negative_minors"]:
        lines.append("negative minors:    " + ", ".join(m["label"] for m in report["negative_minors"]))
    return "\n".join(lines) + "\n"


def cmd_analyze(args):
    matrix = load_matrix(args.path)
    try:
        report = analyze(matrix, args.tolerance, args.transpose_side)
    except NonFiniteEntry as exc:
        raise MatrixFileError(str(exc)) from exc
    except DensityMatrixError as exc:
        kind = type(exc).__name__
        print(f"invalid density matrix: {kind}: {exc}", file=sys.stderr)
        report = {"input_valid": False, "violation": {"kind": kind, "detail": str(exc)}}
        _emit_report(report, args.pretty)
        return EXIT_INVALID
    _emit_report(report, args.pretty)
    if report["agreement"] > AGREEMENT_TOL:
        print(
            f"cross-check failed: negativity paths differ by {report['agreement']:.3e} > {AGREEMENT_TOL:.0e}",
            file=sys.stderr,
        )
        return EXIT_CROSSCHECK
    return EXIT_OK


def _emit_report(report, pretty):
    if pretty:
        sys.stdout.write(format_pretty(report))
    else:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")


# ---------------------------------------------------------------------------
# Generators, sweep, bench
# ---------------------------------------------------------------------------


def _random_bloch(rng):
    v = box_muller(rng, 3)
    return v / np.linalg.norm(v)


def cmd_gen(args):
    family = args.family
    if family == "bell":
        rho = bell_state(args.kind)
    elif family == "werner":
        if args.p is None:
            raise _UsageError("gen werner requires --p")
        try:
            rho = werner_state(args.p)
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
    elif family == "product":
        rng = make_rng(args.seed)
        a = args.bloch_a if args.bloch_a is not None else _random_bloch(rng)
        b = args.bloch_b if args.bloch_b is not None else _random_bloch(rng)
        for v in (a, b):
            if float(np.dot(v, v)) > 1.0 + 1e-12:
                raise _UsageError(f"Bloch vector {list(v)} is longer than 1")
        rho = product_state(bloch_state(*a), bloch_state(*b))
    elif family == "random":
        rho = random_density(args.seed)
    else:
        if args.terms < 1:
            raise _UsageError("--terms must be at least 1")
        rho, _ = random_separable(args.terms, args.seed)
    _write_text(format_matrix(rho.matrix), args.out)
    return EXIT_OK


def werner_sweep(p_start, p_end, steps, tolerance=NEGATIVE_MINOR_TOL):
    """Rows ``(p, negativity_minors, negativity_eigen, separable)`` on a uniform grid."""
    if not (0.0 <= p_start <= p_end <= 1.0) or steps < 2:
        raise ValueError("need 0 <= p-start <= p-end <= 1 and steps >= 2")
    width = (p_end - p_start) / (steps - 1)
    rows = []
    for i in range(steps):
        p = p_end if i == steps - 1 else p_start + i * width
        rho = werner_state(p)
        verdict = sylvester_separable(partial_transpose(rho.matrix), tolerance)
        rows.append((p, negativity_minors(rho).negativity, negativity_eigen(rho).negativity, verdict.separable))
    return rows


def cmd_sweep(args):
    try:
        rows = werner_sweep(args.p_start, args.p_end, args.steps, args.tolerance)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    out = sys.stdout if args.out in (None, "-") else None
    try:
        fh = out or open(args.out, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise MatrixFileError(f"cannot write {args.out}: {exc.strerror}") from exc
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["p", "negativity_minors", "negativity_eigen", "separable"])
        for p, n_min, n_eig, sep in rows:
            writer.writerow([_num(p), _num(n_min), _num(n_eig), "true" if sep else "false"])
    finally:
        if out is None:
            fh.close()
    return EXIT_OK


def run_bench(trials, seed):
    """Time both negativity routes over the same ``trials`` random states.

    Generation is excluded from the timed region, and every input is touched
    once beforehand.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    states = [random_density(s) for s in ensemble_seeds(seed, trials)]
    touched = sum(float(np.abs(rho.matrix).sum()) for rho in states)

    t0 = time.perf_counter()
    by_minors = [negativity_minors(rho).negativity for rho in states]
    t1 = time.perf_counter()
    by_eigen = [negativity_eigen(rho).negativity for rho in states]
    t2 = time.perf_counter()

    return {
        "trials": trials,
        "seed": seed,
        "minors_total_s": t1 - t0,
        "eigen_total_s": t2 - t1,
        "max_disagreement": max(abs(a - b) for a, b in zip(by_minors, by_eigen)),
        "checksum": touched,
    }


def format_bench(result):
    n = result["trials"]
    lines = [
        f"trials {n}  seed {result['seed']}",
        f"{'path':<8} {'total_s':>12} {'per_state_us':>14}",
    ]
    for path in ("minors", "eigen"):
        total = result[f"{path}_total_s"]
        lines.append(f"{path:<8} {total:>12.6f} {total / n * 1e6:>14.3f}")
    lines.append(f"max_disagreement {result['max_disagreement']:.3e}")
    return "\n".join(lines) + "\n"


def cmd_bench(args):
    try:
        result = run_bench(args.trials, args.seed)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    sys.stdout.write(format_bench(result))
    if result["max_disagreement"] > AGREEMENT_TOL:
        print(f"cross-check failed: max disagreement {result['max_disagreement']:.3e}", file=sys.stderr)
        return EXIT_CROSSCHECK
    return EXIT_OK


# ---------------------------------------------------------------------------


def _seed(text):
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser():
    parser = _Parser(prog="ppt-minors", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="analyze a matrix file")
    p.add_argument("path", help="matrix file, or - for stdin")
    p.add_argument("--tolerance", type=float, default=NEGATIVE_MINOR_TOL)
    p.add_argument("--transpose-side", "--transpose_side", dest="transpose_side", choices=["A", "B"], default="A")
    p.add_argument("--pretty", action="store_true", help="aligned human-readable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="write a state to a matrix file")
    p.add_argument("family", choices=["bell", "werner", "product", "random", "separable"])
    p.add_argument("--kind", choices=["phi+", "phi-", "psi+", "psi-"], default="phi+")
    p.add_argument("--p", type=float)
    p.add_argument("--bloch-a", type=float, nargs=3, metavar=("X", "Y", "Z"))
    p.add_argument("--bloch-b", type=float, nargs=3, metavar=("X", "Y", "Z"))
    p.add_argument("--terms", type=int, default=3)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="tabulate negativity along the Werner family")
    p.add_argument("family", choices=["werner"])
    p.add_argument("--p-start", type=float, default=0.0)
    p.add_argument("--p-end", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--tolerance", type=float, default=NEGATIVE_MINOR_TOL)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="time the minor route against the eigenvalue route")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=_seed, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except MatrixFileError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ResidualTooLarge, NoConvergence, CrossCheckError) as exc:
        print(f"cross-check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK


if __name__ == "__main__":
    sys.exit(main())
