"""Command-line front end.

    eulerset sum 3 10 --method=all
    eulerset coeffs 4 30
    eulerset fit 4 4 --train=2,3,6,10 --validate=2..10000
    eulerset ratio 3 --n=2..100 --format=csv
    eulerset verify --kmax=3 --nmax=2000 --jobs=4
    eulerset artin --limit=1000000
    eulerset zeta 2 --limit=10000 --via-s3

Output is a JSON envelope ``{command, parameters, results, warnings}`` (see
``schemas/envelope.schema.json``) or CSV. Exit codes: 0 ok, 1 internal
cross-check failure, 2 bad input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import lab, numbers, powersums, products
from .errors import DomainError, InternalCheckError, ResourceError

FAULHABER_NOTE = (
    "W(m) = 1^3 + ... + m^3 = (m(m+1))^2/4 expands to (m^4 + 2m^3 + m^2)/4; the m^3 "
    "coefficient is 1/2 (a printed value of 1/4 is a misprint). Exact expansion used."
)
INVERSE_NOTE = (
    "p is recovered as (1 + sqrt(1 + 8*sqrt(S(3,p))))/2; the printed variant with 4 "
    "in place of 8 yields no integer p (e.g. S(3,5) = 100 gives 1 + 4*10 = 41)."
)


def parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected a..b") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(a, b + 1))


def parse_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad list {text!r}; expected comma-separated integers") from None


def _approx(q: Fraction) -> str:
    return f"{float(q):.15g}"


# -- commands ------------------------------------------------------------------
# Each returns (results, csv_rows, warnings).

def cmd_totatives(args):
    tots = powersums.totatives(args.n)
    results = {"n": str(args.n), "count": str(len(tots)), "totatives": [str(a) for a in tots]}
    return results, [{"index": i, "alpha": a} for i, a in enumerate(tots, 1)], []


def cmd_sum(args):
    k, n, method = args.k, args.n, args.method
    runners = {
        "brute": powersums.powersum_bruteforce,
        "closed": powersums.powersum_closed,
        "general": powersums.powersum_general,
    }
    if method == "all":
        chosen = ["brute"]
        if n >= 2:
            chosen += (["closed"] if k <= 3 else []) + ["general"]
    else:
        chosen = [method]
    records = [runners[m](k, n) for m in chosen]
    values = {r.method.value: r.value for r in records}
    if len(set(values.values())) > 1:
        raise InternalCheckError(f"methods disagree on S({k},{n})",
                                 {"k": k, "n": n, **{m: str(v) for m, v in values.items()}})
    results = {"k": str(k), "n": str(n), "records": [r.to_dict() for r in records]}
    rows = [{"k": k, "n": n, "method": r.method.value, "value": r.value} for r in records]
    warnings = [FAULHABER_NOTE] if "general" in chosen else []
    return results, rows, warnings


def cmd_coeffs(args):
    vec = powersums.coefficient_vector(args.k, args.n)
    value = vec.reconstruct()
    results = {**vec.to_dict(), "k": str(vec.k), "n": str(vec.n),
               "reconstructed_sum": numbers.format_rational(value)}
    rows = [{"i": i, "c_exact": numbers.format_rational(c), "c_approx15": _approx(c)}
            for i, c in enumerate(vec.c, 1)]
    return results, rows, [FAULHABER_NOTE]


def cmd_fit(args):
    train = args.train if args.train is not None else list(lab.DEFAULT_TRAINING)
    validation = [n for n in (args.validate or []) if n not in set(train)]
    fit = lab.ansatz_fit(args.k, args.i, train, validation, max_witnesses=args.max_witnesses,
                         jobs=args.jobs)
    rows = [{"n": w.n, "observed_exact": numbers.format_rational(w.observed),
             "fitted_exact": numbers.format_rational(w.fitted),
             "observed_approx15": _approx(w.observed), "fitted_approx15": _approx(w.fitted)}
            for w in fit.witnesses]
    return fit.to_dict(), rows, [FAULHABER_NOTE]


def cmd_ratio(args):
    report = lab.ratio_report(args.k, args.n, jobs=args.jobs)
    rows = [{"n": e.n, "ratio_exact": numbers.format_rational(e.ratio),
             "deviation_exact": numbers.format_rational(e.deviation),
             "ratio_approx15": _approx(e.ratio), "deviation_approx15": _approx(e.deviation)}
            for e in report.entries]
    return report.to_dict(), rows, [FAULHABER_NOTE]


def cmd_verify(args):
    summary = lab.verify_range(args.kmax, args.nmax, jobs=args.jobs)
    if summary.mismatches:
        raise InternalCheckError(f"{len(summary.mismatches)} cross-method mismatches",
                                 summary.mismatches[0])
    rows = [{"k_max": summary.k_max, "n_max": summary.n_max, "checks": summary.checks,
             "mismatches": 0}]
    return summary.to_dict(), rows, [FAULHABER_NOTE]


def _estimate_rows(est: products.ProductEstimate):
    d = est.to_dict()
    return [{**d, "value_lo_approx15": _approx(Fraction(est.value_lo)),
             "value_hi_approx15": _approx(Fraction(est.value_hi))}]


def cmd_artin(args):
    est = products.artin_product(args.limit)
    results = {**est.to_dict(), "reference": str(products.ARTIN_REFERENCE),
               "contains_reference": est.contains(products.ARTIN_REFERENCE)}
    return results, _estimate_rows(est), []


def cmd_zeta(args):
    fn = products.zeta_product_via_s3 if args.via_s3 else products.zeta_product
    est = fn(args.s, args.limit)
    return est.to_dict(), _estimate_rows(est), [INVERSE_NOTE] if args.via_s3 else []


def cmd_primes(args):
    primes = numbers.sieve_primes(args.limit)
    results = {"limit": str(args.limit), "count": str(len(primes)), "primes": [str(p) for p in primes]}
    return results, [{"index": i, "prime": p} for i, p in enumerate(primes, 1)], []


# -- plumbing --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--format", choices=("json", "csv"), default="json")
    top.add_argument("--out", metavar="PATH")
    # repeated on every subcommand; SUPPRESS keeps a value given before the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="eulerset", parents=[top],
                                     description="Power sums over totatives and related prime products.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("totatives", cmd_totatives, "list the totatives of N")
    p.add_argument("n", type=int)

    p = add("sum", cmd_sum, "S(K, N) by one or all methods")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("brute", "closed", "general", "all"), default="all")

    p = add("coeffs", cmd_coeffs, "exact coefficient vector c_1..c_K for N")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)

    p = add("fit", cmd_fit, "fit c_I against {1, (-1)^w, R, (-1)^w R}")
    p.add_argument("k", type=int)
    p.add_argument("i", type=int)
    p.add_argument("--train", type=parse_list)
    p.add_argument("--validate", type=parse_range)
    p.add_argument("--max-witnesses", type=int)
    p.add_argument("--jobs", type=int, default=1)

    p = add("ratio", cmd_ratio, "S(K,n)/(phi(n) n^K) over a range of n")
    p.add_argument("k", type=int)
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = add("verify", cmd_verify, "cross-check all methods over a (k, n) grid")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = add("artin", cmd_artin, "bracket Artin's constant")
    p.add_argument("--limit", type=int, required=True)

    p = add("zeta", cmd_zeta, "bracket zeta(S) by its Euler product")
    p.add_argument("s", type=str)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--via-s3", action="store_true")

    p = add("primes", cmd_primes, "primes up to --limit")
    p.add_argument("--limit", type=int, required=True)
    return parser


def _parameters(args) -> dict:
    # jobs never changes results, so it is not echoed
    skip = {"func", "format", "out", "command", "jobs"}
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in skip or value is None:
            continue
        if isinstance(value, list):
            value = f"{value[0]}..{value[-1]}" if key in ("n", "validate") else ",".join(map(str, value))
        out[key] = value
    return out


def render(args, results, rows, warnings) -> str:
    if args.format == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue()
    envelope = {"command": args.command, "parameters": _parameters(args),
                "results": results, "warnings": warnings}
    return json.dumps(envelope, indent=2) + "\n"


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        results, rows, warnings = args.func(args)
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        print(json.dumps({"witness": exc.witness}, default=str), file=sys.stderr)
        return 1
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(args, results, rows, warnings)
    if args.format == "csv":
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
