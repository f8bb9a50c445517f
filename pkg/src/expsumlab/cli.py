"""Command-line front door.

One subcommand per experiment, deterministic CSV/JSON emission, and a
`verify-all` battery that exits nonzero on any hard-bound violation.

Exit codes: 0 success, 1 hard-check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import distribution, expsums, intpoly, moments, subgroups
from .checks import DEFAULT_RATIO_CEILING
from .ffcore import PrimeContext, primes_up_to


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _emit(args, payload: dict, csv_rows=None, csv_header=None) -> None:
    """JSON by default; --csv writes the flat row projection of the same data."""
    if getattr(args, "csv", False) and csv_rows is not None:
        text = "\n".join([",".join(csv_header)]
                         + [",".join(str(v) for v in row) for row in csv_rows]) + "\n"
    else:
        text = json.dumps(payload, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_csv(path_or_stdout, header, rows) -> None:
    text = "\n".join([",".join(header)]
                     + [",".join(str(v) for v in row) for row in rows]) + "\n"
    if path_or_stdout:
        with open(path_or_stdout, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_payload(chk) -> dict:
    return chk.to_dict()


def _fail_hard(args, chk) -> int:
    _emit(args, {"failed_check": chk.to_dict()})
    return 1


def _cv_payload(cv) -> dict:
    return {"re": cv.re, "im": cv.im, "abs": cv.abs(),
            "abs_error_bound": cv.abs_error_bound}


# -- subcommand implementations ---------------------------------------------

def _cmd_sum_s(args) -> int:
    ctx = PrimeContext.create(args.p)
    cv = expsums.sum_S(ctx, args.a, args.h)
    _emit(args, {"p": args.p, "a": args.a, "h": args.h, **_cv_payload(cv)})
    return 0


def _cmd_sum_t(args) -> int:
    ctx = PrimeContext.create(args.p)
    cv = expsums.sum_T(ctx, args.a, args.r)
    payload = {"p": args.p, "a": args.a, "r": args.r, **_cv_payload(cv)}
    if args.direct:
        payload["direct"] = _cv_payload(expsums.sum_T_direct(ctx, args.a, args.r))
    _emit(args, payload)
    return 0


def _cmd_binomial(args) -> int:
    ctx = PrimeContext.create(args.p)
    cv = expsums.binomial_sum(ctx, args.a, args.b, args.e, args.f)
    payload = {"p": args.p, "a": args.a, "b": args.b, "e": args.e, "f": args.f,
               **_cv_payload(cv)}
    if args.check:
        chk = expsums.cochrane_pinner_check(ctx, args.a, args.b, args.e, args.f)
        payload["cochrane_pinner"] = chk.to_dict()
        if not chk.passed:
            return _fail_hard(args, chk)
    _emit(args, payload)
    return 0


def _cmd_avg_u(args) -> int:
    ctx = PrimeContext.create(args.p)
    cv = expsums.average_U(ctx, args.a, args.H, args.K)
    payload = {"p": args.p, "a": args.a, "H": args.H, "K": args.K, **_cv_payload(cv)}
    if args.ratios:
        payload["theorem_checks"] = [
            c.to_dict() for c in expsums.theorem_ratios(
                ctx, args.a, args.H, args.K, args.ratios, args.ceiling)]
    _emit(args, payload)
    return 0


def _cmd_avg_v(args) -> int:
    ctx = PrimeContext.create(args.p)
    v = expsums.average_V(ctx, args.a, args.H, args.K)
    _emit(args, {"p": args.p, "a": args.a, "H": args.H, "K": args.K, "value": v})
    return 0


def _cmd_w_sum(args) -> int:
    ctx = PrimeContext.create(args.p)
    w = expsums.double_sum_W(ctx, args.a, args.K, args.H, args.k)
    chk = expsums.w_bound_monitor(ctx, args.a, args.K, args.H, args.k, args.ceiling)
    _emit(args, {"p": args.p, "a": args.a, "K": args.K, "H": args.H, "k": args.k,
                 "value": w, "monitor": chk.to_dict()})
    return 0


def _cmd_congr_count(args) -> int:
    cc = subgroups.count_congruence_system(args.p, args.V, args.H, args.K)
    chk = subgroups.congruence_bound_check(args.p, args.V, args.H, args.K)
    payload = {"p": args.p, "V_set": list(cc.V_set), "H": args.H, "K": args.K,
               "N": cc.N, "v_max": cc.v_max, "bound_check": chk.to_dict()}
    if not chk.passed:
        return _fail_hard(args, chk)
    _emit(args, payload)
    return 0


def _cmd_residue_count(args) -> int:
    if args.ratio:
        count = subgroups.count_ratio_power_residues(args.p, args.d, args.H)
        monitors = subgroups.ratio_residue_monitors(args.p, args.d, args.H, args.ceiling)
        kind = "ratio_pairs_J"
    else:
        count = subgroups.count_power_residues_in_interval(args.p, args.d, args.H)
        monitors = subgroups.power_residue_monitors(args.p, args.d, args.H, args.ceiling)
        kind = "interval_I"
    _emit(args, {"p": args.p, "d": args.d, "H": args.H, "kind": kind,
                 "count": count, "monitors": [m.to_dict() for m in monitors]})
    return 0


def _cmd_zeros(args) -> int:
    cert = intpoly.count_common_zeros(args.p, args.r, args.s)
    _emit(args, cert.to_json_dict())
    return 0 if cert.divisibility_ok else 1


def _cmd_resultant(args) -> int:
    D = intpoly.compute_D(args.r, args.s)
    R = intpoly.compute_R(args.r, args.s)
    payload = {"r": args.r, "s": args.s, "D_coeffs": list(D.coeffs),
               "R_decimal_string": str(R),
               "log_abs_R": float(abs(R).bit_length()) * math.log(2)}
    if args.pmax:
        exc = intpoly.exceptional_primes(args.r, args.s, args.pmax)
        payload["exceptional_primes"] = exc
        payload["omega_monitor"] = intpoly.omega_monitor(
            args.r, args.s, len(exc), R).to_dict()
    _emit(args, payload)
    return 0


def _cmd_scan_primes(args) -> int:
    R = intpoly.compute_R(args.r, args.s)
    rows = []
    for p in primes_up_to(args.pmax):
        interior, _ = intpoly._common_zeros(p, args.r, args.s)
        n = len(interior)
        divides = abs(R) % p == 0
        if not divides and n > 4:
            chk_payload = {"p": p, "r": args.r, "s": args.s, "N": n,
                           "reason": "N > 4 although p does not divide R"}
            _emit(args, {"failed_check": chk_payload})
            return 1
        rows.append((p, n, int(divides)))
    payload = {"r": args.r, "s": args.s, "pmax": args.pmax,
               "rows": [{"p": p, "N": n, "divides_R": bool(d)} for p, n, d in rows]}
    _emit(args, payload, csv_rows=rows, csv_header=("p", "N", "divides_R"))
    return 0


def _cmd_moments(args) -> int:
    ctx = PrimeContext.create(args.p)
    rep = moments.moment_report(ctx, args.r, args.s)
    sys.stdout.write(rep.to_json() + "\n") if not args.out else None
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(rep.to_json() + "\n")
    return 0 if rep.identities_ok else 1


def _cmd_semicircle(args) -> int:
    ctx = PrimeContext.create(args.p)
    dist = distribution.semicircle_experiment(ctx, args.samples, args.seed,
                                              args.mode, args.bins)
    if args.csv:
        rows = [(int(a1), int(a2), repr(float(v)))
                for a1, a2, v in zip(dist.coeff_a1, dist.coeff_a2, dist.samples)]
        _write_csv(args.out, ("p", "a1", "a2", "value_normalized"),
                   [(args.p, *row) for row in rows])
    else:
        _emit(args, {"p": args.p, "n": int(dist.samples.size),
                     "ks_distance": dist.ks_distance,
                     "reference": dist.reference,
                     "bin_edges": dist.bin_edges.tolist(),
                     "bin_counts": dist.bin_counts.tolist()})
    return 0


def _cmd_horizontal(args) -> int:
    with ThreadPoolExecutor(max_workers=args.threads) as ex:
        rows, skipped, summary = distribution.horizontal_scan(
            args.h, args.a, args.pmin, args.pmax, par_map=ex.map)
    if args.csv:
        _write_csv(args.out, ("p", "re", "im", "abs"),
                   [(r.p, repr(r.re), repr(r.im), repr(r.abs)) for r in rows])
    else:
        _emit(args, {"h": args.h, "a": args.a, "pmin": args.pmin,
                     "pmax": args.pmax, "skipped": skipped, "summary": summary})
    return 0


def _cmd_exp_growth(args) -> int:
    rows, skipped, summary = distribution.exponent_growth_scan(
        args.h1, args.h2, args.pmax)
    if args.csv:
        _write_csv(args.out, ("p", "r1", "r2", "alpha"),
                   [(r.p, r.r1, r.r2, repr(r.alpha)) for r in rows])
    else:
        _emit(args, {"h1": args.h1, "h2": args.h2, "pmax": args.pmax,
                     "skipped": skipped, "summary": summary})
    return 0


# -- verify-all --------------------------------------------------------------

def _desk_checks(ceiling: float):
    """The embedded desk profile: a quick pass over every hard and monitored
    family.  Yields (name, BoundCheck-like dict, passed)."""
    rng = distribution.SplitMix64(20240817)
    ctx_pool = {p: PrimeContext.create(p) for p in (101, 499, 1009)}

    for p, ctx in ctx_pool.items():
        for _ in range(10):
            a = 1 + rng.below(p - 1)
            b = 1 + rng.below(p - 1)
            e = 1 + rng.below(p - 1)
            f = 1 + rng.below(p - 1)
            chk = expsums.cochrane_pinner_check(ctx, a, b, e, f)
            yield chk.label, chk
        cap = math.isqrt(p) - 1
        for _ in range(10):
            r1 = 1 + rng.below(cap)
            r2 = 1 + rng.below(cap)
            if r1 == r2:
                continue
            a = (1 + rng.below(p - 1), 1 + rng.below(p - 1))
            chk = expsums.weil_check(ctx, a, (r1, r2))
            yield chk.label, chk
        chk = subgroups.congruence_bound_check(p, (2, 3, 5), min(20, p // 4), 10)
        yield chk.label, chk
        chk = expsums.w_bound_monitor(ctx, 1, 0, 30, 1, ceiling)
        yield chk.label, chk
        chk = expsums.w_bound_monitor(ctx, 1, 0, 30, 2, ceiling)
        yield chk.label, chk

    for r in range(3, 25):
        for s in range(2, r):
            intpoly.compute_D(r, s)  # raises on any gcd-lemma violation
    yield "gcd_lemma(r<=24)", None

    for p in primes_up_to(101):
        for (r, s) in ((5, 3), (7, 5), (12, 7), (13, 7)):
            ok = intpoly.verify_divisibility(p, r, s)
            if not ok:
                yield f"divisibility(p={p},r={r},s={s})", False
    yield "divisibility_grid(r<=13,p<=101)", None

    for p in (7, 11, 13):
        ctx = PrimeContext.create(p)
        for (r, s) in ((5, 3), (7, 5)):
            rep = moments.moment_report(ctx, r, s)
            if not rep.identities_ok:
                yield f"moment_identity(p={p},r={r},s={s})", False
    yield "moment_identities(p<=13)", None


def _cmd_verify_all(args) -> int:
    if args.profile != "desk":
        print(f"unknown profile {args.profile!r}", file=sys.stderr)
        return 2
    failures = []
    n = 0
    for name, chk in _desk_checks(args.ceiling):
        n += 1
        if chk is None:
            print(f"PASS {name}")
            continue
        if chk is False:
            failures.append((name, None))
            print(f"FAIL {name}")
            continue
        status = "SKIP" if chk.skipped else ("PASS" if chk.passed else "FAIL")
        if not chk.passed:
            failures.append((name, chk))
        if args.verbose or status == "FAIL":
            print(f"{status} {name} observed={chk.observed} bound={chk.bound}")
    print(f"verify-all: {n} checks, {len(failures)} failures")
    if failures:
        name, chk = failures[0]
        print(json.dumps({"failed_check": chk.to_dict() if chk else {"label": name}},
                         sort_keys=True))
        return 1
    return 0


# -- parser ------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expsum",
        description="Desk-scale experiments on sparse exponential sums mod p")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        sp.add_argument("--out", help="write output to this file instead of stdout")
        sp.add_argument("--json", action="store_true", help="JSON output (default)")
        sp.add_argument("--csv", action="store_true", help="CSV output where supported")
        sp.add_argument("--ceiling", type=float, default=DEFAULT_RATIO_CEILING,
                        help="ratio ceiling for monitored bounds")
        return sp

    sp = add("sum-s", _cmd_sum_s, help="evaluate S(a, h; p)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=_int_list, required=True)
    sp.add_argument("--h", type=_int_list, required=True)

    sp = add("sum-t", _cmd_sum_t, help="evaluate T(a, r; p)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=_int_list, required=True)
    sp.add_argument("--r", type=_int_list, required=True)
    sp.add_argument("--direct", action="store_true",
                    help="also evaluate by the direct monomial route")

    sp = add("binomial", _cmd_binomial, help="complete binomial sum over F_p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--f", type=int, required=True)
    sp.add_argument("--check", action="store_true",
                    help="attach the Cochrane-Pinner hard check")

    sp = add("avg-u", _cmd_avg_u, help="interval average U of S")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=_int_list, required=True)
    sp.add_argument("--H", type=int, required=True)
    sp.add_argument("--K", type=int, default=0)
    sp.add_argument("--ratios", type=int, metavar="N", default=0,
                    help="attach the theorem ratio monitors with this n")

    sp = add("avg-v", _cmd_avg_v, help="interval average V of |S|")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=_int_list, required=True)
    sp.add_argument("--H", type=int, required=True)
    sp.add_argument("--K", type=int, default=0)

    sp = add("w-sum", _cmd_w_sum, help="absolute double sum W_k over an interval")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--K", type=int, default=0)
    sp.add_argument("--H", type=int, required=True)
    sp.add_argument("--k", type=int, choices=(1, 2), required=True)

    sp = add("congr-count", _cmd_congr_count, help="congruence-system count + bound")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--V", type=_int_list, required=True)
    sp.add_argument("--H", type=int, required=True)
    sp.add_argument("--K", type=int, default=0)

    sp = add("residue-count", _cmd_residue_count,
             help="interval/ratio power-residue counts")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--H", type=int, required=True)
    sp.add_argument("--ratio", action="store_true",
                    help="count ratio pairs J instead of interval count I")

    sp = add("zeros", _cmd_zeros, help="common-zero certificate for (p, r, s)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)

    sp = add("resultant", _cmd_resultant, help="D_{r,s}, R_{r,s}, exceptional primes")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--pmax", type=int, default=0,
                    help="also list primes <= pmax dividing R")

    sp = add("scan-primes", _cmd_scan_primes,
             help="N_p(r, s) for every prime up to pmax, with the p | R flag")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--pmax", type=int, required=True)

    sp = add("moments", _cmd_moments, help="moment report for (p, r, s)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)

    sp = add("semicircle", _cmd_semicircle, help="vertical cubic-sum experiment")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", choices=("RANDOM", "EXHAUSTIVE"), default="RANDOM")
    sp.add_argument("--bins", type=int, default=40)

    sp = add("horizontal", _cmd_horizontal, help="fixed-base scan over primes")
    sp.add_argument("--h", type=_int_list, required=True)
    sp.add_argument("--a", type=_int_list, required=True)
    sp.add_argument("--pmin", type=int, default=3)
    sp.add_argument("--pmax", type=int, required=True)
    sp.add_argument("--threads", type=int,
                    default=int(os.environ.get("EXPSUM_THREADS",
                                               os.cpu_count() or 1)))

    sp = add("exp-growth", _cmd_exp_growth, help="minimal exponent size scan")
    sp.add_argument("--h1", type=int, required=True)
    sp.add_argument("--h2", type=int, required=True)
    sp.add_argument("--pmax", type=int, required=True)

    sp = add("verify-all", _cmd_verify_all, help="run the desk verification battery")
    sp.add_argument("--profile", default="desk")
    sp.add_argument("--verbose", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"hard check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
