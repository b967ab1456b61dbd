"""Command-line interface.

Subcommands: cusps, triples, qexp, constants, order, table, verify.
Rationals serialize as "p/q" strings, never floats.  Exit codes: 0 on
success, 1 when a verification fails (with machine-readable failure
lines), 2 on invalid input.  Output is deterministic and independent of
the --jobs setting: parallel workers handle disjoint (D, C) tasks and
results are merged in sorted task order.
"""

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd

from .arith import divisors, index_mu, is_squarefree, prime_divisors
from .characters import QuadraticCharacter, d_chi
from .cusp_constants import (
    delta_content,
    lattice_R,
    rho_closed,
    rho_recursive,
)
from .cusps import (
    CuspPoint,
    CuspRep,
    canonical_x,
    canonicalize,
    cusp_count,
    enumerate_cusps,
    equivalent,
    levels_up_to,
    reduce_level,
    to_point,
    validate_level,
    width_gamma0,
    width_gamma1,
)
from .eisenstein import (
    count_H,
    enumerate_quadratic_triples,
    hecke,
    predicted_eigenvalue,
    qexp_closed,
    qexp_operator,
    validate_triple,
)
from .hecke_phi import verify_echi_definition, verify_p_plus_e1
from .lfunc import verify_factorization
from .orders import (
    a_factor,
    index_prediction,
    order_away_6f,
    order_full,
    periods_report,
    strip_primes,
)

TABLE_FIELDS = (
    "D",
    "C",
    "M",
    "L",
    "f",
    "A",
    "d_chi_num",
    "d_chi_den",
    "order_away_6f",
    "index_prediction",
)

MAX_TABLE_D = 1000
MAX_VERIFY_DC = 1000


def _pmap(fn, tasks, jobs):
    if jobs <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=1))


def _emit_csv(fieldnames, rows):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow(row)


def _cusp_dict(rep, D, C):
    point = to_point(rep, D, C)
    return {
        "r": rep.r,
        "s": rep.s,
        "t": rep.t,
        "x": rep.x,
        "num": point.a,
        "den": point.c,
        "width0": width_gamma0(rep),
        "width1": width_gamma1(rep),
    }


def _cmd_cusps(args):
    validate_level(args.d, args.c)
    rows = [_cusp_dict(rep, args.d, args.c) for rep in enumerate_cusps(args.d, args.c)]
    if args.format == "json":
        print(json.dumps(rows))
    else:
        fields = ("r", "s", "t", "x", "num", "den", "width0", "width1")
        _emit_csv(fields, [[row[k] for k in fields] for row in rows])
    return 0


def _cmd_triples(args):
    validate_level(args.d, args.c)
    rows = [
        {"D": args.d, "C": args.c, "M": t.M, "L": t.L, "f": t.f}
        for t in enumerate_quadratic_triples(args.d, args.c)
    ]
    if args.format == "json":
        print(json.dumps(rows))
    else:
        fields = ("D", "C", "M", "L", "f")
        _emit_csv(fields, [[row[k] for k in fields] for row in rows])
    return 0


def _cmd_qexp(args):
    triple = validate_triple(args.d, args.c, args.m, args.l, args.f)
    series = qexp_closed(args.d, args.c, triple, args.prec)
    payload = {
        "D": args.d,
        "C": args.c,
        "M": args.m,
        "L": args.l,
        "f": args.f,
        "prec": args.prec,
        "coeffs": [str(Fraction(a)) for a in series.coefficients()],
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        _emit_csv(
            ("n", "coeff"),
            [[n, str(Fraction(a))] for n, a in enumerate(series.coefficients())],
        )
    return 0


def _cmd_constants(args):
    triple = validate_triple(args.d, args.c, args.m, args.l, args.f)
    entries = []
    for rep in enumerate_cusps(args.d, args.c):
        entries.append(
            {
                "cusp": _cusp_dict(rep, args.d, args.c),
                "rho": str(rho_closed(args.d, args.c, triple, rep)),
                "width": width_gamma0(rep),
            }
        )
    payload = {
        "triple": {"D": args.d, "C": args.c, "M": args.m, "L": args.l, "f": args.f},
        "unit": "n_chi",
        "entries": entries,
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        fields = ("r", "s", "t", "x", "width0", "rho")
        _emit_csv(
            fields,
            [
                [e["cusp"]["r"], e["cusp"]["s"], e["cusp"]["t"], e["cusp"]["x"], e["width"], e["rho"]]
                for e in entries
            ],
        )
    return 0


def _order_row(D, C, M, L, f):
    triple = validate_triple(D, C, M, L, f)
    d = d_chi(triple.chi)
    return (
        D,
        C,
        M,
        L,
        f,
        a_factor(D, C, triple),
        d.numerator,
        d.denominator,
        order_away_6f(D, C, triple).value,
        index_prediction(D, C, triple).value,
    )


def _cmd_order(args):
    row = _order_row(args.d, args.c, args.m, args.l, args.f)
    if args.format == "json":
        print(json.dumps(dict(zip(TABLE_FIELDS, row))))
    else:
        _emit_csv(TABLE_FIELDS, [row])
    return 0


def _table_task(task):
    D, C = task
    return [
        _order_row(D, C, t.M, t.L, t.f) for t in enumerate_quadratic_triples(D, C)
    ]


def _cmd_table(args):
    if args.d_max > MAX_TABLE_D:
        raise ValueError(f"--d-max is capped at {MAX_TABLE_D}, got {args.d_max}")
    tasks = [
        (D, C)
        for D in range(1, args.d_max + 1)
        if is_squarefree(D)
        for C in divisors(D)
    ]
    rows = [row for chunk in _pmap(_table_task, tasks, args.jobs) for row in chunk]
    rows.sort()
    if args.format == "json":
        print(json.dumps([dict(zip(TABLE_FIELDS, row)) for row in rows]))
    else:
        _emit_csv(TABLE_FIELDS, rows)
    return 0


VERIFY_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)
TWIST_CONDUCTORS = (1, 3, 5, 7)


def _verify_level(task):
    """All per-level checks; returns {check_name: (cases, [failure dicts])}."""
    D, C, prec = task
    N = D * C
    out = {}

    def record(check, case, ok):
        cases, failures = out.setdefault(check, (0, []))
        if not ok:
            failures = failures + [case]
        out[check] = (cases + 1, failures)

    reps = enumerate_cusps(D, C)
    level = {"D": D, "C": C}

    record("dimension_count", level, count_H(D, C) == cusp_count(N) - 1)
    record("cusp_enumeration_size", level, len(reps) == cusp_count(N))
    record("cusp_width_sum", level, sum(width_gamma0(r) for r in reps) == index_mu(N))
    for rep in reps:
        record(
            "cusp_round_trip",
            {**level, "rep": [rep.r, rep.s, rep.t, rep.x]},
            canonicalize(to_point(rep, D, C), D, C) == rep,
        )
    points = [to_point(rep, D, C) for rep in reps]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            record(
                "cusp_pairwise_inequivalent",
                {**level, "i": i, "j": j},
                not equivalent(points[i], points[j], N),
            )

    _verify_reductions(D, C, reps, record, level)

    for triple in enumerate_quadratic_triples(D, C):
        _verify_triple(D, C, triple, prec, record, level)
    return out


def _verify_reductions(D, C, reps, record, level):
    for rep in reps:
        case_tests = (
            (1, lambda p: rep.r % p == 0),
            (2, lambda p: rep.s % p == 0),
            (3, lambda p: rep.t % p == 0),
            (4, lambda p: (D // (C * rep.r)) % p == 0),
            (5, lambda p: (C // (rep.s * rep.t)) % p == 0),
        )
        point = to_point(rep, D, C)
        for p in prime_divisors(D):
            for case, applies in case_tests:
                if not applies(p):
                    continue
                new, D2, C2 = reduce_level(rep, D, C, p, case)
                record(
                    "reduction_single_prime",
                    {**level, "rep": [rep.r, rep.s, rep.t, rep.x], "p": p, "case": case},
                    equivalent(point, to_point(new, D2, C2), D2 * C2),
                )
        # composite reductions: multiplier alpha | K moves across the level
        for K in divisors(D):
            if K == 1:
                continue
            rst = rep.r * rep.s * rep.t
            base = rep.r * rep.s * rep.s * rep.t
            for alpha in divisors(K):
                if gcd(K, rst) == 1:
                    KC = K * gcd(K, C)
                    lhs = CuspPoint.of(base * alpha * rep.x, D * C)
                    rhs = CuspPoint.of(base * (KC // alpha) * rep.x, D * C // KC)
                    record(
                        "reduction_composite_coprime",
                        {**level, "rep": [rep.r, rep.s, rep.t, rep.x], "K": K, "alpha": alpha},
                        equivalent(lhs, rhs, D * C // KC),
                    )
                if rep.t % K == 0:
                    lhs = CuspPoint.of(base * alpha * rep.x, D * C)
                    rhs = CuspPoint.of(
                        (base // K) * (K // alpha) * rep.x, D * C // (K * K)
                    )
                    record(
                        "reduction_composite_in_t",
                        {**level, "rep": [rep.r, rep.s, rep.t, rep.x], "K": K, "alpha": alpha},
                        equivalent(lhs, rhs, D * C // (K * K)),
                    )


def _verify_triple(D, C, triple, prec, record, level):
    N = D * C
    chi = triple.chi
    tag = {**level, "M": triple.M, "L": triple.L, "f": triple.f}

    op = qexp_operator(D, C, triple, prec)
    cl = qexp_closed(D, C, triple, prec)
    record("qexp_two_paths", tag, op == cl)
    record("qexp_normalized", tag, cl.coeff(1) == 1)

    for ell in VERIFY_PRIMES:
        lam = predicted_eigenvalue(triple, ell)
        got = hecke(cl, ell)
        want = [lam * cl.coeff(n) for n in range(got.precision + 1)]
        record("hecke_eigenvalue", {**tag, "ell": ell}, list(got.coefficients()) == want)

    reps = enumerate_cusps(D, C)
    rhos = {rep: rho_closed(D, C, triple, rep) for rep in reps}
    for rep in reps:
        record(
            "constant_two_paths",
            {**tag, "rep": [rep.r, rep.s, rep.t, rep.x]},
            rhos[rep] == rho_recursive(D, C, triple, rep),
        )
    record("residue_sum", tag, sum(width_gamma0(r) * rhos[r] for r in reps) == 0)

    twists = [a for a in range(1, 3 * D + 1) if gcd(a, D) == 1][:4]
    for rep in reps:
        for alpha in twists:
            twisted = CuspRep(
                rep.r, rep.s, rep.t, canonical_x(alpha * rep.x, rep.t, D)
            )
            record(
                "twist_covariance",
                {**tag, "rep": [rep.r, rep.s, rep.t, rep.x], "alpha": alpha},
                rhos[twisted] == chi(alpha) * rhos[rep],
            )

    for group in ("gamma0", "gamma1"):
        record(
            "lattice_content",
            {**tag, "group": group},
            delta_content(D, C, triple, group) == lattice_R(D, C, triple, group),
        )

    away = order_away_6f(D, C, triple)
    record(
        "order_agreement",
        tag,
        strip_primes(Fraction(order_full(D, C, triple)), away.inverted) == away.value,
    )
    try:
        periods_report(D, C, triple)
        record("periods_consistency", tag, True)
    except ArithmeticError:
        record("periods_consistency", tag, False)

    for f_eta in TWIST_CONDUCTORS:
        if gcd(f_eta, D) != 1:
            continue
        eta = QuadraticCharacter(f_eta)
        record(
            "l_factorization",
            {**tag, "eta": f_eta},
            verify_factorization(D, C, triple, eta, min(prec, 100)),
        )


def _cmd_verify(args):
    if args.dc_max > MAX_VERIFY_DC:
        raise ValueError(f"--dc-max is capped at {MAX_VERIFY_DC}, got {args.dc_max}")
    tasks = [(D, C, args.prec) for D, C in levels_up_to(args.dc_max)]
    merged = {}
    for result in _pmap(_verify_level, tasks, args.jobs):
        for check, (cases, failures) in result.items():
            prev_cases, prev_failures = merged.get(check, (0, []))
            merged[check] = (prev_cases + cases, prev_failures + failures)

    # Definitional cyclotomic checks are global, not per level.
    for f in range(3, args.dc_max + 1, 2):
        if f * f > args.dc_max or not is_squarefree(f):
            continue
        cases, failures = merged.get("echi_definition", (0, []))
        ok = verify_echi_definition(QuadraticCharacter(f), 8)
        merged["echi_definition"] = (cases + 1, failures + ([] if ok else [{"f": f}]))
    for p in (2, 3, 5, 7):
        cases, failures = merged.get("plus_operator_base_series", (0, []))
        ok = verify_p_plus_e1(p, 12)
        merged["plus_operator_base_series"] = (
            cases + 1,
            failures + ([] if ok else [{"p": p}]),
        )

    total_failures = 0
    for check in sorted(merged):
        cases, failures = merged[check]
        total_failures += len(failures)
        print(json.dumps({"check": check, "cases": cases, "failures": len(failures)}))
        for case in failures:
            print(json.dumps({"check": check, "case": case, "ok": False}))
    print(
        json.dumps(
            {
                "summary": {
                    "dc_max": args.dc_max,
                    "prec": args.prec,
                    "checks": sum(c for c, _ in merged.values()),
                    "failures": total_failures,
                }
            }
        )
    )
    return 1 if total_failures else 0


def _add_level_args(sub):
    sub.add_argument("--d", type=int, required=True, help="square-free level part D")
    sub.add_argument("--c", type=int, required=True, help="divisor C of D")


def _add_triple_args(sub):
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--l", type=int, required=True)
    sub.add_argument("--f", type=int, required=True, help="conductor of the character")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="quadeis",
        description="Exact tables and verifications for the weight-2 Eisenstein "
        "eigenbasis at levels D*C (D square-free, C | D).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cusps", help="enumerate canonical cusp representatives")
    _add_level_args(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_cusps)

    p = sub.add_parser("triples", help="list the quadratic eigen-series index triples")
    _add_level_args(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_triples)

    p = sub.add_parser("qexp", help="q-expansion of one eigen-series")
    _add_level_args(p)
    _add_triple_args(p)
    p.add_argument("--prec", type=int, default=200)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_qexp)

    p = sub.add_parser("constants", help="constant terms at every cusp, in units of n_chi")
    _add_level_args(p)
    _add_triple_args(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("order", help="cuspidal order and index prediction for one triple")
    _add_level_args(p)
    _add_triple_args(p)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("table", help="order/index table over a range of levels")
    p.add_argument("--d-max", dest="d_max", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run the verification pipelines over a range")
    p.add_argument("--dc-max", dest="dc_max", type=int, required=True)
    p.add_argument("--prec", type=int, default=200)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
