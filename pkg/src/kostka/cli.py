"""Command-line surface: matrices, verification, enumeration, bijections,
involutions, rendering.

Subcommands::

    kostka matrix     --n N --kind {K,Kinv,NK,NKinv} [--format csv|json]
    kostka verify     --n N --identity {kkinv,kinvk,nk-nkinv,nkinv-nk,involutions}
                      [--workers W]
    kostka enumerate  {compositions,partitions,immaculate,ssyt,thc,srht} ...
    kostka involution run --alg {phi,chi,psi,theta,rho} --input PAIR.json
                      [--trace] [--format json|ascii]
    kostka bijection  --direction DIR --input OBJ.json
    kostka render     --input OBJ.json --format {ascii,tikz}

Every command is deterministic given identical inputs and flags.  Exit
codes: 0 pass, 1 counterexample found, 2 usage error (including degree-cap
refusals; raise --cap explicitly for large degrees).
"""

from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool
from pathlib import Path

from . import involutions as inv
from . import matrices as mx
from . import render as rd
from . import serialize as sz
from .core import NoPreimageError, compositions_of, partitions_of
from .rimhooks import (
    SpecialRimHookTableau,
    enumerate_srht,
    perm_srt,
    srht_from_perm,
    srht_to_thc,
    thc_to_srht,
)
from .tableaux import enumerate_immaculate, enumerate_ssyt
from .tunnelhooks import TunnelHookCovering, enumerate_thc, perm_of_thc, thc_from_perm

DEFAULT_CAP = 10

_MATRIX_BUILDERS = {
    "K": mx.sym_K,
    "Kinv": mx.sym_Kinv,
    "NK": mx.nsym_K,
    "NKinv": mx.nsym_Kinv,
}


def _cost_estimate(n: int, nsym: bool) -> str:
    if nsym:
        return (
            f"~{4 ** (n - 1)} entry enumerations over {2 ** (n - 1)} composition "
            f"labels (cost grows roughly 4x per degree)"
        )
    return f"~{len(partitions_of(n)) ** 2} entry enumerations over partition labels"


def _check_cap(n: int, cap: int, nsym: bool) -> None:
    if n < 1:
        print("degree must be >= 1", file=sys.stderr)
        raise SystemExit(2)
    if n > cap:
        print(
            f"refusing degree {n} > cap {cap}: {_cost_estimate(n, nsym)}; "
            f"pass --cap {n} to proceed",
            file=sys.stderr,
        )
        raise SystemExit(2)


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return json.loads(text)


def _dump(value) -> str:
    return json.dumps(sz.to_obj(value), sort_keys=True, separators=(",", ":"))


# -- matrix -------------------------------------------------------------------


def cmd_matrix(args) -> int:
    _check_cap(args.n, args.cap, args.kind.startswith("N"))
    matrix = _MATRIX_BUILDERS[args.kind](args.n)
    if args.format == "csv":
        print(sz.matrix_to_csv(matrix))
    else:
        print(_dump(matrix))
    return 0


# -- verify -------------------------------------------------------------------


def _nsym_k_row(task):
    n, alpha = task
    return tuple(len(enumerate_immaculate(alpha, beta)) for beta in compositions_of(n))


def _involution_cell(task):
    map_name, left, right = task
    kind = inv._MAPS[map_name][0]
    report = inv.InvolutionReport(kind=kind, map_name=map_name, degree=0)
    inv._verify_cell(report, kind, map_name, left, right)
    return report.violations, report.pairs_checked, report.fixed_points, report.max_walk


def _build_nsym_k(n: int, workers: int) -> mx.TransitionMatrix:
    labels = tuple(compositions_of(n))
    if workers > 1:
        with Pool(workers) as pool:
            rows = pool.map(_nsym_k_row, [(n, alpha) for alpha in labels])
    else:
        rows = [_nsym_k_row((n, alpha)) for alpha in labels]
    return mx.TransitionMatrix(n, "compositions", labels, tuple(rows))


def _first_bad_entry(product: mx.TransitionMatrix):
    for i, row in enumerate(product.entries):
        for j, value in enumerate(row):
            if value != (1 if i == j else 0):
                return {
                    "row": list(product.labels[i]),
                    "col": list(product.labels[j]),
                    "value": value,
                }
    return None


def _verify_identity(identity: str, n: int, workers: int) -> dict | None:
    """None on success, else a counterexample record."""
    for m in range(1, n + 1):
        if identity in ("kkinv", "kinvk"):
            k, kinv = mx.sym_K(m), mx.sym_Kinv(m)
        else:
            k = _build_nsym_k(m, workers)
            kinv = mx.nsym_Kinv(m)
        product = mx.mat_mul(k, kinv) if identity in ("kkinv", "nk-nkinv") else mx.mat_mul(kinv, k)
        bad = _first_bad_entry(product)
        if bad is not None:
            bad.update({"identity": identity, "degree": m})
            return bad
    return None


def _verify_involutions(n: int, workers: int) -> dict | None:
    for map_name in ("phi", "chi", "psi", "rho"):
        kind = inv._MAPS[map_name][0]
        tasks = []
        for m in range(1, n + 1):
            indices = compositions_of(m) if kind in ("A", "C") else partitions_of(m)
            tasks.extend(
                (map_name, left, right) for left in indices for right in indices
            )
        if workers > 1:
            with Pool(workers) as pool:
                results = pool.map(_involution_cell, tasks)
        else:
            results = [_involution_cell(t) for t in tasks]
        pairs = sum(r[1] for r in results)
        fixed = sum(r[2] for r in results)
        walk = max((r[3] for r in results), default=0)
        stats = f"map={map_name} pairs={pairs} fixed={fixed}"
        if map_name == "rho":
            stats += f" longest-walk={walk}"
        for (violations, _, _, _), task in zip(results, tasks):
            if violations:
                return {"map": map_name, "indices": [list(task[1]), list(task[2])],
                        "violation": violations[0]}
        print(f"PASS {stats}")
    return None


def cmd_verify(args) -> int:
    _check_cap(args.n, args.cap, args.identity not in ("kkinv", "kinvk"))
    if args.identity == "involutions":
        bad = _verify_involutions(args.n, args.workers)
    else:
        bad = _verify_identity(args.identity, args.n, args.workers)
    if bad is None:
        print(f"PASS {args.identity} n<={args.n}")
        return 0
    print(json.dumps(bad, sort_keys=True))
    return 1


# -- enumerate ----------------------------------------------------------------


def _parse_parts(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x != "")


def cmd_enumerate(args) -> int:
    if args.what == "compositions":
        for alpha in compositions_of(args.n):
            print(_dump(alpha))
    elif args.what == "partitions":
        for lam in partitions_of(args.n):
            print(_dump(lam))
    elif args.what == "immaculate":
        for rows in enumerate_immaculate(_parse_parts(args.shape), _parse_parts(args.content)):
            print(_dump(rows))
    elif args.what == "ssyt":
        for rows in enumerate_ssyt(_parse_parts(args.shape), _parse_parts(args.content)):
            print(_dump(rows))
    elif args.what == "thc":
        for covering, _ in enumerate_thc(_parse_parts(args.content), _parse_parts(args.shape)):
            print(_dump(covering))
    elif args.what == "srht":
        for tableau in enumerate_srht(_parse_parts(args.shape)):
            print(_dump(tableau))
    return 0


# -- involution ---------------------------------------------------------------


_ALG_FAMILIES = {
    "phi": ("A",),
    "chi": ("B",),
    "psi": ("C", "D", "E"),
    "theta": ("C", "D", "E"),
    "rho": ("D",),
}


def cmd_involution(args) -> int:
    pair = sz.parse_object(_read_json(args.input))
    if not isinstance(pair, inv.Pair):
        print("input must be a pair object", file=sys.stderr)
        return 2
    if pair.kind not in _ALG_FAMILIES[args.alg]:
        print(
            f"{args.alg} acts on {'/'.join(_ALG_FAMILIES[args.alg])} pairs, "
            f"got setKind {pair.kind}",
            file=sys.stderr,
        )
        return 2
    trace = None
    try:
        inv.validate_pair(pair)
        if args.alg == "rho":
            result, trace = inv.rho(pair)
        else:
            result = {
                "phi": inv.phi,
                "chi": inv.chi,
                "psi": inv.psi,
                "theta": inv.theta,
            }[args.alg](pair)
    except ValueError as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 2
    if args.format == "ascii":
        print(rd.render_trace(trace) if (args.trace and trace) else rd.render_pair(result))
    else:
        print(_dump(result))
        if args.trace and trace is not None:
            print(_dump(trace))
    return 0


# -- bijection ----------------------------------------------------------------


def _loose_shape_perm(data) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not isinstance(data, dict) or "shape" not in data or "perm" not in data:
        raise ValueError('expected {"shape": [...], "perm": [...]}')
    return tuple(data["shape"]), tuple(data["perm"])


def cmd_bijection(args) -> int:
    data = _read_json(args.input)
    try:
        if args.direction == "thc-to-perm":
            covering = sz.parse_object(data)
            assert isinstance(covering, TunnelHookCovering)
            print(_dump(perm_of_thc(covering)))
        elif args.direction == "perm-to-thc":
            shape, perm = _loose_shape_perm(data)
            print(_dump(thc_from_perm(shape, perm)))
        elif args.direction == "srht-to-perm":
            tableau = sz.parse_object(data)
            assert isinstance(tableau, SpecialRimHookTableau)
            print(_dump(perm_srt(tableau)))
        elif args.direction == "perm-to-srht":
            shape, perm = _loose_shape_perm(data)
            print(_dump(srht_from_perm(shape, perm)))
        elif args.direction == "srht-to-thc":
            tableau = sz.parse_object(data)
            assert isinstance(tableau, SpecialRimHookTableau)
            print(_dump(srht_to_thc(tableau)))
        elif args.direction == "thc-to-srht":
            covering = sz.parse_object(data)
            assert isinstance(covering, TunnelHookCovering)
            print(_dump(thc_to_srht(covering)))
    except NoPreimageError as err:
        print(f"no preimage: {err}", file=sys.stderr)
        return 2
    except (ValueError, AssertionError) as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 2
    return 0


# -- validate -----------------------------------------------------------------


def cmd_validate(args) -> int:
    """Check an object's structural invariants; JSON verdict on stdout."""
    from .rimhooks import validate_srht
    from .tableaux import is_immaculate, is_ssyt

    try:
        value = sz.parse_object(_read_json(args.input))
        verdict: dict = {"valid": True}
        if isinstance(value, TunnelHookCovering):
            value.hooks()  # replays the construction, checking every weight
            verdict["kind"] = "thc"
        elif isinstance(value, SpecialRimHookTableau):
            validate_srht(value)
            verdict["kind"] = "srht"
        elif isinstance(value, inv.Pair):
            left, right = inv.validate_pair(value)
            verdict.update(
                {"kind": "pair", "setKind": value.kind,
                 "left": list(left), "right": list(right)}
            )
        elif isinstance(value, tuple):
            if not is_immaculate(value):
                raise ValueError("rows are not an immaculate filling")
            verdict.update({"kind": "tableau", "ssyt": is_ssyt(value)})
        else:
            raise ValueError("nothing to validate")
    except ValueError as err:
        print(json.dumps({"valid": False, "reason": str(err)}, sort_keys=True))
        return 1
    print(json.dumps(verdict, sort_keys=True))
    return 0


# -- render -------------------------------------------------------------------


def cmd_render(args) -> int:
    data = _read_json(args.input)
    try:
        value = sz.parse_object(data)
        print(rd.render_object(value, args.format))
    except ValueError as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 2
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kostka", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_matrix = sub.add_parser("matrix", help="emit a transition matrix")
    p_matrix.add_argument("--n", type=int, required=True)
    p_matrix.add_argument("--kind", choices=sorted(_MATRIX_BUILDERS), required=True)
    p_matrix.add_argument("--format", choices=["csv", "json"], default="csv")
    p_matrix.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_matrix.set_defaults(func=cmd_matrix)

    p_verify = sub.add_parser("verify", help="check a matrix identity or the involution suites")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument(
        "--identity",
        choices=["kkinv", "kinvk", "nk-nkinv", "nkinv-nk", "involutions"],
        required=True,
    )
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="list combinatorial objects as JSON lines")
    enum_sub = p_enum.add_subparsers(dest="what", required=True)
    for what in ("compositions", "partitions"):
        q = enum_sub.add_parser(what)
        q.add_argument("--n", type=int, required=True)
        q.set_defaults(func=cmd_enumerate)
    for what in ("immaculate", "ssyt"):
        q = enum_sub.add_parser(what)
        q.add_argument("--shape", required=True)
        q.add_argument("--content", required=True)
        q.set_defaults(func=cmd_enumerate)
    q = enum_sub.add_parser("thc")
    q.add_argument("--content", required=True)
    q.add_argument("--shape", required=True)
    q.set_defaults(func=cmd_enumerate)
    q = enum_sub.add_parser("srht")
    q.add_argument("--shape", required=True)
    q.set_defaults(func=cmd_enumerate)

    p_inv = sub.add_parser("involution", help="apply one of the pair maps")
    inv_sub = p_inv.add_subparsers(dest="action", required=True)
    p_run = inv_sub.add_parser("run")
    p_run.add_argument("--alg", choices=["phi", "chi", "psi", "theta", "rho"], required=True)
    p_run.add_argument("--input", required=True, help="pair JSON path, or - for stdin")
    p_run.add_argument("--trace", action="store_true")
    p_run.add_argument("--format", choices=["json", "ascii"], default="json")
    p_run.set_defaults(func=cmd_involution)

    p_bij = sub.add_parser("bijection", help="apply a permutation/covering/rim-hook bijection")
    p_bij.add_argument(
        "--direction",
        choices=[
            "thc-to-perm",
            "perm-to-thc",
            "srht-to-perm",
            "perm-to-srht",
            "srht-to-thc",
            "thc-to-srht",
        ],
        required=True,
    )
    p_bij.add_argument("--input", required=True)
    p_bij.set_defaults(func=cmd_bijection)

    p_render = sub.add_parser("render", help="draw an object as ASCII or TikZ")
    p_render.add_argument("--input", required=True)
    p_render.add_argument("--format", choices=["ascii", "tikz"], default="ascii")
    p_render.set_defaults(func=cmd_render)

    p_validate = sub.add_parser("validate", help="check an object's invariants")
    p_validate.add_argument("--input", required=True)
    p_validate.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
