"""Command-line entry point exposing every engine with machine-readable output.

Exit codes: 0 success, 2 validation error, 1 runtime error.  All errors go
to standard error as a single line `code: message`.  Stochastic subcommands
require --seed or the LOE_SEED environment variable; there is no silent
entropy source.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .asymptotics import (
    MAX_LEADING_K,
    entropy_curve,
    haar_ose_correction,
    page_purity,
    purity_leading_general,
)
from .moments import (
    CumulantProfile,
    MomentProfile,
    cumulants_from_moments,
    pauli_profile,
    semicircle_profile,
)
from .montecarlo import (
    EntropyCurve,
    OperatorSpec,
    fluctuation_scan,
    load_matrix_file,
    loglog_slope,
    page_curve_scan,
    state_page_scan,
)
from .nc import enumerate_nc, enumerate_nc_pairings
from .perm import to_cycle_string
from .weingarten import weingarten_exact


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"usage-error: {message}", file=sys.stderr)
        raise SystemExit(2)


class ValidationError(Exception):
    pass


def _parse_fractions(text: str) -> list[Fraction]:
    try:
        return [Fraction(tok) for tok in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad rational list {text!r}: {exc}")


def _parse_orders(text: str) -> list:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("vn", "1"):
            out.append("vn")
        elif tok == "inf":
            out.append("inf")
        else:
            try:
                k = int(tok)
            except ValueError:
                raise ValidationError(f"bad Renyi order {tok!r}")
            if k < 2:
                raise ValidationError(f"bad Renyi order {tok!r}")
            out.append(k)
    return out


def _parse_operator(text: str, qubits: int, seed: int | None) -> OperatorSpec:
    kind, _, arg = text.partition(":")
    if kind == "pauli":
        return OperatorSpec.pauli(qubits, arg or "Z1")
    if kind == "gue":
        if seed is None:
            raise ValidationError("gue operator needs a seed")
        return OperatorSpec.gaussian(qubits, seed ^ 0x6775_6531)
    if kind in ("rnd", "traceless"):
        if seed is None:
            raise ValidationError("random traceless operator needs a seed")
        return OperatorSpec.random_traceless(qubits, seed ^ 0x726E_6431)
    if kind == "trace":
        try:
            w = float(arg)
        except ValueError:
            raise ValidationError(f"bad trace weight {arg!r}")
        return OperatorSpec.finite_trace(qubits, w)
    if kind == "file":
        if not arg:
            raise ValidationError("file operator needs a path, file:<path>")
        return OperatorSpec.matrix_file(qubits, arg)
    raise ValidationError(f"unknown operator kind {kind!r}")


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("LOE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"LOE_SEED is not an integer: {env!r}")
    raise ValidationError("stochastic subcommand needs --seed or LOE_SEED")


def _emit(args, header: str, rows: list[str]):
    if args.format == "json":
        fields = header.split(",")
        objs = []
        for row in rows:
            vals = row.split(",")
            obj = {}
            for f, v in zip(fields, vals):
                try:
                    obj[f] = int(v)
                except ValueError:
                    try:
                        obj[f] = float(v)
                    except ValueError:
                        obj[f] = v
            objs.append(obj)
        text = json.dumps(objs, indent=2) + "\n"
    else:
        text = "\n".join([header] + rows) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _curve_rows(curve: EntropyCurve) -> list[str]:
    return curve.to_csv().splitlines()[1:]


def _scale(args) -> float:
    return 1 / math.log(2) if getattr(args, "bits", False) else 1.0


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_exact_purity(args):
    from .exact import (
        PurityQuery,
        average_purity_exact,
        average_purity_second_moment_exact,
        average_state_purity_exact,
    )

    if args.state:
        res = average_state_purity_exact(args.k, args.dimA, args.dimB, doubled=not args.plain)
    else:
        if args.moments is None:
            raise ValidationError("operator purity needs --moments")
        profile = MomentProfile(_parse_fractions(args.moments))
        q = PurityQuery(args.k, args.dimA, args.dimB, profile)
        if args.second_moment:
            res = average_purity_second_moment_exact(q, breakdown=args.breakdown)
        else:
            res = average_purity_exact(q, breakdown=args.breakdown)
    print(f"{res.value} = {float(res.value):.17g}")
    if args.breakdown and res.breakdown:
        print("cycle_type,contribution")
        for ct, val in sorted(res.breakdown.items()):
            print(f"{'+'.join(map(str, ct))},{val}")
    return 0


def _cmd_asym_purity(args):
    if args.cumulants:
        cum = CumulantProfile(_parse_fractions(args.cumulants))
        val = purity_leading_general(args.k, args.dimA, args.dimB, cum)
    else:
        val = page_purity(args.k, args.dimA, args.dimB)
    print(f"{val:.17g}")
    return 0


def _cmd_page_curve(args):
    order = "vn" if args.k in ("vn", "1") else int(args.k)
    if order != "vn" and order < 2:
        raise ValidationError(f"bad order {args.k!r}")
    pts = entropy_curve(order, args.qubits, kappa4=args.kappa4, local_dim=args.local_dim)
    scale = _scale(args)
    rows = []
    for p in pts:
        ent = p.entropy * scale
        if order == "vn":
            pur = float("nan")
        else:
            dA = args.local_dim**p.nA
            dB = args.local_dim ** (args.qubits - p.nA)
            pur = page_purity(order, dA, dB)
        rows.append(f"{p.nA},{p.order},{ent:.17g},0,{ent:.17g},{pur:.17g},0,0")
    _emit(args, EntropyCurve.CSV_HEADER, rows)
    return 0


def _cmd_mc(args):
    seed = _resolve_seed(args)
    op = _parse_operator(args.operator, args.qubits, seed)
    orders = _parse_orders(args.k)
    curve = page_curve_scan(op, args.samples, orders, seed, max_qubits=args.max_qubits)
    _emit(args, EntropyCurve.CSV_HEADER, _curve_rows(curve))
    return 0


def _cmd_state_mc(args):
    seed = _resolve_seed(args)
    orders = _parse_orders(args.k)
    curve = state_page_scan(
        args.samples, args.qubits, orders, seed, max_qubits=args.max_qubits
    )
    _emit(args, EntropyCurve.CSV_HEADER, _curve_rows(curve))
    return 0


def _cmd_fluct(args):
    seed = _resolve_seed(args)
    dims = [int(t) for t in args.qubits.split(",")]
    orders = [int(t) for t in args.k.split(",")]
    op = _parse_operator(args.operator, dims[0], seed)
    rows = fluctuation_scan(op, orders, dims, args.samples, seed)
    header = "qubits,dim,k,mean_purity,relative_variance,samples"
    lines = [
        f"{r.qubits},{r.dim},{r.k},{r.mean_purity:.17g},{r.relative_variance:.17g},{r.samples}"
        for r in rows
    ]
    _emit(args, header, lines)
    if args.slope:
        for k in orders:
            sub = [r for r in rows if r.k == k]
            slope = loglog_slope([r.dim for r in sub], [r.relative_variance for r in sub])
            print(f"slope,{k},{slope:.17g}", file=sys.stderr)
    return 0


def _cmd_wg(args):
    table = weingarten_exact(args.n, args.dim, backend=args.backend)
    for ct in sorted(table.values):
        val = table.values[ct]
        print(f"{'+'.join(map(str, ct))}, {val.numerator}/{val.denominator}")
    return 0


def _cmd_nc(args):
    if args.pairings:
        items = enumerate_nc_pairings(2 * args.k)
        if args.count:
            print(len(items))
        else:
            for p in items:
                print(to_cycle_string(p.to_perm()))
        return 0
    items = enumerate_nc(args.k)
    if args.count:
        print(len(items))
    else:
        for pi in items:
            print(to_cycle_string(pi))
    return 0


def _cmd_cumulants(args):
    if args.moments is not None:
        profile = MomentProfile(_parse_fractions(args.moments))
    elif args.operator == "pauli":
        profile = pauli_profile(args.order)
    elif args.operator == "gue":
        profile = semicircle_profile(args.order)
    elif args.operator is not None and args.operator.startswith("file:"):
        import numpy as np

        O = load_matrix_file(args.operator[5:])
        D = O.shape[0]
        ms = []
        P = np.eye(D, dtype=complex)
        for _ in range(args.order):
            P = P @ O
            ms.append(float(np.real(np.trace(P)) / D))
        profile = MomentProfile(ms)
    else:
        raise ValidationError("need --moments or --operator pauli|gue|file:<path>")
    cum = cumulants_from_moments(profile)
    for n in range(1, cum.order + 1):
        v = cum[n]
        print(f"kappa{n} = {v}" if isinstance(v, Fraction) else f"kappa{n} = {v:.17g}")
    return 0


def _cmd_ose_const(args):
    print(f"{haar_ose_correction(args.k) * _scale(args):.17g}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="loepage", description=__doc__)
    sub = top.add_subparsers(dest="cmd", required=True)

    def common(p, out=True):
        if out:
            p.add_argument("--out", default=None, help="output path (default stdout)")
            p.add_argument("--format", choices=["csv", "json"], default="csv",
                           help="output encoding (default csv)")

    p = sub.add_parser("exact-purity", parents=[], help="exact Haar-averaged k-purity")
    p.add_argument("--k", type=int, required=True, help="Renyi order")
    p.add_argument("--dimA", type=int, required=True, help="subsystem dimension D_A")
    p.add_argument("--dimB", type=int, required=True, help="subsystem dimension D_Abar")
    p.add_argument("--moments", default=None, help="comma-separated rational moments m1,m2,...")
    p.add_argument("--breakdown", action="store_true", help="dump per-cycle-type contributions")
    p.add_argument("--second-moment", action="store_true", help="Haar average of the squared 2-purity")
    p.add_argument("--state", action="store_true", help="Haar-state purity instead of operator")
    p.add_argument("--plain", action="store_true", help="state mode: plain dimension, not doubled")
    p.set_defaults(fn=_cmd_exact_purity)

    p = sub.add_parser("asym-purity", help="leading-order purity prediction")
    p.add_argument("--k", type=int, required=True, help="Renyi order")
    p.add_argument("--dimA", type=int, required=True)
    p.add_argument("--dimB", type=int, required=True)
    p.add_argument("--cumulants", default=None,
                   help=f"free cumulants kappa1,...; full S_2k sum, k <= {MAX_LEADING_K}")
    p.set_defaults(fn=_cmd_asym_purity)

    p = sub.add_parser("page-curve", help="analytic entropy prediction per cut")
    p.add_argument("--k", required=True, help="Renyi order or 'vn'")
    p.add_argument("--qubits", type=int, required=True, help="total qubit count N")
    p.add_argument("--kappa4", type=float, default=None, help="fourth free cumulant correction")
    p.add_argument("--bits", action="store_true", help="report entropies in bits")
    p.add_argument("--local-dim", type=int, default=2, help="local dimension q (default 2)")
    common(p)
    p.set_defaults(fn=_cmd_page_curve)

    p = sub.add_parser("mc", help="Monte Carlo LOE page-curve scan")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--k", default="vn", help="comma-separated orders, e.g. 1,2,vn")
    p.add_argument("--operator", default="pauli:Z1",
                   help="pauli:<letters>|gue|rnd|trace:<w>|file:<path>")
    p.add_argument("--seed", type=int, default=None, help="master seed (or LOE_SEED)")
    p.add_argument("--threads", type=int, default=1, help="worker cap (accepted; scan is serial)")
    p.add_argument("--max-qubits", type=int, default=10, help="resource guard")
    common(p)
    p.set_defaults(fn=_cmd_mc)

    p = sub.add_parser("state-mc", help="Haar-state page-curve scan in the doubled space")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--k", default="2")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-qubits", type=int, default=10)
    common(p)
    p.set_defaults(fn=_cmd_state_mc)

    p = sub.add_parser("fluct", help="purity fluctuation scan over system sizes")
    p.add_argument("--qubits", required=True, help="comma-separated N values, e.g. 4,6,8")
    p.add_argument("--k", default="2", help="comma-separated integer orders")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--operator", default="pauli:Z1")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--slope", action="store_true", help="print log-log slope per order to stderr")
    common(p)
    p.set_defaults(fn=_cmd_fluct)

    p = sub.add_parser("wg", help="exact Weingarten table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--backend", choices=["gram", "characters"], default="characters")
    p.set_defaults(fn=_cmd_wg)

    p = sub.add_parser("nc", help="non-crossing permutations / pairings")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--list", action="store_true", help="list elements (default)")
    p.add_argument("--count", action="store_true", help="print the count only")
    p.add_argument("--pairings", action="store_true", help="non-crossing pairings on 2k points")
    p.set_defaults(fn=_cmd_nc)

    p = sub.add_parser("cumulants", help="free cumulants of a moment profile")
    p.add_argument("--moments", default=None, help="comma-separated rational moments")
    p.add_argument("--operator", default=None, help="pauli|gue|file:<path>")
    p.add_argument("--order", type=int, default=8, help="profile order for named operators")
    p.set_defaults(fn=_cmd_cumulants)

    p = sub.add_parser("ose-const", help="operator-stabilizer-entropy correction constant")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bits", action="store_true")
    p.set_defaults(fn=_cmd_ose_const)

    return top


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except (ValidationError, ValueError, TypeError, IndexError) as exc:
        print(f"invalid-argument: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"runtime-error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io-error: {exc}", file=sys.stderr)
        return 1


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
