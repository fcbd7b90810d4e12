"""Command-line entry point.

Exit status: 0 on success or PASS, 1 on a FAIL verdict, 2 on usage errors.
With ``--json`` every command prints a single object whose ``schema``
field names the subcommand; exact quantities are rational strings.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import genfun, incidence, kernels, operators, semantic, token
from .csemigroup import CFunction
from .errors import UmbralError
from .series import Series


class UsageError(Exception):
    pass


def _rat(x) -> str:
    return str(Fraction(x))


def _rats(xs) -> list:
    return [_rat(x) for x in xs]


def _parse_list(text: str) -> list:
    try:
        return [Fraction(v) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}: {exc}") from exc


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps({"schema": args.command, **payload}))
    else:
        print(text)


def _delta_from_spec(spec: str, N: int) -> operators.DeltaOp:
    if spec == "D":
        return operators.derivative(N)
    if spec == "forward-diff":
        return operators.forward_difference(N)
    if spec == "backward-diff":
        return operators.backward_difference(N)
    if spec.startswith("abel:a="):
        return operators.abel(Fraction(spec[len("abel:a="):]), N)
    if spec.startswith("series:"):
        return operators.DeltaOp(Series.parse(spec[len("series:"):]))
    raise UsageError(f"unknown delta {spec!r}")


def cmd_basic_seq(args) -> int:
    q = _delta_from_spec(args.delta, args.order)
    p = operators.basic_sequence(q, args.order)
    rows = p.to_json()
    text = "\n".join(f"p_{n}: " + " ".join(r) for n, r in enumerate(rows))
    _emit(args, {"delta": args.delta, "order": args.order, "tri": rows}, text)
    return 0


def cmd_genfun(args) -> int:
    data = _load_json(args.recurrence)
    if data.get("kernel") == "bell":
        rhs = data.get("rhs")
        rec = genfun.Recurrence.bell(args.order, CFunction.from_list(rhs) if rhs else None)
    else:
        rec = genfun.Recurrence.from_json(data)
    spec = genfun.GenFunSpec(args.token, args.order)
    f = genfun.solve_recurrence(rec, args.order)
    fhat = genfun.generating_function(f, spec)
    try:
        ok = genfun.transformed_operator_check(rec, spec)
        verdict = "PASS" if ok else "FAIL"
    except UmbralError as exc:
        ok, verdict = True, f"UNSUPPORTED ({exc})"
    text = "\n".join([
        "values: " + ",".join(_rats(f.as_list())),
        f"series: {fhat}",
        f"transformed operator check: {verdict}",
    ])
    _emit(args, {
        "token": args.token, "order": args.order, "values": _rats(f.as_list()),
        "coeffs": _rats(fhat.coeffs), "check": verdict,
    }, text)
    return 0 if ok else 1


def cmd_verify_token(args) -> int:
    data = _load_json(args.file)
    try:
        p = token.PolySeq.from_json(data)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"bad polynomial sequence: {exc}") from exc
    w = token.token_witness(p)
    if w is None:
        _emit(args, {"verdict": "PASS", "N": p.N}, f"PASS (N = {p.N})")
        return 0
    n, (i, j) = w
    _emit(
        args,
        {"verdict": "FAIL", "N": p.N, "witness": {"n": n, "monomial": [i, j]}},
        f"FAIL at n = {n}, monomial x^{i} y^{j}",
    )
    return 1


def cmd_verify_kernel(args) -> int:
    kp = kernels.KernelParams(args.kind, args.panels, args.L, args.nodes, args.tol, args.constant)
    rep = kernels.check_semigroup(kp, (args.v, args.t), (args.v2, args.t2))
    text = (
        f"{rep.kind}: max discrepancy {rep.max_discrepancy:.3e}, tail bound {rep.tail_bound:.3e}, "
        f"tolerance {rep.tolerance:.1e} -> {rep.verdict}"
    )
    _emit(args, rep.to_dict(), text)
    return 0 if rep.passed else 1


def cmd_mobius(args) -> int:
    try:
        p = incidence.Poset.from_json(_load_json(args.poset))
    except (KeyError, IndexError, TypeError) as exc:
        raise UsageError(f"bad poset file: {exc}") from exc
    mu = incidence.mobius(p)
    entries = [
        {"a": p.label(a), "b": p.label(b), "mu": _rat(mu(a, b))} for a, b in p.intervals()
    ]
    text = "\n".join(f"mu({e['a']},{e['b']}) = {e['mu']}" for e in entries)
    _emit(args, {"n": p.n, "mobius": entries}, text)
    return 0


def cmd_eval(args) -> int:
    data = _load_json(args.env)
    items = data if isinstance(data, list) else [data]
    env = {"eps": semantic.augmentation(64)}
    for item in items:
        u = semantic.Umbra.from_json(item)
        env[u.name] = u
    try:
        expr = semantic.UmbralPoly.parse(args.expr)
    except ValueError as exc:
        raise UsageError(f"bad expression: {exc}") from exc
    value = semantic.eval_umbral(expr, env)
    _emit(args, {"expr": args.expr, "value": _rat(value)}, _rat(value))
    return 0


def cmd_hopf_mul(args) -> int:
    a, b = _parse_list(args.l1), _parse_list(args.l2)
    N = min(len(a), len(b)) - 1 if args.order is None else args.order
    if N < 0 or len(a) <= N or len(b) <= N:
        raise UsageError("functionals must have at least order+1 values")
    out = operators.hopf_product(CFunction.from_list(a[: N + 1]), CFunction.from_list(b[: N + 1]))
    vals = _rats(out.as_list())
    _emit(args, {"order": N, "values": vals}, ",".join(vals))
    return 0


def cmd_t_transform(args) -> int:
    k = _parse_list(args.kernel)
    if args.token_file:
        t = token.DiscreteToken(tuple(tuple(Fraction(v) for v in row) for row in _load_json(args.token_file)))
    else:
        t = token.binomial_token(args.order, max(args.order, len(k) - 1))
    out = token.t_transform(t, CFunction.from_list(k))
    vals = _rats(out.as_list())
    _emit(args, {"order": t.N, "values": vals}, ",".join(vals))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="umbral", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="print a JSON object")
        p.set_defaults(func=func)
        return p

    p = add("basic-seq", cmd_basic_seq, "basic polynomial sequence of a delta operator")
    p.add_argument("--delta", required=True,
                   help="D | forward-diff | backward-diff | abel:a=p/q | series:<literal>")
    p.add_argument("--order", type=int, default=12)

    p = add("genfun", cmd_genfun, "solve a recurrence and print its generating function")
    p.add_argument("--recurrence", required=True)
    p.add_argument("--token", choices=["ordinary", "exponential"], default="ordinary")
    p.add_argument("--order", type=int, default=12)

    p = add("verify-token", cmd_verify_token, "check the token identity of a polynomial sequence")
    p.add_argument("--file", required=True)

    p = add("verify-kernel", cmd_verify_kernel, "quadrature check of the kernel semigroup law")
    p.add_argument("--kind", choices=kernels.KINDS, required=True)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--t2", type=float, default=1.0)
    p.add_argument("--v", type=float, default=0.0)
    p.add_argument("--v2", type=float, default=0.0)
    p.add_argument("--L", type=float, default=200.0)
    p.add_argument("--panels", type=int, default=400)
    p.add_argument("--nodes", type=int, default=16)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--constant", type=float, default=None, help="override the normalizing constant")

    p = add("mobius", cmd_mobius, "Möbius function of a finite poset")
    p.add_argument("--poset", required=True)

    p = add("eval", cmd_eval, "evaluate an umbral polynomial")
    p.add_argument("--env", required=True)
    p.add_argument("--expr", required=True)

    p = add("hopf-mul", cmd_hopf_mul, "product of two functionals given by their values")
    p.add_argument("--l1", required=True)
    p.add_argument("--l2", required=True)
    p.add_argument("--order", type=int, default=None)

    p = add("t-transform", cmd_t_transform, "t-transform of a kernel on N")
    p.add_argument("--kernel", required=True)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--token-file", default=None, help="JSON matrix t(n, m); default C(m, n)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("order", "panels", "nodes"):
        if getattr(args, name, None) is not None and getattr(args, name) < 0:
            parser.error(f"--{name} must be non-negative")
    try:
        return args.func(args)
    except (UsageError, UmbralError, ValueError) as exc:
        print(f"umbral {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
