"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 numerical failure.  Results go to
stdout as JSON unless ``--out FILE`` is given.  Exact rationals are always
written as ``"p/q"`` strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import fusion, lie, minimal, ode, params, reps, selfcheck
from .errors import NumericalError, ValidationError
from .lie import format_fraction

log = logging.getLogger("ttreps")

EXIT_OK, EXIT_INVALID, EXIT_NUMERIC = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return [_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


def _rationals(text: str) -> list[Fraction]:
    return [lie.as_fraction(t) for t in text.split(",") if t.strip()]


def _ints(text: str) -> list[int]:
    out = []
    for t in text.split(","):
        if t.strip():
            try:
                out.append(int(t))
            except ValueError as exc:
                raise ValidationError(f"not an integer: {t!r}") from exc
    return out


def _complexes(text: str) -> list[complex]:
    try:
        return [complex(t.replace(" ", "")) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise ValidationError(f"cannot parse Stokes parameters {text!r}") from exc


def _load_input(path: Optional[str]) -> Optional[dict]:
    if path is None:
        return None
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read input {path}: {exc}") from exc


def _check_n(args, n: int) -> None:
    if args.n is not None and args.n != n:
        raise ValidationError(f"--n {args.n} does not match data of rank {n}")


# -- conversions ---------------------------------------------------------------

def _read_source(args, data: Optional[dict]):
    src = args.src
    if src == "k":
        if data is not None:
            kp = params.KParams.from_json(data, tt_symmetric=args.tt_symmetric)
        elif args.k:
            kp = params.KParams(tuple(_rationals(args.k)), tt_symmetric=args.tt_symmetric)
        else:
            raise ValidationError("--from k needs --k or --input")
        _check_n(args, kp.n)
        return kp
    if src == "m":
        if data is not None:
            m = params.MParams.from_json(data)
            if args.N is None and "N" in data:
                args.N = str(data["N"])
        elif args.m:
            m = params.MParams.of(_rationals(args.m))
        else:
            raise ValidationError("--from m needs --m or --input")
        _check_n(args, m.n)
        if args.tt_symmetric and not m.is_symmetric():
            raise ValidationError("m is not tt*-symmetric")
        return m
    if src == "s":
        if data is not None:
            s = params.StokesParams.from_json(data)
            if args.N is None and "N" in data:
                args.N = str(data["N"])
        elif args.s:
            s = params.StokesParams(tuple(_complexes(args.s)))
        else:
            raise ValidationError("--from s needs --s or --input")
        _check_n(args, s.n)
        return s
    if src == "weight":
        if data is not None:
            w = reps.AffineDominantWeight.from_json(data)
        elif args.v is not None and args.level is not None:
            v = _ints(args.v)
            w = reps.AffineDominantWeight(len(v), tuple(v), args.level)
        else:
            raise ValidationError("--from weight needs --v and --level, or --input")
        _check_n(args, w.n)
        return w
    raise ValidationError(f"unknown source {src!r}")


def _need_N(args) -> Fraction:
    if args.N is None:
        raise ValidationError("this conversion needs --N")
    N = lie.as_fraction(args.N)
    if N <= 0:
        raise ValidationError("--N must be positive")
    return N


def convert(args, data: Optional[dict] = None) -> dict:
    """Walk k <-> m <-> s and k <-> weight, returning the target's JSON form."""
    obj = _read_source(args, data)
    src, dst = args.src, args.dst
    if src == dst:
        return obj.to_json()

    N = None
    if src == "weight":
        kp = reps.k_from_weight(obj)
    elif src == "k":
        kp = obj
    else:
        kp = None

    if src == "s":
        m = params.rational_m(params.m_from_stokes(obj))
        if dst == "m":
            return {**m.to_json(), **({"N": args.N} if args.N is not None else {})}
        N = _need_N(args)
        kp = params.k_from_m(m, N)
    elif src == "m":
        if dst == "s":
            return params.stokes_from_m(obj).to_json()
        N = _need_N(args)
        kp = params.k_from_m(obj, N)

    if dst == "k":
        if not kp.valid:
            log.warning("exponents fall outside k_i >= -1, N > 0")
        return kp.to_json()
    if dst == "weight":
        return reps.weight_from_k(kp).to_json()
    m = params.m_from_k(kp)
    if dst == "m":
        return {**m.to_json(), "N": format_fraction(kp.N)}
    if dst == "s":
        out = params.stokes_from_m(m).to_json()
        out["N"] = format_fraction(kp.N)
        return out
    raise ValidationError(f"unknown target {dst!r}")


def cmd_convert(args) -> dict:
    return convert(args, _load_input(args.input))


def cmd_stokes(args) -> dict:
    if args.k:
        kp = params.KParams(tuple(_rationals(args.k)), tt_symmetric=args.tt_symmetric)
        m = params.m_from_k(kp)
        extra = {"k": kp.to_json()["k"], "N": format_fraction(kp.N), "diagonalizable": kp.diagonalizable}
    elif args.m:
        m = params.MParams.of(_rationals(args.m))
        extra = {}
    else:
        raise ValidationError("stokes needs --k or --m")
    _check_n(args, m.n)
    s = params.stokes_from_m(m)
    status = params.polytope_status(m)
    return {
        "m": m.m.to_json(),
        **extra,
        "s": s.to_json()["s"],
        "char_poly": _jsonable(params.char_poly_from_stokes(s)),
        "eigenvalues": _jsonable(params.monodromy_eigenvalues(m)),
        "polytope": status._asdict(),
    }


def cmd_weight(args) -> dict:
    if args.k:
        kp = params.KParams(tuple(_rationals(args.k)), tt_symmetric=args.tt_symmetric)
        _check_n(args, kp.n)
        w = reps.weight_from_k(kp)
    elif args.v is not None and args.level is not None:
        v = _ints(args.v)
        w = reps.AffineDominantWeight(len(v), tuple(v), args.level)
        _check_n(args, w.n)
        kp = reps.k_from_weight(w)
    elif args.m:
        m = params.MParams.of(_rationals(args.m))
        cl = reps.classify_m(m)
        rep = cl.representation
        return {
            "generic": cl.generic,
            "rational": cl.rational,
            "representation": rep.to_json() if rep else None,
            "N": cl.N,
            "note": cl.note,
        }
    else:
        raise ValidationError("weight needs --k, --m, or --v with --level")
    out = {"weight": w.to_json(), "k": kp.to_json()}
    if args.verify:
        out["theorem"] = reps.verify_main_theorem(kp)._asdict()
        out["zeta_identity"] = fusion.verify_zeta_identity(kp)
    return out


def cmd_fusion(args) -> dict:
    n, k = args.n, args.level
    if n is None or k is None:
        raise ValidationError("fusion needs --n and --level")
    mu_v = _ints(args.mu) if args.mu is not None else [0] * n
    if len(mu_v) != n:
        raise ValidationError(f"--mu needs {n} coefficients")
    table = fusion.character_table(mu_v, n, k)
    for row in table:
        w = reps.AffineDominantWeight(n, tuple(row["Lambda"]), k)
        row["zeta"] = fusion.zeta(w).to_json()
    return {
        "n": n,
        "level": k,
        "mu": mu_v,
        "table": table,
        "in_ideal": fusion.in_fusion_ideal(mu_v, n, k),
    }


def cmd_model(args) -> dict:
    if args.n is None:
        raise ValidationError("model needs --n")
    if args.N is not None:
        N = int(lie.as_fraction(args.N))
        table = minimal.model_table(args.n, N)
        table["nonunitary"] = minimal.nonunitarity_scan(args.n, N)
        rows = table["primaries"]
    elif args.p is not None and args.pp is not None:
        spec = minimal.MinimalModelSpec(args.n, args.p, args.pp)
        table = minimal.general_model_table(spec)
        rows = table["primaries"]
    else:
        raise ValidationError("model needs --N, or --p and --pp")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["Lambda", "h", "c_minus_24h"])
            for row in rows:
                lam = row.get("Lambda", row.get("Lambda_minus"))
                if "Lambda_plus" in row:
                    lam = f"{row['Lambda_plus']}|{lam}"
                writer.writerow([str(lam), format_fraction(row["h"]), format_fraction(row["c_minus_24h"])])
    return table


def cmd_necklaces(args) -> dict:
    if args.n is None or args.N is None:
        raise ValidationError("necklaces needs --n and --N")
    n, N = args.n, int(lie.as_fraction(args.N))
    out: dict = {"n": n, "N": N}
    if args.count or not (args.enumerate or args.strings):
        cnt = minimal.necklace_count(n, N)
        out.update(enumerated=cnt.enumerated, formula=cnt.formula, formula_applicable=cnt.formula_applicable)
    if args.enumerate or args.strings:
        prims = minimal.enumerate_primaries(n, N)
        out["primaries"] = [list(p.k) for p in prims]
        if args.strings:
            out["operator_strings"] = [minimal.operator_string(p, n).tokens for p in prims]
    return out


def cmd_ode(args) -> dict:
    if args.k:
        kp = params.KParams(tuple(_rationals(args.k)))
        m = params.m_from_k(kp)
    elif args.m:
        m = params.MParams.of(_rationals(args.m))
    else:
        raise ValidationError("ode needs --k or --m")
    _check_n(args, m.n)
    shift = [float(x) for x in args.shift.split(",")] if args.shift else None
    s0 = ode.init_asymptotic(m, args.epsilon, shift)
    if args.steps is None and args.tol is None:
        args.steps = 1000
    traj = ode.integrate(s0, args.r_end, steps=args.steps, tol=args.tol, m=m)
    summary = dict(traj.metadata)
    if args.csv:
        traj.to_csv(args.csv)
        sidecar = Path(args.csv).with_suffix(".json")
        traj.write_sidecar(sidecar)
        summary["csv"] = str(args.csv)
        summary["sidecar"] = str(sidecar)
    fin = traj.final
    summary["final"] = {"r": fin.r, "w": fin.w.tolist(), "wprime": fin.wprime.tolist()}
    return summary


def cmd_selfcheck(args) -> dict:
    results = selfcheck.run_all(seed=args.seed)
    args._failed = not all(r.passed for r in results)
    return {"seed": args.seed, "checks": [r._asdict() for r in results], "passed": not args._failed}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ttreps", description="tt*-Toda / Stokes / affine weight dictionary")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, n_required=False):
        p.add_argument("--n", type=int, required=n_required, help="rank (matrices are (n+1)x(n+1))")
        p.add_argument("--out", help="write JSON here instead of stdout")

    p = sub.add_parser("convert", help="convert between k, m, s and (Lambda, level)")
    common(p)
    p.add_argument("--from", dest="src", required=True, choices=["k", "m", "s", "weight"])
    p.add_argument("--to", dest="dst", required=True, choices=["k", "m", "s", "weight"])
    p.add_argument("--N", help="N = n+1+sum k (needed for m->k, s->k)")
    p.add_argument("--k", help="comma-separated k_0,...,k_n (p/q allowed)")
    p.add_argument("--m", help="comma-separated m_0,...,m_n")
    p.add_argument("--s", help="comma-separated Stokes parameters (complex allowed, e.g. 1+2j)")
    p.add_argument("--v", help="comma-separated eps-coefficients of Lambda")
    p.add_argument("--level", type=int)
    p.add_argument("--input", help="read the source object from a JSON file")
    p.add_argument("--tt-symmetric", action="store_true", help="assert k_i = k_{n-i+1} / m_i + m_{n-i} = 0")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("stokes", help="Stokes parameters and characteristic polynomial")
    common(p)
    p.add_argument("--k")
    p.add_argument("--m")
    p.add_argument("--tt-symmetric", action="store_true")
    p.set_defaults(func=cmd_stokes)

    p = sub.add_parser("weight", help="exponents <-> affine dominant weight, theorem check")
    common(p)
    p.add_argument("--k")
    p.add_argument("--m", help="classify m: find the representation it comes from")
    p.add_argument("--v")
    p.add_argument("--level", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--tt-symmetric", action="store_true")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("fusion", help="special elements and character table at level k")
    common(p)
    p.add_argument("--level", type=int)
    p.add_argument("--mu", help="eps-coefficients of the character's highest weight")
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("model", help="W-algebra minimal model tables")
    common(p)
    p.add_argument("--N")
    p.add_argument("--p", type=int)
    p.add_argument("--pp", type=int, help="p'")
    p.add_argument("--csv", help="also write (Lambda, h, c-24h) rows here")
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("necklaces", help="cyclic orbits of exponent strings")
    common(p)
    p.add_argument("--N")
    p.add_argument("--count", action="store_true")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--strings", action="store_true")
    p.set_defaults(func=cmd_necklaces)

    p = sub.add_parser("ode", help="integrate the radial Toda system")
    common(p)
    p.add_argument("--k")
    p.add_argument("--m")
    p.add_argument("--epsilon", type=float, default=1e-2)
    p.add_argument("--r-end", type=float, default=1.0)
    p.add_argument("--steps", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--shift", help="comma-separated constant terms added to w at r=epsilon")
    p.add_argument("--csv", help="trajectory CSV path (a .json sidecar is written next to it)")
    p.set_defaults(func=cmd_ode)

    p = sub.add_parser("selfcheck", help="run the invariant suite")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(message)s")
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_INVALID
    try:
        result = args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    text = json.dumps(_jsonable(result), indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text, file=stdout)
    if getattr(args, "_failed", False):
        return 1
    return EXIT_OK


def main() -> None:
    sys.exit(run())
