"""Command-line interface: ``kronrep <command> ...``.

Every command prints one JSON report (or writes it to ``--out``).  Exit
codes: 0 success / property holds, 2 property fails, 3 only sampled evidence
or an undetermined answer, 1 error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import ar, functors, rank_props as rp
from .exactlin import Field
from .io import ModuleFormatError, dump_module, module_from_dict, module_to_dict
from .quiver_rep import InvalidModuleError, KroneckerModule, dual, hom_basis
from .testfamily import Subspace, SubspaceError, injective, projective, ringel_e, x_u_module

EXIT_OK, EXIT_ERROR, EXIT_NO, EXIT_UNDETERMINED = 0, 1, 2, 3


class CommandError(Exception):
    pass


# -- parsing helpers ----------------------------------------------------------


def _field_from_args(args, default: Optional[Field] = None) -> Optional[Field]:
    if getattr(args, "rational", False):
        return Field.rational()
    if getattr(args, "q", None) is not None:
        return Field.prime(args.q)
    return default


def _parse_rows(text: str) -> list[list[Fraction]]:
    """'1,0,2;0,1,1' -> [[1,0,2],[0,1,1]]."""
    try:
        return [[Fraction(x) for x in row.split(",")] for row in text.split(";") if row.strip()]
    except ValueError:
        raise CommandError(f"cannot read matrix {text!r}; use rows separated by ';' and entries by ','") from None


class _Inputs:
    """Loads module files and keeps their bytes for the report digest."""

    def __init__(self):
        self.digest = hashlib.sha256()
        self.count = 0

    def load(self, path: str, field: Optional[Field]) -> KroneckerModule:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
        self.digest.update(data)
        self.count += 1
        try:
            doc = json.loads(data.decode("utf-8"))
        except json.JSONDecodeError as exc:
            raise ModuleFormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
        try:
            return module_from_dict(doc, field)
        except (ModuleFormatError, InvalidModuleError) as exc:
            raise type(exc)(f"{path}: {exc}") from None


def _mode(args, field: Field) -> rp.Mode:
    if args.mode == "exhaustive":
        if not field.is_finite:
            raise CommandError("exhaustive surveys need a finite field; pass --q or use --mode sample")
        return rp.Exhaustive()
    if args.mode == "sample":
        return rp.Sample(args.count, args.seed)
    return rp.default_mode(field)


# -- JSON rendering -----------------------------------------------------------


def _subspace_json(U: Subspace) -> list:
    return U.to_lists()


def _verdict_json(v: rp.PropertyVerdict, M: KroneckerModule) -> dict:
    out = {"property": v.prop, "d": v.d, "status": v.status, "scope": v.scope, "detail": v.detail}
    if not v.holds:
        out["witness"] = [{"subspace": _subspace_json(U), "soc_dim": rp.soc_dim(M, U), "rad_dim": rp.rad_dim(M, U)}
                          for U in v.witness]
    extra = {k: val for k, val in v.extra.items() if isinstance(val, (bool, int))}
    if extra:
        out["info"] = extra
    return out


def _status_code(statuses: Sequence[str]) -> int:
    if "no" in statuses:
        return EXIT_NO
    if "evidence_only" in statuses or "undetermined" in statuses:
        return EXIT_UNDETERMINED
    return EXIT_OK


def _matrix_json(F: Field, a) -> list:
    if F.p is not None:
        return [[int(x) for x in row] for row in a]
    return [[str(Fraction(x)) for x in row] for row in a]


# -- commands -----------------------------------------------------------------


def cmd_check(args, inp):
    M = inp.load(args.module, _field_from_args(args))
    v = rp.check_property(args.property, M, args.d, _mode(args, M.field))
    return {"verdicts": [_verdict_json(v, M)]}, _status_code([v.status])


def cmd_profile(args, inp):
    M = inp.load(args.module, _field_from_args(args))
    prof = rp.socle_rank_profile(M, args.d, _mode(args, M.field))
    obs = sorted(prof.observations, key=lambda o: o[0].key())
    return {"d": args.d, "scope": prof.scope, "points": len(obs),
            "min_soc": prof.min_soc, "max_soc": prof.max_soc, "min_rad": prof.min_rad, "max_rad": prof.max_rad,
            "observations": [{"subspace": _subspace_json(U), "soc_dim": s, "rad_dim": r} for U, s, r in obs]}, EXIT_OK


def cmd_stratum(args, inp):
    M = inp.load(args.module, _field_from_args(args))
    i, scope = rp.stratum(M, _mode(args, M.field))
    return {"stratum": i, "scope": scope}, EXIT_OK


def cmd_orbit(args, inp):
    M = inp.load(args.module, _field_from_args(args))
    lo, hi = args.range
    scan = ar.cone_scan(M, lo, hi, _mode(args, M.field))
    rows = [{"j": row.j, "dim": list(row.dim), "esp": list(row.esp), "erp": list(row.erp)} for row in scan.rows]
    return {"scope": scan.scope, "rows": rows, "stopped": [list(s) for s in scan.stopped],
            "esp_monotone_along_tau_inv": scan.esp_monotone_along_tau_inv(),
            "erp_monotone_along_tau": scan.erp_monotone_along_tau(), "window_limited": True}, EXIT_OK


def _need(value, flag: str):
    if value is None:
        raise CommandError(f"{flag} is required for this construction")
    return value


def cmd_construct(args, inp):
    F = _field_from_args(args)
    kind = args.kind
    out: dict = {"kind": kind}
    if kind in ("inflate", "twist", "tower"):
        M = inp.load(_need(args.module, "--module"), F)
    if kind == "xu":
        F = F or Field.prime(5)
        U = Subspace.span(F, _parse_rows(_need(args.subspace, "--subspace")))
        result = x_u_module(U).module
        out["subspace"] = _subspace_json(U)
    elif kind in ("projective", "injective"):
        F = F or Field.prime(5)
        make = projective if kind == "projective" else injective
        result = make(F, _need(args.r, "--r"), _need(args.index, "--index"))
    elif kind == "ringel-e":
        result = ringel_e(F or Field.prime(5))
    elif kind == "inflate":
        result = functors.inflate(M, _need(args.s, "--s"))
    elif kind == "twist":
        if args.g is not None:
            g = functors.GLMatrix(M.field, M.field.array(_parse_rows(args.g)))
        else:
            g = functors.GLMatrix.random(M.field, M.r, np.random.default_rng(args.seed))
        result = functors.gl_twist(M, g)
        out["g"] = _matrix_json(M.field, g.g)
    elif kind == "tower":
        tower = ar.self_extension_tower(M, args.n, seed=args.seed)
        out["tower"] = [module_to_dict(T) for T in tower]
        result = tower[-1]
    else:  # argparse restricts the choices
        raise CommandError(f"unknown construction {kind!r}")
    out["module"] = module_to_dict(result)
    return out, EXIT_OK


def cmd_grassmann(args, inp):
    F = Field.prime(args.q)
    if args.action == "count":
        n = sum(1 for _ in rp.grassmannian_points(F, args.d, args.r))
        return {"d": args.d, "r": args.r, "q": args.q, "count": n,
                "gaussian_binomial": rp.gaussian_binomial(args.r, args.d, args.q)}, EXIT_OK
    pts = sorted(rp.grassmannian_points(F, args.d, args.r), key=Subspace.key)
    return {"d": args.d, "r": args.r, "q": args.q, "count": len(pts),
            "points": [_subspace_json(U) for U in pts]}, EXIT_OK


def cmd_dual(args, inp):
    M = inp.load(args.module, _field_from_args(args))
    return {"module": module_to_dict(dual(M))}, EXIT_OK


def cmd_tau(args, inp):
    M = inp.load(args.module, _field_from_args(args))
    res = ar.tau_inv(M) if args.inverse else ar.tau(M)
    return {"inverse": args.inverse, "stripped": res.stripped, "zero": res.is_zero,
            "module": module_to_dict(res.translate)}, EXIT_OK


def cmd_hom(args, inp):
    F = _field_from_args(args)
    M, N = inp.load(args.source, F), inp.load(args.target, F)
    basis = hom_basis(M, N)
    return {"dim": len(basis),
            "basis": [{"f1": _matrix_json(M.field, f.f1), "f2": _matrix_json(M.field, f.f2)} for f in basis]}, EXIT_OK


def cmd_ext(args, inp):
    F = _field_from_args(args)
    M, N = inp.load(args.source, F), inp.load(args.target, F)
    e = ar.ext_dim(M, N)
    e_pres = ar.ext_dim_presentation(M, N)
    if e != e_pres:
        raise AssertionError(f"Ext dimension {e} disagrees with the presentation count {e_pres}")
    return {"dim": e}, EXIT_OK


# -- argument parser ----------------------------------------------------------


def _add_field(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--q", type=int, help="work over F_q (re-reduces the module entries)")
    g.add_argument("--rational", action="store_true", help="work over Q")


def _add_survey(p):
    p.add_argument("--d", type=int, required=True, help="subspace dimension, 1 <= d < r")
    _add_mode(p)


def _add_mode(p):
    p.add_argument("--mode", choices=["exhaustive", "sample"], default=None,
                   help="survey every F_q-point (default for finite fields) or a seeded sample")
    p.add_argument("--count", type=int, default=64, help="sample size")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kronrep", description=__doc__.splitlines()[0])
    parser.add_argument("--out", help="write the report here instead of standard output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report here")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide CSR/CRR/ESP/ERP for one d")
    p.add_argument("property", choices=["esp", "erp", "csr", "crr"])
    p.add_argument("module")
    _add_survey(p)
    _add_field(p)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("profile", parents=[common], help="socle and radical dimensions at every surveyed subspace")
    p.add_argument("module")
    _add_survey(p)
    _add_field(p)
    p.set_defaults(run=cmd_profile)

    p = sub.add_parser("stratum", parents=[common], help="least d with the equal d-socle property")
    p.add_argument("module")
    _add_mode(p)
    _add_field(p)
    p.set_defaults(run=cmd_stratum)

    p = sub.add_parser("orbit", parents=[common], help="ESP/ERP flags along the tau-orbit")
    p.add_argument("module")
    p.add_argument("--range", type=int, nargs=2, default=[-2, 2], metavar=("LO", "HI"))
    _add_mode(p)
    _add_field(p)
    p.set_defaults(run=cmd_orbit)

    p = sub.add_parser("construct", parents=[common], help="build a module")
    p.add_argument("kind", choices=["xu", "projective", "injective", "ringel-e", "inflate", "twist", "tower"])
    p.add_argument("--module", help="input module for inflate/twist/tower")
    p.add_argument("--subspace", help="basis rows of U, e.g. '1,0,0;0,1,2'")
    p.add_argument("--r", type=int)
    p.add_argument("--index", type=int, choices=[1, 2])
    p.add_argument("--s", type=int, help="target number of arrows for inflate")
    p.add_argument("--g", help="twist matrix rows; random when omitted")
    p.add_argument("--n", type=int, default=2, help="tower length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--module-only", action="store_true", help="emit just the module file")
    _add_field(p)
    p.set_defaults(run=cmd_construct)

    p = sub.add_parser("grassmann", parents=[common], help="enumerate or count Gr_{d,r}(F_q)")
    p.add_argument("action", choices=["enumerate", "count"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(run=cmd_grassmann)

    p = sub.add_parser("dual", parents=[common], help="the dual module DM")
    p.add_argument("module")
    _add_field(p)
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("tau", parents=[common], help="Auslander-Reiten translate")
    p.add_argument("module")
    p.add_argument("--inverse", action="store_true")
    _add_field(p)
    p.set_defaults(run=cmd_tau)

    for name, fn, text in (("hom", cmd_hom, "basis of Hom(M, N)"), ("ext", cmd_ext, "dim Ext(M, N)")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("source")
        p.add_argument("target")
        _add_field(p)
        p.set_defaults(run=fn)
    return parser


def _execute(argv: Sequence[str]):
    args = build_parser().parse_args(list(argv))
    inp = _Inputs()
    start = time.perf_counter()
    try:
        body, code = args.run(args, inp)
    except (ModuleFormatError, InvalidModuleError, SubspaceError, CommandError, ValueError, OSError) as exc:
        body, code = {"error": f"{type(exc).__name__}: {exc}"}, EXIT_ERROR
    report = {"command": list(argv), "input_digest": inp.digest.hexdigest() if inp.count else None}
    report.update(body)
    report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return args, report, code


def run_command(argv: Sequence[str]) -> tuple[dict, int]:
    """Run one command; returns the report and the exit code."""
    _, report, code = _execute(argv)
    return report, code


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args, report, code = _execute(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_ERROR if exc.code else EXIT_OK
    if code == EXIT_OK and getattr(args, "module_only", False):
        text = dump_module(module_from_dict(report["module"]))
    else:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_ERROR:
        sys.stderr.write(report["error"] + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
