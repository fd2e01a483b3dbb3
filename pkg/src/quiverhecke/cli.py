"""Command line interface.

Commands:

    basis        per-degree dimensions of the free algebra R(beta)
    cyclotomic   graded dimensions of the cyclotomic quotient
    gram         bilinear form matrices on the weight spaces of V(Lambda)
    compare      quotient dimensions against the module-side predictions
    check        run a named verification suite, or all of them
    cache        inspect or clear the on-disk cache

Exit status is 0 on success, 1 when a check or comparison fails, and 2
for configuration or usage errors.  All output is deterministic: two
runs over the same inputs emit the same bytes apart from timing fields.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bimodules import min_tau_degree
from .cache import Cache, resolve_cache_dir, summary_key
from .checks import CHECKS, run_check
from .config import ConfigError, load_config
from .cyclotomic import CycAlgebra
from .klr import basis_monomials, seqs_of
from .laurent import LaurentPoly
from .uqmod import UqModule

__all__ = ["main"]


def _labeled(datum, seq) -> str:
    return ",".join(str(datum.labels[i]) for i in seq)


def _beta_str(datum, beta) -> str:
    parts = []
    for i, k in enumerate(beta):
        parts.extend([str(datum.labels[i])] * k)
    return ",".join(parts) if parts else "-"


def _emit_json(payload):
    sys.stdout.write(
        json.dumps(payload, sort_keys=True, indent=2) + "\n"
    )


def _emit_rows(header, rows):
    sys.stdout.write("\t".join(header) + "\n")
    for row in rows:
        sys.stdout.write("\t".join(str(x) for x in row) + "\n")


def _want_json(cfg, args) -> bool:
    if args.json:
        return True
    return cfg is not None and cfg.output == "json"


def _load(args):
    if not args.config:
        raise ConfigError("this command needs --config FILE")
    return load_config(args.config)


# -- basis -------------------------------------------------------------


def cmd_basis(args):
    cfg = _load(args)
    betas = cfg.require_betas()
    cap = args.degree_cap
    if cap is None:
        cap = cfg.degree_cap
    if cap is None:
        cap = 10
    out = []
    for beta in betas:
        lo = min_tau_degree(cfg.datum, beta) if sum(beta) else 0
        dims = {}
        for d in range(lo, cap + 1):
            k = len(basis_monomials(cfg.datum, beta, d))
            if k:
                dims[d] = k
        out.append((beta, dims))
    if _want_json(cfg, args):
        _emit_json({
            "command": "basis",
            "degree_cap": cap,
            "betas": [
                {
                    "beta": _beta_str(cfg.datum, beta),
                    "dims": {str(d): k for d, k in sorted(dims.items())},
                }
                for beta, dims in out
            ],
        })
    else:
        rows = []
        for beta, dims in out:
            name = _beta_str(cfg.datum, beta)
            for d in sorted(dims):
                rows.append((name, d, dims[d]))
        _emit_rows(("beta", "degree", "dim"), rows)
    return 0


# -- cyclotomic and compare --------------------------------------------


def _summary_for(cfg, beta, cache):
    """Fetch or compute the summary payload for one root space."""
    key = summary_key(cfg.datum, cfg.qspec, cfg.weight, beta)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    alg = CycAlgebra(cfg.datum, cfg.weight, beta, cfg.qspec)
    payload = alg.summary()
    if cache is not None:
        cache.put(key, payload)
    return payload


def _open_cache(args):
    if args.no_cache:
        return None
    return Cache(resolve_cache_dir(args.cache_dir))


def cmd_cyclotomic(args):
    cfg = _load(args)
    cfg.require_weight()
    betas = cfg.require_betas()
    cache = _open_cache(args)
    payloads = [_summary_for(cfg, beta, cache) for beta in betas]
    if _want_json(cfg, args):
        _emit_json({"command": "cyclotomic", "algebras": payloads})
    else:
        rows = []
        for beta, pay in zip(betas, payloads):
            poly = LaurentPoly.from_json(pay["graded_dim"])
            rows.append((
                _beta_str(cfg.datum, beta),
                pay["total_dim"],
                1 if pay["zero"] else 0,
                str(poly),
            ))
        _emit_rows(("beta", "total_dim", "zero", "graded_dim"), rows)
    return 0


def cmd_gram(args):
    cfg = _load(args)
    weight = cfg.require_weight()
    betas = cfg.require_betas()
    mod = UqModule(cfg.datum, weight)
    blocks = []
    for beta in betas:
        seqs, matrix = mod.gram_matrix(beta)
        blocks.append((beta, seqs, matrix))
    if _want_json(cfg, args):
        _emit_json({
            "command": "gram",
            "blocks": [
                {
                    "beta": _beta_str(cfg.datum, beta),
                    "seqs": [_labeled(cfg.datum, s) for s in seqs],
                    "matrix": [[p.to_json() for p in row] for row in matrix],
                }
                for beta, seqs, matrix in blocks
            ],
        })
    else:
        rows = []
        for beta, seqs, matrix in blocks:
            name = _beta_str(cfg.datum, beta)
            for a, mu in enumerate(seqs):
                for b, nu in enumerate(seqs):
                    rows.append((
                        name,
                        _labeled(cfg.datum, mu),
                        _labeled(cfg.datum, nu),
                        str(matrix[a][b]),
                    ))
        _emit_rows(("beta", "mu", "nu", "gram"), rows)
    return 0


def cmd_compare(args):
    cfg = _load(args)
    weight = cfg.require_weight()
    betas = cfg.require_betas()
    cache = _open_cache(args)
    mod = UqModule(cfg.datum, weight)
    rows = []
    mismatches = 0
    for beta in betas:
        pay = _summary_for(cfg, beta, cache)
        truncs = pay.get("truncations", {})
        name = _beta_str(cfg.datum, beta)
        for mu in seqs_of(beta):
            for nu in seqs_of(beta):
                key = "|".join((_labeled(cfg.datum, mu),
                                _labeled(cfg.datum, nu)))
                alg = LaurentPoly.from_json(truncs.get(key, {}))
                pred = mod.predicted_dim(beta, mu, nu)
                ok = alg == pred
                if not ok:
                    mismatches += 1
                rows.append({
                    "beta": name,
                    "mu": _labeled(cfg.datum, mu),
                    "nu": _labeled(cfg.datum, nu),
                    "algebra": alg,
                    "predicted": pred,
                    "match": ok,
                })
    if _want_json(cfg, args):
        _emit_json({
            "command": "compare",
            "mismatches": mismatches,
            "rows": [
                {
                    "beta": r["beta"],
                    "mu": r["mu"],
                    "nu": r["nu"],
                    "algebra": r["algebra"].to_json(),
                    "predicted": r["predicted"].to_json(),
                    "match": r["match"],
                }
                for r in rows
            ],
        })
    else:
        _emit_rows(
            ("beta", "mu", "nu", "algebra", "predicted", "match"),
            [
                (r["beta"], r["mu"], r["nu"], str(r["algebra"]),
                 str(r["predicted"]), 1 if r["match"] else 0)
                for r in rows
            ],
        )
    return 1 if mismatches else 0


# -- check -------------------------------------------------------------


def _timed(thunk):
    t0 = time.perf_counter()
    rep = thunk()
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


def _run_checks(names, jobs):
    if jobs > 1:
        import multiprocessing

        thunks = []
        for name in names:
            thunks.extend(CHECKS[name]())
        with multiprocessing.Pool(jobs) as pool:
            return pool.map(_timed, thunks)
    reports = []
    for name in names:
        reports.extend(run_check(name))
    return reports


def _inputs_str(inputs) -> str:
    return " ".join(f"{k}={inputs[k]}" for k in sorted(inputs))


def cmd_check(args):
    if args.name == "all":
        names = sorted(CHECKS)
    elif args.name in CHECKS:
        names = [args.name]
    else:
        known = ", ".join(sorted(CHECKS))
        sys.stderr.write(
            f"unknown check {args.name!r}; choose from: {known}, all\n"
        )
        return 2
    reports = _run_checks(names, args.jobs)
    failed = sum(1 for r in reports if r.status == "fail")
    if args.json:
        _emit_json({
            "command": "check",
            "results": [r.to_json() for r in reports],
            "total": len(reports),
            "failed": failed,
        })
    else:
        for r in reports:
            line = "%-4s %-16s %s" % (
                r.status.upper(), r.name, _inputs_str(r.inputs)
            )
            sys.stdout.write(line.rstrip() + "\n")
            if r.status == "fail":
                for row in r.witness:
                    if row.get("kind") == "counterexample":
                        sys.stdout.write("     " + _inputs_str(row) + "\n")
        sys.stdout.write(
            f"{len(reports)} instances, {failed} failed\n"
        )
    return 1 if failed else 0


# -- cache -------------------------------------------------------------


def cmd_cache(args):
    cache = Cache(resolve_cache_dir(args.cache_dir))
    if args.action == "stat":
        info = cache.stat()
        if args.json:
            _emit_json({"command": "cache", **info})
        else:
            _emit_rows(("root", "entries", "bytes"),
                       [(info["root"], info["entries"], info["bytes"])])
    else:
        removed = cache.clear()
        if args.json:
            _emit_json({"command": "cache", "removed": removed})
        else:
            sys.stdout.write(f"removed {removed} entries\n")
    return 0


# -- driver ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE",
                        help="path to a JSON config file")
    common.add_argument("--json", action="store_true",
                        help="emit JSON instead of TSV")
    common.add_argument("--cache-dir", metavar="DIR",
                        help="cache directory (overrides the environment)")
    common.add_argument("--no-cache", action="store_true",
                        help="compute everything fresh")
    common.add_argument("--degree-cap", type=int, metavar="N",
                        help="top degree for unbounded listings")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for check suites")

    parser = argparse.ArgumentParser(
        prog="quiverhecke",
        description="exact computations in quiver Hecke algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common],
                       help="graded dimensions of the free algebra")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("cyclotomic", parents=[common],
                       help="graded dimensions of the cyclotomic quotient")
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("gram", parents=[common],
                       help="bilinear form matrices on weight spaces")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("compare", parents=[common],
                       help="quotient dimensions against predictions")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("check", parents=[common],
                       help="run verification suites")
    p.add_argument("name", help="suite name or \"all\"")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("cache", parents=[common],
                       help="inspect or clear the cache")
    p.add_argument("action", choices=("stat", "clear"))
    p.set_defaults(func=cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        sys.stderr.write(f"config error: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
