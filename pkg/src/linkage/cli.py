"""``lk``: command-line front end.

Exit codes: 0 success/pass, 1 predicate false or theorem fail, 2 hypotheses
not met, 3 input error, 4 resource cap.
"""

from __future__ import annotations

import argparse
import glob
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import io
from .errors import LinkageError, PreconditionError, ResourceCapError
from .functors import canonical_module, ext, hom_module, tor
from .generators import random_monomial_module, shellable_generator, stanley_reisner
from .operators import is_horizontally_linked, lambda_, link_by_ideal, syzygy, t_functor, transpose
from .predicates import CLASSES, jnum
from .resolution import betti_table, depth_or_inf, free_resolution
from .verify import FAIL, PASS, UNMET, TAGS, verify_theorem

EXIT_OK, EXIT_FALSE, EXIT_UNMET, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3, 4
VERDICT_EXIT = {PASS: EXIT_OK, FAIL: EXIT_FALSE, UNMET: EXIT_UNMET}


def _module_report(M):
    out = io.module_to_json(M)
    out["hilbert"] = M.hilbert_series.to_json()
    out["betti"] = betti_table(M, over="S").to_json() if not M.is_zero() else {}
    return out


def _emit(args, obj, text=None):
    if args.format == "json":
        print(io.dumps(obj))
    else:
        print(text if text is not None else _text(obj))


def _text(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, dict) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    return f"{pad}{obj}"


def _load(args, path):
    return io.load_module(path, args.char, args.max_degree)


def _load_pair(args):
    M = _load(args, args.module)
    if args.other:
        N = _load(args, args.other)
    else:
        N = M.ring.as_module()
    return M, N


def _module_text(M):
    return io.module_to_text(M).rstrip("\n") + f"\n# hilbert {M.hilbert_series}"


# --- commands --------------------------------------------------------------------


def cmd_resolve(args):
    M = _load(args, args.module)
    length = args.length if args.length is not None else (M.ring.n + 1 if args.over == "S" else M.ring.dim + 1)
    F = free_resolution(M, length, args.over)
    obj = {
        "over": args.over,
        "ranks": F.ranks(),
        "betti": F.betti().to_json(),
        "maps": [[[str(x) for x in row] for row in d.rows()] for d in F.maps],
    }
    _emit(args, obj, str(F.betti()))
    return EXIT_OK


def cmd_invariants(args):
    M = _load(args, args.module)
    zero = M.is_zero()
    obj = {
        "zero": zero,
        "dim": M.dim,
        "depth": jnum(depth_or_inf(M)),
        "hilbert": M.hilbert_series.to_json(),
        "betti": betti_table(M).to_json() if not zero else {},
        "ring": {"dim": M.ring.dim, "depth": M.ring.depth, "cm": M.ring.cm_flag},
    }
    _emit(args, obj)
    return EXIT_OK


def _module_cmd(fn):
    def run(args):
        R = fn(args)
        _emit(args, _module_report(R), _module_text(R))
        return EXIT_OK

    return run


cmd_ext = _module_cmd(lambda a: ext(a.i, *_load_pair(a), over=a.over))
cmd_tor = _module_cmd(lambda a: tor(a.i, *_load_pair(a)))
cmd_hom = _module_cmd(lambda a: hom_module(*_load_pair(a)).module)
cmd_transpose = _module_cmd(lambda a: transpose(_load(a, a.module)))
cmd_omega = _module_cmd(lambda a: syzygy(a.k, _load(a, a.module)))
cmd_lambda = _module_cmd(lambda a: lambda_(_load(a, a.module)))
cmd_tfunctor = _module_cmd(lambda a: t_functor(a.i, _load(a, a.module)))


def cmd_canonical(args):
    try:
        R = io.load_ring(args.file, args.char)
    except LinkageError:
        R = _load(args, args.file).ring
    W = canonical_module(R)
    obj = _module_report(W)
    obj["gorenstein"] = R.gorenstein_flag
    if getattr(W, "warning", None):
        obj["warning"] = W.warning
    _emit(args, obj, _module_text(W))
    return EXIT_OK


def cmd_link_check(args):
    M = _load(args, args.module)
    cert = is_horizontally_linked(M)
    _emit(args, cert.to_json())
    return EXIT_OK if cert.verdict else EXIT_FALSE


def cmd_link_by_ideal(args):
    M = _load(args, args.module)
    gens = [g.strip() for g in args.ideal.split(",") if g.strip()]
    Rc, L, cert = link_by_ideal(M, gens)
    obj = {"ring": io.ring_to_json(Rc), "lambda": _module_report(L), "certificate": cert.to_json()}
    _emit(args, obj)
    return EXIT_OK if cert.verdict else EXIT_FALSE


def cmd_check(args):
    M = _load(args, args.module)
    v = CLASSES[args.cls](M)
    _emit(args, v.to_json())
    return EXIT_OK if v.verdict else EXIT_FALSE


def _verify_file(path, tag=None, char=None, max_degree=None):
    file_tag, inst = io.load_instance(path, char, max_degree)
    tag = tag or file_tag
    if tag is None:
        raise io.InputError(f"{path}: no theorem tag given")
    if file_tag and tag != file_tag:
        raise io.InputError(f"{path}: instance is for {file_tag}, not {tag}")
    return verify_theorem(tag, inst).to_json()


def _verify_worker(job):
    path, char, max_degree = job
    try:
        return _verify_file(path, None, char, max_degree)
    except ResourceCapError as exc:
        return {"instance": os.path.basename(path), "verdict": "resource-cap", "error": str(exc)}


def cmd_verify(args):
    if args.all:
        files = sorted(glob.glob(os.path.join(args.all, "**", "*.toml"), recursive=True))
        if not files:
            raise io.InputError(f"no instance files under {args.all}")
        jobs = [(f, args.char, args.max_degree) for f in files]
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                reports = list(pool.map(_verify_worker, jobs))
        else:
            reports = [_verify_worker(j) for j in jobs]
        verdicts = [r["verdict"] for r in reports]
        obj = {
            "count": len(reports),
            "summary": {v: verdicts.count(v) for v in (PASS, FAIL, UNMET, "resource-cap")},
            "reports": reports,
        }
        _emit(args, obj, "\n".join(f"{r['verdict']:>20}  {r.get('tag', '?')}  {r['instance']}" for r in reports))
        if FAIL in verdicts:
            return EXIT_FALSE
        if "resource-cap" in verdicts:
            return EXIT_CAP
        return EXIT_UNMET if UNMET in verdicts else EXIT_OK
    if not args.tag or not args.instance:
        raise io.InputError("verify needs a tag and an instance file (or --all DIR)")
    if args.tag not in TAGS:
        raise io.InputError(f"unknown tag {args.tag!r}; choose from {', '.join(TAGS)}")
    rep = _verify_file(args.instance, args.tag, args.char, args.max_degree)
    _emit(args, rep)
    return VERDICT_EXIT[rep["verdict"]]


def cmd_gen(args):
    char = args.char if args.char is not None else io.DEFAULT_CHAR
    seed = args.seed if args.seed is not None else 0
    if args.kind == "sr":
        if args.file:
            D = io.load_facets(args.file)
        elif args.facets and args.n:
            D = io.SimplicialComplex(args.n, [[int(v) for v in f.split()] for f in args.facets.split(";")])
        else:
            raise io.InputError("gen sr needs a facet file or -n with --facets")
        R = stanley_reisner(D, char)
        obj = {"complex": D.as_lists(), "ring": io.ring_to_json(R)}
        _emit(args, obj, io.ring_to_text(R).rstrip("\n"))
    elif args.kind == "shellable":
        D = shellable_generator(seed, args.n or 4, mixed=args.mixed)
        obj = {"seed": seed, "n": D.n, "facets": D.as_lists(), "shelling": [list(f) for f in D.shelling]}
        _emit(args, obj, io.facets_to_text(D).rstrip("\n"))
    else:
        names = tuple(args.vars.replace(",", " ").split())
        R = io.QuotientRing(io.AmbientRing(names, None, char))
        M = random_monomial_module(seed, R, args.max_deg, args.max_gens)
        _emit(args, io.module_to_json(M), io.module_to_text(M).rstrip("\n"))
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--char", type=int, default=argparse.SUPPRESS, help="override the field characteristic")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-degree", type=int, default=argparse.SUPPRESS, dest="max_degree")

    p = argparse.ArgumentParser(prog="lk", description="Linkage, Ext and local cohomology on graded modules.")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=40, dest="max_degree")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("resolve", cmd_resolve, "minimal free resolution")
    sp.add_argument("module")
    sp.add_argument("--over", choices=("R", "S"), default="S")
    sp.add_argument("--length", type=int)
    add("invariants", cmd_invariants, "depth, dim, Betti, Hilbert").add_argument("module")
    for name, fn in (("ext", cmd_ext), ("tor", cmd_tor)):
        sp = add(name, fn, f"{name.capitalize()}^i(M, N); N defaults to R")
        sp.add_argument("i", type=int)
        sp.add_argument("module")
        sp.add_argument("other", nargs="?")
        if name == "ext":
            sp.add_argument("--over", choices=("R", "S"), default="R")
    sp = add("hom", cmd_hom, "Hom(M, N); N defaults to R")
    sp.add_argument("module")
    sp.add_argument("other", nargs="?")
    add("canonical", cmd_canonical, "canonical module of a ring (ring or module file)").add_argument("file")
    add("transpose", cmd_transpose, "Auslander transpose").add_argument("module")
    sp = add("omega", cmd_omega, "k-th syzygy")
    sp.add_argument("module")
    sp.add_argument("-k", type=int, default=1)
    add("lambda", cmd_lambda, "linkage operator Omega Tr").add_argument("module")
    sp = add("tfunctor", cmd_tfunctor, "T_i = Tr Omega^{i-1}")
    sp.add_argument("module")
    sp.add_argument("-i", type=int, default=1)
    add("link-check", cmd_link_check, "decide horizontal linkage").add_argument("module")
    sp = add("link-by-ideal", cmd_link_by_ideal, "link over R/c")
    sp.add_argument("module")
    sp.add_argument("--ideal", required=True, help="comma separated generators")
    sp = add("check", cmd_check, "module class predicates")
    sp.add_argument("cls", choices=sorted(CLASSES))
    sp.add_argument("module")
    sp = add("verify", cmd_verify, "verify a structural result on an instance")
    sp.add_argument("tag", nargs="?")
    sp.add_argument("instance", nargs="?")
    sp.add_argument("--all", metavar="DIR")
    sp.add_argument("--jobs", type=int, default=min(4, os.cpu_count() or 1))
    sp = add("gen", cmd_gen, "generate examples")
    sp.add_argument("kind", choices=("sr", "shellable", "random"))
    sp.add_argument("file", nargs="?")
    sp.add_argument("-n", type=int)
    sp.add_argument("--facets")
    sp.add_argument("--mixed", action="store_true")
    sp.add_argument("--vars", default="x y z")
    sp.add_argument("--max-deg", type=int, default=3, dest="max_deg")
    sp.add_argument("--max-gens", type=int, default=4, dest="max_gens")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"lk: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"lk: precondition not met: {exc}", file=sys.stderr)
        return EXIT_UNMET
    except (LinkageError, ValueError, OSError) as exc:
        print(f"lk: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
