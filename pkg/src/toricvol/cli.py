"""``toricvol`` command line.

Exit status: 0 on success, 1 on usage, input or validation errors (one
``Code: message`` line on stderr), 2 when ``verify`` finds a violated bound.
"""
import argparse
import random
import sys
from dataclasses import asdict

import numpy as np

from . import __version__
from .bounds import radon_partitions, run_suite
from .enumerate import DEFAULT_BUDGET, enumerate_singularities, make_job, spectrum_csv, volume_spectrum
from .errors import ToricVolError
from .io import csv_table, dumps, kind, load_json, parse_cone_doc, parse_polytope_doc
from .polytope import convex_hull, lattice_volume, polar_dual, volume
from .santalo import DEFAULT_TOL, santalo_point
from .toric import cone_from_rays, cross_check, normalized_volume

SUITES = ("all", "bs", "rdp", "euler", "c1", "thm35", "mahler")
REPORT_COLUMNS = ["name", "lhs", "rhs", "holds", "strict", "equality_within_tol", "advisory",
                  "notes"]


class UsageError(ToricVolError):
    code = "UsageError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _polytope(path):
    return convex_hull(parse_polytope_doc(load_json(path)))


def _cone(path):
    rays, label = parse_cone_doc(load_json(path))
    return cone_from_rays(rays, label)


def _hull_doc(P):
    return {
        "dim": P.dim,
        "vertices": P.vertices,
        "facets": [{"normal": h.normal, "offset": h.offset} for h in P.facets],
    }


def cmd_hull(args):
    return _hull_doc(_polytope(args.input))


def cmd_dual(args):
    return _hull_doc(polar_dual(_polytope(args.input)))


def cmd_volume(args):
    P = _polytope(args.input)
    out = {"volume": volume(P)}
    if P.is_lattice:
        out["lattice_volume"] = lattice_volume(P)
    return out


def _santalo_doc(res):
    return {
        "point": res.point,
        "dual_volume": res.dual_volume,
        "mahler": res.mahler,
        "mahler_bracket": res.mahler_bracket,
        "residual": res.residual,
        "iterations": res.iterations,
        "exact": res.exact,
    }


def cmd_santalo(args):
    return _santalo_doc(santalo_point(_polytope(args.input), args.tol))


def cmd_normvol(args):
    cone = _cone(args.input)
    nv = normalized_volume(cone, args.tol)
    out = {
        "label": cone.label,
        "value": nv.value,
        "bracket": nv.value_bracket,
        "exact": nv.exact,
        "index": nv.height.ell,
        "minimizer_xi": nv.minimizer_xi,
        "santalo": _santalo_doc(nv.santalo),
    }
    if args.cross_check:
        out["cross_check"] = cross_check(cone, nv)
    return out


def cmd_radon(args):
    pts = parse_polytope_doc(load_json(args.input))
    return [
        {"part_a": [pts[i] for i in r.part_a], "part_b": [pts[i] for i in r.part_b],
         "radon_point": r.radon_point, "p": r.p, "q": r.q}
        for r in radon_partitions(pts)
    ]


def cmd_verify(args):
    doc = load_json(args.input)
    if kind(doc) == "cone":
        rays, label = parse_cone_doc(doc)
        obj = cone_from_rays(rays, label)
    else:
        obj = convex_hull(parse_polytope_doc(doc))
    reports = run_suite(obj, args.suite, args.tol)
    args.failed = any(not r.holds and not r.advisory for r in reports)
    rows = [asdict(r) for r in reports]
    if args.csv:
        return csv_table(rows, REPORT_COLUMNS)
    return rows


def _job(args, scale=1):
    return make_job(args.dim, args.epsilon, args.budget, scale)


def cmd_enumerate(args):
    entries = enumerate_singularities(_job(args), args.jobs, args.tol)
    text = spectrum_csv(entries)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        return {"entries": len(entries), "out": args.out}
    return text


def cmd_spectrum(args):
    spec = volume_spectrum(_job(args), jobs=args.jobs)
    rows = [{"value": v, "multiplicity": m, "gap": g}
            for v, m, g in zip(spec.values, spec.multiplicities, spec.gaps)]
    if args.csv:
        return csv_table(rows, ["value", "multiplicity", "gap"])
    return rows


def build_parser():
    p = _Parser(prog="toricvol", allow_abbrev=False,
                description="Normalized volumes of toric singularities via Santalo points.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--seed", type=int, default=0, help="seed for the random generators")
    p.add_argument("--float", action="store_true", dest="floats",
                   help="add decimal twins of rational fields")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help, input=True, tol=False):
        s = sub.add_parser(name, help=help, allow_abbrev=False)
        if input:
            s.add_argument("input")
        if tol:
            s.add_argument("--tol", type=float, default=DEFAULT_TOL)
        s.set_defaults(func=func)
        return s

    verb("hull", cmd_hull, "vertices and facets of a polytope")
    verb("dual", cmd_dual, "polar dual of a polytope with the origin inside")
    verb("volume", cmd_volume, "Euclidean and lattice volume")
    verb("santalo", cmd_santalo, "Santalo point and Mahler volume", tol=True)
    s = verb("normvol", cmd_normvol, "normalized volume of a cone", tol=True)
    s.add_argument("--cross-check", action="store_true")
    verb("radon", cmd_radon, "Radon partitions of n+2 points")
    s = verb("verify", cmd_verify, "run inequality suites", tol=True)
    s.add_argument("--suite", choices=SUITES, default="all")
    s.add_argument("--csv", action="store_true")
    for name, func, help in (("enumerate", cmd_enumerate, "singularities above epsilon"),
                             ("spectrum", cmd_spectrum, "distinct volumes above epsilon")):
        s = verb(name, func, help, input=False, tol=True)
        s.add_argument("--dim", type=int, choices=(2, 3), required=True)
        s.add_argument("--epsilon", type=float, required=True)
        s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        s.add_argument("--jobs", type=int, default=1)
        if name == "enumerate":
            s.add_argument("--out")
        else:
            s.add_argument("--csv", action="store_true")
    return p


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        random.seed(args.seed)
        np.random.seed(args.seed)
        args.failed = False
        result = args.func(args)
    except ToricVolError as exc:
        print(f"{exc.code}: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"IOError: {exc.strerror or exc}: {exc.filename}", file=stderr)
        return 1
    except ValueError as exc:
        print(f"ValueError: {exc}", file=stderr)
        return 1
    if isinstance(result, str):
        stdout.write(result)
    else:
        stdout.write(dumps(result, args.floats) + "\n")
    return 2 if args.failed else 0


def main():
    sys.exit(run())
