"""Command-line front end: Tor computations, verification suites, and
cochain-algebra reports.

Input files are JSON with sections `field`, `bounds`, `algebras`, `maps`,
`tor`, `simplicial_sets`; see data/su2_torus_torus.json for communicating
fixtures.  Exit codes: 0 success, 1 input error, 2 exact mathematical
disagreement or identity failure.
"""

import argparse
import json
import sys
from importlib import resources

from .fields import QQ, parse_field
from .simplicial import CochainDga, FiniteSimplicialSet, space_cohomology
from .hga import surjection_hga, enumerate_pairs
from .tor import (
    AlgebraMap,
    AlgebraPresentation,
    bar_tor,
    koszul_tor,
    poincare_series,
    ranks_agree,
    ring_presentation,
)
from . import verify as verify_mod

BUILTIN_SPECS = (
    "su2_point_point",
    "su2_point_torus",
    "su3_torus_point",
    "su2_torus_torus",
)


class InputError(Exception):
    pass


def load_spec(path_or_name):
    if path_or_name in BUILTIN_SPECS:
        text = resources.files("bartor").joinpath(f"data/{path_or_name}.json").read_text()
        return json.loads(text)
    try:
        with open(path_or_name) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(
            f"no such spec {path_or_name!r} (builtin specs: {', '.join(BUILTIN_SPECS)})"
        )
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path_or_name}: {exc}")


def build_field(spec, override=None):
    if override:
        return parse_field(override)
    return parse_field(spec.get("field", "q"))


def build_algebras(spec, field):
    algebras = {}
    for entry in spec.get("algebras", []):
        try:
            name = entry["name"]
            gens = [(g["name"], g["degree"]) for g in entry.get("generators", [])]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed algebra entry {entry!r}: missing {exc}")
        try:
            algebras[name] = AlgebraPresentation(name, gens, field)
        except ValueError as exc:
            raise InputError(f"algebra {name!r}: {exc}")
    return algebras


def build_maps(spec, algebras):
    maps = {}
    for entry in spec.get("maps", []):
        try:
            name = entry["name"]
            source = algebras[entry["source"]]
            target = algebras[entry["target"]]
        except KeyError as exc:
            raise InputError(f"malformed map entry {entry!r}: missing or unknown {exc}")
        try:
            maps[name] = AlgebraMap(source, target, entry.get("images", {}))
        except ValueError as exc:
            raise InputError(f"map {name!r}: {exc}")
    return maps


def build_simplicial(entry):
    try:
        name = entry["name"]
        basepoint = entry["basepoint"]
        simplices = {}
        faces = {}
        for s in entry["simplices"]:
            simplices[s["name"]] = s["dim"]
            if s["dim"] > 0:
                faces[s["name"]] = tuple(parse_face(f) for f in s["faces"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed simplicial set {entry!r}: missing {exc}")
    try:
        return FiniteSimplicialSet(name, simplices, faces, basepoint)
    except ValueError as exc:
        raise InputError(f"simplicial set {name!r}: {exc}")


def parse_face(text):
    """A face is a simplex name, optionally degenerated: 's1 s0 <name>'."""
    bits = text.split()
    degens = []
    for b in bits[:-1]:
        if not (b.startswith("s") and b[1:].isdigit()):
            raise InputError(f"bad degeneracy {b!r} in face {text!r}")
        degens.append(int(b[1:]))
    return (tuple(degens), bits[-1])


def tor_report(spec, args):
    field = build_field(spec, args.field)
    algebras = build_algebras(spec, field)
    maps = build_maps(spec, algebras)
    tor_spec = spec.get("tor")
    if not tor_spec:
        raise InputError("spec has no 'tor' section")
    try:
        f_left = maps[tor_spec["left_map"]]
        f_right = maps[tor_spec["right_map"]]
    except KeyError as exc:
        raise InputError(f"tor section references unknown map {exc}")
    bounds = spec.get("bounds", {})
    degree_bound = args.degree_bound or bounds.get("degree", 16)
    base = f_left.source
    if f_right.source is not base:
        raise InputError("left and right maps must share their source algebra")

    bar = bar_tor(f_left, f_right, degree_bound, field)
    koz = koszul_tor(f_left, f_right, degree_bound, field)
    disagreement = ranks_agree(bar, koz)
    pres = ring_presentation(bar)

    report = {
        "base": base.name,
        "left": f_left.target.name,
        "right": f_right.target.name,
        "field": field.name,
        "degree_bound": degree_bound,
        "poincare": poincare_series(bar),
        "total_ranks": {str(n): r for n, r in sorted(bar.total_ranks.items()) if r},
        "bigraded": [
            {"filtration": -l, "degree": n, "rank": r}
            for (l, n), r in sorted(bar.bigraded.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        ],
        "generators": [
            {"name": g, "degree": d} for g, d, _ in pres.generators
        ],
        "relations": [{"degree": n, "relation": r} for n, r in pres.relations],
        "presentation": pres.describe(),
        "bar_koszul_agreement": disagreement is None,
    }
    if pres.truncation_warning:
        report["truncation_warning"] = pres.truncation_warning
    if disagreement is not None:
        report["first_disagreement"] = repr(disagreement)
    return report, (2 if disagreement is not None else 0)


def print_tor_report(report, out):
    if out == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    print(f"Tor_{report['base']}({report['left']}, {report['right']}) over {report['field']}, "
          f"degree bound {report['degree_bound']}")
    series = " + ".join(
        (f"{r}t^{n}" if n else str(r)) if r != 1 or n == 0 else f"t^{n}"
        for n, r in enumerate(report["poincare"])
        if r
    )
    print(f"  Poincare series: {series if series else '0'}")
    print("  bigraded ranks (filtration, degree):")
    for row in report["bigraded"]:
        print(f"    ({row['filtration']:3d}, {row['degree']:3d}): {row['rank']}")
    print(f"  ring presentation: {report['presentation']}")
    for g in report["generators"]:
        print(f"    generator {g['name']} in degree {g['degree']}")
    for r in report["relations"]:
        print(f"    relation in degree {r['degree']}: {r['relation']}")
    if report.get("truncation_warning"):
        print(f"  warning: {report['truncation_warning']}")
    verdict = "agree" if report["bar_koszul_agreement"] else f"DISAGREE at {report['first_disagreement']}"
    print(f"  bar/Koszul oracle: {verdict}")


def cochains_report(spec_or_name, args):
    field = parse_field(args.field) if args.field else QQ
    builtin = {
        "delta0": 0, "delta1": 1, "delta2": 2, "delta3": 3, "delta4": 4,
    }
    from .simplicial import boundary_simplex, minimal_circle, standard_simplex

    if spec_or_name in builtin:
        space = standard_simplex(builtin[spec_or_name])
    elif spec_or_name in ("dDelta2", "dDelta3", "dDelta4"):
        space = boundary_simplex(int(spec_or_name[-1]))
    elif spec_or_name == "s1":
        space = minimal_circle()
    else:
        spec = load_spec(spec_or_name)
        sets = spec.get("simplicial_sets", [])
        if not sets:
            raise InputError("spec has no 'simplicial_sets' section")
        space = build_simplicial(sets[0])
    A = CochainDga(space, field)
    ranks = {n: len(A.basis(n)) for n in range(space.dimension + 1)}
    cohomology = space_cohomology(A)
    hga = surjection_hga(A, length_bound=args.length_bound or 3)
    deg = args.degree_bound or 3
    pairs = enumerate_pairs(hga.bar, deg, length_bounds=(2, 2))
    offender = hga.validate(pairs)
    report = {
        "space": space.name,
        "field": field.name,
        "cochain_ranks": {str(n): r for n, r in ranks.items()},
        "cohomology_ranks": {str(n): r for n, r in cohomology.items()},
        "hga_maurer_cartan": {
            "pairs": len(pairs),
            "degree_bound": deg,
            "ok": offender is None,
        },
    }
    if offender is not None:
        report["hga_maurer_cartan"]["first_failure"] = repr(offender)
    return report, (2 if offender is not None else 0)


def print_cochains_report(report, out):
    if out == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    print(f"normalized cochains of {report['space']} over {report['field']}")
    print(f"  cochain ranks: {report['cochain_ranks']}")
    print(f"  cohomology ranks: {report['cohomology_ranks']}")
    mc = report["hga_maurer_cartan"]
    word = "pass" if mc["ok"] else f"FAIL at {mc.get('first_failure')}"
    print(f"  HGA Maurer-Cartan suite ({mc['pairs']} pairs, degree <= {mc['degree_bound']}): {word}")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="bartor",
        description="Exact bar-construction calculus: Tor of polynomial algebras, "
        "homotopy Gerstenhaber identity suites, normalized cochain algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tor = sub.add_parser("tor", help="compute Tor with its ring structure, two ways")
    p_tor.add_argument("spec", help=f"JSON input file or builtin: {', '.join(BUILTIN_SPECS)}")
    p_tor.add_argument("--field", help="q or fp:<odd prime>")
    p_tor.add_argument("--degree-bound", type=int)
    p_tor.add_argument("--length-bound", type=int)
    p_tor.add_argument("--out", choices=("text", "json"), default="text")

    p_ver = sub.add_parser("verify", help="run a named identity suite")
    p_ver.add_argument("--suite", required=True, choices=verify_mod.SUITES)
    p_ver.add_argument("--example")
    p_ver.add_argument("--degree-bound", type=int, default=8)
    p_ver.add_argument("--length-bound", type=int, default=4)
    p_ver.add_argument("--i", type=int, default=1, help="cup-i index for the steenrod suite")
    p_ver.add_argument("--field", help="q or fp:<odd prime>")
    p_ver.add_argument("--out", choices=("text", "json"), default="text")

    p_coch = sub.add_parser("cochains", help="build a normalized cochain algebra and run its HGA suite")
    p_coch.add_argument("spec", help="JSON input file or builtin space (delta0..4, dDelta2..4, s1)")
    p_coch.add_argument("--field", help="q or fp:<odd prime>")
    p_coch.add_argument("--degree-bound", type=int)
    p_coch.add_argument("--length-bound", type=int)
    p_coch.add_argument("--out", choices=("text", "json"), default="text")

    args = parser.parse_args(argv)
    try:
        if args.command == "tor":
            spec = load_spec(args.spec)
            report, status = tor_report(spec, args)
            print_tor_report(report, args.out)
            return status
        if args.command == "verify":
            field = parse_field(args.field) if args.field else QQ
            ok, lines = verify_mod.run_suite(
                args.suite, args.example, args.degree_bound, args.length_bound, args.i, field
            )
            if args.out == "json":
                print(json.dumps({"suite": args.suite, "ok": ok, "detail": lines}, indent=2))
            else:
                for line in lines:
                    print(("PASS " if ok else "FAIL ") + line)
            return 0 if ok else 2
        if args.command == "cochains":
            report, status = cochains_report(args.spec, args)
            print_cochains_report(report, args.out)
            return status
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
