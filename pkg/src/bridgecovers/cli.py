"""Command-line front end: eight verbs over the covering toolkit.

Exit status is 0 on success, 1 when a cross-route verification disagrees,
2 on argument errors (usage goes to stderr).  --format json emits a single
JSON object carrying a schema_version field; every record round-trips
through json.loads.
"""

import argparse
import json
import sys
from math import gcd

from .covering import CoveringSpec, classify, genus_bounds, geometry, lens_recognize
from .decomposition import decompose
from .gems import (CYCLIC_ORDERS, GLMParams, LMParams, SPHERE, NonIntegerGenus,
                   build_generalized, build_lins_mandel, gem_closed_form,
                   heegaard_genus, is_crystallization, is_gem, represented_covering)
from .homology import AbelianGroup, verify_consistency
from .polyhedral import NotAManifold, build_minkus, quotient_counts, schema_presentation
from .presentations import minkus_presentation, mu3_presentation, takahashi_word
from .two_bridge import (NoEvenRepresentative, cf_expand, even_cf_expand,
                         is_genus_one, linking_number, normalize)
from .words import format_word

SCHEMA_VERSION = 1


def _group_str(gd: dict) -> str:
    return str(AbelianGroup(gd["rank"], tuple(gd["torsion"])))


def _presentation_payload(pres) -> dict:
    return {"generators": pres.generator_count,
            "relators": [format_word(r) for r in pres.relators]}


def cmd_info(args):
    t = normalize(args.alpha, args.beta)
    data = {"link": str(t), "alpha": t.alpha, "beta": t.beta,
            "kind": "knot" if t.is_knot else "link",
            "continued_fraction": list(cf_expand(t).entries)}
    lines = ["%s: %s" % (t, "knot" if t.is_knot else "2-component link"),
             "continued fraction: %s" % (data["continued_fraction"],)]
    try:
        data["even_form"] = list(even_cf_expand(t).entries())
        lines.append("even form: %s" % (data["even_form"],))
    except NoEvenRepresentative:
        data["even_form"] = None
        lines.append("even form: none")
    if t.is_link:
        data["linking_number"] = linking_number(t)
        lines.append("linking number: %d" % data["linking_number"])
    else:
        data["genus_one"] = is_genus_one(t)
        lines.append("genus one: %s" % ("yes" if data["genus_one"] else "no"))
    return 0, data, lines


def cmd_classify(args):
    t = normalize(args.alpha, args.beta)
    spec = CoveringSpec(args.n, tuple(args.k))
    cls = classify(spec)
    bounds = genus_bounds(t, spec)
    lens = lens_recognize(t, spec)
    data = {"link": str(t), "degree": spec.n, "exponents": list(spec.exponents),
            "classes": {"strictly": cls.strictly, "almost_strictly": cls.almost_strictly,
                        "meridian": cls.meridian, "singly": cls.singly,
                        "monodromy": cls.monodromy},
            "geometry": geometry(t, spec).value,
            "genus_bounds": {"general": bounds.general, "braid": bounds.braid,
                             "symmetric": bounds.symmetric},
            "lens": list(lens) if lens is not None else None}
    flags = ", ".join(name for name in
                      ("strictly", "almost_strictly", "meridian", "singly", "monodromy")
                      if data["classes"][name])
    lines = ["%s, degree %d, exponents %s" % (t, spec.n, list(spec.exponents)),
             "classes: %s" % flags,
             "geometry: %s" % data["geometry"],
             "genus bounds: general %s, braid %s, symmetric %s"
             % (bounds.general, bounds.braid, bounds.symmetric),
             "lens space: %s" % ("L(%d, %d)" % lens if lens is not None else "not forced")]
    return 0, data, lines


def cmd_present(args):
    t = normalize(args.alpha, args.beta)
    if args.method == "minkus":
        pres = minkus_presentation(t, args.n)
    elif args.method == "mu3":
        pres = mu3_presentation(t, args.n, args.k)
    else:
        pres = takahashi_word(even_cf_expand(t), args.n).expand()
    data = {"link": str(t), "degree": args.n, "method": args.method}
    data.update(_presentation_payload(pres))
    lines = ["%s, degree %d, %s presentation" % (t, args.n, args.method),
             "generators: %d" % pres.generator_count]
    lines += ["  %s" % r for r in data["relators"]]
    return 0, data, lines


def cmd_homology(args):
    t = normalize(args.alpha, args.beta)
    if t.is_knot:
        spec = CoveringSpec(args.n, (args.k,))
    else:
        spec = CoveringSpec(args.n, (1, args.k))
    report = verify_consistency(t, spec)
    if args.routes != "all":
        wanted = set(args.routes.split(","))
        report["routes"] = [r for r in report["routes"] if r["route"] in wanted]
    lines = ["%s, degree %d, exponents %s" % (t, spec.n, list(spec.exponents))]
    for rec in report["routes"]:
        if "group" in rec:
            lines.append("%-12s %s" % (rec["route"] + ":", _group_str(rec["group"])))
        else:
            lines.append("%-12s order %s" % (rec["route"] + ":", rec["order"]))
    lines.append("agree: %s" % ("yes" if report["agree"] else "NO"))
    return (0 if report["agree"] else 1), report, lines


def cmd_gem(args):
    if args.cprime is None:
        params = LMParams(args.n, args.p, args.q, args.c)
        graph = build_lins_mandel(params)
        label = "G(%d, %d, %d, %d)" % (args.n, args.p, params.q, params.c)
    else:
        params = GLMParams(args.n, args.p, args.q, args.c, args.cprime)
        graph = build_generalized(params)
        label = "G(%d, %d, %d, %d, %d)" % (args.n, args.p, params.q, params.c, params.cprime)
    gem = is_gem(graph)
    data = {"graph": label, "vertices": graph.vertex_count,
            "gem": gem, "closed_form": gem_closed_form(params)}
    lines = ["%s: %d vertices" % (label, graph.vertex_count)]
    if not gem:
        lines.append("not a manifold: some 3-residue is not a 2-sphere")
        data["crystallization"] = None
        data["covering"] = None
        data["genus"] = None
        return 0, data, lines
    data["crystallization"] = is_crystallization(graph)
    lines.append("gem: yes, crystallization: %s"
                 % ("yes" if data["crystallization"] else "no"))
    covered = represented_covering(params)
    if covered is SPHERE:
        data["covering"] = "sphere"
        lines.append("represents: S^3")
    else:
        t, spec = covered
        data["covering"] = {"link": str(t), "alpha": t.alpha, "beta": t.beta,
                            "degree": spec.n, "exponents": list(spec.exponents)}
        lines.append("represents: %d-fold covering of %s, exponents %s"
                     % (spec.n, t, list(spec.exponents)))
    genus = {}
    for order in CYCLIC_ORDERS:
        key = "".join(map(str, order))
        try:
            genus[key] = heegaard_genus(graph, order)
        except NonIntegerGenus:
            genus[key] = None
    values = [v for v in genus.values() if v is not None]
    data["genus"] = {"by_order": genus, "min": min(values) if values else None}
    lines.append("heegaard genus by colour order: %s, min %s"
                 % (genus, data["genus"]["min"]))
    return 0, data, lines


def cmd_polyhedral(args):
    schema = build_minkus(args.n, args.k, args.p, args.q)
    counts = quotient_counts(schema)
    data = {"n": schema.n, "k": schema.k, "p": schema.p, "q": schema.q,
            "cells": {"t0": counts.t0, "t1": counts.t1, "t2": counts.t2,
                      "t3": counts.t3},
            "chi": counts.chi}
    lines = ["schema n=%d k=%d p=%d q=%d" % (schema.n, schema.k, schema.p, schema.q),
             "cells: %d vertices, %d edges, %d faces, %d balls"
             % (counts.t0, counts.t1, counts.t2, counts.t3),
             "euler characteristic: %d" % counts.chi]
    if counts.chi == 0:
        pres = schema_presentation(schema)
        data["presentation"] = _presentation_payload(pres)
        lines.append("generators: %d" % pres.generator_count)
        lines += ["  %s" % format_word(r) for r in pres.relators]
    else:
        data["presentation"] = None
        lines.append("not a manifold (chi != 0)")
    return 0, data, lines


def cmd_decompose(args):
    t = normalize(args.alpha, args.beta)
    result = decompose(t, args.n, args.k)
    data = result.to_json()
    data["link"] = str(t)
    inter = result.intermediate
    lines = ["%s, covering (%d; 1, %d)" % (t, args.n, args.k),
             "d = gcd(n, k) = %d" % result.d,
             "degrees: %d (meridian-cyclic) * %d (cyclic over one component)"
             % (result.upper_degree, result.lower_degree),
             "intermediate: L(%d, %d/%d), %d components, branching index %d"
             % (inter.d, inter.alpha1_over_beta.numerator,
                inter.alpha1_over_beta.denominator, inter.components,
                result.upper_degree),
             "linking number: %d" % inter.l,
             "base indices: %s" % (result.base_indices,)]
    return 0, data, lines


def cmd_verify(args):
    amax, nmax = args.sweep
    if amax < 2 or nmax < 2:
        raise ValueError("sweep bounds must be at least 2")
    checked = 0
    mismatches = []
    for alpha in range(2, amax + 1):
        for beta in range(1, alpha):
            if gcd(alpha, beta) != 1:
                continue
            t = normalize(alpha, beta)
            for n in range(2, nmax + 1):
                if t.is_knot:
                    specs = [CoveringSpec(n, (1,))]
                else:
                    specs = [CoveringSpec(n, (1, k)) for k in range(1, n)]
                for spec in specs:
                    report = verify_consistency(t, spec)
                    checked += 1
                    if not report["agree"]:
                        mismatches.append(report)
    data = {"alpha_max": amax, "n_max": nmax, "checked": checked,
            "mismatches": mismatches, "ok": not mismatches}
    lines = ["checked %d coverings (alpha <= %d, n <= %d)" % (checked, amax, nmax)]
    for rep in mismatches:
        lines.append("MISMATCH %s degree %d exponents %s: %s"
                     % (rep["link"], rep["degree"], rep["exponents"],
                        [(r["route"], r.get("group", r.get("order"))) for r in rep["routes"]]))
    lines.append("mismatches: %d" % len(mismatches))
    return (1 if mismatches else 0), data, lines


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bridgecovers",
        description="cyclic branched coverings of 2-bridge knots and links")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    # accepted before or after the verb; SUPPRESS keeps the subparser from
    # clobbering a value parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"),
                        default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", parents=[common], help="normal form, continued fractions, link data")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classify", parents=[common], help="covering taxonomy, geometry, genus bounds")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="+")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("present", parents=[common], help="fundamental group presentation")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", default=1)
    p.add_argument("--method", choices=("minkus", "mu3", "takahashi"),
                   default="minkus")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("homology", parents=[common], help="H_1 by every applicable route")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?", default=1)
    p.add_argument("--routes", default="all",
                   help="comma-separated route names, or 'all'")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("gem", parents=[common], help="coloured graph: gem test, covering, genus")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("c", type=int)
    p.add_argument("cprime", type=int, nargs="?", default=None)
    p.set_defaults(func=cmd_gem)

    p = sub.add_parser("polyhedral", parents=[common], help="face-paired ball schema")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_polyhedral)

    p = sub.add_parser("decompose", parents=[common], help="factor a singly-cyclic covering")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="sweep all cross-route invariants")
    p.add_argument("--sweep", type=int, nargs=2, default=(12, 8),
                   metavar=("ALPHA_MAX", "N_MAX"))
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, data, lines = args.func(args)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, "verb": args.verb}
        payload.update(data)
        print(json.dumps(payload))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
