"""Command line interface.

Exit codes: 0 when the requested check verified (or output was produced),
1 when a verification is falsified, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, gram, poly, report, search, spectra
from .equiv import FULL, STRONG, are_equivalent, canonical_key, contains_up_to_equiv
from .graph import HGraph
from .ring import elements_of_norm_at_most, parse_element, ring_by_tag


def _load_graph(path: str) -> HGraph:
    with open(path) as fh:
        return HGraph.from_json(fh.read())


def _flags(strong: bool):
    return STRONG if strong else FULL


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    verdict = spectra.is_cyclotomic(g, cross_check=True)
    maximal = (g.is_connected() and verdict.is_cyclotomic
               and spectra.is_maximal(g))
    yn = lambda b: "yes" if b else "no"
    print(f"cyclotomic: {yn(verdict.is_cyclotomic)}, "
          f"maximal: {yn(maximal)}, A^2=4I: {yn(g.square_is_4I())}")
    if args.witness:
        print(json.dumps(verdict.to_json_obj(), indent=1))
    return 0 if verdict.is_cyclotomic else 1


def cmd_charpoly(args) -> int:
    g = _load_graph(args.graph)
    chi = g.charpoly()
    print(poly.format_poly(chi))
    if args.coeffs:
        print(list(chi.coeffs))
    return 0


def cmd_mahler(args) -> int:
    if args.poly:
        p = poly.parse_poly(args.poly)
        print(f"{poly.mahler_measure(p, args.tol):.12g}")
        return 0
    if not args.graph:
        print("mahler: need a graph file or --poly", file=sys.stderr)
        return 2
    g = _load_graph(args.graph)
    print(f"{spectra.mahler(g, args.tol):.12g}")
    return 0


def cmd_canon(args) -> int:
    g = _load_graph(args.graph)
    print(canonical_key(g, _flags(args.strong)).hex())
    return 0


def cmd_equiv(args) -> int:
    a, b = _load_graph(args.a), _load_graph(args.b)
    ok = are_equivalent(a, b, _flags(args.strong))
    print("equivalent" if ok else "not equivalent")
    return 0 if ok else 1


def cmd_contains(args) -> int:
    g, h = _load_graph(args.g), _load_graph(args.h)
    ok = contains_up_to_equiv(g, h, _flags(args.strong))
    print("contains" if ok else "does not contain")
    return 0 if ok else 1


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.list_names():
            print(name)
        return 0
    param = None
    if args.param:
        parts = args.param.split(",")
        param = int(parts[0]) if len(parts) == 1 else tuple(int(p) for p in parts)
    g = catalog.emit(args.name, param)
    if args.format == "dot":
        print(g.to_dot(args.name))
    else:
        print(g.to_json(indent=1))
    return 0


def cmd_export(args) -> int:
    g = _load_graph(args.graph)
    print(g.to_dot(args.graph))
    return 0


def _parse_weights(spec: str, ring):
    presets = {"units": 1, "norm2": 2, "norm4": 4, "all": 4}
    if spec in presets:
        return tuple(w for w in elements_of_norm_at_most(ring, 4)
                     if w.norm() <= presets[spec])
    return tuple(parse_element(tok, ring) for tok in spec.split(","))


def cmd_grow(args) -> int:
    ring = ring_by_tag(args.ring)
    exclusions = catalog.exclusion_list(args.exclusions) if args.exclusions else None
    if exclusions and exclusions.ring != ring:
        print("grow: exclusion list belongs to a different ring", file=sys.stderr)
        return 2
    weights = _parse_weights(args.weights, ring)
    charges = tuple(int(c) for c in args.charges.split(",")) if args.charges else (0,)
    seeds = tuple(_load_graph(p) for p in args.seed)
    config = search.GrowConfig(ring, charges, weights, exclusions,
                               args.max_n, seeds=seeds)
    checkpoint = None
    if args.out:
        import os
        os.makedirs(args.out, exist_ok=True)
        checkpoint = os.path.join(args.out, "grow_state.json")
        if not args.resume and os.path.exists(checkpoint):
            os.remove(checkpoint)
    rep = search.grow(
        config,
        progress=lambda n, c: print(f"n={n}: {c} new classes", flush=True),
        checkpoint=checkpoint, jobs=args.jobs)
    for n in sorted(rep.counts_by_n):
        print(f"classes with {n} vertices: {rep.counts_by_n[n]}")
    if args.out:
        report.write_grow_report(rep, args.out)
        print(f"report written to {args.out}")
    return 0


def cmd_verify(args) -> int:
    if args.what == "type2":
        table_name = args.table
        table = catalog.containment_table(table_name)
        rows = dict(table.rows)
        if args.excluded not in rows:
            print(f"{args.excluded} is not a row of {table_name}", file=sys.stderr)
            return 2
        config = search.full_config(table.ring, max_n=20)
        h = catalog.excluded(args.excluded)
        if h.ring != table.ring:
            h = h.promote(table.ring)
        maximals = [catalog.emit(m) for m in rows[args.excluded]]
        if args.drop:
            maximals = [m for name, m in zip(rows[args.excluded], maximals)
                        if name != args.drop]
        res = search.verify_type2(h, maximals, config)
        print(f"{args.excluded}: {'ok' if res.ok else 'FALSIFIED'} "
              f"({res.classes_checked} classes checked)")
        if res.counterexample is not None:
            print("counterexample:")
            print(res.counterexample.to_json(indent=1))
        return 0 if res.ok else 1

    if args.what == "tables":
        names = [args.table] if args.table else ["tab3", "tab4", "tab5", "tab6", "tab7"]
        ok = True
        for name in names:
            results = search.verify_table(
                name, progress=lambda row, good:
                print(f"{name} {row}: {'ok' if good else 'FALSIFIED'}", flush=True))
            ok = ok and all(r.ok for r in results.values())
        return 0 if ok else 1

    if args.what == "classification":
        ring = ring_by_tag(args.ring)
        rep = search.verify_classification(
            ring, args.max_n,
            progress=lambda n, c: print(f"n={n}: {c} new classes", flush=True))
        for n in sorted(rep.counts_by_n):
            print(f"classes with {n} vertices: {rep.counts_by_n[n]}")
        print(f"orphans: {len(rep.orphans)}")
        print(f"maximal catalog entries realized: {', '.join(rep.maximal_names_found)}")
        if args.out:
            report.write_classification_report(rep, args.out)
        return 0 if rep.ok else 1

    if args.what == "heavy-edges":
        rings = [ring_by_tag(args.ring)] if args.ring else \
            [ring_by_tag("Zw"), ring_by_tag("Zi")]
        ok = True
        for ring in rings:
            for label, res in search.verify_weight_heavy_edges(ring).items():
                print(f"{ring.tag} {label}: {'ok' if res.ok else 'FALSIFIED'}")
                ok = ok and res.ok
        return 0 if ok else 1

    return 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cyclograph",
        description="Exact tools for cyclotomic Hermitian matrix graphs "
                    "over Z, Z[i] and Z[omega].")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="cyclotomicity / maximality / A^2=4I")
    p.add_argument("graph")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial")
    p.add_argument("graph")
    p.add_argument("--coeffs", action="store_true")
    p.set_defaults(run=cmd_charpoly)

    p = sub.add_parser("mahler", help="Mahler measure of a graph or polynomial")
    p.add_argument("graph", nargs="?")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--poly", help="integer polynomial, e.g. 'z^10+z^9-...'")
    p.set_defaults(run=cmd_mahler)

    p = sub.add_parser("canon", help="canonical key (hex)")
    p.add_argument("graph")
    p.add_argument("--strong", action="store_true")
    p.set_defaults(run=cmd_canon)

    p = sub.add_parser("equiv", help="decide equivalence of two graphs")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--strong", action="store_true")
    p.set_defaults(run=cmd_equiv)

    p = sub.add_parser("contains", help="induced-subgraph containment up to equivalence")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--strong", action="store_true")
    p.set_defaults(run=cmd_contains)

    p = sub.add_parser("catalog", help="list or emit named catalog graphs")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("--param", help="family parameter k (or 'l,r')")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(run=cmd_catalog)

    p = sub.add_parser("grow", help="L-free growing process")
    p.add_argument("--ring", required=True, choices=["Z", "Zi", "Zw"])
    p.add_argument("--weights", default="units",
                   help="units|norm2|norm4|all or comma list like '1,-1,i,-i'")
    p.add_argument("--charges", default="0", help="comma list, e.g. '0,-1,1'")
    p.add_argument("--exclusions",
                   help="L1|L2|L3|Lw_uncharged|Lw_charged")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", action="append", default=[],
                   help="graph file used as a seed (repeatable)")
    p.add_argument("--out", help="report directory")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes; the report is identical for any value")
    p.set_defaults(run=cmd_grow)

    p = sub.add_parser("verify", help="re-derive classification facts")
    p.add_argument("what", choices=["type2", "classification", "heavy-edges", "tables"])
    p.add_argument("--excluded", help="excluded subgraph name (type2)")
    p.add_argument("--table", help="tab3|tab4|tab5|tab6|tab7")
    p.add_argument("--drop", help="omit one listed maximal (type2 falsification)")
    p.add_argument("--ring", help="Z|Zi|Zw")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--out", help="report directory")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("export", help="Graphviz DOT with the table arrowhead conventions")
    p.add_argument("graph")
    p.add_argument("--dot", action="store_true", default=True)
    p.set_defaults(run=cmd_export)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
