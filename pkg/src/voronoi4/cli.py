"""Command-line front end.

Subcommands: census, stabilizer, euler, faces, suite, table, verify.
Output is deterministic: everything is sorted before it is emitted.
"""

import argparse
import csv
import io
import json
import sys

from . import cones, fibre3, ledger, rank2, stabilizers as st, torus
from .cones import ConeError, named_cone, registry_names
from .tatepoly import Coeff


def _load_cone(args):
    if args.cone:
        try:
            return named_cone(args.cone)
        except KeyError:
            pass
        sys.exit(f"error: unknown cone name {args.cone!r}; known: {', '.join(registry_names())}")
    if args.input:
        with open(args.input) as fh:
            try:
                return cones.Cone.from_json(json.load(fh))
            except (KeyError, ValueError) as exc:
                sys.exit(f"error: bad cone file /generators: {exc}")
    sys.exit("error: give --cone NAME or --input FILE")


def _emit(args, text_rows, json_obj, csv_rows=None):
    fmt = args.format
    if fmt == "json":
        out = json.dumps(json_obj, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        for row in csv_rows or text_rows:
            writer.writerow(row)
        out = buf.getvalue()
    else:
        out = "\n".join("  ".join(str(x) for x in row) for row in text_rows) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _row_sorted(row):
    return {str(d): str(m) for d, m in sorted(row.items())}


def cmd_census(args):
    perf = st.perfect_census()
    if args.fan == "perfect":
        counts = perf.counts_by_dim(range(1, 11))
        reps = perf.representatives()
    else:
        counts = st.voronoi_census_counts()
        reps = None
    rows = [("dimension", "orbit_count")]
    rows += [(d, c) for d, c in zip(range(1, 11), counts)]
    rows.append(("total", sum(counts)))
    _emit(args, rows, {"fan": args.fan, "counts": list(counts), "total": sum(counts)})


def cmd_stabilizer(args):
    c = _load_cone(args)
    grp = st.stabilizer(c)
    rows = [("order", grp.order), ("generators", len(grp.generators))]
    _emit(args, rows, grp.to_json())


def cmd_euler(args):
    c = _load_cone(args)
    p = torus.molien_ec(c)
    _emit(args, [(str(p),)], p.to_json())


def cmd_faces(args):
    c = _load_cone(args)
    try:
        lat = cones.faces(c)
    except ConeError as exc:
        sys.exit(f"error: {exc}")
    rows = [("dimension", "faces")]
    rows += [(d, len(lat.by_dim[d])) for d in sorted(lat.by_dim)]
    rows.append(("facets", lat.facet_count()))
    _emit(args, rows, {
        "f_vector": list(lat.f_vector()),
        "facets": lat.facet_count(),
    })


def cmd_suite(args):
    if args.name == "torus-rank-3":
        report = {}
        for s in sorted(fibre3.SUITES):
            alg = fibre3.algebra(s)
            inv = fibre3.invariants_bigraded(s)
            report[s] = {
                "invariants": {
                    f"{p},{q}": {
                        "dim": len(basis),
                        "basis": [alg.element_str(b) for b in basis],
                    }
                    for (p, q), basis in sorted(inv.items())
                },
                "d2_ranks": {f"{p},{q}": r for (p, q), r in sorted(fibre3.chern_d2(s).items())},
                "stratum_hc": fibre3.stratum_hc(s),
            }
        report["connecting_rank"] = fibre3.beta3_gysin_rank()
        rows = []
        for s in sorted(fibre3.SUITES):
            rows.append((s, "dims", str({k: v["dim"] for k, v in report[s]["invariants"].items()})))
            rows.append((s, "d2", str(report[s]["d2_ranks"])))
        rows.append(("connecting rank", report["connecting_rank"]))
        _emit(args, rows, report)
    else:
        surj, rank, n = rank2.delta2_surjective()
        report = {
            "square_table": {
                str(k): {
                    "dim": v["dim"],
                    "kappa_plus": v["kappa_plus"][0],
                    "kappa_minus": v["kappa_minus"][0],
                }
                for k, v in sorted(rank2.square_table().items()) if v["dim"]
            },
            "closed_fibre_dims": {str(k): v for k, v in sorted(rank2.discriminant_dims().items())},
            "connecting_surjective": surj,
            "fibre_pieces": [
                {"degree": d, "weight": w, "system": list(lam), "mult": m}
                for (d, w, lam, m) in rank2.fibre_local_systems()
            ],
        }
        rows = [("closed fibre dims", str(report["closed_fibre_dims"])),
                ("connecting surjective", surj)]
        _emit(args, rows, report)


def cmd_table(args):
    sym = {}
    if args.r != "symbolic":
        sym["r"] = int(args.r)
    if args.epsilon != "symbolic":
        sym["eps"] = int(args.epsilon)
    if args.name == "final":
        eA4 = None if args.eA4 == "symbolic" else int(args.eA4)
        row = ledger.final_betti(eA4_value=eA4)
    elif args.name == "perfect-low":
        row = ledger.igusa_betti_low()
    elif args.name == "rank4-perfect":
        row = ledger.beta4_perf_row()[0]
    elif args.name == "rank4":
        row = ledger.beta4_voronoi_row()[0]
    elif args.name == "divisor":
        _, row = ledger.exceptional_divisor()
    elif args.name == "rank3":
        row = ledger.beta3_row()[0]
    elif args.name == "rank2":
        row = ledger.beta2_row()[0]
    elif args.name == "rank1":
        row = ledger.beta1_row()[0]
    elif args.name == "jacobian":
        row = ledger.jbar4_row()[0]
    else:
        sys.exit(f"error: unknown table {args.name}")
    if sym:
        row = {d: m.substitute(**sym) for d, m in row.items()}
        row = {d: m for d, m in row.items() if m}
    rows = [("degree", "betti")] + [(d, str(m)) for d, m in sorted(row.items())]
    _emit(args, rows, {"table": args.name, "betti": _row_sorted(row)})


def cmd_manifest(args):
    _emit(args, [(e["constant"], e["source"]) for e in ledger.manifest()],
          ledger.manifest())


def cmd_verify(args):
    from .verify import run_all

    results = run_all(verbose=True)
    if all(ok for _, ok, _ in results):
        print("all acceptance criteria pass")
        return 0
    return 1


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="voronoi4",
        description="exact cone censuses, stabilizers and cohomology ledgers "
                    "for the genus-4 toroidal compactifications",
    )
    ap.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ap.add_argument("--out", help="write output to a file instead of stdout")
    ap.add_argument("--jobs", type=int, default=1,
                    help="parallel workers for per-cone work (output is "
                    "deterministic regardless)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="orbit counts per dimension")
    p.add_argument("--fan", choices=("perfect", "voronoi"), default="perfect")
    p.set_defaults(func=cmd_census)

    for name, fn, hl in (
        ("stabilizer", cmd_stabilizer, "stabilizer order and generators"),
        ("euler", cmd_euler, "Hodge-Euler polynomial of the orbit"),
        ("faces", cmd_faces, "face counts of a cone"),
    ):
        p = sub.add_parser(name, help=hl)
        p.add_argument("--cone", help="built-in cone name")
        p.add_argument("--input", help="cone JSON file")
        p.set_defaults(func=fn)

    p = sub.add_parser("suite", help="fibre computation reports")
    p.add_argument("name", choices=("torus-rank-3", "torus-rank-2"))
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("table", help="Betti tables")
    p.add_argument("name", choices=("final", "perfect-low", "rank4", "rank4-perfect",
                                    "divisor", "rank3", "rank2", "rank1", "jacobian"))
    p.add_argument("--eA4", default="symbolic")
    p.add_argument("--epsilon", default="symbolic", choices=("0", "1", "symbolic"))
    p.add_argument("--r", default="0", choices=("0", "symbolic"))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("manifest", help="imported constants with sources")
    p.set_defaults(func=cmd_manifest)

    p = sub.add_parser("verify", help="run the full acceptance battery")
    p.set_defaults(func=cmd_verify)

    args = ap.parse_args(argv)
    if args.jobs != 1:
        _set_parallelism(args.jobs)
    rc = args.func(args)
    return rc or 0


def _set_parallelism(jobs):
    # per-cone work is embarrassingly parallel; results are merged in input
    # order so output does not depend on the worker count
    from . import parallel

    parallel.JOBS = max(1, jobs)


if __name__ == "__main__":
    sys.exit(main())
