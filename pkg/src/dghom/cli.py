"""Command line surface.

Exit status: 0 = computed, 1 = input error, 2 = an unstable verdict was
requested with --require-stable.  Subcommands read category files (JSON),
"catalog:<name>" entries, or "-" for standard input; reports go to stdout as
tab-delimited tables, or to --out as a deterministic JSON document, with
optional matplotlib figures next to them via --figures DIR.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, catalog as cat_mod
from .chern import (
    UnsupportedInputError,
    ch,
    ch_diagonal,
    gluing_component_check,
    k0_representable,
    pairing_check,
    phi0,
    reconstruct_quiver,
)
from .cli_io import (
    AxiomError,
    SchemaError,
    bimodule_from_document,
    category_from_document,
    category_to_document,
    dump_report,
    load_json,
    parse_field,
    report_document,
)
from .constructions import glue
from .cyclic import (
    degeneration_check,
    delta,
    e1_page,
    hc,
    hc_minus,
    long_exact_check,
)
from .dgcore import (
    ComputationParams,
    DGCategory,
    drinfeld_quotient,
    matrix_amplification,
    opposite,
    tensor,
    validate,
)
from .exactla import InconsistentInputError
from .hochschild import (
    gluing_additivity_check,
    hh,
    hh_induced_map,
    identity_check,
)


class CliError(Exception):
    def __init__(self, message, status=1):
        super().__init__(message)
        self.status = status


# ---------------------------------------------------------------------------
# input plumbing


def resolve_category(spec: str, field):
    """Category from catalog:<name>, '-', or a JSON file path.  Returns
    (category, catalog_entry_or_None)."""
    if spec.startswith("catalog:"):
        entry = cat_mod.entry(spec.split(":", 1)[1], field)
        return entry.category, entry
    if spec == "-":
        doc = json.load(sys.stdin)
    else:
        if not os.path.exists(spec):
            raise CliError(f"no such file: {spec}")
        doc = load_json(spec)
    cat = category_from_document(doc, field)
    rep = validate(cat, degree_window=cat.truncation_window)
    if not rep.ok:
        raise CliError(f"category fails validation: {rep.summary()}")
    return cat, None


def make_params(args) -> ComputationParams:
    lo, hi = args.window
    return ComputationParams(L=args.max_bar_length, N=args.max_u_power,
                             lo=lo, hi=hi, field=args.field_obj,
                             seed=args.seed,
                             require_stable=args.require_stable)


def parse_window(s: str):
    try:
        lo, hi = s.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be lo:hi, got {s!r}")


def emit_category(args, cat: DGCategory) -> int:
    doc = category_to_document(cat)
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def emit_report(args, command: str, subject, params, results,
                figure_fns=(), status=0) -> int:
    doc = report_document(command, subject, params, results)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dump_report(doc))
    else:
        render_human(command, results)
    if getattr(args, "figures", None):
        os.makedirs(args.figures, exist_ok=True)
        for fn in figure_fns:
            fn(args.figures)
    return status


def render_human(command: str, results: dict):
    print(f"# dghom {command}")
    _render_value(results, indent="")


def _render_value(value, indent):
    if isinstance(value, dict):
        for k in value:
            v = value[k]
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                print(f"{indent}{k}:")
                _render_value(v, indent + "  ")
            else:
                print(f"{indent}{k}\t{_flat(v)}")
    elif isinstance(value, list):
        for v in value:
            _render_value(v, indent)
    else:
        print(f"{indent}{_flat(value)}")


def _is_flat(v):
    if isinstance(v, dict):
        return all(not isinstance(x, (dict, list)) for x in v.values())
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return True


def _flat(v):
    if isinstance(v, dict):
        return "\t".join(f"{k}={_scalar(x)}" for k, x in v.items())
    if isinstance(v, list):
        return "\t".join(_scalar(x) for x in v)
    return _scalar(v)


def _scalar(v):
    from .exactla import SparseMatrix
    from fractions import Fraction

    if isinstance(v, SparseMatrix):
        ent = ",".join(f"({r},{c})={val}" for (r, c), val in sorted(v.entries.items()))
        return f"matrix[{v.rows}x{v.cols}]{{{ent}}}"
    if isinstance(v, Fraction):
        return str(v)
    return str(v)


def require_char_zero(args, what):
    if args.field_obj.char != 0:
        raise CliError(
            f"{what} is a conjecture-level verdict and requires --field q; "
            "prime fields are a fast pre-check for dimensions only"
        )


def _maybe_unstable_exit(args, unstable: bool) -> int:
    if unstable and args.require_stable:
        return 2
    return 0


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args):
    try:
        cat, _ = resolve_via_doc_for_check(args)
    except SchemaError as e:
        print(f"schema error at {e.location}: {e}", file=sys.stderr)
        return 1
    rep = validate(cat, degree_window=cat.truncation_window)
    results = {"valid": rep.ok, "problems": rep.problems}
    emit_report(args, "check", args.file, make_params(args), results)
    return 0 if rep.ok else 1


def resolve_via_doc_for_check(args):
    spec = args.file
    if spec.startswith("catalog:"):
        entry = cat_mod.entry(spec.split(":", 1)[1], args.field_obj)
        return entry.category, entry
    doc = json.load(sys.stdin) if spec == "-" else load_json(spec)
    return category_from_document(doc, args.field_obj), None


def _dims_report(pres, params):
    return {
        "dims": {n: h.dim for n, h in sorted(pres.degrees.items())},
        "stable": {n: h.stable for n, h in sorted(pres.degrees.items())},
        "unstable_degrees": pres.unstable_degrees(),
    }


def _dims_figure(pres, title, name):
    def fn(outdir):
        from . import figures
        figures.dims_bar({n: h.dim for n, h in pres.degrees.items()},
                         {n: h.stable for n, h in pres.degrees.items()},
                         title, os.path.join(outdir, name))
    return fn


def cmd_hh(args):
    cat, entry = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    pres = hh(cat, params)
    results = _dims_report(pres, params)
    status = _maybe_unstable_exit(args, bool(results["unstable_degrees"]))
    return emit_report(args, "hh", args.file, params, results,
                       [_dims_figure(pres, f"HH of {cat.name or args.file}", "hh_dims.png")],
                       status)


def cmd_hc(args):
    cat, _ = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    pres = hc(cat, params)
    results = _dims_report(pres, params)
    status = _maybe_unstable_exit(args, bool(results["unstable_degrees"]))
    return emit_report(args, "hc", args.file, params, results,
                       [_dims_figure(pres, f"HC of {cat.name or args.file}", "hc_dims.png")],
                       status)


def cmd_hc_minus(args):
    cat, _ = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    pres = hc_minus(cat, params)
    results = _dims_report(pres, params)
    status = _maybe_unstable_exit(args, bool(results["unstable_degrees"]))
    return emit_report(args, "hc-minus", args.file, params, results,
                       [_dims_figure(pres, f"HC^- of {cat.name or args.file}", "hc_minus_dims.png")],
                       status)


def cmd_delta(args):
    require_char_zero(args, "delta")
    cat, _ = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    verdicts = delta(cat, params)
    results = {"verdicts": {
        v.degree: {
            "verdict": v.verdict,
            "hh_dim": v.hh_dim,
            "target_dim": v.target_dim,
            "matrix": v.matrix,
            "note": v.note,
        } for v in verdicts
    }}
    unstable = any(v.verdict == "unstable" for v in verdicts)

    def fig(outdir):
        from . import figures
        figures.delta_ranks(verdicts, f"delta of {cat.name or args.file}",
                            os.path.join(outdir, "delta_ranks.png"))

    return emit_report(args, "delta", args.file, params, results, [fig],
                       _maybe_unstable_exit(args, unstable))


def cmd_degeneration(args):
    require_char_zero(args, "degeneration")
    cat, _ = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    results = degeneration_check(cat, params)
    unstable = results["verdict"] == "unstable"
    return emit_report(args, "degeneration", args.file, params, results, [],
                       _maybe_unstable_exit(args, unstable))


def cmd_e1(args):
    cat, _ = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    page = e1_page(cat, params)
    results = {
        "table": page["table"],
        "d1_ranks": {n: (info.get("rank") if info.get("stable") else "unstable")
                     for n, info in page["d1"].items()},
        "delta_verdicts": page["delta_verdicts"],
        "agreement": page["agreement"],
        "discrepancies": page["discrepancies"],
    }

    def fig(outdir):
        from . import figures
        figures.e1_table(page["table"], f"E1 of {cat.name or args.file}",
                         os.path.join(outdir, "e1_table.png"))

    return emit_report(args, "e1", args.file, params, results, [fig])


def cmd_kunneth(args):
    from .hochschild import kunneth_check

    a, _ = resolve_category(args.fileA, args.field_obj)
    b, _ = resolve_category(args.fileB, args.field_obj)
    params = make_params(args)
    results = kunneth_check(a, b, params)
    return emit_report(args, "kunneth", [args.fileA, args.fileB], params, results)


def cmd_glue(args):
    a, _ = resolve_category(args.fileA, args.field_obj)
    b, _ = resolve_category(args.fileB, args.field_obj)
    mdoc = load_json(args.bimodule)
    m = bimodule_from_document(mdoc, a, b)
    glued = glue(a, b, m)
    rep = validate(glued.category)
    if not rep.ok:
        raise CliError(f"glued category fails validation: {rep.summary()}")
    return emit_category(args, glued.category)


def cmd_tensor(args):
    a, _ = resolve_category(args.fileA, args.field_obj)
    b, _ = resolve_category(args.fileB, args.field_obj)
    return emit_category(args, tensor(a, b))


def cmd_op(args):
    cat, _ = resolve_category(args.file, args.field_obj)
    return emit_category(args, opposite(cat))


def cmd_quotient(args):
    cat, _ = resolve_category(args.file, args.field_obj)
    lo, hi = args.window
    quot = drinfeld_quotient(cat, args.object, (lo, hi))
    return emit_category(args, quot)


def _k0_from_args(args, cat):
    if args.k0_class == "representable" and args.object:
        return k0_representable(cat, args.object)
    doc = load_json(args.class_file) if args.class_file else None
    if doc is None:
        raise CliError("need --class-file with a k0_classes section, or "
                       "--class representable --object <id>")
    for entry in doc.get("k0_classes", []):
        if entry.get("name") == args.k0_class:
            return k0_class_from_document(entry, cat)
    raise CliError(f"class {args.k0_class!r} not found in {args.class_file}")


def k0_class_from_document(entry: dict, cat: DGCategory):
    from .chern import K0Class
    from .cli_io import parse_rational

    fld = cat.field
    summands = []
    for i, s in enumerate(entry.get("summands", [])):
        objects = tuple(s.get("objects", ()))
        for o in objects:
            if o not in cat.objects:
                raise SchemaError(f"k0_classes.summands[{i}]", f"unknown object {o}")
        idem = {}
        mat = s.get("idempotent", [])
        for r, row in enumerate(mat):
            for c_, cell in enumerate(row):
                combo = {}
                sp = cat.space(objects[c_], objects[r])
                for t in cell:
                    lab = t.get("label")
                    if lab not in sp.degree:
                        raise SchemaError(
                            f"k0_classes.summands[{i}].idempotent[{r}][{c_}]",
                            f"label {lab} not in hom({objects[c_]},{objects[r]})",
                        )
                    cv = parse_rational(t.get("coeff"), "k0 idempotent coeff")
                    if cv:
                        combo[lab] = fld.of(cv)
                if combo:
                    idem[(r, c_)] = combo
        summands.append((int(s.get("shift", 0)), objects, idem))
    return K0Class(cat, summands, name=entry.get("name", ""))


def cmd_chern(args):
    cat, entry = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    x = _k0_from_args(args, cat)
    chain = ch(x)
    pres = hh(cat, params)
    h0 = pres.degrees[0]
    if chain:
        _, vec = pres.complex.vector(chain)
    else:
        vec = {}
    coords = h0.express(vec)
    results = {
        "chain": {f"({w.objects[0]}:{w.head})": c for w, c in sorted(chain.items())},
        "hh0_coordinates": coords,
        "hh0_dim": h0.dim,
        "hh0_stable": h0.stable,
    }
    return emit_report(args, "chern", args.file, params, results,
                       status=_maybe_unstable_exit(args, not h0.stable))


def cmd_pairing(args):
    require_char_zero(args, "pairing")
    cat, entry = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    quiver = entry.quiver if entry and entry.quiver else reconstruct_quiver(cat)
    r = pairing_check(cat, quiver, params)
    results = {"invertible": r["invertible"], "rank": r["rank"],
               "dim": r["dim"], "matrix": r["matrix"]}
    return emit_report(args, "pairing", args.file, params, results)


def cmd_phi0(args):
    require_char_zero(args, "phi0")
    b, entry_b = resolve_category(args.fileB, args.field_obj)
    c, entry_c = resolve_category(args.fileC, args.field_obj)
    params = make_params(args)
    if args.k0_class == "diagonal":
        # the diagonal class of A lives over A (x) op(A): require C = op(B)
        from .dgcore import opposite as _op

        cop = _op(b)
        if not _same_shape(cop, c):
            raise CliError("--class diagonal needs fileC to be the opposite of "
                           "fileB (use `dghom op` to produce it)")
        quiver = entry_b.quiver if entry_b and entry_b.quiver else reconstruct_quiver(b)
        chain, _, _ = ch_diagonal(b, quiver, params)
        r = phi0(chain, b, cop, params)
    else:
        E = tensor(b, c)
        x = _k0_from_args(args, E)
        r = phi0(ch(x), b, c, params)
    return emit_report(args, "phi0", [args.fileB, args.fileC], params, r,
                       status=_maybe_unstable_exit(args, r["verdict"] == "unstable"))


def _same_shape(a: DGCategory, b: DGCategory) -> bool:
    if a.objects != b.objects or a.ids != b.ids:
        return False
    if set(a.hom) != set(b.hom):
        return False
    for key, sp in a.hom.items():
        sp2 = b.hom[key]
        if sp.labels != sp2.labels or sp.degree != sp2.degree:
            return False
    return a.compose == b.compose and a.d == b.d


def cmd_catalog(args):
    if args.name == "list":
        for nm in cat_mod.catalog_names():
            print(nm)
        return 0
    entry = cat_mod.entry(args.name, args.field_obj)
    return emit_category(args, entry.category)


def cmd_identities(args):
    cat, _ = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    results = identity_check(cat, params.L)
    results["witness"] = str(results["witness"]) if results["witness"] else None
    return emit_report(args, "identities", args.file, params, results,
                       status=0 if results["ok"] else 1)


def cmd_les(args):
    cat, _ = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    r = long_exact_check(cat, params)
    results = {"ok": r["ok"], "evaluated": r["evaluated_count"],
               "failures": r["failures"],
               "nodes": [{"degree": n["degree"],
                          "evaluated": n["evaluated"],
                          "stable": n["stable"]} for n in r["nodes"]]}
    return emit_report(args, "les", args.file, params, results,
                       status=0 if r["ok"] else 1)


def cmd_morita(args):
    cat, _ = resolve_category(args.file, args.field_obj)
    params = make_params(args)
    amp, incl = matrix_amplification(cat, args.copies)
    pres_a, pres_m = hh(cat, params), hh(amp, params)
    hcm_a, hcm_m = hc_minus(cat, params), hc_minus(amp, params)

    def compare(p1, p2):
        rows = {}
        for n in range(params.lo, params.hi + 1):
            h1, h2 = p1.degrees[n], p2.degrees[n]
            both = h1.stable and h2.stable
            rows[n] = {"lhs": h1.dim, "rhs": h2.dim,
                       "mutually_stable": both,
                       "match": (h1.dim == h2.dim) if both else None}
        rows["agree"] = all(r["match"] for r in rows.values()
                            if isinstance(r, dict) and r["mutually_stable"])
        return rows

    ind = hh_induced_map(incl, params, source_hh=pres_a, target_hh=pres_m)
    deg0 = ind.get(0, {})
    corner_iso = bool(deg0.get("stable")) and deg0.get("rank") == deg0.get(
        "source_dim") == deg0.get("target_dim")
    results = {
        "hh": compare(pres_a, pres_m),
        "hc_minus": compare(hcm_a, hcm_m),
        "corner_hh0": {"rank": deg0.get("rank"), "source_dim": deg0.get("source_dim"),
                       "target_dim": deg0.get("target_dim"), "iso": corner_iso},
        "ok": compare(pres_a, pres_m)["agree"] and compare(hcm_a, hcm_m)["agree"]
              and corner_iso,
    }
    return emit_report(args, "morita", args.file, params, results,
                       status=0 if results["ok"] else 1)


def cmd_additivity(args):
    a, _ = resolve_category(args.fileA, args.field_obj)
    b, _ = resolve_category(args.fileB, args.field_obj)
    m = bimodule_from_document(load_json(args.bimodule), a, b)
    params = make_params(args)
    results = gluing_additivity_check(a, b, m, params)
    return emit_report(args, "additivity", [args.fileA, args.fileB], params,
                       results, status=0 if results["ok"] else 1)


def cmd_glue_components(args):
    b, entry_b = resolve_category(args.fileB, args.field_obj)
    c, entry_c = resolve_category(args.fileC, args.field_obj)
    cop = opposite(c)
    m = bimodule_from_document(load_json(args.bimodule), b, cop)
    params = make_params(args)
    qb = entry_b.quiver if entry_b and entry_b.quiver else reconstruct_quiver(b)
    qc = entry_c.quiver if entry_c and entry_c.quiver else reconstruct_quiver(c)
    r = gluing_component_check(b, c, m, qb, qc, params)
    results = {"ok": r["ok"], "match": r["match"],
               "components": {k: {f"({u},{v})": cv for (u, v), cv in comp.items()}
                              for k, comp in r["components"].items()},
               "resolution_levels": r["resolution_levels"]}
    return emit_report(args, "glue-components", [args.fileB, args.fileC], params,
                       results, status=0 if r["ok"] else 1)


def cmd_suite(args):
    from .suite import run_suite

    outdir = args.out or "reports"
    ledger = run_suite(make_params(args), outdir,
                       figures_dir=args.figures)
    ok = all(e["verdict"] == "pass" for e in ledger["entries"])
    for e in ledger["entries"]:
        print(f"[{'PASS' if e['verdict'] == 'pass' else 'FAIL'}] {e['id']}: {e['statement']}")
    print(f"ledger written to {outdir}/ledger.json")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser():
    top = argparse.ArgumentParser(
        prog="dghom",
        description="Hochschild / cyclic homology workbench for small DG "
                    "categories (exact arithmetic).",
    )
    top.add_argument("--version", action="version", version=f"dghom {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-bar-length", type=int, default=6, metavar="L",
                        help="bar length bound (default 6)")
    common.add_argument("--max-u-power", type=int, default=4, metavar="N",
                        help="u-power bound (default 4)")
    common.add_argument("--window", type=parse_window, default=(-4, 6),
                        metavar="LO:HI", help="degree window (default -4:6)")
    common.add_argument("--field", default="q", metavar="q|fp:<p>",
                        help="coefficient field (default q)")
    common.add_argument("--out", default=None, metavar="PATH",
                        help="write a JSON report/document instead of stdout text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--require-stable", action="store_true",
                        help="exit 2 when a requested verdict is unstable")
    common.add_argument("--figures", default=None, metavar="DIR",
                        help="render matplotlib figures into DIR")

    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, **extra):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("check", cmd_check, "validate a category file")
    p.add_argument("file")
    for nm, fn, hlp in [("hh", cmd_hh, "Hochschild homology dimensions"),
                        ("hc", cmd_hc, "cyclic homology dimensions"),
                        ("hc-minus", cmd_hc_minus, "negative cyclic homology dimensions"),
                        ("delta", cmd_delta, "boundary map verdicts per degree"),
                        ("degeneration", cmd_degeneration, "degeneration verdict"),
                        ("e1", cmd_e1, "E1 page and d1 ranks"),
                        ("identities", cmd_identities, "mixed complex identity check"),
                        ("les", cmd_les, "long exact sequence rank identities")]:
        p = add(nm, fn, hlp)
        p.add_argument("file")
    p = add("kunneth", cmd_kunneth, "Kunneth dimension check for a tensor product")
    p.add_argument("fileA")
    p.add_argument("fileB")
    p = add("glue", cmd_glue, "glue two categories along a bimodule")
    p.add_argument("fileA")
    p.add_argument("fileB")
    p.add_argument("bimodule")
    p = add("tensor", cmd_tensor, "tensor product category")
    p.add_argument("fileA")
    p.add_argument("fileB")
    p = add("op", cmd_op, "opposite category")
    p.add_argument("file")
    p = add("quotient", cmd_quotient, "Drinfeld quotient killing one object")
    p.add_argument("file")
    p.add_argument("--object", required=True)
    p = add("chern", cmd_chern, "Chern character of a K0 class")
    p.add_argument("file")
    p.add_argument("--class", dest="k0_class", required=True,
                   help="'representable' (with --object) or a name in --class-file")
    p.add_argument("--object", default=None)
    p.add_argument("--class-file", default=None)
    p = add("pairing", cmd_pairing, "invertibility of the diagonal-class pairing")
    p.add_argument("file")
    p = add("phi0", cmd_phi0, "phi_0 of a K0 class over a tensor product")
    p.add_argument("fileB")
    p.add_argument("fileC")
    p.add_argument("--class", dest="k0_class", required=True,
                   help="'diagonal' or a name in --class-file")
    p.add_argument("--class-file", default=None)
    p = add("morita", cmd_morita, "Morita invariance against a matrix amplification")
    p.add_argument("file")
    p.add_argument("--copies", type=int, default=2)
    p = add("additivity", cmd_additivity, "gluing additivity block check")
    p.add_argument("fileA")
    p.add_argument("fileB")
    p.add_argument("bimodule")
    p = add("glue-components", cmd_glue_components,
            "component bookkeeping of the glued diagonal class")
    p.add_argument("fileB")
    p.add_argument("fileC")
    p.add_argument("bimodule")
    p = add("catalog", cmd_catalog, "print a built-in category (or 'list')")
    p.add_argument("name")
    add("suite", cmd_suite, "run the acceptance suite and write the evidence ledger")
    return top


def _merge_window_values(argv):
    """Let `--window -4:6` work even though the value starts with a dash."""
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a == "--window" and i + 1 < len(argv) and ":" in argv[i + 1]:
            out.append(f"--window={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_window_values(list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse prints usage itself; unknown subcommands/flags are input
        # errors (status 1), --help stays 0
        return 0 if e.code in (0, None) else 1
    try:
        args.field_obj = parse_field(args.field)
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.status
    except AxiomError as e:
        print(f"axiom error: {e}", file=sys.stderr)
        return 1
    except SchemaError as e:
        print(f"schema error: {e}", file=sys.stderr)
        return 1
    except (InconsistentInputError, UnsupportedInputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as e:
        print(f"error: invalid JSON: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
