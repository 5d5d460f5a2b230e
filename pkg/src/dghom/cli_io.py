"""Interchange file format (JSON), report documents, and loaders.

Rationals travel as canonical strings: an integer "n", or "p/q" in lowest
terms with q > 1 (so "3/1", "2/4", "+3" and "1/-2" are all rejected).
Reports are serialized with sorted keys and no timestamps, so identical
inputs, parameters and seeds produce byte-identical documents.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from . import __version__
from .dgcore import (
    ComputationParams,
    DGBimodule,
    DGCategory,
    GradedBasisSpace,
    validate,
)
from .exactla import QQ, InconsistentInputError, PrimeField, SparseMatrix

CATEGORY_FORMAT = "dg-category/1"
BIMODULE_FORMAT = "dg-bimodule/1"
REPORT_FORMAT = "dg-report/1"


class SchemaError(InconsistentInputError):
    """Structured load failure; .location points at the offending key."""

    def __init__(self, location, message):
        super().__init__(f"{location}: {message}")
        self.location = location


class AxiomError(InconsistentInputError):
    def __init__(self, report):
        super().__init__(report.summary())
        self.report = report


_RATIONAL_RE = re.compile(r"^-?(0|[1-9][0-9]*)(/([1-9][0-9]*))?$")


def parse_rational(s, location="rational"):
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise SchemaError(location, f"not a canonical rational string: {s!r}")
    v = Fraction(s)
    if format_rational(v) != s:
        raise SchemaError(location, f"non-canonical rational {s!r} (want {format_rational(v)!r})")
    return v


def format_rational(v: Fraction) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def parse_field(spec: str):
    if spec in ("q", "Q", "qq", "QQ"):
        return QQ
    m = re.match(r"^fp:(\d+)$", spec)
    if m:
        try:
            return PrimeField(int(m.group(1)))
        except InconsistentInputError as e:
            raise SchemaError("field", str(e))
    raise SchemaError("field", f"unknown field spec {spec!r} (use q or fp:<p>)")


def field_name(field) -> str:
    return "q" if field.char == 0 else f"fp:{field.char}"


# ---------------------------------------------------------------------------
# category documents


def category_to_document(c: DGCategory) -> dict:
    doc = {
        "format": CATEGORY_FORMAT,
        "name": c.name or "",
        "objects": list(c.objects),
        "id": {x: c.ids[x] for x in c.objects},
        "hom": [],
        "d": [],
        "compose": [],
    }
    if c.truncation_window is not None:
        doc["degree_window"] = list(c.truncation_window)
    for (s, t) in sorted(c.hom, key=lambda p: (c.objects.index(p[0]), c.objects.index(p[1]))):
        sp = c.hom[(s, t)]
        doc["hom"].append({
            "src": s, "tgt": t,
            "basis": [{"label": l, "degree": sp.degree[l]} for l in sp.labels],
        })
        table = c.d.get((s, t), {})
        if any(table.get(l) for l in sp.labels):
            idx = {l: i for i, l in enumerate(sp.labels)}
            mat = [[format_rational(Fraction(0))] * sp.dim for _ in range(sp.dim)]
            for l, img in table.items():
                for l2, cv in img.items():
                    mat[idx[l2]][idx[l]] = format_rational(cv)
            doc["d"].append({"src": s, "tgt": t, "matrix": mat})
    for (x, y, z) in sorted(c.compose, key=lambda k: (c.objects.index(k[0]),
                                                      c.objects.index(k[1]),
                                                      c.objects.index(k[2]))):
        table = c.compose[(x, y, z)]
        entries = []
        for (g, f_) in sorted(table):
            img = table[(g, f_)]
            if not img:
                continue
            entries.append({
                "g": g, "f": f_,
                "result": [{"label": l, "coeff": format_rational(cv)}
                           for l, cv in sorted(img.items())],
            })
        if entries:
            doc["compose"].append({"x": x, "y": y, "z": z, "table": entries})
    return doc


def category_from_document(doc: dict, field=QQ) -> DGCategory:
    if doc.get("format") != CATEGORY_FORMAT:
        raise SchemaError("format", f"expected {CATEGORY_FORMAT}")
    objects = doc.get("objects")
    if not isinstance(objects, list) or not all(isinstance(o, str) for o in objects):
        raise SchemaError("objects", "must be a list of strings")
    if len(set(objects)) != len(objects):
        raise SchemaError("objects", "duplicate object names")
    objset = set(objects)
    hom = {}
    for i, entry in enumerate(doc.get("hom", [])):
        loc = f"hom[{i}]"
        s, t = entry.get("src"), entry.get("tgt")
        if s not in objset or t not in objset:
            raise SchemaError(loc, f"unknown object in ({s},{t})")
        labels, degs = [], {}
        for j, b in enumerate(entry.get("basis", [])):
            lab, dg = b.get("label"), b.get("degree")
            if not isinstance(lab, str) or not isinstance(dg, int):
                raise SchemaError(f"{loc}.basis[{j}]", "need string label and integer degree")
            if lab in degs:
                raise SchemaError(f"{loc}.basis[{j}]", f"duplicate label {lab}")
            labels.append(lab)
            degs[lab] = dg
        if (s, t) in hom:
            raise SchemaError(loc, f"duplicate hom block for ({s},{t})")
        if labels:
            hom[(s, t)] = GradedBasisSpace(tuple(labels), degs)
    ids = {}
    id_map = doc.get("id", {})
    for x in objects:
        lab = id_map.get(x)
        sp = hom.get((x, x))
        if lab is None or sp is None or lab not in sp.degree:
            raise SchemaError(f"id.{x}", "identity label missing from hom basis")
        ids[x] = lab
    d = {}
    for i, entry in enumerate(doc.get("d", [])):
        loc = f"d[{i}]"
        s, t = entry.get("src"), entry.get("tgt")
        sp = hom.get((s, t))
        if sp is None:
            raise SchemaError(loc, f"d block for empty hom ({s},{t})")
        mat = entry.get("matrix")
        if (not isinstance(mat, list) or len(mat) != sp.dim
                or any(len(row) != sp.dim for row in mat)):
            raise SchemaError(loc, f"matrix must be {sp.dim}x{sp.dim}")
        table = {}
        for jcol, lab in enumerate(sp.labels):
            img = {}
            for irow, lab2 in enumerate(sp.labels):
                cv = parse_rational(mat[irow][jcol], f"{loc}.matrix[{irow}][{jcol}]")
                if cv:
                    img[lab2] = field.of(cv)
            if img:
                table[lab] = img
        if table:
            d[(s, t)] = table
    compose = {}
    for i, entry in enumerate(doc.get("compose", [])):
        loc = f"compose[{i}]"
        x, y, z = entry.get("x"), entry.get("y"), entry.get("z")
        spf, spg, spr = hom.get((x, y)), hom.get((y, z)), hom.get((x, z))
        if spf is None or spg is None:
            raise SchemaError(loc, f"compose block over empty hom ({x},{y},{z})")
        table = {}
        for j, cell in enumerate(entry.get("table", [])):
            g, f_ = cell.get("g"), cell.get("f")
            if g not in spg.degree or f_ not in spf.degree:
                raise SchemaError(f"{loc}.table[{j}]", f"unknown pair ({g},{f_})")
            img = {}
            for kk, r in enumerate(cell.get("result", [])):
                lab = r.get("label")
                if spr is None or lab not in spr.degree:
                    raise SchemaError(f"{loc}.table[{j}].result[{kk}]",
                                      f"unknown target label {lab}")
                cv = parse_rational(r.get("coeff"), f"{loc}.table[{j}].result[{kk}].coeff")
                if cv:
                    img[lab] = field.of(cv)
            if img:
                table[(g, f_)] = img
        compose[(x, y, z)] = table
    win = doc.get("degree_window")
    if win is not None and (not isinstance(win, list) or len(win) != 2
                            or not all(isinstance(v, int) for v in win)):
        raise SchemaError("degree_window", "must be [lo, hi] integers")
    return DGCategory(tuple(objects), hom, d, compose, ids, field,
                      name=doc.get("name", ""),
                      truncation_window=tuple(win) if win else None)


def load_category(path_or_doc, field=QQ, check_axioms=True) -> DGCategory:
    doc = load_json(path_or_doc)
    cat = category_from_document(doc, field)
    if check_axioms:
        rep = validate(cat, degree_window=cat.truncation_window)
        if not rep.ok:
            raise AxiomError(rep)
    return cat


def load_json(path_or_doc):
    if isinstance(path_or_doc, dict):
        return path_or_doc
    with open(path_or_doc) as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# bimodule documents


def bimodule_to_document(m: DGBimodule) -> dict:
    doc = {
        "format": BIMODULE_FORMAT,
        "name": m.name or "",
        "spaces": [],
        "d": [],
        "a_act": [],
        "b_act": [],
    }
    for (x, u) in sorted(m.spaces):
        sp = m.spaces[(x, u)]
        doc["spaces"].append({
            "src": x, "tgt": u,
            "basis": [{"label": l, "degree": sp.degree[l]} for l in sp.labels],
        })
        table = m.d.get((x, u), {})
        if any(table.get(l) for l in sp.labels):
            idx = {l: i for i, l in enumerate(sp.labels)}
            mat = [["0"] * sp.dim for _ in range(sp.dim)]
            for l, img in table.items():
                for l2, cv in img.items():
                    mat[idx[l2]][idx[l]] = format_rational(cv)
            doc["d"].append({"src": x, "tgt": u, "matrix": mat})
    for (x2, x, u) in sorted(m.a_act):
        entries = []
        for (fl, ml) in sorted(m.a_act[(x2, x, u)]):
            img = m.a_act[(x2, x, u)][(fl, ml)]
            if img:
                entries.append({"f": fl, "m": ml,
                                "result": [{"label": l, "coeff": format_rational(cv)}
                                           for l, cv in sorted(img.items())]})
        if entries:
            doc["a_act"].append({"src2": x2, "src": x, "tgt": u, "table": entries})
    for (x, u, u2) in sorted(m.b_act):
        entries = []
        for (gl, ml) in sorted(m.b_act[(x, u, u2)]):
            img = m.b_act[(x, u, u2)][(gl, ml)]
            if img:
                entries.append({"g": gl, "m": ml,
                                "result": [{"label": l, "coeff": format_rational(cv)}
                                           for l, cv in sorted(img.items())]})
        if entries:
            doc["b_act"].append({"src": x, "tgt": u, "tgt2": u2, "table": entries})
    return doc


def bimodule_from_document(doc: dict, a: DGCategory, b: DGCategory) -> DGBimodule:
    if doc.get("format") != BIMODULE_FORMAT:
        raise SchemaError("format", f"expected {BIMODULE_FORMAT}")
    field = a.field
    spaces, d, a_act, b_act = {}, {}, {}, {}
    for i, entry in enumerate(doc.get("spaces", [])):
        loc = f"spaces[{i}]"
        x, u = entry.get("src"), entry.get("tgt")
        if x not in a.objects:
            raise SchemaError(loc, f"unknown A-object {x}")
        if u not in b.objects:
            raise SchemaError(loc, f"unknown B-object {u}")
        labels, degs = [], {}
        for bb in entry.get("basis", []):
            labels.append(bb["label"])
            degs[bb["label"]] = bb["degree"]
        spaces[(x, u)] = GradedBasisSpace(tuple(labels), degs)
    for i, entry in enumerate(doc.get("d", [])):
        loc = f"d[{i}]"
        x, u = entry.get("src"), entry.get("tgt")
        sp = spaces.get((x, u))
        if sp is None:
            raise SchemaError(loc, "d block for empty space")
        table = {}
        for jcol, lab in enumerate(sp.labels):
            img = {}
            for irow, lab2 in enumerate(sp.labels):
                cv = parse_rational(entry["matrix"][irow][jcol], loc)
                if cv:
                    img[lab2] = field.of(cv)
            if img:
                table[lab] = img
        if table:
            d[(x, u)] = table
    for i, entry in enumerate(doc.get("a_act", [])):
        loc = f"a_act[{i}]"
        x2, x, u = entry.get("src2"), entry.get("src"), entry.get("tgt")
        table = {}
        for cell in entry.get("table", []):
            img = {r["label"]: field.of(parse_rational(r["coeff"], loc))
                   for r in cell.get("result", [])}
            img = {l: cv for l, cv in img.items() if cv}
            if img:
                table[(cell["f"], cell["m"])] = img
        if table:
            a_act[(x2, x, u)] = table
    for i, entry in enumerate(doc.get("b_act", [])):
        loc = f"b_act[{i}]"
        x, u, u2 = entry.get("src"), entry.get("tgt"), entry.get("tgt2")
        table = {}
        for cell in entry.get("table", []):
            img = {r["label"]: field.of(parse_rational(r["coeff"], loc))
                   for r in cell.get("result", [])}
            img = {l: cv for l, cv in img.items() if cv}
            if img:
                table[(cell["g"], cell["m"])] = img
        if table:
            b_act[(x, u, u2)] = table
    return DGBimodule(a, b, spaces, d, a_act, b_act, name=doc.get("name", ""))


# ---------------------------------------------------------------------------
# report documents


def matrix_to_document(mat: SparseMatrix) -> dict:
    return {
        "rows": mat.rows,
        "cols": mat.cols,
        "entries": [[r, c, format_rational(v)] for (r, c), v in sorted(mat.entries.items())],
    }


def params_to_document(params: ComputationParams) -> dict:
    return {
        "max_bar_length": params.L,
        "max_u_power": params.N,
        "window": [params.lo, params.hi],
        "field": field_name(params.field),
        "seed": params.seed,
    }


def report_document(command: str, subject, params: ComputationParams,
                    results: dict, seeds=None) -> dict:
    doc = {
        "format": REPORT_FORMAT,
        "tool": {"name": "dghom", "version": __version__},
        "command": command,
        "subject": subject,
        "parameters": params_to_document(params),
        "results": results,
    }
    if seeds is not None:
        doc["seeds"] = seeds
    return doc


def dump_report(doc: dict) -> str:
    return json.dumps(_plain(doc), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _plain(x):
    """Recursively convert report values into JSON-stable primitives."""
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, SparseMatrix):
        return matrix_to_document(x)
    if isinstance(x, dict):
        return {_plain_key(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str, float)) or x is None:
        return x
    return str(x)


def _plain_key(k):
    if isinstance(k, (tuple,)):
        return ",".join(str(p) for p in k)
    if isinstance(k, int):
        return str(k)
    return str(k)


def save_text(path, text: str):
    with open(path, "w") as fh:
        fh.write(text)
