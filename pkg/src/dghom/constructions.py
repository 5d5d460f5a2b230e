"""Category-building toolkit: gluings along bimodules, diagonal bimodules,
and restriction of bimodules along functors."""

from __future__ import annotations

from dataclasses import dataclass

from .dgcore import (
    DGBimodule,
    DGCategory,
    DGFunctorData,
    GradedBasisSpace,
)
from .exactla import InconsistentInputError


@dataclass
class GluedCategory:
    """The gluing of A and B along an (A,B)-bimodule, with provenance tags so
    downstream additivity checks can split complexes mechanically."""

    category: DGCategory
    provenance: dict  # object -> "A" | "B"
    left: DGCategory
    right: DGCategory
    bimodule: DGBimodule


def glue(a: DGCategory, b: DGCategory, m: DGBimodule) -> GluedCategory:
    """Upper-triangular gluing: homs inside A and B are kept, homs from
    an A-object x to a B-object u are M(x, u), and homs from B to A vanish."""
    if m.left_cat is not a or m.right_cat is not b:
        raise InconsistentInputError(
            "bimodule orientation mismatch: expected an (A, B)-bimodule with "
            "nonzero homs from the A side to the B side"
        )
    clash = set(a.objects) & set(b.objects)
    if clash:
        raise InconsistentInputError(f"object name clash in gluing: {sorted(clash)}")
    objects = tuple(a.objects) + tuple(b.objects)
    hom = dict(a.hom)
    hom.update(b.hom)
    for (x, u), sp in m.spaces.items():
        hom[(x, u)] = sp
    d = dict(a.d)
    d.update(b.d)
    for key, table in m.d.items():
        if table:
            d[key] = table
    ids = dict(a.ids)
    ids.update(b.ids)
    compose = dict(a.compose)
    compose.update(b.compose)
    # cross morphism precomposed with an A morphism: (m
    # in M(y,u)) o (f: x -> y) comes from the A action
    for (x2, x, u), table in m.a_act.items():
        entry = {}
        for (f_lab, m_lab), img in table.items():
            if img:
                entry[(m_lab, f_lab)] = img
        if entry:
            compose[(x2, x, u)] = entry
    # a B morphism postcomposed with a cross morphism
    for (x, u, u2), table in m.b_act.items():
        entry = {}
        for (g_lab, m_lab), img in table.items():
            if img:
                entry[(g_lab, m_lab)] = img
        if entry:
            compose[(x, u, u2)] = entry
    cat = DGCategory(objects, hom, d, compose, ids, a.field,
                     name=f"glue({a.name},{b.name})" if a.name and b.name else "glued")
    prov = {x: "A" for x in a.objects}
    prov.update({u: "B" for u in b.objects})
    return GluedCategory(cat, prov, a, b, m)


def zero_bimodule(a: DGCategory, b: DGCategory) -> DGBimodule:
    return DGBimodule(a, b, {}, {}, {}, {}, name="0")


def diagonal_bimodule(a: DGCategory) -> DGBimodule:
    """The hom bifunctor of `a` viewed as a bimodule over itself: spaces are
    the hom spaces and both actions are composition."""
    spaces = {(x, y): sp for (x, y), sp in a.hom.items()}
    d = {key: table for key, table in a.d.items()}
    a_act, b_act = {}, {}
    for (x2, x, y), table in a.compose.items():
        # pre-composition action: f in hom(x2, x), m in M(x, y) -> m.f
        pre = {}
        for (g_lab, f_lab), img in table.items():
            pre[(f_lab, g_lab)] = img
        a_act[(x2, x, y)] = pre
        # post-composition action: g in hom(x, y) acting on M(x2, x)... use
        # the same table keyed the composition way
        b_act[(x2, x, y)] = dict(table)
    return DGBimodule(a, a, spaces, d, a_act, b_act, name=f"I({a.name})" if a.name else "I")


def restrict_bimodule(F: DGFunctorData, G: DGFunctorData, m: DGBimodule,
                      name: str = "") -> DGBimodule:
    """Restriction of scalars along F: A' -> A and G: B' -> B: the spaces are
    M(F x, G u) with both actions through the functors."""
    if F.target is not m.left_cat or G.target is not m.right_cat:
        raise InconsistentInputError("restriction functors do not land in the bimodule's categories")
    a2, b2 = F.source, G.source
    fld = a2.field
    spaces, d, a_act, b_act = {}, {}, {}, {}
    for x in a2.objects:
        for u in b2.objects:
            sp = m.space(F.object_map[x], G.object_map[u])
            if sp.dim:
                spaces[(x, u)] = GradedBasisSpace(sp.labels, dict(sp.degree))
                tbl = m.d.get((F.object_map[x], G.object_map[u]), {})
                if tbl:
                    d[(x, u)] = tbl
    for (x, u), sp in spaces.items():
        fx, gu = F.object_map[x], G.object_map[u]
        for x2 in a2.objects:
            fsp = a2.space(x2, x)
            if not fsp.dim:
                continue
            table = {}
            for f_lab in fsp.labels:
                ff = F.apply_hom(x2, x, {f_lab: fld.one})
                for m_lab in sp.labels:
                    img = m.act_a(F.object_map[x2], fx, gu, ff, {m_lab: fld.one})
                    if img:
                        table[(f_lab, m_lab)] = img
            if table:
                a_act[(x2, x, u)] = table
        for u2 in b2.objects:
            gsp = b2.space(u, u2)
            if not gsp.dim:
                continue
            table = {}
            for g_lab in gsp.labels:
                gg = G.apply_hom(u, u2, {g_lab: fld.one})
                for m_lab in sp.labels:
                    img = m.act_b(fx, gu, G.object_map[u2], gg, {m_lab: fld.one})
                    if img:
                        table[(g_lab, m_lab)] = img
            if table:
                b_act[(x, u, u2)] = table
    return DGBimodule(a2, b2, spaces, d, a_act, b_act, name=name or f"res({m.name})")


def one_dimensional_module(a: DGCategory, b: DGCategory, supported_at,
                           label: str = "mu", action: dict = None) -> DGBimodule:
    """Convenience: a bimodule with a single one-dimensional space M(x0, u0)
    in degree 0, identity actions only (plus optional extra action rows)."""
    x0, u0 = supported_at
    spaces = {(x0, u0): GradedBasisSpace((label,), {label: 0})}
    fld = a.field
    a_act = {(x0, x0, u0): {(a.ids[x0], label): {label: fld.one}}}
    b_act = {(x0, u0, u0): {(b.ids[u0], label): {label: fld.one}}}
    if action:
        for key, table in action.get("a_act", {}).items():
            a_act.setdefault(key, {}).update(table)
        for key, table in action.get("b_act", {}).items():
            b_act.setdefault(key, {}).update(table)
    return DGBimodule(a, b, spaces, {}, a_act, b_act, name=f"k@({x0},{u0})")
