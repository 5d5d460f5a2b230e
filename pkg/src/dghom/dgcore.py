"""Data model for small DG categories with basis-presented hom complexes.

A category is a finite set of objects, a graded basis for every hom space, a
degree +1 differential, a sparse composition table on basis pairs, and a
distinguished identity basis element per object.  Elements of a hom space are
sparse combinations dict[label -> scalar].

Sign convention (fixed once, everything else derives from it): swapping two
homogeneous symbols of cohomological degrees p and q costs (-1)**(p*q).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exactla import QQ, InconsistentInputError


@dataclass
class ComputationParams:
    """Shared truncation parameters: bar length bound L, u-power bound N, the
    homological degree window, and the coefficient field."""

    L: int = 6
    N: int = 4
    lo: int = -4
    hi: int = 6
    field: object = QQ
    seed: int = 0
    require_stable: bool = False

    @property
    def window(self):
        return (self.lo, self.hi)

    def bumped(self) -> "ComputationParams":
        """The (L+1, N+1) companion used for stability verdicts."""
        return ComputationParams(self.L + 1, self.N + 1, self.lo, self.hi,
                                 self.field, self.seed, self.require_stable)


# ---------------------------------------------------------------------------
# types


@dataclass
class GradedBasisSpace:
    labels: tuple
    degree: dict  # label -> int

    def __post_init__(self):
        self.labels = tuple(self.labels)
        if len(set(self.labels)) != len(self.labels):
            raise InconsistentInputError("duplicate basis labels")

    @property
    def dim(self):
        return len(self.labels)


@dataclass
class DGCategory:
    """objects: ordered object names; hom[(x,y)]: GradedBasisSpace (missing = 0);
    d[(x,y)][f]: sparse image of basis f; compose[(x,y,z)][(g,f)]: sparse g.f
    for g in hom(y,z), f in hom(x,y); ids[x]: identity basis label."""

    objects: tuple
    hom: dict
    d: dict
    compose: dict
    ids: dict
    field: object = QQ
    name: str = ""
    truncation_window: tuple = None  # set on degree-truncated categories

    def __post_init__(self):
        self.objects = tuple(self.objects)

    def space(self, x, y) -> GradedBasisSpace:
        return self.hom.get((x, y), GradedBasisSpace((), {}))

    def deg(self, x, y, label) -> int:
        return self.hom[(x, y)].degree[label]

    def diff(self, x, y, combo: dict) -> dict:
        """d applied to a combination in hom(x, y)."""
        table = self.d.get((x, y), {})
        f = self.field
        out = {}
        for lab, c in combo.items():
            for lab2, c2 in table.get(lab, {}).items():
                v = f.add(out.get(lab2, f.zero), f.mul(c, c2))
                if v == f.zero:
                    out.pop(lab2, None)
                else:
                    out[lab2] = v
        return out

    def comp(self, x, y, z, g: dict, f_: dict) -> dict:
        """Composition hom(y,z) x hom(x,y) -> hom(x,z) on combinations."""
        table = self.compose.get((x, y, z), {})
        f = self.field
        out = {}
        for gl, gc in g.items():
            for fl, fc in f_.items():
                prod = table.get((gl, fl))
                if not prod:
                    continue
                s = f.mul(gc, fc)
                for lab, c in prod.items():
                    v = f.add(out.get(lab, f.zero), f.mul(s, c))
                    if v == f.zero:
                        out.pop(lab, None)
                    else:
                        out[lab] = v
        return out

    def reduced_labels(self, x, y):
        """Basis labels of hom(x,y) with the identity removed when x == y."""
        sp = self.space(x, y)
        if x == y:
            idl = self.ids.get(x)
            return tuple(l for l in sp.labels if l != idl)
        return sp.labels

    def is_degree_zero(self) -> bool:
        """True when every basis element sits in degree 0 and d vanishes."""
        for sp in self.hom.values():
            if any(dv != 0 for dv in sp.degree.values()):
                return False
        for table in self.d.values():
            if any(img for img in table.values()):
                return False
        return True

    def has_nonpositive_degrees(self) -> bool:
        """True when every hom degree is <= 0; reduced words then have
        non-negative homological degree, so homology vanishes below 0."""
        return all(dv <= 0 for sp in self.hom.values() for dv in sp.degree.values())

    def total_dim(self) -> int:
        return sum(sp.dim for sp in self.hom.values())


@dataclass
class DGFunctorData:
    """A strict DG functor given on basis: hom_map[(x,y)][label] -> combination
    in hom_target(object_map[x], object_map[y])."""

    source: DGCategory
    target: DGCategory
    object_map: dict
    hom_map: dict
    name: str = ""

    def apply_hom(self, x, y, combo: dict) -> dict:
        f = self.source.field
        table = self.hom_map.get((x, y), {})
        out = {}
        for lab, c in combo.items():
            for lab2, c2 in table.get(lab, {}).items():
                v = f.add(out.get(lab2, f.zero), f.mul(c, c2))
                if v == f.zero:
                    out.pop(lab2, None)
                else:
                    out[lab2] = v
        return out


@dataclass
class DGBimodule:
    """Bimodule M over (A, B): space[(x, u)] for x in Ob(A), u in Ob(B) behaves
    like "morphisms x -> u".  A acts by pre-composition (a_act), B by
    post-composition (b_act); this is a right module over A tensor B^op.

      a_act[(x2, x, u)][(f, m)] : f in hom_A(x2, x), m in M(x, u) -> M(x2, u)
      b_act[(x, u, u2)][(g, m)] : g in hom_B(u, u2), m in M(x, u) -> M(x, u2)
    """

    left_cat: DGCategory
    right_cat: DGCategory
    spaces: dict
    d: dict
    a_act: dict
    b_act: dict
    name: str = ""

    def space(self, x, u) -> GradedBasisSpace:
        return self.spaces.get((x, u), GradedBasisSpace((), {}))

    def diff(self, x, u, combo: dict) -> dict:
        table = self.d.get((x, u), {})
        f = self.left_cat.field
        out = {}
        for lab, c in combo.items():
            for lab2, c2 in table.get(lab, {}).items():
                v = f.add(out.get(lab2, f.zero), f.mul(c, c2))
                if v == f.zero:
                    out.pop(lab2, None)
                else:
                    out[lab2] = v
        return out

    def act_a(self, x2, x, u, f_combo: dict, m_combo: dict) -> dict:
        return _bilinear(self.left_cat.field, self.a_act.get((x2, x, u), {}), f_combo, m_combo)

    def act_b(self, x, u, u2, g_combo: dict, m_combo: dict) -> dict:
        return _bilinear(self.left_cat.field, self.b_act.get((x, u, u2), {}), g_combo, m_combo)


def _bilinear(field, table, left: dict, right: dict) -> dict:
    out = {}
    for ll, lc in left.items():
        for rl, rc in right.items():
            prod = table.get((ll, rl))
            if not prod:
                continue
            s = field.mul(lc, rc)
            for lab, c in prod.items():
                v = field.add(out.get(lab, field.zero), field.mul(s, c))
                if v == field.zero:
                    out.pop(lab, None)
                else:
                    out[lab] = v
    return out


def combo_add(field, a: dict, b: dict, scale=None) -> dict:
    out = dict(a)
    s = field.one if scale is None else scale
    for lab, c in b.items():
        v = field.add(out.get(lab, field.zero), field.mul(s, c))
        if v == field.zero:
            out.pop(lab, None)
        else:
            out[lab] = v
    return out


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    problems: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.problems

    def schema(self, code, message):
        self.problems.append({"kind": "schema", "code": code, "message": message})

    def axiom(self, code, message):
        self.problems.append({"kind": "axiom", "code": code, "message": message})

    def summary(self):
        if self.ok:
            return "valid"
        return "; ".join(f"[{p['kind']}:{p['code']}] {p['message']}" for p in self.problems)


def validate(c: DGCategory, max_problems: int = 50,
             degree_window=None) -> ValidationReport:
    """Check the DG category axioms exhaustively on basis elements.

    Malformed tables (missing labels, degree mismatches) are reported as
    schema problems, distinct from axiom failures (d^2, Leibniz,
    associativity, units).

    With degree_window = (lo, hi), axiom instances whose terms are not all
    representable inside the window are skipped: this is the contract for
    degree-truncated categories (Drinfeld quotients), whose identities hold
    exactly wherever the window can express them.
    """
    rep = ValidationReport()
    if degree_window is not None:
        win_lo, win_hi = degree_window

        def in_window(*degs):
            return all(win_lo <= dg <= win_hi for dg in degs)
    else:
        def in_window(*degs):
            return True

    def full():
        return len(rep.problems) >= max_problems

    objset = set(c.objects)
    if len(objset) != len(c.objects):
        rep.schema("objects", "duplicate object names")
    for (x, y), sp in c.hom.items():
        if x not in objset or y not in objset:
            rep.schema("hom-key", f"hom ({x},{y}) references unknown object")
        for lab in sp.labels:
            if lab not in sp.degree:
                rep.schema("degree", f"no degree for {lab} in hom({x},{y})")
    for x in c.objects:
        idl = c.ids.get(x)
        sp = c.space(x, x)
        if idl is None or idl not in sp.labels:
            rep.schema("id", f"object {x} lacks an identity basis label")
        elif sp.degree[idl] != 0:
            rep.schema("id-degree", f"id of {x} has degree {sp.degree[idl]} != 0")
    if not rep.ok:
        return rep  # degree data unusable: stop before axiom checks

    # d well-formedness: lands in the same hom space, degree +1
    for (x, y), table in c.d.items():
        sp = c.space(x, y)
        for lab, img in table.items():
            if lab not in sp.degree:
                rep.schema("d-key", f"d on unknown basis {lab} in hom({x},{y})")
                continue
            for lab2 in img:
                if lab2 not in sp.degree:
                    rep.schema("d-target", f"d({lab}) hits unknown {lab2} in hom({x},{y})")
                elif sp.degree[lab2] != sp.degree[lab] + 1:
                    rep.schema(
                        "d-degree",
                        f"d({lab}) in hom({x},{y}) not homogeneous of degree +1",
                    )

    # compose well-formedness
    for (x, y, z), table in c.compose.items():
        spg, spf, spr = c.space(y, z), c.space(x, y), c.space(x, z)
        for (g, f_), img in table.items():
            if g not in spg.degree or f_ not in spf.degree:
                rep.schema("compose-key", f"compose({x},{y},{z}) uses unknown ({g},{f_})")
                continue
            want = spg.degree[g] + spf.degree[f_]
            for lab2 in img:
                if lab2 not in spr.degree:
                    rep.schema("compose-target", f"{g}.{f_} hits unknown {lab2} in hom({x},{z})")
                elif spr.degree[lab2] != want:
                    rep.schema("compose-degree", f"{g}.{f_} in hom({x},{z}) has wrong degree")
    if not rep.ok:
        return rep

    fld = c.field
    # d.d = 0
    for (x, y), sp in c.hom.items():
        for lab in sp.labels:
            if full():
                return rep
            if not in_window(sp.degree[lab] + 1, sp.degree[lab] + 2):
                continue
            dd = c.diff(x, y, c.diff(x, y, {lab: fld.one}))
            if dd:
                rep.axiom("d-squared", f"d(d({lab})) != 0 in hom({x},{y})")

    # Leibniz: d(g.f) = d(g).f + (-1)^{|g|} g.d(f)
    for (x, y, z) in _composable_triples(c):
        spf, spg = c.space(x, y), c.space(y, z)
        for g in spg.labels:
            sg = fld.of(-1) if spg.degree[g] % 2 else fld.one
            for f_ in spf.labels:
                if full():
                    return rep
                total = spg.degree[g] + spf.degree[f_]
                if not in_window(total, total + 1):
                    continue
                lhs = c.diff(x, z, c.comp(x, y, z, {g: fld.one}, {f_: fld.one}))
                rhs = c.comp(x, y, z, c.diff(y, z, {g: fld.one}), {f_: fld.one})
                rhs = combo_add(fld, rhs, c.comp(x, y, z, {g: fld.one}, c.diff(x, y, {f_: fld.one})), sg)
                if combo_add(fld, lhs, rhs, fld.of(-1)):
                    rep.axiom("leibniz", f"Leibniz fails for ({g},{f_}) in ({x},{y},{z})")

    # associativity: (h.g).f = h.(g.f)
    for (w, x, y, z) in _composable_quadruples(c):
        sph, spg, spf = c.space(y, z), c.space(x, y), c.space(w, x)
        for h in sph.labels:
            for g in spg.labels:
                hg = c.comp(x, y, z, {h: fld.one}, {g: fld.one})
                for f_ in spf.labels:
                    if full():
                        return rep
                    dh, dg_, df = sph.degree[h], spg.degree[g], spf.degree[f_]
                    if not in_window(dh + dg_, dg_ + df, dh + dg_ + df):
                        continue
                    lhs = c.comp(w, x, z, hg, {f_: fld.one})
                    gf = c.comp(w, x, y, {g: fld.one}, {f_: fld.one})
                    rhs = c.comp(w, y, z, {h: fld.one}, gf)
                    if combo_add(fld, lhs, rhs, fld.of(-1)):
                        rep.axiom("assoc", f"associativity fails for ({h},{g},{f_}) at ({w},{x},{y},{z})")

    # units
    for x in c.objects:
        idl = c.ids[x]
        if c.diff(x, x, {idl: fld.one}):
            rep.axiom("unit-closed", f"d(id_{x}) != 0")
        for y in c.objects:
            sp = c.space(x, y)
            for f_ in sp.labels:
                if full():
                    return rep
                left = c.comp(x, y, y, {c.ids[y]: fld.one}, {f_: fld.one})
                right = c.comp(x, x, y, {f_: fld.one}, {idl: fld.one})
                if combo_add(fld, left, {f_: fld.one}, fld.of(-1)):
                    rep.axiom("unit-left", f"id.{f_} != {f_} in hom({x},{y})")
                if combo_add(fld, right, {f_: fld.one}, fld.of(-1)):
                    rep.axiom("unit-right", f"{f_}.id != {f_} in hom({x},{y})")
    return rep


def _composable_triples(c):
    for (x, y) in c.hom:
        for (y2, z) in c.hom:
            if y2 == y:
                yield (x, y, z)


def _composable_quadruples(c):
    for (w, x) in c.hom:
        for (x2, y) in c.hom:
            if x2 != x:
                continue
            for (y2, z) in c.hom:
                if y2 == y:
                    yield (w, x, y, z)


def validate_functor(F: DGFunctorData) -> ValidationReport:
    """Check that F commutes with d, composition and identities on all basis elements."""
    rep = ValidationReport()
    src, tgt, fld = F.source, F.target, F.source.field
    for x in src.objects:
        if F.object_map.get(x) not in tgt.objects:
            rep.schema("object-map", f"object {x} not mapped into the target")
    if not rep.ok:
        return rep
    for (x, y), sp in src.hom.items():
        fx, fy = F.object_map[x], F.object_map[y]
        tsp = tgt.space(fx, fy)
        for lab in sp.labels:
            img = F.apply_hom(x, y, {lab: fld.one})
            for lab2 in img:
                if lab2 not in tsp.degree:
                    rep.schema("hom-map", f"F({lab}) hits unknown {lab2}")
                elif tsp.degree[lab2] != sp.degree[lab]:
                    rep.schema("hom-degree", f"F({lab}) is not degree preserving")
    if not rep.ok:
        return rep
    for (x, y), sp in src.hom.items():
        fx, fy = F.object_map[x], F.object_map[y]
        for lab in sp.labels:
            lhs = F.apply_hom(x, y, src.diff(x, y, {lab: fld.one}))
            rhs = tgt.diff(fx, fy, F.apply_hom(x, y, {lab: fld.one}))
            if combo_add(fld, lhs, rhs, fld.of(-1)):
                rep.axiom("functor-d", f"F(d {lab}) != d(F {lab}) on hom({x},{y})")
    for (x, y, z) in _composable_triples(src):
        fx, fy, fz = F.object_map[x], F.object_map[y], F.object_map[z]
        for g in src.space(y, z).labels:
            for f_ in src.space(x, y).labels:
                lhs = F.apply_hom(x, z, src.comp(x, y, z, {g: fld.one}, {f_: fld.one}))
                rhs = tgt.comp(fx, fy, fz, F.apply_hom(y, z, {g: fld.one}), F.apply_hom(x, y, {f_: fld.one}))
                if combo_add(fld, lhs, rhs, fld.of(-1)):
                    rep.axiom("functor-compose", f"F({g}.{f_}) != F({g}).F({f_})")
    for x in src.objects:
        img = F.apply_hom(x, x, {src.ids[x]: fld.one})
        if combo_add(fld, img, {tgt.ids[F.object_map[x]]: fld.one}, fld.of(-1)):
            rep.axiom("functor-id", f"F(id_{x}) is not the identity")
    return rep


def validate_bimodule(m: DGBimodule) -> ValidationReport:
    """d^2 = 0, Leibniz for both actions, associativity, commutation, units."""
    rep = ValidationReport()
    a, b, fld = m.left_cat, m.right_cat, m.left_cat.field
    one = fld.one
    for (x, u), sp in m.spaces.items():
        for lab in sp.labels:
            if m.diff(x, u, m.diff(x, u, {lab: one})):
                rep.axiom("d-squared", f"d^2 != 0 on M({x},{u})")
    for (x, u), sp in m.spaces.items():
        # unit actions
        for lab in sp.labels:
            la = m.act_a(x, x, u, {a.ids[x]: one}, {lab: one})
            if combo_add(fld, la, {lab: one}, fld.of(-1)):
                rep.axiom("unit-a", f"id_A action not unital on M({x},{u})")
            lb = m.act_b(x, u, u, {b.ids[u]: one}, {lab: one})
            if combo_add(fld, lb, {lab: one}, fld.of(-1)):
                rep.axiom("unit-b", f"id_B action not unital on M({x},{u})")
        # Leibniz for the A action: d(m.f) = d(m).f + (-1)^{|m|} m.d(f)
        for x2 in a.objects:
            fsp = a.space(x2, x)
            for fl in fsp.labels:
                for lab in sp.labels:
                    # d(m . f) = d(m).f + (-1)^{|m|} m.d(f)
                    sm = fld.of(-1) if sp.degree[lab] % 2 else one
                    lhs = m.diff(x2, u, m.act_a(x2, x, u, {fl: one}, {lab: one}))
                    rhs = combo_add(
                        fld,
                        m.act_a(x2, x, u, {fl: one}, m.diff(x, u, {lab: one})),
                        m.act_a(x2, x, u, a.diff(x2, x, {fl: one}), {lab: one}),
                        sm,
                    )
                    if combo_add(fld, lhs, rhs, fld.of(-1)):
                        rep.axiom("leibniz-a", f"A-Leibniz fails on M({x},{u}) with {fl},{lab}")
        # Leibniz for the B action: d(g.m) = d(g).m + (-1)^{|g|} g.d(m)
        for u2 in b.objects:
            gsp = b.space(u, u2)
            for gl in gsp.labels:
                sg = fld.of(-1) if gsp.degree[gl] % 2 else one
                for lab in sp.labels:
                    lhs = m.diff(x, u2, m.act_b(x, u, u2, {gl: one}, {lab: one}))
                    rhs = m.act_b(x, u, u2, b.diff(u, u2, {gl: one}), {lab: one})
                    rhs = combo_add(fld, rhs, m.act_b(x, u, u2, {gl: one}, m.diff(x, u, {lab: one})), sg)
                    if combo_add(fld, lhs, rhs, fld.of(-1)):
                        rep.axiom("leibniz-b", f"B-Leibniz fails on M({x},{u}) with {gl},{lab}")
        # associativity and commutation of actions
        for x2 in a.objects:
            for x3 in a.objects:
                for f2 in a.space(x3, x2).labels:
                    for f1 in a.space(x2, x).labels:
                        ff = a.comp(x3, x2, x, {f1: one}, {f2: one})
                        for lab in sp.labels:
                            lhs = m.act_a(x3, x2, u, {f2: one}, m.act_a(x2, x, u, {f1: one}, {lab: one}))
                            rhs = m.act_a(x3, x, u, ff, {lab: one})
                            if combo_add(fld, lhs, rhs, fld.of(-1)):
                                rep.axiom("assoc-a", f"A-action not associative on M({x},{u})")
        for u2 in b.objects:
            for u3 in b.objects:
                for g2 in b.space(u2, u3).labels:
                    for g1 in b.space(u, u2).labels:
                        gg = b.comp(u, u2, u3, {g2: one}, {g1: one})
                        for lab in sp.labels:
                            lhs = m.act_b(x, u2, u3, {g2: one}, m.act_b(x, u, u2, {g1: one}, {lab: one}))
                            rhs = m.act_b(x, u, u3, gg, {lab: one})
                            if combo_add(fld, lhs, rhs, fld.of(-1)):
                                rep.axiom("assoc-b", f"B-action not associative on M({x},{u})")
        for x2 in a.objects:
            for u2 in b.objects:
                for fl in a.space(x2, x).labels:
                    for gl in b.space(u, u2).labels:
                        for lab in sp.labels:
                            lhs = m.act_b(x2, u, u2, {gl: one}, m.act_a(x2, x, u, {fl: one}, {lab: one}))
                            rhs = m.act_a(x2, x, u2, {fl: one}, m.act_b(x, u, u2, {gl: one}, {lab: one}))
                            if combo_add(fld, lhs, rhs, fld.of(-1)):
                                rep.axiom("act-commute", f"actions do not commute on M({x},{u})")
    return rep


# ---------------------------------------------------------------------------
# constructions on categories


def opposite(c: DGCategory) -> DGCategory:
    """Opposite category: hom^op(x,y) = hom(y,x), composition reversed with
    the Koszul sign (-1)^{|f| |g|}."""
    fld = c.field
    hom = {(y, x): sp for (x, y), sp in c.hom.items()}
    d = {(y, x): table for (x, y), table in c.d.items()}
    compose = {}
    for (x, y, z), table in c.compose.items():
        # original: g in hom(y,z), f in hom(x,y), g.f in hom(x,z)
        # opposite: f' in hom^op(z,y) = hom(y,z) ... we need, for
        # g' in hom^op(y, x) (= hom(x,y)) and f' in hom^op(z, y) (= hom(y,z)):
        #   g' .op f' := (-1)^{|f'| |g'|} f' . g'  in hom^op(z, x) = hom(x, z)
        new = compose.setdefault((z, y, x), {})
        spg, spf = c.space(y, z), c.space(x, y)
        for (g, f_), img in table.items():
            sgn = (spg.degree[g] * spf.degree[f_]) % 2
            combo = {lab: (fld.neg(v) if sgn else v) for lab, v in img.items()}
            new[(f_, g)] = combo
    return DGCategory(tuple(c.objects), hom, d, compose, dict(c.ids), fld,
                      name=f"op({c.name})" if c.name else "")


def tensor_objects(x, u):
    return f"({x},{u})"


def tensor_labels(f, g):
    return f"({f},{g})"


def tensor(a: DGCategory, b: DGCategory) -> DGCategory:
    """Tensor product category: objects are pairs, hom((x,u),(y,v)) =
    hom_a(x,y) (x) hom_b(u,v), d = d(x)1 + 1(x)d and composition with the
    Koszul sign (-1)^{|g2| |f1|}."""
    if a.field != b.field:
        raise InconsistentInputError("tensor factors over different fields")
    fld = a.field
    objects = tuple(tensor_objects(x, u) for x in a.objects for u in b.objects)
    obj_pairs = {tensor_objects(x, u): (x, u) for x in a.objects for u in b.objects}
    hom, d, compose, ids = {}, {}, {}, {}
    for (x, y), spa in a.hom.items():
        for (u, v), spb in b.hom.items():
            X, Y = tensor_objects(x, u), tensor_objects(y, v)
            labels, degs = [], {}
            for f_ in spa.labels:
                for g in spb.labels:
                    lab = tensor_labels(f_, g)
                    labels.append(lab)
                    degs[lab] = spa.degree[f_] + spb.degree[g]
            hom[(X, Y)] = GradedBasisSpace(tuple(labels), degs)
            table = {}
            for f_ in spa.labels:
                for g in spb.labels:
                    img = {}
                    for f2, c in a.diff(x, y, {f_: fld.one}).items():
                        img[tensor_labels(f2, g)] = c
                    sgn = fld.of(-1) if spa.degree[f_] % 2 else fld.one
                    for g2, c in b.diff(u, v, {g: fld.one}).items():
                        lab2 = tensor_labels(f_, g2)
                        v2 = fld.add(img.get(lab2, fld.zero), fld.mul(sgn, c))
                        if v2 == fld.zero:
                            img.pop(lab2, None)
                        else:
                            img[lab2] = v2
                    if img:
                        table[tensor_labels(f_, g)] = img
            if table:
                d[(X, Y)] = table
    for X in objects:
        x, u = obj_pairs[X]
        ids[X] = tensor_labels(a.ids[x], b.ids[u])
    for (x, y, z), ta in a.compose.items():
        for (u, v, w), tb in b.compose.items():
            X, Y, Z = tensor_objects(x, u), tensor_objects(y, v), tensor_objects(z, w)
            table = {}
            spb_g = b.space(v, w)
            spa_f = a.space(x, y)
            for (g1, f1), img_a in ta.items():
                for (g2, f2), img_b in tb.items():
                    # (g1 (x) g2) o (f1 (x) f2) = (-1)^{|g2||f1|} (g1 f1) (x) (g2 f2)
                    sgn = (spb_g.degree[g2] * spa_f.degree[f1]) % 2
                    out = {}
                    for la, ca in img_a.items():
                        for lb, cb in img_b.items():
                            v2 = fld.mul(ca, cb)
                            if sgn:
                                v2 = fld.neg(v2)
                            out[tensor_labels(la, lb)] = v2
                    if out:
                        table[(tensor_labels(g1, g2), tensor_labels(f1, f2))] = out
            if table:
                compose[(X, Y, Z)] = table
    nm = f"({a.name}(x){b.name})" if a.name and b.name else ""
    return DGCategory(objects, hom, d, compose, ids, fld, name=nm)


def matrix_amplification(c: DGCategory, n: int):
    """Replace every object by n interchangeable copies; the total hom between
    the copy families is the n x n array of original hom spaces, so the sum
    algebra is the n x n matrix amplification.  Returns (category, corner
    inclusion functor onto copy 1)."""
    if n < 1:
        raise InconsistentInputError("amplification requires n >= 1")
    fld = c.field

    def ob(x, i):
        return f"{x}@{i}"

    objects = tuple(ob(x, i) for x in c.objects for i in range(1, n + 1))
    hom, d, compose, ids = {}, {}, {}, {}
    for (x, y), sp in c.hom.items():
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                hom[(ob(x, i), ob(y, j))] = GradedBasisSpace(sp.labels, dict(sp.degree))
                if (x, y) in c.d:
                    d[(ob(x, i), ob(y, j))] = c.d[(x, y)]
    for x in c.objects:
        for i in range(1, n + 1):
            ids[ob(x, i)] = c.ids[x]
    for (x, y, z), table in c.compose.items():
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    compose[(ob(x, i), ob(y, j), ob(z, k))] = table
    amp = DGCategory(objects, hom, d, compose, ids, fld,
                     name=f"M{n}({c.name})" if c.name else "")
    incl = DGFunctorData(
        source=c,
        target=amp,
        object_map={x: ob(x, 1) for x in c.objects},
        hom_map={(x, y): {lab: {lab: fld.one} for lab in sp.labels} for (x, y), sp in c.hom.items()},
        name="corner",
    )
    return amp, incl


EPS = "eps"


def drinfeld_quotient(c: DGCategory, e, window, max_letters: int = 41) -> DGCategory:
    """Kill the object e by freely adjoining eps: e -> e of degree -1 with
    d(eps) = id_e.

    Hom spaces of the quotient are spanned by alternating words
    b_k * eps * b_{k-1} * eps * ... * eps * b_0 (b_0: x -> e, middle letters
    in hom(e, e), b_k: e -> y), stored leftmost-first, and truncated to the
    given cohomological degree window.  Composition concatenates words,
    composing the single junction letter pair in c.

    For categories whose hom spaces sit in degrees <= 0 the truncation is
    exact inside the window (words only descend); otherwise enumeration is
    guarded by max_letters and may fail with an explicit error.
    """
    lo, hi = window
    if lo > hi:
        raise InconsistentInputError("empty degree window")
    if e not in c.objects:
        raise InconsistentInputError(f"unknown object {e}")
    if lo > -1 or hi < 0:
        raise InconsistentInputError(
            "degenerate window: must contain degree 0 (identities) and -1 (eps)"
        )
    fld = c.field
    loop_sp = c.space(e, e)
    loop_degs = [loop_sp.degree[l] for l in loop_sp.labels]
    descending = all(dv <= 0 for dv in loop_degs)

    # enumerate words per object pair
    words = {}  # (x, y) -> list of tuples (b_k, ..., b_0)
    for x in c.objects:
        for y in c.objects:
            acc = []
            sp0 = c.space(x, y)
            for lab in sp0.labels:
                if lo <= sp0.degree[lab] <= hi:
                    acc.append((lab,))
            starts = [(lab, c.space(x, e).degree[lab]) for lab in c.space(x, e).labels]
            end_degs = {lab: c.space(e, y).degree[lab] for lab in c.space(e, y).labels}
            best_end = max(end_degs.values(), default=None)
            if starts and end_degs:
                # mids: sequences of middle letters (possibly empty)
                frontier = [((), 0)]
                letters = 2
                while frontier:
                    for b0, d0 in starts:
                        for bk, dk in end_degs.items():
                            for mids, dm in frontier:
                                k = len(mids) + 1
                                total = d0 + dm + dk - k
                                if lo <= total <= hi:
                                    acc.append((bk,) + mids + (b0,))
                    letters += 1
                    if letters > max_letters:
                        if descending:
                            break  # longer words only fall below lo; none can fit
                        raise InconsistentInputError(
                            "degree window does not bound the word enumeration "
                            "(hom(e,e) has letters of positive degree)"
                        )
                    nxt = []
                    for mids, dm in frontier:
                        for lab, dl in zip(loop_sp.labels, loop_degs):
                            nxt.append((mids + (lab,), dm + dl))
                    if descending and best_end is not None:
                        max_start = max(d0 for _, d0 in starts)
                        kept = []
                        for mids, dm in nxt:
                            best = max_start + dm + best_end - (len(mids) + 1)
                            if best >= lo:
                                kept.append((mids, dm))
                        nxt = kept
                    frontier = nxt
            words[(x, y)] = sorted(acc, key=lambda w: (len(w), w))

    def label_of(word):
        return f"*{EPS}*".join(word) if len(word) > 1 else word[0]

    def letter_space(x, y, w, i):
        """Hom space (src, tgt) of letter w[i] (leftmost-first storage)."""
        k = len(w) - 1
        if k == 0:
            return (x, y)
        if i == 0:
            return (e, y)
        if i == k:
            return (x, e)
        return (e, e)

    def word_degree(x, y, w):
        k = len(w) - 1
        total = -k
        for i, lab in enumerate(w):
            s, t = letter_space(x, y, w, i)
            total += c.space(s, t).degree[lab]
        return total

    hom, d, compose, ids = {}, {}, {}, {}
    word_label = {}
    for (x, y), ws in words.items():
        if not ws:
            continue
        labels, degs = [], {}
        for w in ws:
            lab = label_of(w)
            labels.append(lab)
            degs[lab] = word_degree(x, y, w)
            word_label[(x, y, w)] = lab
        hom[(x, y)] = GradedBasisSpace(tuple(labels), degs)
    for x in c.objects:
        ids[x] = c.ids[x]

    # differential: Leibniz over the factor list [w[0], eps, w[1], eps, ..., w[k]]
    for (x, y), ws in words.items():
        table = {}
        for w in ws:
            k = len(w) - 1
            img = {}

            def add(w2, coeff, sign_odd):
                lab2 = word_label.get((x, y, w2))
                if lab2 is None:
                    return
                v = fld.neg(coeff) if sign_odd else coeff
                v = fld.add(img.get(lab2, fld.zero), v)
                if v == fld.zero:
                    img.pop(lab2, None)
                else:
                    img[lab2] = v

            prefix = 0
            for i in range(k + 1):
                s, t = letter_space(x, y, w, i)
                for lab2, coeff in c.diff(s, t, {w[i]: fld.one}).items():
                    add(w[:i] + (lab2,) + w[i + 1:], coeff, prefix % 2)
                prefix += c.space(s, t).degree[w[i]]
                if i < k:
                    # the eps between w[i] and w[i+1]: d(eps) = id_e splices them
                    si, ti = letter_space(x, y, w, i)
                    si1, _ = letter_space(x, y, w, i + 1)
                    prod = c.comp(si1, e, ti, {w[i]: fld.one}, {w[i + 1]: fld.one})
                    for lab2, coeff in prod.items():
                        add(w[:i] + (lab2,) + w[i + 2:], coeff, prefix % 2)
                    prefix += -1
            if img:
                table[label_of(w)] = img
        if table:
            d[(x, y)] = table

    # composition: w2 o w1 concatenates, composing w2's last letter with w1's first
    for x in c.objects:
        for y in c.objects:
            if (x, y) not in hom:
                continue
            for z in c.objects:
                if (y, z) not in hom:
                    continue
                table = {}
                for w1 in words[(x, y)]:
                    s1, _ = letter_space(x, y, w1, 0)
                    for w2 in words[(y, z)]:
                        _, t2 = letter_space(y, z, w2, len(w2) - 1)
                        junction = c.comp(s1, y, t2, {w2[-1]: fld.one}, {w1[0]: fld.one})
                        out = {}
                        for lab2, coeff in junction.items():
                            wp = w2[:-1] + (lab2,) + w1[1:]
                            labp = word_label.get((x, z, wp))
                            if labp is None:
                                continue
                            v = fld.add(out.get(labp, fld.zero), coeff)
                            if v == fld.zero:
                                out.pop(labp, None)
                            else:
                                out[labp] = v
                        if out:
                            table[(label_of(w2), label_of(w1))] = out
                if table:
                    compose[(x, y, z)] = table

    return DGCategory(tuple(c.objects), hom, d, compose, ids, fld,
                      name=f"{c.name}/[{e}]" if c.name else "",
                      truncation_window=(lo, hi))
