"""Built-in example categories, their independent oracles, and the seeded
random category generator.

Every expected value stored on a CatalogEntry is computed at build time by the
named oracle (a small resolution or direct evaluation of the definition), on a
code path that never touches the bar-complex machinery.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .dgcore import DGCategory, GradedBasisSpace
from .exactla import QQ, InconsistentInputError, SparseMatrix, rank


@dataclass
class Quiver:
    vertices: list
    arrows: list  # (name, src, tgt)

    def is_acyclic(self) -> bool:
        adj = {}
        for _, s, t in self.arrows:
            adj.setdefault(s, []).append(t)
        state = {}

        def visit(v):
            state[v] = 1
            for w in adj.get(v, ()):
                if state.get(w) == 1:
                    return False
                if state.get(w) is None and not visit(w):
                    return False
            state[v] = 2
            return True

        return all(visit(v) for v in self.vertices if state.get(v) is None)


@dataclass
class CatalogEntry:
    name: str
    category: DGCategory
    oracle: str
    expected: dict = dc_field(default_factory=dict)
    quiver: Quiver = None


# ---------------------------------------------------------------------------
# category builders


def path_label(path):
    return "*".join(path)


def path_category(quiver: Quiver, field=QQ, name="") -> DGCategory:
    """Path category of a finite acyclic quiver: morphisms are paths, the
    composition is concatenation, everything in degree 0 with d = 0."""
    if not quiver.is_acyclic():
        raise InconsistentInputError("quiver has a cycle")
    arrows_from = {}
    for nm, s, t in quiver.arrows:
        arrows_from.setdefault(s, []).append((nm, t))

    paths = {}  # (src, tgt) -> list of arrow-name tuples, composition order

    def extend(src, cur, at):
        paths.setdefault((src, at), []).append(tuple(cur))
        for nm, t in arrows_from.get(at, ()):
            extend(src, [nm] + cur, t)

    for v in quiver.vertices:
        extend(v, [], v)

    hom, compose, ids = {}, {}, {}
    for (s, t), ps in sorted(paths.items()):
        labels = []
        degs = {}
        for p in sorted(ps, key=lambda p: (len(p), p)):
            lab = path_label(p) if p else f"id_{s}"
            labels.append(lab)
            degs[lab] = 0
        hom[(s, t)] = GradedBasisSpace(tuple(labels), degs)
    for v in quiver.vertices:
        ids[v] = f"id_{v}"

    def lab_of(s, p):
        return path_label(p) if p else f"id_{s}"

    for (x, y), ps1 in paths.items():
        for (y2, z), ps2 in paths.items():
            if y2 != y:
                continue
            table = {}
            for q in ps2:
                for p in ps1:
                    table[(lab_of(y, q), lab_of(x, p))] = {lab_of(x, q + p): field.one}
            compose[(x, y, z)] = table
    return DGCategory(tuple(quiver.vertices), hom, {}, compose, ids, field, name=name)


def _one_object_algebra(labels_degrees, products, id_label, field=QQ, name=""):
    """One-object category from a unital algebra presented on a basis."""
    obj = "pt"
    labels = tuple(lab for lab, _ in labels_degrees)
    degs = {lab: dg for lab, dg in labels_degrees}
    hom = {(obj, obj): GradedBasisSpace(labels, degs)}
    table = {}
    for lab in labels:
        table[(id_label, lab)] = {lab: field.one}
        if lab != id_label:
            table[(lab, id_label)] = {lab: field.one}
    for (g, f_), img in products.items():
        table[(g, f_)] = {l: field.of(c) for l, c in img.items()}
    compose = {(obj, obj, obj): table}
    return DGCategory((obj,), hom, {}, compose, {obj: id_label}, field, name=name)


def ground_field(field=QQ) -> CatalogEntry:
    cat = _one_object_algebra([("1", 0)], {}, "1", field, name="k")
    entry = CatalogEntry("ground_field", cat, oracle="definition-evaluation")
    entry.expected["hh"] = {0: 1}
    entry.expected["provenance"] = "reduced complex is k in degree 0; b = B = 0"
    return entry


def linear_quiver(n: int) -> Quiver:
    names = ["x", "y", "z", "w", "v"] + [f"v{i}" for i in range(5, n)]
    verts = names[:n]
    arrows = [(chr(ord("a") + i), verts[i], verts[i + 1]) for i in range(n - 1)]
    return Quiver(verts, arrows)


def acyclic_quiver(quiver: Quiver, field=QQ, name="") -> CatalogEntry:
    cat = path_category(quiver, field, name=name or "quiver")
    entry = CatalogEntry(name or "quiver", cat, oracle="two-term-diagonal-resolution",
                         quiver=quiver)
    entry.expected["hh"] = quiver_hh_oracle(quiver, field)
    entry.expected["provenance"] = (
        "HH from the two-term projective bimodule resolution of the diagonal"
    )
    return entry


def a2(field=QQ) -> CatalogEntry:
    e = acyclic_quiver(linear_quiver(2), field, name="a2")
    e.name = "a2"
    return e


def a3(field=QQ) -> CatalogEntry:
    e = acyclic_quiver(linear_quiver(3), field, name="a3")
    e.name = "a3"
    return e


def dual_numbers(field=QQ) -> CatalogEntry:
    cat = _one_object_algebra(
        [("1", 0), ("x", 0)],
        {("x", "x"): {}},
        "1",
        field,
        name="dual_numbers",
    )
    entry = CatalogEntry("dual_numbers", cat, oracle="two-periodic-resolution")
    entry.expected["hh"] = dual_numbers_hh_oracle(8, field)
    entry.expected["provenance"] = (
        "HH from the 2-periodic free resolution of k over the enveloping algebra"
    )
    return entry


def exterior_generator(degree: int, field=QQ) -> CatalogEntry:
    if degree % 2 == 0:
        raise InconsistentInputError(
            "exterior generator degree must be odd (even degree would change "
            "the sign structure silently)"
        )
    cat = _one_object_algebra(
        [("1", 0), ("xi", degree)],
        {("xi", "xi"): {}},
        "1",
        field,
        name=f"exterior[{degree}]",
    )
    return CatalogEntry(f"exterior:{degree}", cat, oracle="stability-check")


# ---------------------------------------------------------------------------
# oracles (independent of the bar-complex pipeline)


def quiver_hh_oracle(quiver: Quiver, field=QQ) -> dict:
    """Hochschild homology dims of a path category from the standard two-term
    projective bimodule resolution of the diagonal.

    The induced complex is  C1 = (+)_{arrows a: u->v} paths(v -> u)
    --d1--> C0 = (+)_w loops(w),  d1(p) = a.p - p.a.  Path algebras of
    acyclic quivers are hereditary, so HH_n = 0 for n >= 2.
    """
    cat = path_category(quiver, field)
    # basis of C0: loops at each vertex; acyclic => only trivial loops
    c0_basis = []
    for v in quiver.vertices:
        sp = cat.space(v, v)
        for lab in sp.labels:
            c0_basis.append((v, lab))
    c0_index = {b: i for i, b in enumerate(c0_basis)}
    c1_basis = []
    for nm, u, v in quiver.arrows:
        sp = cat.space(v, u)  # reverse paths v -> u
        for lab in sp.labels:
            c1_basis.append((nm, u, v, lab))
    cols = []
    for (nm, u, v, lab) in c1_basis:
        col = {}
        # a o p: loop at v;  p o a: loop at u
        for l2, c in cat.comp(v, u, v, {nm: field.one}, {lab: field.one}).items():
            col[c0_index[(v, l2)]] = c
        for l2, c in cat.comp(u, v, u, {lab: field.one}, {nm: field.one}).items():
            i = c0_index[(u, l2)]
            col[i] = field.sub(col.get(i, field.zero), c)
        cols.append(col)
    d1 = SparseMatrix.from_columns(cols, len(c0_basis), field)
    r = rank(d1)
    dims = {0: len(c0_basis) - r, 1: len(c1_basis) - r}
    for n in range(2, 9):
        dims[n] = 0
    return dims


def dual_numbers_hh_oracle(top_degree: int, field=QQ) -> dict:
    """HH dims of k[x]/x^2 from its 2-periodic resolution: after tensoring
    down, the differentials alternate between 0 and multiplication by 2x."""
    two_x = SparseMatrix.from_dense([[0, 0], [2, 0]], field)  # 1 -> 2x, x -> 0
    zero = SparseMatrix(2, 2, {}, field)
    dims = {}
    for n in range(0, top_degree + 1):
        d_n = zero if n % 2 == 1 else two_x  # d_n: C_n -> C_{n-1}, n >= 1
        d_n1 = zero if (n + 1) % 2 == 1 else two_x
        ker = 2 - rank(d_n) if n >= 1 else 2
        dims[n] = ker - rank(d_n1)
    return dims


def _dual_numbers_small_mixed_complex(top: int, field=QQ):
    """The classical reduced-model mixed complex of k[x]/x^2: two generators
    per homological degree n >= 0, written (1; x^n) and (x; x^n), with

        b(1; x^n) = (1 + (-1)^n) (x; x^{n-1}),   b(x; x^n) = 0,
        B(x; x^n) = (n+1) (1; x^{n+1}) for n even, else 0,   B(1; x^n) = 0.

    Assembled directly from these closed-form coefficients, independently of
    the generic word enumeration.
    """
    basis = {}   # degree -> ["one", "x"] labels mean (1;x^n), (x;x^n)
    for n in range(0, top + 1):
        basis[n] = [("one", n), ("x", n)]

    def b_map(gen):
        head, n = gen
        if head == "one" and n >= 1 and n % 2 == 0:
            return [(("x", n - 1), field.of(2))]
        return []

    def B_map(gen):
        head, n = gen
        if head == "x" and n % 2 == 0 and n + 1 <= top:
            return [(("one", n + 1), field.of(n + 1))]
        return []

    return basis, b_map, B_map


def dual_numbers_cyclic_oracle(window, N: int, field=QQ) -> dict:
    """HC and HC^- dims of k[x]/x^2 on the window, from the small 2-generator
    mixed complex; HC is exact (the complex is bounded below), HC^- uses the
    same u-power truncation semantics as the pipeline."""
    lo, hi = window
    top = max(hi + 2 * N + 4, 4)
    basis, b_map, B_map = _dual_numbers_small_mixed_complex(top, field)

    def homology_dims(space, diff):
        # space: degree -> list of generators; diff: (gen, i) pairs per element
        index = {dgr: {g: i for i, g in enumerate(gens)} for dgr, gens in space.items()}
        dims = {}
        for n in range(lo, hi + 1):
            gens = space.get(n, [])
            below = space.get(n - 1, [])
            above = space.get(n + 1, [])
            bi = {g: i for i, g in enumerate(below)}
            cols_n = [
                {bi[t]: c for t, c in diff(g, n) if t in bi} for g in gens
            ]
            d_n = SparseMatrix.from_columns(cols_n, len(below), field)
            gi = {g: i for i, g in enumerate(gens)}
            cols_n1 = [
                {gi[t]: c for t, c in diff(g, n + 1) if t in gi} for g in above
            ]
            d_n1 = SparseMatrix.from_columns(cols_n1, len(gens), field)
            dims[n] = (len(gens) - rank(d_n)) - rank(d_n1)
        return dims

    # cyclic: generators (g, i) with u^{-i}, i >= 0; degree n = deg(g) + 2i
    cyc_space = {}
    for n in range(lo - 1, hi + 2):
        gens = []
        for i in range(0, N):
            m = n - 2 * i
            if m in basis:
                gens.extend([(g, i) for g in basis[m]])
        cyc_space[n] = gens

    def cyc_diff(gen, n):
        g, i = gen
        out = [((t, i), c) for t, c in b_map(g)]
        if i >= 1:
            out.extend([((t, i - 1), c) for t, c in B_map(g)])
        return out

    # negative cyclic: generators (g, i) with u^{+i}, 0 <= i < N; degree = deg(g) - 2i
    neg_space = {}
    for n in range(lo - 1, hi + 2):
        gens = []
        for i in range(0, N):
            m = n + 2 * i
            if m in basis:
                gens.extend([(g, i) for g in basis[m]])
        neg_space[n] = gens

    def neg_diff(gen, n):
        g, i = gen
        out = [((t, i), c) for t, c in b_map(g)]
        if i + 1 < N:
            out.extend([((t, i + 1), c) for t, c in B_map(g)])
        return out

    return {
        "hc": homology_dims(cyc_space, cyc_diff),
        "hc_minus": homology_dims(neg_space, neg_diff),
    }


def ground_field_cyclic_oracle(window, N: int) -> dict:
    """Direct evaluation of the definition for k: the reduced complex is k in
    degree 0 with b = B = 0."""
    lo, hi = window
    hc = {n: (1 if n >= 0 and n % 2 == 0 and n // 2 < N else 0) for n in range(lo, hi + 1)}
    hcm = {n: (1 if n <= 0 and n % 2 == 0 and (-n) // 2 < N else 0) for n in range(lo, hi + 1)}
    return {"hc": hc, "hc_minus": hcm}


# ---------------------------------------------------------------------------
# randomized categories


def random_category(seed: int, max_objects: int = 2, max_generators: int = 3,
                    degree_range=(-1, 1), field=QQ) -> CatalogEntry:
    """Seeded random DG category, valid by construction.

    Free category on a few generators, quotiented by all words of length > 2
    plus a random subset of the length-2 words; the differential sends a
    generator to a random multiple of a closed generator that never appears in
    a kept product, which keeps d^2 = 0 and the Leibniz rule exact.  Biased
    toward nonzero differentials so sign bugs cannot hide.
    """
    # total non-identity basis is capped at 4 so bar complexes at L = 6 stay
    # at desk scale even when every letter is a loop
    basis_budget = 4
    rng = random.Random(seed)
    n_obj = rng.randint(1, max_objects)
    objects = tuple(f"o{i}" for i in range(1, n_obj + 1))
    n_gen = rng.randint(2, min(max_generators, 3))
    base = []
    for i in range(1, n_gen + 1):
        src = rng.choice(objects)
        tgt = rng.choice(objects)
        deg = rng.randint(degree_range[0], degree_range[1])
        base.append((f"g{i}", src, tgt, deg))

    # product-participating generators; their d-images must avoid this set
    k_gen = [g for g in base if rng.random() < 0.7]

    # the remaining budget is split between kept length-2 products (b_mu sign
    # coverage) and fresh d-image generators (b_delta/Leibniz coverage); a
    # per-seed coin decides which gets first pick
    d_first = rng.random() < 0.5

    def pick_products(cap):
        kept = []
        for (n2, s2, t2, d2) in k_gen:
            for (n1, s1, t1, d1) in k_gen:
                if t1 == s2 and len(kept) < cap:
                    kept.append((n2, n1, s1, t1, t2, d1 + d2))
        return kept

    def pick_extras(cap):
        # d(g) = c * h with h a fresh closed generator (same endpoints, degree
        # deg + 1) that never joins k_gen and never gets its own differential,
        # which makes d^2 = 0 and the Leibniz rule hold by construction
        d_of, extra = {}, []
        for (nm, src, tgt, deg) in base:
            if rng.random() < 0.85 and len(extra) < cap:
                h = (f"g{n_gen + len(extra) + 1}", src, tgt, deg + 1)
                extra.append(h)
                d_of[nm] = (h[0], Fraction(rng.choice([1, -1, 2])))
        return d_of, extra

    budget = max(0, basis_budget - n_gen)
    if d_first:
        d_of, extra = pick_extras(min(budget, 1 + (budget > 1)))
        kept_products = pick_products(budget - len(extra))
    else:
        kept_products = pick_products(min(budget, 1))
        d_of, extra = pick_extras(budget - len(kept_products))
    gens = base + extra

    hom_basis = {}  # (s,t) -> list of (label, degree)
    for o in objects:
        hom_basis.setdefault((o, o), []).append((f"id_{o}", 0))
    for (nm, s, t, dg) in gens:
        hom_basis.setdefault((s, t), []).append((nm, dg))
    for (n2, n1, s, mid, t, dg) in kept_products:
        hom_basis.setdefault((s, t), []).append((f"{n2}*{n1}", dg))

    hom = {}
    for key, labs in hom_basis.items():
        hom[key] = GradedBasisSpace(tuple(l for l, _ in labs), {l: d for l, d in labs})
    ids = {o: f"id_{o}" for o in objects}

    labels_at = {key: {l for l, _ in labs} for key, labs in hom_basis.items()}

    def product(g_info, f_info):
        # g o f for non-identity basis letters; only kept length-2 words survive
        gn, gs, gt, _ = g_info
        fn, fs, ft, _ = f_info
        lab = f"{gn}*{fn}"
        if lab in labels_at.get((fs, gt), set()):
            return {lab: field.one}
        return {}

    gen_info = {g[0]: g for g in gens}
    compose = {}
    # identity rows
    for (s, t), labs in hom_basis.items():
        for (lab, _) in labs:
            compose.setdefault((s, t, t), {})[(f"id_{t}", lab)] = {lab: field.one}
            if lab != f"id_{s}" or s != t:
                compose.setdefault((s, s, t), {})[(lab, f"id_{s}")] = {lab: field.one}
    # generator-by-generator products
    for g2 in gens:
        for g1 in gens:
            if g1[2] == g2[1]:
                img = product(g2, g1)
                if img:
                    compose.setdefault((g1[1], g1[2], g2[2]), {})[(g2[0], g1[0])] = img
    # products involving composite words or pool letters vanish: omitted

    d = {}
    for (nm, s, t, dg) in gens:
        if nm in d_of:
            h, c = d_of[nm]
            d.setdefault((s, t), {})[nm] = {h: field.of(c)}

    cat = DGCategory(objects, hom, d, compose, ids, field, name=f"random[{seed}]")
    return CatalogEntry(f"random:{seed}", cat, oracle="generator-contract")


# ---------------------------------------------------------------------------
# name-based lookup (CLI surface)


def entry(name: str, field=QQ) -> CatalogEntry:
    key = name.strip().lower()
    if key in ("k", "ground_field", "ground-field"):
        return ground_field(field)
    if key == "a2":
        return a2(field)
    if key == "a3":
        return a3(field)
    if key in ("dual_numbers", "dual-numbers"):
        return dual_numbers(field)
    if key.startswith("exterior:"):
        return exterior_generator(int(key.split(":", 1)[1]), field)
    if key.startswith("an:"):
        n = int(key.split(":", 1)[1])
        e = acyclic_quiver(linear_quiver(n), field, name=f"a{n}")
        e.name = f"a{n}"
        return e
    if key.startswith("random:"):
        return random_category(int(key.split(":", 1)[1]), field=field)
    raise InconsistentInputError(f"unknown catalog entry: {name}")


def catalog_names():
    return ["ground_field", "a2", "a3", "an:<n>", "dual_numbers",
            "exterior:<odd degree>", "random:<seed>"]
