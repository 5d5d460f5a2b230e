import pytest
from fractions import Fraction

from dghom.catalog import Quiver, a2, a3, dual_numbers, ground_field, path_category
from dghom.constructions import one_dimensional_module, zero_bimodule
from dghom.dgcore import ComputationParams, matrix_amplification, opposite, tensor
from dghom.exactla import InconsistentInputError, rank
from dghom.hochschild import Word, apply_functor_on_chains, hh
from dghom.chern import (
    K0Class,
    UnsupportedInputError,
    ch,
    ch_diagonal,
    diagonal_module,
    gluing_component_check,
    k0_cone_of_identity,
    k0_representable,
    k0_shift,
    k0_sum,
    kunneth_split,
    module_from_bimodule,
    pairing_check,
    phi0,
    reconstruct_quiver,
    resolution_coefficient_matrix,
    resolve_module,
)

PARAMS = ComputationParams(L=5, N=3, lo=-2, hi=4)


def class_coords(cat, chain, params=PARAMS):
    pres = hh(cat, params)
    h0 = pres.degrees[0]
    if chain:
        _, vec = pres.complex.vector(chain)
    else:
        vec = {}
    return h0.express(vec)


def test_ch_of_unit_representable():
    k = ground_field().category
    chain = ch(k0_representable(k, "pt"))
    assert chain == {Word(("pt",), "1", ()): Fraction(1)}


def test_ch_zero_idempotent():
    k = ground_field().category
    zero = K0Class(k, [(0, ("pt",), {})])
    assert ch(zero) == {}


def test_ch_additive_and_shift_sign():
    k = ground_field().category
    x = k0_representable(k, "pt")
    two = ch(k0_sum(x, x))
    assert two == {Word(("pt",), "1", ()): Fraction(2)}
    assert ch(k0_shift(x, 1)) == {Word(("pt",), "1", ()): Fraction(-1)}
    assert ch(k0_shift(x, 2)) == ch(x)


def test_ch_cone_vanishes():
    c = a2().category
    assert ch(k0_cone_of_identity(c, "x")) == {}


def test_idempotent_law_checked_exactly():
    c = a2().category
    fld = c.field
    bad = K0Class(c, [(0, ("x", "y"), {(0, 0): {"id_x": fld.one},
                                       (0, 1): {"a": fld.one},
                                       (1, 1): {"id_y": fld.one},
                                       (1, 0): {}})])
    # e.e has (0,1) entry 2a != a
    with pytest.raises(InconsistentInputError):
        ch(bad)


def test_nontrivial_idempotent_over_amplification():
    # e = [[id, f],[0, 0]] is strictly idempotent; its trace class equals the
    # corner representable pushed along the inclusion
    k = ground_field().category
    amp, incl = matrix_amplification(k, 2)
    fld = amp.field
    o1, o2 = amp.objects
    f12 = amp.space(o2, o1).labels[0]  # a morphism o2 -> o1
    e = K0Class(amp, [(0, (o1, o2), {
        (0, 0): {amp.ids[o1]: fld.one},
        (0, 1): {f12: fld.one},
    })])
    chain = ch(e)
    pushed = apply_functor_on_chains(incl, ch(k0_representable(k, "pt")))
    assert class_coords(amp, chain) == class_coords(amp, pushed)


def test_ch_functoriality_along_corner():
    c = a2().category
    amp, incl = matrix_amplification(c, 2)
    x = k0_representable(c, "x")
    pushed_class = k0_representable(amp, incl.object_map["x"])
    lhs = class_coords(amp, ch(pushed_class))
    rhs = class_coords(amp, apply_functor_on_chains(incl, ch(x)))
    assert lhs == rhs


def test_ch_requires_degree_zero():
    from dghom.catalog import exterior_generator

    c = exterior_generator(-1).category
    with pytest.raises(UnsupportedInputError):
        ch(k0_representable(c, "pt"))


def test_ch_diagonal_coefficients():
    for e, expected in [
        (ground_field(), {("pt", "pt"): 1}),
        (a2(), {("x", "x"): 1, ("y", "y"): 1, ("x", "y"): -1}),
        (a3(), {("x", "x"): 1, ("y", "y"): 1, ("z", "z"): 1,
                ("x", "y"): -1, ("y", "z"): -1}),
    ]:
        q = e.quiver or Quiver(["pt"], [])
        chain, cls, E = ch_diagonal(e.category, q, PARAMS)
        got = {}
        for w, cv in chain.items():
            body = w.objects[0][1:-1].split(",")
            got[(body[0], body[1])] = int(cv)
        assert got == expected, e.name


def test_generic_resolver_agrees_with_two_term():
    # resolving the diagonal module iteratively reproduces the two-term class
    for e in [a2(), a3()]:
        mod, E = diagonal_module(e.category)
        levels = resolve_module(mod)
        counts = resolution_coefficient_matrix(levels)
        chain, _, _ = ch_diagonal(e.category, e.quiver, PARAMS)
        expected = {w.objects[0]: int(cv) for w, cv in chain.items()}
        assert counts == expected


def test_resolver_unsupported_on_nondirected():
    # the dual numbers' diagonal has no finite resolution by representables
    mod, E = diagonal_module(dual_numbers().category)
    with pytest.raises(UnsupportedInputError):
        resolve_module(mod, max_steps=6)


def test_kunneth_split_single_product_class():
    k = ground_field().category
    E = tensor(k, k)
    chain = {Word(("(pt,pt)",), "(1,1)", ()): Fraction(1)}
    comps = kunneth_split(chain, k, k, PARAMS, E=E)
    assert comps.matrix == {(0, 0): Fraction(1)}


def test_kunneth_split_zero_class():
    k = ground_field().category
    comps = kunneth_split({}, k, k, PARAMS)
    assert comps.matrix == {}


def test_kunneth_split_diagonal_of_a2():
    c = a2().category
    chain, _, E = ch_diagonal(c, a2().quiver, PARAMS)
    comps = kunneth_split(chain, c, opposite(c), PARAMS, E=E)
    mat = comps.as_sparse(c.field)
    assert (comps.left_dim, comps.right_dim) == (2, 2)
    assert rank(mat) == 2
    # components sum back to the class: the defining linear system is exact,
    # re-verify by reconstructing the chain coordinates
    total = sum(abs(v) for v in comps.matrix.values())
    assert total == 3  # +1, +1, -1


def test_pairing_invertible_on_catalog():
    for e in [ground_field(), a2(), a3()]:
        q = e.quiver or Quiver(["pt"], [])
        assert pairing_check(e.category, q, PARAMS)["invertible"], e.name


def test_phi0_vanishes_for_diagonal_classes():
    for e in [a2(), a3()]:
        chain, _, _ = ch_diagonal(e.category, e.quiver, PARAMS)
        r = phi0(chain, e.category, opposite(e.category), PARAMS)
        assert r["verdict"] == "zero"
        assert r["components"] == {}


def test_phi0_over_k_tensor_k():
    k = ground_field().category
    E = tensor(k, k)
    x = k0_representable(E, E.objects[0])
    r = phi0(ch(x), k, k, PARAMS)
    assert r["verdict"] == "zero"


def test_phi0_reports_against_dual_numbers_leg():
    # the conjecture-style prediction is zero; for the non-smooth dual
    # numbers leg the pipeline reports what it computes, with the window
    k = ground_field().category
    dn = dual_numbers().category
    E = tensor(k, dn)
    x = k0_representable(E, E.objects[0])
    r = phi0(ch(x), k, dn, PARAMS)
    assert r["verdict"] in ("zero", "nonzero", "unstable")
    assert r["window"] == (PARAMS.L, PARAMS.N)


def test_gluing_components_zero_bimodule():
    k1 = path_category(Quiver(["p"], []), name="k1")
    k2 = path_category(Quiver(["q"], []), name="k2")
    k2op = opposite(k2)
    r = gluing_component_check(k1, k2, zero_bimodule(k1, k2op),
                               Quiver(["p"], []), Quiver(["q"], []), PARAMS)
    assert r["ok"]
    assert r["components"]["BC"] == {}


def test_gluing_components_k_k_k():
    k1 = path_category(Quiver(["p"], []), name="k1")
    k2 = path_category(Quiver(["q"], []), name="k2")
    k2op = opposite(k2)
    m = one_dimensional_module(k1, k2op, ("p", "q"))
    r = gluing_component_check(k1, k2, m, Quiver(["p"], []), Quiver(["q"], []),
                               PARAMS)
    assert r["ok"]
    assert r["components"]["BC"] == {("p", "q"): Fraction(-1)}


def test_gluing_components_a2_k_simple_module():
    b = a2().category
    kc = path_category(Quiver(["z"], []), name="kz")
    kcop = opposite(kc)
    m = one_dimensional_module(b, kcop, ("y", "z"))
    r = gluing_component_check(b, kc, m, a2().quiver, Quiver(["z"], []), PARAMS)
    assert r["ok"]
    # the relation term of the three-step resolution shows up with sign +1
    assert r["components"]["BC"] == {("y", "z"): Fraction(-1),
                                     ("x", "z"): Fraction(1)}
    assert r["resolution_levels"] == [3, 2, 1]


def test_module_from_bimodule_resolution():
    b = a2().category
    kc = path_category(Quiver(["z"], []), name="kz")
    kcop = opposite(kc)
    m = one_dimensional_module(b, kcop, ("y", "z"))
    mod, E = module_from_bimodule(m, b, kc)
    levels = resolve_module(mod)
    counts = resolution_coefficient_matrix(levels)
    assert counts == {"(y,z)": 1, "(x,z)": -1}


def test_reconstruct_quiver_roundtrip():
    for e in [ground_field(), a2(), a3()]:
        q = reconstruct_quiver(e.category)
        assert sorted(q.vertices) == sorted(e.category.objects)
        want = len(e.quiver.arrows) if e.quiver else 0
        assert len(q.arrows) == want


def test_reconstruct_quiver_rejects_dual_numbers():
    with pytest.raises(UnsupportedInputError):
        reconstruct_quiver(dual_numbers().category)
