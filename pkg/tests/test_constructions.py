import pytest

from dghom.catalog import Quiver, a2, ground_field, path_category
from dghom.constructions import (
    diagonal_bimodule,
    glue,
    one_dimensional_module,
    restrict_bimodule,
    zero_bimodule,
)
from dghom.dgcore import (
    DGFunctorData,
    matrix_amplification,
    validate,
    validate_bimodule,
)
from dghom.exactla import InconsistentInputError


def two_points():
    k1 = path_category(Quiver(["p"], []), name="k1")
    k2 = path_category(Quiver(["q"], []), name="k2")
    return k1, k2


def test_glue_zero_bimodule_is_disjoint_union():
    k1, k2 = two_points()
    g = glue(k1, k2, zero_bimodule(k1, k2))
    assert validate(g.category).ok
    assert set(g.category.objects) == {"p", "q"}
    assert g.category.space("p", "q").dim == 0
    assert g.category.space("q", "p").dim == 0
    assert g.provenance == {"p": "A", "q": "B"}


def test_glue_k_k_k_is_a2_shaped():
    k1, k2 = two_points()
    m = one_dimensional_module(k1, k2, ("p", "q"))
    g = glue(k1, k2, m)
    cat = g.category
    assert validate(cat).ok
    assert cat.space("p", "q").dim == 1
    assert cat.space("q", "p").dim == 0
    # hom tables agree with the a2 path category up to renaming
    ref = a2().category
    assert sorted(sp.dim for sp in cat.hom.values()) == sorted(
        sp.dim for sp in ref.hom.values()
    )


def test_glue_strict_zero_block():
    b = a2().category
    k = path_category(Quiver(["p"], []), name="kp")
    m = one_dimensional_module(b, k, ("y", "p"))
    g = glue(b, k, m)
    assert validate(g.category).ok
    assert len(g.category.objects) == 3
    for u in k.objects:
        for x in b.objects:
            assert g.category.space(u, x).dim == 0


def test_glue_orientation_mismatch():
    k1, k2 = two_points()
    m = one_dimensional_module(k1, k2, ("p", "q"))
    with pytest.raises(InconsistentInputError):
        glue(k2, k1, m)


def test_glue_object_name_clash():
    k1 = path_category(Quiver(["p"], []))
    k1b = path_category(Quiver(["p"], []))
    with pytest.raises(InconsistentInputError):
        glue(k1, k1b, zero_bimodule(k1, k1b))


def test_diagonal_bimodule_ground_field():
    k = ground_field().category
    m = diagonal_bimodule(k)
    assert validate_bimodule(m).ok
    assert m.space("pt", "pt").dim == 1


def test_diagonal_bimodule_a2_dims():
    c = a2().category
    m = diagonal_bimodule(c)
    assert validate_bimodule(m).ok
    dims = {(x, y): m.space(x, y).dim for x in c.objects for y in c.objects}
    assert dims == {("x", "x"): 1, ("x", "y"): 1, ("y", "x"): 0, ("y", "y"): 1}
    total = sum(dims.values())
    assert total == c.total_dim()


def test_one_dimensional_module_validates():
    k1, k2 = two_points()
    m = one_dimensional_module(k1, k2, ("p", "q"))
    assert validate_bimodule(m).ok


def test_restrict_along_identities():
    c = a2().category
    m = diagonal_bimodule(c)
    ident = DGFunctorData(c, c, {x: x for x in c.objects},
                          {key: {l: {l: c.field.one} for l in sp.labels}
                           for key, sp in c.hom.items()})
    r = restrict_bimodule(ident, ident, m)
    assert validate_bimodule(r).ok
    for key, sp in m.spaces.items():
        assert r.space(*key).labels == sp.labels


def test_restrict_diagonal_along_corner_is_corner_diagonal():
    c = a2().category
    amp, incl = matrix_amplification(c, 2)
    m_amp = diagonal_bimodule(amp)
    r = restrict_bimodule(incl, incl, m_amp)
    assert validate_bimodule(r).ok
    m_c = diagonal_bimodule(c)
    for x in c.objects:
        for y in c.objects:
            assert r.space(x, y).dim == m_c.space(x, y).dim
