"""Meta-tests: the identity suite must be able to fail.

A nilpotent two-object category with nonzero wrap products makes the
wrap term of the bar differential distinguishable by object bookkeeping,
so a deliberately tampered sign is caught by the machine check."""

from fractions import Fraction

from dghom.catalog import dual_numbers
from dghom.dgcore import (
    ComputationParams,
    DGCategory,
    GradedBasisSpace,
    matrix_amplification,
    validate,
)
from dghom.exactla import QQ
from dghom.hochschild import MixedComplex, hh, identity_check, kunneth_check


def two_object_loop_category():
    """Objects p, q; u: p -> q, v: q -> p with u.v = w_q, v.u = w_p and all
    products involving w vanishing (a square-zero two-object extension)."""
    one = QQ.one
    hom = {
        ("p", "p"): GradedBasisSpace(("id_p", "wp"), {"id_p": 0, "wp": 0}),
        ("q", "q"): GradedBasisSpace(("id_q", "wq"), {"id_q": 0, "wq": 0}),
        ("p", "q"): GradedBasisSpace(("u",), {"u": 0}),
        ("q", "p"): GradedBasisSpace(("v",), {"v": 0}),
    }
    compose = {
        ("p", "p", "p"): {("id_p", "id_p"): {"id_p": one}, ("id_p", "wp"): {"wp": one},
                          ("wp", "id_p"): {"wp": one}, ("wp", "wp"): {}},
        ("q", "q", "q"): {("id_q", "id_q"): {"id_q": one}, ("id_q", "wq"): {"wq": one},
                          ("wq", "id_q"): {"wq": one}, ("wq", "wq"): {}},
        ("p", "p", "q"): {("u", "id_p"): {"u": one}, ("u", "wp"): {}},
        ("p", "q", "q"): {("id_q", "u"): {"u": one}, ("wq", "u"): {}},
        ("q", "q", "p"): {("v", "id_q"): {"v": one}, ("v", "wq"): {}},
        ("q", "p", "p"): {("id_p", "v"): {"v": one}, ("wp", "v"): {}},
        ("p", "q", "p"): {("v", "u"): {"wp": one}},
        ("q", "p", "q"): {("u", "v"): {"wq": one}},
    }
    cat = DGCategory(("p", "q"), hom, {}, compose,
                     {"p": "id_p", "q": "id_q"}, QQ, name="loops")
    assert validate(cat).ok
    return cat


def test_loop_category_identities_hold():
    assert identity_check(two_object_loop_category(), 5)["ok"]


def test_tampered_wrap_sign_is_caught(monkeypatch):
    # negate exactly the wrap terms (recognizable: the object cycle loses its
    # first entry); the mixed-complex identity check must then fail
    orig = MixedComplex._b_word

    def tampered(self, w):
        out = dict(orig(self, w))
        if len(w.objects) >= 2 and w.objects[1:] != w.objects[:-1]:
            fld = self.category.field
            flipped = {}
            for w2, cv in out.items():
                if w2.objects == w.objects[1:]:
                    flipped[w2] = fld.neg(cv)
                else:
                    flipped[w2] = cv
            return flipped
        return out

    monkeypatch.setattr(MixedComplex, "_b_word", tampered)
    chk = identity_check(two_object_loop_category(), 5)
    assert not chk["ok"]
    assert chk["witness"] is not None


def test_morita_for_nonsemisimple_amplification():
    # the dual numbers are not semisimple; their 2-fold amplification must
    # still have the same HH dims on mutually stable degrees
    p = ComputationParams(L=5, N=3, lo=0, hi=3)
    dn = dual_numbers().category
    amp, _ = matrix_amplification(dn, 2)
    p1, p2 = hh(dn, p), hh(amp, p)
    compared = 0
    for n in range(p.lo, p.hi + 1):
        if p1.degrees[n].stable and p2.degrees[n].stable:
            assert p1.degrees[n].dim == p2.degrees[n].dim, n
            compared += 1
    assert compared >= 3


def test_kunneth_a2_squared():
    from dghom.catalog import a2

    p = ComputationParams(L=4, N=3, lo=-1, hi=3)
    r = kunneth_check(a2().category, a2().category, p)
    assert r["all_match"]
    assert r[0]["tensor_dim"] == 4  # 2 x 2 vertex classes
