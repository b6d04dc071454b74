import pytest

from rootspace.catalog import MappingId, apply_mapping
from rootspace.errors import NegativePowerGroup, UnsupportedFamily
from rootspace.limits import (
    LIMIT_MODES,
    ORDER_ONE,
    TENSOR_COLLAPSE,
    collapse,
    commutativize,
    leibniz_expand,
    limit_applier,
    limit_mapping_set,
)
from rootspace.tensor import add, mono, scale, tensor_concat
from rootspace.scalars import Coefficient
from rootspace.textio import parse_poly
from rootspace.words import gen_word


def poly(text):
    return parse_poly(text)


def test_commutativize_sorts_words():
    assert commutativize(poly("g1*f1")) == poly("f1*g1")
    assert commutativize(poly("g1*d(f1) - d(f1)*g1")) == poly("0")
    # tensor factors keep their positions; only words are sorted
    assert commutativize(poly("g1 # f1")) == poly("g1 # f1")


def test_commutativize_recurses_into_groups():
    assert commutativize(poly("d(g1*f1)")) == poly("d(f1*g1)")
    assert commutativize(poly("d^2(d(g1)*f1*g1)")) == poly("d^2(f1*g1*d(g1))")


def test_commutativize_idempotent():
    p = poly("d(g1*f1) # h1*f1 - 2*f1 # f1")
    assert commutativize(commutativize(p)) == commutativize(p)


def test_commutativize_product_symmetry():
    a, b = poly("f1*d(g1)"), poly("h1")
    from rootspace.tensor import pointwise_product

    assert commutativize(pointwise_product(a, b)) == commutativize(
        pointwise_product(b, a)
    )


def test_leibniz_expand_first_derivative():
    assert leibniz_expand(poly("d(f1*g1)")) == poly("d(f1)*g1 + f1*d(g1)")


def test_leibniz_expand_second_derivative():
    out = leibniz_expand(poly("d^2(f1*g1)"))
    assert out == poly("d^2(f1)*g1 + 2*d(f1)*d(g1) + f1*d^2(g1)")


def test_leibniz_expand_three_factors():
    out = leibniz_expand(poly("d(f1*g1*h1)"))
    assert out == poly("d(f1)*g1*h1 + f1*d(g1)*h1 + f1*g1*d(h1)")


def test_leibniz_expand_nested_groups():
    # d(f * d(g*h)) -> d(f)*d(g*h) + f*d^2(g*h), then the inner groups
    # expand as well
    out = leibniz_expand(poly("d(f1*d(g1*h1))"))
    expected = poly(
        "d(f1)*d(g1)*h1 + d(f1)*g1*d(h1)"
        " + f1*d^2(g1)*h1 + 2*f1*d(g1)*d(h1) + f1*g1*d^2(h1)"
    )
    assert out == expected


def test_leibniz_expand_flat_words_unchanged():
    p = poly("f1*d(g1) # d^3(h1)")
    assert leibniz_expand(p) == p


def test_leibniz_expand_rejects_antiderivative_groups():
    with pytest.raises(NegativePowerGroup):
        leibniz_expand(poly("d^-1(f1*g1)"))
    with pytest.raises(NegativePowerGroup):
        leibniz_expand(poly("f1*d^-2(g1*h1)"))


def test_leibniz_commutes_with_commutativize():
    p = poly("d^2(g1*f1) # d(f1*h1*g1)")
    assert commutativize(leibniz_expand(p)) == commutativize(
        leibniz_expand(commutativize(p))
    )


def test_collapse_folds_factors():
    assert collapse(poly("f1 # g1 # h1")) == poly("f1*g1*h1")
    assert collapse(poly("f1")) == poly("f1")
    assert collapse(poly("d(f1) # d(f2*g1)")) == poly("d(f1)*d(f2*g1)")


def test_limit_mapping_set_order_one_forms():
    expected = {
        "ncrs-witt": {"K": "f1*d(g1) - d(f1)*g1"},
        "ncrs-ricci": {
            "Kplus": "f1*g1",
            "Kminus": "-f1*g1",
            "K00": "0",
            "K0": "d(f1*g1)",
        },
        "ncrs-poisson": {
            "Kplus": "-i*d(f1)*g1",
            "Kminus": "i*d(f1)*g1",
            "K00": "0",
            "K0": "-i*d(f1*g1)",
        },
        "ncrs-poisson-type-v1": {
            "Kplus": "-i*f1*d(g1)",
            "Kminus": "i*d(f1)*g1",
            "K00": "-i*f1*d(g1) + i*d(f1)*g1",
            "K0": "-i*d(f1*g1)",
        },
        "ncrs-poisson-type-v2": {
            "Kplus": "-i*d(f1)*g1",
            "Kminus": "i*f1*d(g1)",
            "K00": "i*f1*d(g1) - i*d(f1)*g1",
            "K0": "-i*d(f1*g1)",
        },
        "ncrs-integral": {
            "Kplus": "-2*i*d(f1)*g1",
            "Kminus": "2*i*d(f1)*g1",
            "K00": "0",
            "K0": "-i*d^-1(f1*g1)",
        },
    }
    for family, maps in expected.items():
        ms = limit_mapping_set(family, ORDER_ONE)
        assert ms.family == family
        assert ms.limit_mode == ORDER_ONE
        got = {str(mid): value for mid, value in ms.maps.items()}
        assert set(got) == set(maps)
        for name, text in maps.items():
            assert got[name] == poly(text), (family, name)


def test_limit_mapping_set_collapse_differs_only_on_integral_k0():
    for family in (
        "ncrs-witt",
        "ncrs-ricci",
        "ncrs-poisson",
        "ncrs-poisson-type-v1",
        "ncrs-poisson-type-v2",
    ):
        one = limit_mapping_set(family, ORDER_ONE)
        col = limit_mapping_set(family, TENSOR_COLLAPSE)
        assert one.maps == col.maps, family
    col = limit_mapping_set("ncrs-integral", TENSOR_COLLAPSE)
    got = {str(mid): value for mid, value in col.maps.items()}
    assert got["K0"] == poly("-i*d^-1(f1)*d^-1(g1)")
    assert got["Kplus"] == poly("-2*i*d(f1)*g1")


def test_limit_mapping_set_rejects_classical_and_bad_modes():
    with pytest.raises(UnsupportedFamily):
        limit_mapping_set("classical-witt", ORDER_ONE)
    with pytest.raises(UnsupportedFamily):
        limit_mapping_set("ncrs-witt", "foo")
    assert set(LIMIT_MODES) == {ORDER_ONE, TENSOR_COLLAPSE}


def test_limit_applier_matches_mapping_set_on_generics():
    f1 = mono((gen_word("f", 1),))
    g1 = mono((gen_word("g", 1),))
    for family in ("ncrs-poisson", "ncrs-integral"):
        apply_limit = limit_applier(family, ORDER_ONE)
        ms = limit_mapping_set(family, ORDER_ONE)
        for mid, value in ms.maps.items():
            assert commutativize(apply_limit(mid, f1, g1)) == value


def test_limit_applier_is_bilinear():
    f1 = mono((gen_word("f", 1),))
    g1 = mono((gen_word("g", 1),))
    h1 = mono((gen_word("h", 1),))
    apply_limit = limit_applier("ncrs-poisson", ORDER_ONE)
    mid = MappingId("Kplus")
    c = Coefficient.of(3, 1)
    lhs = apply_limit(mid, add(f1, scale(c, h1)), g1)
    rhs = add(apply_limit(mid, f1, g1), scale(c, apply_limit(mid, h1, g1)))
    assert lhs == rhs


def test_limit_applier_rejects_bad_input():
    with pytest.raises(UnsupportedFamily):
        limit_applier("classical-poisson", ORDER_ONE)
    with pytest.raises(UnsupportedFamily):
        limit_applier("ncrs-witt", "bogus")


def test_order_one_limit_of_higher_order_argument_still_works():
    # the rebound concatenation glues, so outputs stay at order 1 even
    # when callers feed order-1 polynomials through nested applications
    apply_limit = limit_applier("ncrs-ricci", ORDER_ONE)
    f1 = mono((gen_word("f", 1),))
    g1 = mono((gen_word("g", 1),))
    inner = apply_limit(MappingId("K0"), f1, g1)
    outer = apply_limit(MappingId("Kplus"), inner, g1)
    assert outer.order() == 1
