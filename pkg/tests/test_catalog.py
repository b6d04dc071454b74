import pytest

from rootspace.catalog import (
    CLASSICAL_FAMILIES,
    FAMILIES,
    NCRS_FAMILIES,
    MappingId,
    apply_mapping,
    family_slots,
    generic_monomial,
    mapping_table,
    parse_mapping,
)
from rootspace.errors import OrderMismatch, UnsupportedFamily, UnsupportedMapping
from rootspace.scalars import Coefficient
from rootspace.tensor import ZERO_POLY, add, mono, neg, scale, sub, tensor_concat
from rootspace.textio import parse_poly
from rootspace.words import gen_word


def poly(text):
    return parse_poly(text)


F = poly("f1")
G = poly("g1")
F12 = poly("f1 # f2")
G12 = poly("g1 # g2")


def test_family_lists():
    assert len(NCRS_FAMILIES) == 6
    assert len(CLASSICAL_FAMILIES) == 4
    assert set(NCRS_FAMILIES) | set(CLASSICAL_FAMILIES) == set(FAMILIES)


def test_family_slots():
    assert family_slots("ncrs-witt") == ("K",)
    assert family_slots("classical-witt") == ("K",)
    assert family_slots("ncrs-ricci") == ("Kplus", "Kminus", "K00", "K0")
    assert family_slots("classical-poisson") == ("Kplus", "Kminus", "K00", "K0", "Knm")
    with pytest.raises(UnsupportedFamily):
        family_slots("ncrs-bogus")


def test_mapping_id_validation():
    MappingId("K")
    MappingId("Knm", (1, -1))
    with pytest.raises(UnsupportedMapping):
        MappingId("Kx")
    with pytest.raises(UnsupportedMapping):
        MappingId("K0", (1,))
    with pytest.raises(UnsupportedMapping):
        MappingId("Knm")


def test_parse_mapping():
    assert parse_mapping("K") == MappingId("K")
    assert parse_mapping("K00") == MappingId("K00")
    assert parse_mapping(" Knm( 2 , -1 ) ") == MappingId("Knm", (2, -1))
    for bad in ("K9", "Knm", "K0(1,2)", "", "knm(1,2)"):
        with pytest.raises(UnsupportedMapping):
            parse_mapping(bad)


def test_wrong_slot_for_family():
    with pytest.raises(UnsupportedMapping):
        apply_mapping("ncrs-witt", MappingId("K0"), F, G)
    with pytest.raises(UnsupportedMapping):
        apply_mapping("ncrs-ricci", MappingId("K"), F, G)
    with pytest.raises(UnsupportedMapping):
        apply_mapping("ncrs-poisson", MappingId("Knm", (1, 1)), F, G)
    with pytest.raises(UnsupportedFamily):
        apply_mapping("nope", MappingId("K"), F, G)


def test_witt_bracket_values():
    out = apply_mapping("ncrs-witt", MappingId("K"), F, G)
    assert out == poly("f1*d(g1) - g1*d(f1)")
    out2 = apply_mapping("ncrs-witt", MappingId("K"), F12, G)
    assert out2 == poly("f1 # f2*d(g1) - g1*d(f1) # f2")
    # antisymmetry on mixed orders
    assert apply_mapping("ncrs-witt", MappingId("K"), G, F12) == neg(out2)


def test_ricci_values():
    assert apply_mapping("ncrs-ricci", MappingId("Kplus"), F, G) == poly("f1 # g1")
    assert apply_mapping("ncrs-ricci", MappingId("Kminus"), F, G) == poly("-g1 # f1")
    assert apply_mapping("ncrs-ricci", MappingId("K00"), F, G) == poly("f1 # g1 - g1 # f1")
    assert apply_mapping("ncrs-ricci", MappingId("K0"), F12, G) == poly("f1 # d(f2*g1)")


def test_poisson_values():
    assert apply_mapping("ncrs-poisson", MappingId("Kplus"), F, G) == poly("-i*d(f1) # g1")
    assert apply_mapping("ncrs-poisson", MappingId("Kminus"), F, G) == poly("i*g1 # d(f1)")
    assert apply_mapping("ncrs-poisson", MappingId("K00"), F, G) == poly(
        "-i*f1 # g1 + i*g1 # f1"
    )
    assert apply_mapping("ncrs-poisson", MappingId("K0"), F, G) == poly("-i*d(f1*g1)")
    # order-2 left argument: two boundary derivatives, then the
    # factorwise antiderivative drops every factor's net power by one
    out = apply_mapping("ncrs-poisson", MappingId("K0"), F12, G)
    assert out == poly("-i*d^-1(f1) # d(f2*g1)")


def test_poisson_v1_values():
    assert apply_mapping("ncrs-poisson-type-v1", MappingId("Kplus"), F, G) == poly(
        "-i*f1*d(g1)"
    )
    assert apply_mapping("ncrs-poisson-type-v1", MappingId("Kminus"), F, G) == poly(
        "i*g1*d(f1)"
    )
    assert apply_mapping("ncrs-poisson-type-v1", MappingId("K00"), F, G) == poly(
        "-i*f1*d(g1) + i*g1*d(f1)"
    )
    assert apply_mapping("ncrs-poisson-type-v1", MappingId("K0"), F, G) == poly(
        "-i*d(f1*g1)"
    )


def test_poisson_v2_values():
    assert apply_mapping("ncrs-poisson-type-v2", MappingId("Kplus"), F, G) == poly(
        "-i*d(f1)*g1"
    )
    assert apply_mapping("ncrs-poisson-type-v2", MappingId("Kminus"), F, G) == poly(
        "i*d(g1)*f1"
    )
    # the two glue orientations stay distinct words noncommutatively
    assert apply_mapping("ncrs-poisson-type-v2", MappingId("K0"), F, G) == poly(
        "-1/2*i*d(f1*g1) - 1/2*i*d(g1*f1)"
    )
    # the halves recombine: K0 carries -i/2 on each glue orientation
    out = apply_mapping("ncrs-poisson-type-v2", MappingId("K0"), F12, G12)
    half = Coefficient.of(0, "-1/2")
    from rootspace.tensor import d_k, glue

    expected = add(
        scale(half, d_k(glue(F12, G12), 2)),
        scale(half, d_k(glue(G12, F12), 2)),
    )
    assert out == expected


def test_integral_values():
    assert apply_mapping("ncrs-integral", MappingId("Kplus"), F, G) == poly(
        "-i*d(f1) # g1 - i*g1 # d(f1)"
    )
    assert apply_mapping("ncrs-integral", MappingId("Kminus"), F, G) == poly(
        "i*d(f1) # g1 + i*g1 # d(f1)"
    )
    assert apply_mapping("ncrs-integral", MappingId("K0"), F, G) == poly(
        "-i*d^-1(f1) # d^-1(g1)"
    )
    # reverse shows up on order-2 left arguments
    out = apply_mapping("ncrs-integral", MappingId("Kplus"), F12, G)
    assert out == poly("-i*d(f1) # d(f2) # g1 - i*g1 # d(f2) # d(f1)")


def test_classical_values():
    assert apply_mapping("classical-witt", MappingId("K"), F, G) == poly(
        "f1*d(g1) - g1*d(f1)"
    )
    assert apply_mapping("classical-ricci-a", MappingId("Kplus"), F, G) == poly("-f1*g1")
    assert apply_mapping("classical-ricci-a", MappingId("K00"), F, G) == ZERO_POLY
    assert apply_mapping("classical-ricci-a", MappingId("K0"), F, G) == poly("d(f1*g1)")
    assert apply_mapping("classical-ricci-b", MappingId("K0"), F, G) == poly("f1*g1")
    assert apply_mapping("classical-ricci-b", MappingId("Kplus"), F, G) == poly(
        "-f1*d(g1)"
    )
    assert apply_mapping("classical-poisson", MappingId("K0"), F, G) == poly(
        "-i*d(f1*g1)"
    )


def test_classical_families_require_order_one():
    for family in CLASSICAL_FAMILIES:
        name = family_slots(family)[0]
        with pytest.raises(OrderMismatch):
            apply_mapping(family, MappingId(name), F12, G)


def test_knm_formula_and_antisymmetry():
    nm = MappingId("Knm", (2, -1))
    mn = MappingId("Knm", (-1, 2))
    out = apply_mapping("classical-poisson", nm, F, G)
    assert out == poly("2*i*d(g1)*f1 + i*d(f1)*g1")
    assert apply_mapping("classical-poisson", mn, G, F) == neg(out)


def test_bilinearity():
    lhs = apply_mapping("ncrs-poisson", MappingId("Kplus"), add(F, G12), G)
    rhs = add(
        apply_mapping("ncrs-poisson", MappingId("Kplus"), F, G),
        apply_mapping("ncrs-poisson", MappingId("Kplus"), G12, G),
    )
    assert lhs == rhs
    scaled = apply_mapping(
        "ncrs-witt", MappingId("K"), scale(Coefficient.of(0, 3), F), G
    )
    assert scaled == scale(Coefficient.of(0, 3), apply_mapping("ncrs-witt", MappingId("K"), F, G))


def test_zero_inputs_give_zero():
    assert apply_mapping("ncrs-witt", MappingId("K"), ZERO_POLY, G) == ZERO_POLY
    assert apply_mapping("ncrs-ricci", MappingId("K0"), F, ZERO_POLY) == ZERO_POLY


def test_generic_monomial():
    m = generic_monomial("phi", 3)
    assert m == (gen_word("phi", 1), gen_word("phi", 2), gen_word("phi", 3))
    with pytest.raises(ValueError):
        generic_monomial("phi", 0)


def test_mapping_table_shapes():
    rows = mapping_table("ncrs-witt")
    assert [str(mid) for mid, _, _ in rows] == ["K"]
    mid, (left, right), value = rows[0]
    assert left == mono(generic_monomial("phi", 2))
    assert right == mono(generic_monomial("psi", 2))
    assert value == apply_mapping("ncrs-witt", MappingId("K"), left, right)

    rows = mapping_table("classical-poisson")
    assert [str(mid) for mid, _, _ in rows] == [
        "Kplus",
        "Kminus",
        "K00",
        "K0",
        "Knm(1,-1)",
    ]
    mid, (left, right), _ = rows[0]
    assert left.order() == 1

    with pytest.raises(UnsupportedFamily):
        mapping_table("bogus")
