"""The mapping families: executable bilinear maps on tensor polynomials.

Each family provides some of the slots K, K0, Kplus, Kminus, K00 and
the indexed Knm(n, m). Rules are written against an operator table (the
Ops record) so the order-one limit can rebind tensor concatenation to
gluing without touching the formulas.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Tuple

from . import tensor as t
from .errors import OrderMismatch, UnsupportedFamily, UnsupportedMapping
from .scalars import Coefficient, ONE
from .tensor import Monomial, Polynomial

NCRS_FAMILIES = (
    "ncrs-witt",
    "ncrs-ricci",
    "ncrs-poisson",
    "ncrs-poisson-type-v1",
    "ncrs-poisson-type-v2",
    "ncrs-integral",
)
CLASSICAL_FAMILIES = (
    "classical-witt",
    "classical-ricci-a",
    "classical-ricci-b",
    "classical-poisson",
)
FAMILIES = NCRS_FAMILIES + CLASSICAL_FAMILIES

SINGLE_K_FAMILIES = ("ncrs-witt", "classical-witt")

I = Coefficient.of(0, 1)
MI = Coefficient.of(0, -1)
MI_HALF = Coefficient.of(0, "-1/2")


@dataclass(frozen=True)
class MappingId:
    name: str
    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in ("K", "K0", "Kplus", "Kminus", "K00", "Knm"):
            raise UnsupportedMapping("unknown mapping name: %r" % (self.name,))
        want = 2 if self.name == "Knm" else 0
        if len(self.indices) != want:
            raise UnsupportedMapping(
                "mapping %s takes %d indices, got %d"
                % (self.name, want, len(self.indices))
            )

    def __str__(self) -> str:
        if self.indices:
            return "%s(%s)" % (self.name, ",".join(str(i) for i in self.indices))
        return self.name


_MAPPING_RE = re.compile(
    r"(K00|K0|Kplus|Kminus|Knm|K)\s*(?:\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))?\Z"
)


def parse_mapping(text: str) -> MappingId:
    m = _MAPPING_RE.match(text.strip())
    if not m:
        raise UnsupportedMapping("cannot parse mapping id: %r" % (text,))
    name, a, b = m.groups()
    if name == "Knm":
        if a is None:
            raise UnsupportedMapping("Knm needs indices, e.g. Knm(1,-1)")
        return MappingId("Knm", (int(a), int(b)))
    if a is not None:
        raise UnsupportedMapping("mapping %s takes no indices" % name)
    return MappingId(name)


def family_slots(family: str) -> Tuple[str, ...]:
    """Mapping names the family provides, in display order."""
    if family not in FAMILIES:
        raise UnsupportedFamily("unknown family: %r" % (family,))
    if family in SINGLE_K_FAMILIES:
        return ("K",)
    if family == "classical-poisson":
        return ("Kplus", "Kminus", "K00", "K0", "Knm")
    return ("Kplus", "Kminus", "K00", "K0")


@dataclass(frozen=True)
class Ops:
    """The structural operators a mapping rule is allowed to use.

    concat is the only field the order-one limit rebinds (to glue);
    commutator is derived from concat so it follows automatically.
    """

    concat: Callable[[Polynomial, Polynomial], Polynomial]
    glue: Callable[[Polynomial, Polynomial], Polynomial]
    d_k: Callable[[Polynomial, int], Polynomial]
    d_all: Callable[[Polynomial, int], Polynomial]
    reverse: Callable[[Polynomial], Polynomial]
    pointwise: Callable[[Polynomial, Polynomial], Polynomial]

    def commutator(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return t.sub(self.concat(a, b), self.concat(b, a))


TENSOR_OPS = Ops(
    concat=t.tensor_concat,
    glue=t.glue,
    d_k=t.d_k,
    d_all=t.d_all,
    reverse=t.reverse,
    pointwise=t.pointwise_product,
)


def apply_mapping(
    family: str,
    mapping: MappingId,
    phi: Polynomial,
    psi: Polynomial,
    ops: Ops = TENSOR_OPS,
) -> Polynomial:
    """Bilinear value of the family's mapping on two polynomials."""
    if family not in FAMILIES:
        raise UnsupportedFamily("unknown family: %r" % (family,))
    slots = family_slots(family)
    if mapping.name not in slots:
        raise UnsupportedMapping(
            "family %s has no mapping %s" % (family, mapping)
        )
    out = []
    for ma, ca in phi.terms:
        for mb, cb in psi.terms:
            val = _monomial_rule(family, mapping, ma, mb, ops)
            out.extend(t.scale(ca * cb, val).terms)
    return t.polynomial(out)


def _monomial_rule(
    family: str, mapping: MappingId, ma: Monomial, mb: Monomial, ops: Ops
) -> Polynomial:
    p, q = len(ma), len(mb)
    if family in CLASSICAL_FAMILIES and (p != 1 or q != 1):
        raise OrderMismatch(
            "%s is defined on order-1 arguments, got orders (%d, %d)"
            % (family, p, q)
        )
    A = t.mono(ma)
    B = t.mono(mb)
    name = mapping.name

    if family == "ncrs-witt":
        return t.sub(ops.glue(A, ops.d_k(B, 1)), ops.glue(B, ops.d_k(A, 1)))

    if family == "ncrs-ricci":
        if name == "Kplus":
            return ops.concat(A, B)
        if name == "Kminus":
            return t.neg(ops.concat(B, A))
        if name == "K00":
            return ops.commutator(A, B)
        return ops.d_k(ops.glue(A, B), p)

    if family == "ncrs-poisson":
        if name == "Kplus":
            return t.scale(MI, ops.concat(ops.d_all(A, 1), B))
        if name == "Kminus":
            return t.scale(I, ops.concat(B, ops.d_all(A, 1)))
        if name == "K00":
            return t.scale(MI, ops.commutator(A, B))
        return t.scale(
            MI, ops.d_all(ops.d_k(ops.d_k(ops.glue(A, B), p), p), -1)
        )

    if family == "ncrs-poisson-type-v1":
        if name == "K0":
            return t.scale(MI, ops.d_k(ops.glue(A, B), p))
        if name == "Kplus":
            return t.scale(MI, ops.glue(A, ops.d_k(B, 1)))
        if name == "Kminus":
            return t.scale(I, ops.glue(B, ops.d_k(A, 1)))
        return t.add(
            _monomial_rule(family, MappingId("Kplus"), ma, mb, ops),
            _monomial_rule(family, MappingId("Kminus"), ma, mb, ops),
        )

    if family == "ncrs-poisson-type-v2":
        if name == "K0":
            return t.scale(
                MI_HALF,
                t.add(ops.d_k(ops.glue(A, B), p), ops.d_k(ops.glue(B, A), q)),
            )
        if name == "Kplus":
            return t.scale(MI, ops.glue(ops.d_k(A, p), B))
        if name == "Kminus":
            return t.scale(I, ops.glue(ops.d_k(B, q), A))
        return t.add(
            _monomial_rule(family, MappingId("Kplus"), ma, mb, ops),
            _monomial_rule(family, MappingId("Kminus"), ma, mb, ops),
        )

    if family == "ncrs-integral":
        if name == "Kplus":
            return t.scale(
                MI,
                t.add(
                    ops.concat(ops.d_all(A, 1), B),
                    ops.concat(B, ops.d_all(ops.reverse(A), 1)),
                ),
            )
        if name == "Kminus":
            return t.scale(
                I,
                t.add(
                    ops.concat(ops.d_all(ops.reverse(A), 1), B),
                    ops.concat(B, ops.d_all(A, 1)),
                ),
            )
        if name == "K00":
            return t.scale(MI, ops.commutator(A, B))
        return t.scale(MI, ops.d_all(ops.concat(A, B), -1))

    if family == "classical-witt":
        return t.sub(
            ops.pointwise(A, ops.d_all(B, 1)), ops.pointwise(B, ops.d_all(A, 1))
        )

    if family == "classical-ricci-a":
        if name == "K00":
            return t.ZERO_POLY
        if name == "Kplus":
            return t.neg(ops.pointwise(A, B))
        if name == "Kminus":
            return ops.pointwise(A, B)
        return ops.d_all(ops.pointwise(A, B), 1)

    if family == "classical-ricci-b":
        if name == "K0":
            return ops.pointwise(A, B)
        if name == "Kplus":
            return t.neg(ops.pointwise(A, ops.d_all(B, 1)))
        if name == "Kminus":
            return ops.pointwise(A, ops.d_all(B, 1))
        return t.ZERO_POLY

    # classical-poisson
    if name == "K00":
        return t.ZERO_POLY
    if name == "Kplus":
        return t.scale(MI, ops.pointwise(ops.d_all(A, 1), B))
    if name == "Kminus":
        return t.scale(I, ops.pointwise(ops.d_all(A, 1), B))
    if name == "K0":
        return t.scale(MI, ops.d_all(ops.pointwise(A, B), 1))
    n, m = mapping.indices
    return t.scale(
        I,
        t.sub(
            t.scale(Coefficient.of(n), ops.pointwise(ops.d_all(B, 1), A)),
            t.scale(Coefficient.of(m), ops.pointwise(ops.d_all(A, 1), B)),
        ),
    )


def generic_monomial(slot_name: str, order: int) -> Monomial:
    """A monomial of fresh single-generator factors slot_1 ... slot_order."""
    if order < 1:
        raise ValueError("order must be >= 1, got %d" % order)
    from .words import gen_word

    return tuple(gen_word(slot_name, j) for j in range(1, order + 1))


def mapping_table(family: str):
    """Each provided mapping applied to generic arguments.

    Returns (mapping id, argument polynomials, value) triples. NCRS
    families are shown at orders (2, 2), classical ones at (1, 1);
    Knm is represented by Knm(1,-1).
    """
    if family not in FAMILIES:
        raise UnsupportedFamily("unknown family: %r" % (family,))
    order = 1 if family in CLASSICAL_FAMILIES else 2
    A = t.mono(generic_monomial("phi", order))
    B = t.mono(generic_monomial("psi", order))
    rows = []
    for name in family_slots(family):
        mid = MappingId("Knm", (1, -1)) if name == "Knm" else MappingId(name)
        rows.append((mid, (A, B), apply_mapping(family, mid, A, B)))
    return rows
