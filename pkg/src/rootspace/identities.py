"""Instantiate the defining identities on generic monomials and decide
them by normal-form residuals.

An identity is a signed list of nested mapping applications on argument
slots. The residual is the signed sum evaluated on fresh generic
monomials; the identity holds at the given orders iff the residual
normalizes to zero under the requested mode.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from . import tensor as t
from .catalog import (
    CLASSICAL_FAMILIES,
    FAMILIES,
    SINGLE_K_FAMILIES,
    MappingId,
    apply_mapping,
    generic_monomial,
)
from .errors import NotApplicable, OrderMismatch, UnsupportedFamily
from .limits import commutativize, leibniz_expand
from .tensor import Polynomial


@dataclass(frozen=True)
class Mode:
    commutative: bool = False
    leibniz: bool = False

    def __post_init__(self):
        if self.leibniz and not self.commutative:
            raise ValueError("leibniz mode requires commutative mode")

    def label(self) -> str:
        if self.leibniz:
            return "commutative+leibniz"
        if self.commutative:
            return "commutative"
        return "noncommutative"


NONCOMMUTATIVE = Mode()
COMMUTATIVE = Mode(commutative=True)
LEIBNIZ = Mode(commutative=True, leibniz=True)


@dataclass(frozen=True)
class IdentityId:
    name: str
    indices: Tuple[int, ...] = ()

    _ARITY = {
        "redjac1": 2,
        "redjac2-plus": 3,
        "redjac2-minus": 3,
        "redjac3": 3,
        "redjac4": 3,
        "witt-jacobi": 3,
        "graded-gk": 3,
        "graded-sk": 2,
    }
    _INDICES = {"graded-gk": 3, "graded-sk": 2}

    def __post_init__(self):
        if self.name not in self._ARITY:
            raise NotApplicable("unknown identity: %r" % (self.name,))
        want = self._INDICES.get(self.name, 0)
        if len(self.indices) != want:
            raise NotApplicable(
                "identity %s takes %d indices, got %d"
                % (self.name, want, len(self.indices))
            )

    @property
    def arity(self) -> int:
        return self._ARITY[self.name]

    def __str__(self) -> str:
        if self.indices:
            return "%s(%s)" % (self.name, ",".join(str(i) for i in self.indices))
        return self.name


_IDENTITY_RE = re.compile(
    r"(redjac1|redjac2-plus|redjac2-minus|redjac3|redjac4|witt-jacobi"
    r"|graded-gk|graded-sk)\s*(?:\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\))?\Z"
)


def parse_identity(text: str) -> IdentityId:
    m = _IDENTITY_RE.match(text.strip())
    if not m:
        raise NotApplicable("cannot parse identity id: %r" % (text,))
    name, idx = m.groups()
    indices = tuple(int(s) for s in idx.split(",")) if idx else ()
    return IdentityId(name, indices)


# signed application trees -----------------------------------------------------
# a tree is ("slot", j) or ("map", MappingId, tree, tree)

_SLOT_NAMES = ("phi", "psi", "chi")


def _terms_for(family: str, identity: IdentityId):
    """The identity's residual as (sign, tree) pairs: LHS - RHS."""

    def mp(name, a, b, indices=()):
        return ("map", MappingId(name, indices), a, b)

    s0, s1, s2 = ("slot", 0), ("slot", 1), ("slot", 2)
    name = identity.name

    if name == "redjac1":
        slot = "K" if family in SINGLE_K_FAMILIES else "K00"
        return [(1, mp(slot, s0, s1)), (1, mp(slot, s1, s0))]
    if name in ("redjac2-plus", "redjac2-minus"):
        k = "Kplus" if name == "redjac2-plus" else "Kminus"
        return [
            (1, mp(k, mp("K00", s0, s1), s2)),
            (-1, mp(k, s0, mp(k, s1, s2))),
            (1, mp(k, s1, mp(k, s0, s2))),
        ]
    if name == "redjac3":
        return [
            (1, mp("K00", s1, mp("K0", s0, s2))),
            (-1, mp("K0", mp("Kplus", s1, s0), s2)),
            (-1, mp("K0", s0, mp("Kminus", s1, s2))),
        ]
    if name == "redjac4":
        return [
            (1, mp("K00", s0, mp("K00", s1, s2))),
            (1, mp("K00", s1, mp("K00", s2, s0))),
            (1, mp("K00", s2, mp("K00", s0, s1))),
        ]
    if name == "witt-jacobi":
        return [
            (1, mp("K", s0, mp("K", s1, s2))),
            (1, mp("K", s1, mp("K", s2, s0))),
            (1, mp("K", s2, mp("K", s0, s1))),
        ]
    if name == "graded-gk":
        k, m, n = identity.indices
        return [
            (1, mp("Knm", s0, mp("Knm", s1, s2, (m, n)), (k, m + n))),
            (1, mp("Knm", s1, mp("Knm", s2, s0, (n, k)), (m, n + k))),
            (1, mp("Knm", s2, mp("Knm", s0, s1, (k, m)), (n, k + m))),
        ]
    # graded-sk
    n, m = identity.indices
    return [
        (1, mp("Knm", s0, s1, (n, m))),
        (1, mp("Knm", s1, s0, (m, n))),
    ]


def tree_label(tree, slot_names=_SLOT_NAMES) -> str:
    if tree[0] == "slot":
        return slot_names[tree[1]]
    _, mid, a, b = tree
    return "%s(%s, %s)" % (mid, tree_label(a, slot_names), tree_label(b, slot_names))


Applier = Callable[[MappingId, Polynomial, Polynomial], Polynomial]


def _eval_tree(tree, slots, applier: Applier) -> Polynomial:
    if tree[0] == "slot":
        return slots[tree[1]]
    _, mid, a, b = tree
    left = _eval_tree(a, slots, applier)
    right = _eval_tree(b, slots, applier)
    if t.is_zero(left) or t.is_zero(right):
        return t.ZERO_POLY
    return applier(mid, left, right)


# applicability ----------------------------------------------------------------

_FOUR_SLOT = [
    IdentityId("redjac1"),
    IdentityId("redjac2-plus"),
    IdentityId("redjac2-minus"),
    IdentityId("redjac3"),
    IdentityId("redjac4"),
]
_SINGLE_K = [IdentityId("redjac1"), IdentityId("witt-jacobi")]

GRADED_INDEX_RANGE = 2


def applicable_identities(family: str, mode: Mode) -> List[IdentityId]:
    """Identities the suite runs for the family, graded ones expanded
    over the default index range."""
    if family not in FAMILIES:
        raise UnsupportedFamily("unknown family: %r" % (family,))
    if family in SINGLE_K_FAMILIES:
        return list(_SINGLE_K)
    out = list(_FOUR_SLOT)
    if family == "classical-poisson" and mode.commutative:
        rng = range(-GRADED_INDEX_RANGE, GRADED_INDEX_RANGE + 1)
        for k, m, n in itertools.product(rng, repeat=3):
            out.append(IdentityId("graded-gk", (k, m, n)))
        for n, m in itertools.product(rng, repeat=2):
            out.append(IdentityId("graded-sk", (n, m)))
    return out


def _check_applicable(family: str, identity: IdentityId, mode: Mode):
    if family not in FAMILIES:
        raise UnsupportedFamily("unknown family: %r" % (family,))
    name = identity.name
    if name == "witt-jacobi":
        if family not in SINGLE_K_FAMILIES:
            raise NotApplicable("witt-jacobi needs a single-K family")
    elif name.startswith("graded-"):
        if family != "classical-poisson":
            raise NotApplicable("graded identities need classical-poisson")
        if not mode.commutative:
            raise NotApplicable("graded identities run in commutative modes")
    elif name != "redjac1" and family in SINGLE_K_FAMILIES:
        raise NotApplicable(
            "%s has only the mapping K; %s is not defined" % (family, name)
        )


# reports ----------------------------------------------------------------------


@dataclass
class Report:
    family: str
    identity: IdentityId
    orders: Tuple[int, ...]
    mode: Mode
    residual: Polynomial
    passed: bool
    term_counts: dict


@dataclass
class ProofTrace:
    family: str
    identity: IdentityId
    orders: Tuple[int, ...]
    mode: Mode
    steps: List[Tuple[str, Polynomial]]


def _prepare(family, identity, orders, mode, applier):
    _check_applicable(family, identity, mode)
    orders = tuple(orders)
    if len(orders) != identity.arity:
        raise OrderMismatch(
            "%s takes %d orders, got %d" % (identity, identity.arity, len(orders))
        )
    if any(o < 1 for o in orders):
        raise OrderMismatch("orders must be >= 1: %r" % (orders,))
    if family in CLASSICAL_FAMILIES and any(o != 1 for o in orders):
        raise OrderMismatch(
            "%s is an order-1 family, got orders %r" % (family, orders)
        )
    if applier is None:
        def applier(mid, a, b):
            return apply_mapping(family, mid, a, b)
    slots = [
        t.mono(generic_monomial(_SLOT_NAMES[i], orders[i]))
        for i in range(len(orders))
    ]
    return orders, slots, applier


def _mode_pipeline(raw: Polynomial, mode: Mode) -> Polynomial:
    res = raw
    if mode.commutative:
        res = commutativize(res)
        if mode.leibniz:
            res = commutativize(leibniz_expand(res))
    return res


def residual(
    family: str,
    identity: IdentityId,
    orders,
    mode: Mode = NONCOMMUTATIVE,
    applier: Optional[Applier] = None,
) -> Report:
    orders, slots, applier = _prepare(family, identity, orders, mode, applier)
    parts = []
    for sign, tree in _terms_for(family, identity):
        value = _eval_tree(tree, slots, applier)
        parts.append(value if sign > 0 else t.neg(value))
    raw = t.poly_sum(parts)
    res = _mode_pipeline(raw, mode)
    return Report(
        family=family,
        identity=identity,
        orders=orders,
        mode=mode,
        residual=res,
        passed=t.is_zero(res),
        term_counts={"raw_sum": len(raw.terms), "residual": len(res.terms)},
    )


def trace_identity(
    family: str,
    identity: IdentityId,
    orders,
    mode: Mode = NONCOMMUTATIVE,
    applier: Optional[Applier] = None,
) -> ProofTrace:
    orders, slots, applier = _prepare(family, identity, orders, mode, applier)
    steps: List[Tuple[str, Polynomial]] = []
    parts = []
    for sign, tree in _terms_for(family, identity):
        value = _eval_tree(tree, slots, applier)
        signed = value if sign > 0 else t.neg(value)
        label = ("+ " if sign > 0 else "- ") + tree_label(tree)
        steps.append((label, signed))
        parts.append(signed)
    raw = t.poly_sum(parts)
    steps.append(("raw sum", raw))
    res = raw
    if mode.commutative:
        res = commutativize(res)
        steps.append(("commutativized", res))
        if mode.leibniz:
            res = commutativize(leibniz_expand(res))
            steps.append(("product rule expanded", res))
    steps.append(("residual", res))
    return ProofTrace(
        family=family, identity=identity, orders=orders, mode=mode, steps=steps
    )


def check_suite(
    family: str,
    max_order: int = 3,
    mode: Mode = NONCOMMUTATIVE,
    applier: Optional[Applier] = None,
) -> List[Report]:
    """Every applicable identity over all order tuples up to max_order
    (classical families run at order 1 only), in deterministic order."""
    reports = []
    for identity in applicable_identities(family, mode):
        if family in CLASSICAL_FAMILIES:
            tuples = [(1,) * identity.arity]
        else:
            tuples = sorted(
                itertools.product(range(1, max_order + 1), repeat=identity.arity)
            )
        for orders in tuples:
            reports.append(residual(family, identity, orders, mode, applier))
    return reports


def graded_jacobi_residual(k: int, m: int, n: int, mode: Mode) -> Report:
    if not mode.commutative:
        raise NotApplicable("graded identities run in commutative modes")
    return residual(
        "classical-poisson", IdentityId("graded-gk", (k, m, n)), (1, 1, 1), mode
    )
