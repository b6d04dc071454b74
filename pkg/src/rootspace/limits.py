"""Commutative-limit pipeline: commutativization, product-rule expansion,
and the two limit semantics that turn a tensor family into an order-one
classical mapping set.

order-one: evaluate the family's own formulas with tensor concatenation
rebound to gluing, so every intermediate stays at order one, then
commutativize. tensor-collapse: evaluate with the real tensor operators,
fold each monomial's factors into a single word, then commutativize.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Dict, List, Tuple

from . import tensor as t
from .catalog import (
    NCRS_FAMILIES,
    TENSOR_OPS,
    MappingId,
    apply_mapping,
    family_slots,
)
from .errors import NegativePowerGroup, UnsupportedFamily
from .scalars import Coefficient
from .tensor import Polynomial
from .words import EAtom, EWord, Generator, Grouped, atom_key, gen_word

ORDER_ONE = "order-one"
TENSOR_COLLAPSE = "tensor-collapse"
LIMIT_MODES = (ORDER_ONE, TENSOR_COLLAPSE)

ORDER_ONE_OPS = replace(TENSOR_OPS, concat=t.glue)


# commutativization ----------------------------------------------------------


def _sort_atom(atom: EAtom) -> EAtom:
    if isinstance(atom.base, Generator):
        return atom
    inner = tuple(sorted((_sort_atom(a) for a in atom.base.word), key=atom_key))
    return EAtom(Grouped(inner), atom.power)


def _sort_word(word: EWord) -> EWord:
    return tuple(sorted((_sort_atom(a) for a in word), key=atom_key))


def commutativize(p: Polynomial) -> Polynomial:
    """Sort atoms inside every word (recursively inside groups) and merge
    the monomials that become equal. Tensor factors stay in place; group
    wrappers stay opaque."""
    return t.polynomial(
        [(tuple(_sort_word(w) for w in m), c) for m, c in p.terms]
    )


# product-rule expansion ------------------------------------------------------


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multinomial(counts: Tuple[int, ...]) -> int:
    n = sum(counts)
    out = math.factorial(n)
    for c in counts:
        out //= math.factorial(c)
    return out


def _expand_word(word: EWord) -> List[Tuple[EWord, int]]:
    """Flatten all derived groups via the product rule. Returns flat word
    alternatives with integer multiplicities."""
    parts: List[List[Tuple[EWord, int]]] = []
    for atom in word:
        if isinstance(atom.base, Generator):
            parts.append([((atom,), 1)])
            continue
        if atom.power < 0:
            raise NegativePowerGroup(
                "cannot distribute a formal antiderivative over a product"
            )
        inner = _expand_word(atom.base.word)
        expanded: List[Tuple[EWord, int]] = []
        for flat, mult in inner:
            for comp in _compositions(atom.power, len(flat)):
                shifted = tuple(
                    EAtom(a.base, a.power + k) for a, k in zip(flat, comp)
                )
                expanded.append((shifted, mult * _multinomial(comp)))
        parts.append(expanded)
    acc: List[Tuple[EWord, int]] = [((), 1)]
    for part in parts:
        acc = [(wa + wb, ka * kb) for wa, ka in acc for wb, kb in part]
    return acc


def leibniz_expand(p: Polynomial) -> Polynomial:
    """Distribute every derived group over its atoms with multinomial
    weights. Raises NegativePowerGroup on antiderivative wrappers."""
    out = []
    for m, c in p.terms:
        factor_sums = [_expand_word(w) for w in m]
        partial: List[Tuple[Tuple[EWord, ...], int]] = [((), 1)]
        for fs in factor_sums:
            partial = [
                (mono + (w,), k * mult)
                for mono, k in partial
                for w, mult in fs
            ]
        for mono, k in partial:
            out.append((mono, c * Coefficient.of(k)))
    return t.polynomial(out)


# limit mapping sets ----------------------------------------------------------


def collapse(p: Polynomial) -> Polynomial:
    """Fold every monomial's tensor factors into one word, left to right."""

    def fold(m):
        word: EWord = ()
        for w in m:
            word = word + w
        return (word,)

    return t.polynomial([(fold(m), c) for m, c in p.terms])


def limit_applier(family: str, limit_mode: str = ORDER_ONE):
    """A bilinear (mapping, phi, psi) -> value callable realizing the
    family's commutative-limit mapping set on order-one polynomials."""
    if family not in NCRS_FAMILIES:
        raise UnsupportedFamily(
            "commutative limits are defined for ncrs families, not %r"
            % (family,)
        )
    if limit_mode not in LIMIT_MODES:
        raise UnsupportedFamily("unknown limit mode: %r" % (limit_mode,))

    if limit_mode == ORDER_ONE:

        def apply(mapping: MappingId, phi: Polynomial, psi: Polynomial):
            return apply_mapping(family, mapping, phi, psi, ops=ORDER_ONE_OPS)

    else:

        def apply(mapping: MappingId, phi: Polynomial, psi: Polynomial):
            return collapse(apply_mapping(family, mapping, phi, psi))

    return apply


@dataclass
class ClassicalMappingSet:
    family: str
    limit_mode: str
    maps: Dict[MappingId, Polynomial]


def limit_mapping_set(family: str, limit_mode: str = ORDER_ONE) -> ClassicalMappingSet:
    """Closed forms of the family's limit mappings on generic order-one
    arguments f, g, commutativized."""
    apply = limit_applier(family, limit_mode)
    A = t.mono((gen_word("f", 1),))
    B = t.mono((gen_word("g", 1),))
    maps: Dict[MappingId, Polynomial] = {}
    for name in family_slots(family):
        mid = MappingId(name)
        maps[mid] = commutativize(apply(mid, A, B))
    return ClassicalMappingSet(family=family, limit_mode=limit_mode, maps=maps)
