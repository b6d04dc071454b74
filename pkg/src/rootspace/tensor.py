"""Tensor powers of the word algebra and the structural operators on them.

A monomial is a nonempty tuple of words (its tensor factors); its order
is the factor count. A polynomial is a normalized linear combination of
monomials with exact coefficients: no zero terms, like terms merged,
terms stored in a fixed canonical order so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import IndexOutOfOrder, OrderMismatch
from .scalars import ONE, Coefficient
from .words import EWord, apply_derivative, eword_product, word_key

Monomial = Tuple[EWord, ...]


def mono_key(m: Monomial):
    return tuple(word_key(w) for w in m)


@dataclass(frozen=True)
class Polynomial:
    terms: Tuple[Tuple[Monomial, Coefficient], ...]

    def order(self):
        """Common factor count of the monomials, or None when zero."""
        if not self.terms:
            return None
        return len(self.terms[0][0])

    def __bool__(self) -> bool:
        return bool(self.terms)


ZERO_POLY = Polynomial(())


def polynomial(items: Iterable[Tuple[Monomial, Coefficient]]) -> Polynomial:
    acc = {}
    for mon, coeff in items:
        if mon in acc:
            acc[mon] = acc[mon] + coeff
        else:
            acc[mon] = coeff
    terms = tuple(
        (mon, coeff)
        for mon, coeff in sorted(acc.items(), key=lambda kv: mono_key(kv[0]))
        if not coeff.is_zero()
    )
    return Polynomial(terms)


def mono(m: Monomial, coeff: Coefficient = ONE) -> Polynomial:
    return polynomial([(m, coeff)])


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return polynomial(list(a.terms) + list(b.terms))


def neg(a: Polynomial) -> Polynomial:
    return Polynomial(tuple((m, -c) for m, c in a.terms))


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return add(a, neg(b))


def scale(c: Coefficient, a: Polynomial) -> Polynomial:
    if c.is_zero():
        return ZERO_POLY
    return Polynomial(tuple((m, c * k) for m, k in a.terms))


def is_zero(a: Polynomial) -> bool:
    return not a.terms


def poly_sum(parts: Iterable[Polynomial]) -> Polynomial:
    out = []
    for p in parts:
        out.extend(p.terms)
    return polynomial(out)


def _map_monomials(p: Polynomial, fn) -> Polynomial:
    return polynomial([(fn(m), c) for m, c in p.terms])


def _bilinear(p: Polynomial, q: Polynomial, fn) -> Polynomial:
    out = []
    for ma, ca in p.terms:
        for mb, cb in q.terms:
            out.append((fn(ma, mb), ca * cb))
    return polynomial(out)


def tensor_concat(p: Polynomial, q: Polynomial) -> Polynomial:
    """Ordered tensor product; orders add."""
    return _bilinear(p, q, lambda a, b: a + b)


def glue(p: Polynomial, q: Polynomial) -> Polynomial:
    """Concatenate monomials, multiplying the touching boundary factors.

    The last factor of the left operand and the first of the right merge
    into one word, so the order drops by one relative to tensor_concat.
    """

    def g(a: Monomial, b: Monomial) -> Monomial:
        return a[:-1] + (eword_product(a[-1], b[0]),) + b[1:]

    return _bilinear(p, q, g)


def d_k(p: Polynomial, k: int) -> Polynomial:
    """Derivative on the k-th tensor factor (1-based)."""

    def at(m: Monomial) -> Monomial:
        if k < 1 or k > len(m):
            raise IndexOutOfOrder(
                "factor index %d outside 1..%d" % (k, len(m))
            )
        return m[: k - 1] + (apply_derivative(m[k - 1], 1),) + m[k:]

    return _map_monomials(p, at)


def d_all(p: Polynomial, power: int) -> Polynomial:
    """Derivative power applied to every tensor factor at once."""
    return _map_monomials(
        p, lambda m: tuple(apply_derivative(w, power) for w in m)
    )


def reverse(p: Polynomial) -> Polynomial:
    """Reverse the tensor factor sequence; words inside factors keep
    their internal order."""
    return _map_monomials(p, lambda m: tuple(reversed(m)))


def tensor_commutator(p: Polynomial, q: Polynomial) -> Polynomial:
    return sub(tensor_concat(p, q), tensor_concat(q, p))


def pointwise_product(p: Polynomial, q: Polynomial) -> Polynomial:
    """Factorwise word product of equal-order monomials."""

    def pw(a: Monomial, b: Monomial) -> Monomial:
        if len(a) != len(b):
            raise OrderMismatch(
                "pointwise product needs equal orders, got %d and %d"
                % (len(a), len(b))
            )
        return tuple(eword_product(x, y) for x, y in zip(a, b))

    return _bilinear(p, q, pw)
