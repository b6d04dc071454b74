"""Words in the free noncommutative algebra with a formal derivative.

A word is a nonempty tuple of atoms. An atom is either a generator
symbol or a parenthesized sub-word, and carries a net integer derivative
power (negative powers are formal antiderivatives). The derivative of a
multi-atom word is kept opaque: it wraps the word in a group instead of
distributing over the product. Product-rule expansion is a separate,
optional transform (see the limits module), never part of normalization.

Normal form:
  - no group has derivative power 0 (such a group splices into its parent),
  - no group contains exactly one atom (the constructor enforces this;
    single atoms absorb derivative powers additively instead),
  - group contents are themselves normal.

Normalization is idempotent and never reorders atoms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

_NAME_RE = re.compile(r"[A-Za-z_]+\Z")


@dataclass(frozen=True)
class Generator:
    """A free symbol: a variable name plus a positive component index.

    Distinct (variable, component) pairs are distinct symbols with no
    relations. Names must be digit-free so that the printed form
    name+component parses back unambiguously.
    """

    variable: str
    component: int

    def __post_init__(self):
        if not _NAME_RE.match(self.variable):
            raise ValueError("generator name must match [A-Za-z_]+: %r" % (self.variable,))
        if self.component < 1:
            raise ValueError("generator component must be >= 1: %r" % (self.component,))


@dataclass(frozen=True)
class Grouped:
    """A parenthesized sub-word, the base of an opaque derivative atom."""

    word: "EWord"

    def __post_init__(self):
        if len(self.word) < 2:
            raise ValueError("a group must contain at least two atoms")


@dataclass(frozen=True)
class EAtom:
    base: Union[Generator, Grouped]
    power: int = 0


EWord = Tuple[EAtom, ...]


def gen_atom(variable: str, component: int, power: int = 0) -> EAtom:
    return EAtom(Generator(variable, component), power)


def gen_word(variable: str, component: int, power: int = 0) -> EWord:
    return (gen_atom(variable, component, power),)


def normalize_word(atoms: Iterable[EAtom]) -> EWord:
    """Flatten a raw atom sequence into normal form."""
    out = []
    for atom in atoms:
        out.extend(_normalize_atom(atom))
    if not out:
        raise ValueError("a word must contain at least one atom")
    return tuple(out)


def _normalize_atom(atom: EAtom) -> EWord:
    base = atom.base
    if isinstance(base, Generator):
        return (atom,)
    # groups have >= 2 atoms by construction and normalization never
    # shrinks a word, so no singleton-group case can arise here
    inner = normalize_word(base.word)
    if atom.power == 0:
        return inner
    return (EAtom(Grouped(inner), atom.power),)


def eword_product(a: EWord, b: EWord) -> EWord:
    """Concatenation in the free algebra. Associative, not commutative."""
    return a + b


def apply_derivative(w: EWord, power: int) -> EWord:
    """Apply the formal derivative (or antiderivative) to a whole word.

    Single atoms absorb the power additively, so d^-1 d x = x. A
    multi-atom word becomes one opaque grouped atom; no product rule.
    """
    if power == 0:
        return w
    if len(w) == 1:
        atom = w[0]
        merged = atom.power + power
        if isinstance(atom.base, Grouped) and merged == 0:
            return atom.base.word
        return (EAtom(atom.base, merged),)
    return (EAtom(Grouped(w), power),)


def atom_key(atom: EAtom):
    """Total-order sort key: generators before groups, then name,
    component (or recursive content), then power."""
    if isinstance(atom.base, Generator):
        return (0, atom.base.variable, atom.base.component, atom.power)
    return (1, tuple(atom_key(a) for a in atom.base.word), atom.power)


def word_key(word: EWord):
    return tuple(atom_key(a) for a in word)
