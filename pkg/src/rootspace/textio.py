"""Text formats: the ascii expression grammar, latex and json rendering,
and report/trace/table serialization.

Grammar (ascii):

    poly     := '-'? term (('+'|'-') term)*
    term     := coeff? monomial
    coeff    := rational? 'i'? (with optional '*' separators)
    rational := INT ('/' INT)?
    monomial := factor ('#' factor)*
    factor   := atom ('*' atom)*
    atom     := IDENT | 'd' ('^' '-'? INT)? '(' factor ')'

IDENT matches [a-zA-Z][a-zA-Z0-9_]*. The bare token `i` is the imaginary
unit; printed generators always carry a component digit, so the two
never collide. A trailing digit run on an IDENT is the component
(absent means 1, so `f` reads as f1). The literal `0` is the zero
polynomial.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import ParseError
from .scalars import Coefficient
from .tensor import Monomial, Polynomial, ZERO_POLY, polynomial
from .words import EAtom, EWord, Generator, Grouped, apply_derivative, eword_product

FORMATS = ("ascii", "latex", "json")


# tokenizer ---------------------------------------------------------------

_SYMBOLS = "+-*/#^()"


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    """(kind, text, offset) triples; kinds NUMBER, IDENT, one-char symbols."""
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            out.append(("NUMBER", text[pos:end], pos))
            pos = end
            continue
        if ch.isalpha():
            end = pos
            while end < n and (text[end].isalnum() or text[end] == "_"):
                end += 1
            out.append(("IDENT", text[pos:end], pos))
            pos = end
            continue
        if ch in _SYMBOLS:
            out.append((ch, ch, pos))
            pos += 1
            continue
        raise ParseError(pos, ("number", "identifier", "operator"), ch)
    out.append(("EOF", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0):
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.pos]
        if tok[0] != "EOF":
            self.pos += 1
        return tok

    def fail(self, expected):
        kind, text, offset = self.peek()
        found = text if kind != "EOF" else "end of input"
        raise ParseError(offset, expected, found)

    def expect(self, kind: str):
        if self.peek()[0] != kind:
            self.fail((kind,))
        return self.take()

    # grammar ------------------------------------------------------------

    def poly(self) -> Polynomial:
        # lone 0 is the zero polynomial
        if self.peek()[0] == "NUMBER" and self.peek()[1] == "0" and self.peek(1)[0] == "EOF":
            self.take()
            return ZERO_POLY
        terms = []
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        terms.append(self.term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
            terms.append(self.term(sign))
        self.expect("EOF")
        return polynomial(terms)

    def term(self, sign: int) -> Tuple[Monomial, Coefficient]:
        coeff = self.coeff()
        if sign < 0:
            coeff = -coeff
        return self.monomial(), coeff

    def coeff(self) -> Coefficient:
        rational: Optional[Fraction] = None
        imag = False
        if self.peek()[0] == "NUMBER":
            num = int(self.take()[1])
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.expect("NUMBER")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError(den_tok[2], ("nonzero denominator",), den_tok[1])
                rational = Fraction(num, den)
            else:
                rational = Fraction(num)
            if self.peek()[0] == "*":
                self.take()
        if self.peek()[0] == "IDENT" and self.peek()[1] == "i":
            self.take()
            imag = True
            if self.peek()[0] == "*":
                self.take()
        if rational is None and not imag:
            return Coefficient.of(1)
        mag = Fraction(1) if rational is None else rational
        return Coefficient.of(0, mag) if imag else Coefficient.of(mag)

    def monomial(self) -> Monomial:
        factors = [self.factor()]
        while self.peek()[0] == "#":
            self.take()
            factors.append(self.factor())
        return tuple(factors)

    def factor(self) -> EWord:
        word = self.atom()
        while self.peek()[0] == "*":
            self.take()
            word = eword_product(word, self.atom())
        return word

    def atom(self) -> EWord:
        kind, text, offset = self.peek()
        if kind != "IDENT":
            self.fail(("identifier", "d(...)"))
        if text == "d" and self.peek(1)[0] in ("(", "^"):
            self.take()
            power = 1
            if self.peek()[0] == "^":
                self.take()
                neg = False
                if self.peek()[0] == "-":
                    self.take()
                    neg = True
                power = int(self.expect("NUMBER")[1])
                if neg:
                    power = -power
            self.expect("(")
            inner = self.factor()
            self.expect(")")
            return apply_derivative(inner, power)
        self.take()
        m = re.fullmatch(r"([A-Za-z][A-Za-z0-9_]*?)([0-9]+)?", text)
        variable, digits = m.group(1), m.group(2)
        try:
            gen = Generator(variable, int(digits) if digits else 1)
        except ValueError as exc:
            raise ParseError(offset, ("generator name",), text) from exc
        return (EAtom(gen, 0),)


def parse_poly(text: str) -> Polynomial:
    return _Parser(text).poly()


# ascii printing ----------------------------------------------------------

_GREEK = {
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
    "iota", "kappa", "lambda", "mu", "nu", "xi", "pi", "rho", "sigma",
    "tau", "upsilon", "phi", "chi", "psi", "omega",
}


def _atom_ascii(atom: EAtom) -> str:
    base = atom.base
    if isinstance(base, Generator):
        body = "%s%d" % (base.variable, base.component)
    else:
        body = _word_ascii(base.word)
    if atom.power == 0:
        return body
    if atom.power == 1:
        return "d(%s)" % body
    return "d^%d(%s)" % (atom.power, body)


def _word_ascii(word: EWord) -> str:
    return "*".join(_atom_ascii(a) for a in word)


def _mono_ascii(mono: Monomial) -> str:
    return " # ".join(_word_ascii(w) for w in mono)


def _coeff_pieces(coeff: Coefficient):
    """Split into (sign, magnitude, imag) pieces, real part first."""
    pieces = []
    if coeff.re:
        pieces.append((1 if coeff.re > 0 else -1, abs(coeff.re), False))
    if coeff.im:
        pieces.append((1 if coeff.im > 0 else -1, abs(coeff.im), True))
    return pieces


def _poly_ascii(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    chunks = []
    for mono, coeff in p.terms:
        body = _mono_ascii(mono)
        for sign, mag, imag in _coeff_pieces(coeff):
            prefix = "" if mag == 1 else "%s*" % mag
            if imag:
                prefix += "i*"
            chunks.append((sign, prefix + body))
    out = []
    for idx, (sign, text) in enumerate(chunks):
        if idx == 0:
            out.append("-" + text if sign < 0 else text)
        else:
            out.append((" - " if sign < 0 else " + ") + text)
    return "".join(out)


# latex printing ----------------------------------------------------------


def _gen_latex(gen: Generator) -> str:
    name = "\\" + gen.variable if gen.variable in _GREEK else gen.variable
    return "%s_{%d}" % (name, gen.component)


def _atom_latex(atom: EAtom) -> str:
    base = atom.base
    if isinstance(base, Generator):
        body = _gen_latex(base)
        grouped = False
    else:
        body = _word_latex(base.word)
        grouped = True
    if atom.power == 0:
        # grouped atoms never carry power 0 in normal form
        return "(%s)" % body if grouped else body
    if atom.power == 1:
        return "\\partial(%s)" % body
    return "\\partial^{%d}(%s)" % (atom.power, body)


def _word_latex(word: EWord) -> str:
    return " \\cdot ".join(_atom_latex(a) for a in word)


def _mono_latex(mono: Monomial) -> str:
    return " \\otimes ".join(_word_latex(w) for w in mono)


def _frac_latex(mag: Fraction) -> str:
    if mag.denominator == 1:
        return str(mag.numerator)
    return "\\tfrac{%d}{%d}" % (mag.numerator, mag.denominator)


def _poly_latex(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    chunks = []
    for mono, coeff in p.terms:
        body = _mono_latex(mono)
        for sign, mag, imag in _coeff_pieces(coeff):
            prefix = ""
            if mag != 1:
                prefix = _frac_latex(mag)
            if imag:
                prefix += "i"
            if prefix:
                prefix += "\\,"
            chunks.append((sign, prefix + body))
    out = []
    for idx, (sign, text) in enumerate(chunks):
        if idx == 0:
            out.append("-" + text if sign < 0 else text)
        else:
            out.append((" - " if sign < 0 else " + ") + text)
    return "".join(out)


# json structures ---------------------------------------------------------


def _atom_obj(atom: EAtom) -> dict:
    base = atom.base
    if isinstance(base, Generator):
        return {
            "kind": "generator",
            "variable": base.variable,
            "component": base.component,
            "power": atom.power,
        }
    return {
        "kind": "grouped",
        "word": [_atom_obj(a) for a in base.word],
        "power": atom.power,
    }


def poly_terms_obj(p: Polynomial) -> list:
    return [
        {
            "re": str(coeff.re),
            "im": str(coeff.im),
            "factors": [[_atom_obj(a) for a in w] for w in mono],
        }
        for mono, coeff in p.terms
    ]


def print_poly(p: Polynomial, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return _poly_ascii(p)
    if fmt == "latex":
        return _poly_latex(p)
    if fmt == "json":
        return json.dumps(poly_terms_obj(p))
    raise ValueError("unknown format: %r" % (fmt,))


# reports -----------------------------------------------------------------


def report_line(report) -> str:
    return "%s %s %s orders=%s mode=%s residual_terms=%d" % (
        "PASS" if report.passed else "FAIL",
        report.family,
        report.identity,
        ",".join(str(o) for o in report.orders),
        report.mode.label(),
        len(report.residual.terms),
    )


def report_obj(report) -> dict:
    # field names and their order are the stable public schema
    return {
        "family": report.family,
        "identity": str(report.identity),
        "orders": list(report.orders),
        "mode": {
            "commutative": report.mode.commutative,
            "leibniz": report.mode.leibniz,
        },
        "pass": report.passed,
        "residual_terms": poly_terms_obj(report.residual),
        "term_counts": dict(report.term_counts),
    }


def report_json(report) -> str:
    return json.dumps(report_obj(report))


def reports_json(reports) -> str:
    return json.dumps([report_obj(r) for r in reports], indent=2)


# traces ------------------------------------------------------------------


def trace_lines(trace, fmt: str = "ascii") -> List[str]:
    if fmt == "json":
        return [
            json.dumps(
                {
                    "family": trace.family,
                    "identity": str(trace.identity),
                    "orders": list(trace.orders),
                    "mode": {
                        "commutative": trace.mode.commutative,
                        "leibniz": trace.mode.leibniz,
                    },
                    "steps": [
                        {"label": label, "value": poly_terms_obj(value)}
                        for label, value in trace.steps
                    ],
                },
                indent=2,
            )
        ]
    render = _poly_latex if fmt == "latex" else _poly_ascii
    lines = [
        "%s %s orders=%s mode=%s"
        % (
            trace.family,
            trace.identity,
            ",".join(str(o) for o in trace.orders),
            trace.mode.label(),
        )
    ]
    for label, value in trace.steps:
        lines.append("  %s = %s" % (label, render(value)))
    return lines


# mapping tables ------------------------------------------------------------


def table_lines(family: str, rows, fmt: str = "ascii") -> List[str]:
    if fmt == "json":
        return [
            json.dumps(
                {
                    "family": family,
                    "rows": [
                        {
                            "mapping": str(mid),
                            "left": poly_terms_obj(left),
                            "right": poly_terms_obj(right),
                            "value": poly_terms_obj(value),
                        }
                        for mid, (left, right), value in rows
                    ],
                },
                indent=2,
            )
        ]
    render = _poly_latex if fmt == "latex" else _poly_ascii
    return [
        "%s(%s, %s) = %s" % (mid, render(left), render(right), render(value))
        for mid, (left, right), value in rows
    ]


def limit_lines(mapping_set, arg_names=("f1", "g1"), fmt: str = "ascii") -> List[str]:
    if fmt == "json":
        return [
            json.dumps(
                {
                    "family": mapping_set.family,
                    "limit_mode": mapping_set.limit_mode,
                    "maps": {
                        str(mid): poly_terms_obj(value)
                        for mid, value in mapping_set.maps.items()
                    },
                },
                indent=2,
            )
        ]
    render = _poly_latex if fmt == "latex" else _poly_ascii
    return [
        "%s(%s, %s) = %s" % (mid, arg_names[0], arg_names[1], render(value))
        for mid, value in mapping_set.maps.items()
    ]
