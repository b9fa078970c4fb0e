"""Polynomial text grammar.

    polynomial ::= [sign] term (sign term)*
    term       ::= atom ('*' atom)*
    atom       ::= coeff | factor
    factor     ::= name '[' idx ']' ('^' exp)?
    coeff      ::= rational | '(' rational ',' rational ')'
    rational   ::= ['-'] int ('/' posint)?

Conjugate symbols use the `bar` suffix convention: `zbar[2]` is the formal
conjugate of `z[2]`.  format() emits terms in canonical order (graded, then
lexicographic by group order / index / bar flag), so format(parse(s)) is a
canonical form and formatting is idempotent.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .poly import SparsePolynomial, canonical_terms, mono_mul
from .scalars import ONE, ExactScalar
from .variables import VariableSystem


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def eat_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits0 = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits0:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def eat_rational(self) -> Fraction:
        num = self.eat_int()
        if self.peek() == "/":
            self.pos += 1
            denpos = self.pos
            den = self.eat_int()
            if den <= 0:
                raise ParseError("denominator must be positive", denpos)
            return Fraction(num, den)
        return Fraction(num)

    def eat_name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a name", start)
        return self.text[start:self.pos]


def parse_polynomial(text: str, system: VariableSystem) -> SparsePolynomial:
    sc = _Scanner(text)
    terms: dict = {}
    first = True
    while True:
        sc.skip_ws()
        if sc.pos >= len(sc.text):
            if first:
                raise ParseError("empty input", sc.pos)
            break
        sign = 1
        ch = sc.peek()
        if ch == "+":
            sc.pos += 1
        elif ch == "-":
            sign = -1
            sc.pos += 1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", sc.pos)
        coeff, mono = _parse_term(sc, system)
        if sign < 0:
            coeff = -coeff
        acc = terms.get(mono)
        if acc is None:
            terms[mono] = coeff
        else:
            s = acc + coeff
            if s:
                terms[mono] = s
            else:
                del terms[mono]
        first = False
    return SparsePolynomial(system, terms, _normalized=True)


def _parse_term(sc: _Scanner, system: VariableSystem):
    coeff = ONE
    mono = ()
    while True:
        c, m = _parse_atom(sc, system)
        coeff = coeff * c
        mono = mono_mul(mono, m)
        if sc.peek() == "*":
            sc.pos += 1
            continue
        return coeff, mono


def _parse_atom(sc: _Scanner, system: VariableSystem):
    ch = sc.peek()
    if ch == "(":
        sc.pos += 1
        re = sc.eat_rational()
        sc.expect(",")
        im = sc.eat_rational()
        sc.expect(")")
        return ExactScalar(re, im), ()
    if ch.isdigit() or ch == "-":
        return ExactScalar(sc.eat_rational()), ()
    pos = sc.pos
    name = sc.eat_name()
    if sc.peek() != "[":
        raise ParseError(f"symbol {name!r} needs an index like {name}[1]", pos)
    sc.pos += 1
    idx = sc.eat_int()
    sc.expect("]")
    try:
        sid = system.resolve_name(name, idx)
    except Exception as exc:
        raise ParseError(str(exc), pos) from None
    exp = 1
    if sc.peek() == "^":
        sc.pos += 1
        epos = sc.pos
        exp = sc.eat_int()
        if exp < 0:
            raise ParseError("exponent must be non-negative", epos)
    if exp == 0:
        return ONE, ()
    return ONE, ((sid, exp),)


def format_polynomial(p: SparsePolynomial) -> str:
    if p.is_zero:
        return "0"
    system = p.system
    parts = []
    for mono, coeff in canonical_terms(p):
        factors = []
        for sid, e in mono:
            name = system.display(sid)
            factors.append(name if e == 1 else f"{name}^{e}")
        body = "*".join(factors)
        if coeff.im:
            text = f"({coeff.re},{coeff.im})" + (f"*{body}" if body else "")
            parts.append(("+", text))
        else:
            re = coeff.re
            sign = "-" if re < 0 else "+"
            mag = -re if re < 0 else re
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append((sign, text))
    first_sign, first_text = parts[0]
    out = (first_sign if first_sign == "-" else "") + first_text
    for sign, text in parts[1:]:
        out += sign + text
    return out
