"""Tokenizer and recursive-descent parser for element expressions.

Grammar (ASCII minus and the minus-sign character are interchangeable):

    element   := [sign] term (sign term)*
    term      := scalar ['*'] [word] | word
    word      := mletter (('@' | '[]') mletter)*
    mletter   := LETTER ['.' group] | groupatom
    group     := groupatom | NAME
    groupatom := 'K{' int (',' int)* '}'
    scalar    := rational | qpow | '(' spoly ')'
    qpow      := 'q' ['^' int]
    rational  := INT ['/' INT]
    spoly     := [sign] sterm (sign sterm)*
    sterm     := rational [['*'] qpow] | qpow

The identifier ``q`` is reserved for the scalar parameter.  Parsing is
purely syntactic: letters stay names and group atoms stay raw exponent
tuples; binding against a declared basis happens in the config layer.
The parsed form of an element is a list of (Scalar, letters) terms where
each letter is ``("L", name, exps_or_None)`` or ``("G", exps_or_name)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import ConfigError
from .scalars import Scalar


class Token(NamedTuple):
    kind: str   # IDENT, INT, SYM, END
    text: str
    column: int


_SYMBOLS = "+-*@.(){},/^"


def tokenize(text: str, line: int | None = None) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "−":
            tokens.append(Token("SYM", "-", i + 1))
            i += 1
            continue
        if text.startswith("[]", i):
            tokens.append(Token("SYM", "[]", i + 1))
            i += 2
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], i + 1))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], i + 1))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token("SYM", ch, i + 1))
            i += 1
            continue
        raise ConfigError(f"unexpected character {ch!r}", line, i + 1)
    tokens.append(Token("END", "", n + 1))
    return tokens


Letter = tuple  # ("L", name, exps|None) or ("G", exps or name)
ParsedElement = list  # list[tuple[Scalar, tuple[Letter, ...]]]


class _Parser:
    def __init__(self, tokens: list[Token], line: int | None = None):
        self.tokens = tokens
        self.pos = 0
        self.line = line

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str) -> ConfigError:
        return ConfigError(message, self.line, self.peek().column)

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            raise self.error(f"expected {want!r}, found {tok.text or 'end of input'!r}")
        return self.next()

    def at_sym(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "SYM" and tok.text == text

    # -- scalar layer -------------------------------------------------------

    def parse_int(self) -> int:
        sign = 1
        if self.at_sym("-"):
            self.next()
            sign = -1
        tok = self.expect("INT")
        return sign * int(tok.text)

    def parse_rational(self) -> Fraction:
        tok = self.expect("INT")
        num = int(tok.text)
        if self.at_sym("/"):
            self.next()
            den = int(self.expect("INT").text)
            if den == 0:
                raise self.error("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def parse_qpow(self) -> Scalar:
        self.expect("IDENT", "q")
        if self.at_sym("^"):
            self.next()
            return Scalar.q_power(self.parse_int())
        return Scalar.q_power(1)

    def at_scalar_start(self) -> bool:
        tok = self.peek()
        return tok.kind == "INT" or (tok.kind == "IDENT" and tok.text == "q") \
            or (tok.kind == "SYM" and tok.text == "(")

    def parse_scalar_atom(self) -> Scalar:
        tok = self.peek()
        if tok.kind == "INT":
            return Scalar.rational(self.parse_rational())
        if tok.kind == "IDENT" and tok.text == "q":
            return self.parse_qpow()
        if self.at_sym("("):
            self.next()
            value = self.parse_spoly()
            self.expect("SYM", ")")
            return value
        raise self.error("expected a scalar")

    def parse_sterm(self) -> Scalar:
        tok = self.peek()
        if tok.kind == "INT":
            coeff = Scalar.rational(self.parse_rational())
            if self.at_sym("*"):
                self.next()
                return coeff * self.parse_qpow()
            if self.peek().kind == "IDENT" and self.peek().text == "q":
                return coeff * self.parse_qpow()
            return coeff
        return self.parse_qpow()

    def parse_spoly(self) -> Scalar:
        negative = False
        if self.at_sym("-"):
            self.next()
            negative = True
        elif self.at_sym("+"):
            self.next()
        value = self.parse_sterm()
        if negative:
            value = -value
        while self.at_sym("+") or self.at_sym("-"):
            sign = self.next().text
            term = self.parse_sterm()
            value = value + (-term if sign == "-" else term)
        return value

    def parse_signed_scalar(self) -> Scalar:
        """A scalar with an optional leading sign (config entries)."""
        negative = False
        if self.at_sym("-"):
            self.next()
            negative = True
        value = self.parse_scalar_atom()
        return -value if negative else value

    # -- word layer ----------------------------------------------------------

    def parse_groupatom(self) -> tuple[int, ...]:
        self.expect("IDENT", "K")
        self.expect("SYM", "{")
        exps = [self.parse_int()]
        while self.at_sym(","):
            self.next()
            exps.append(self.parse_int())
        self.expect("SYM", "}")
        return tuple(exps)

    def at_groupatom(self) -> bool:
        tok = self.peek()
        return tok.kind == "IDENT" and tok.text == "K" \
            and self.tokens[self.pos + 1].kind == "SYM" \
            and self.tokens[self.pos + 1].text == "{"

    def at_word_start(self) -> bool:
        tok = self.peek()
        if self.at_groupatom():
            return True
        return tok.kind == "IDENT" and tok.text != "q"

    def parse_mletter(self) -> Letter:
        if self.at_groupatom():
            return ("G", self.parse_groupatom())
        tok = self.expect("IDENT")
        if tok.text == "q":
            raise self.error("'q' is reserved for the scalar parameter")
        if self.at_sym("."):
            self.next()
            if self.at_groupatom():
                return ("L", tok.text, self.parse_groupatom())
            name = self.expect("IDENT")
            return ("L", tok.text, name.text)
        return ("L", tok.text, None)

    def parse_word(self) -> tuple[Letter, ...]:
        letters = [self.parse_mletter()]
        while self.at_sym("@") or self.at_sym("[]"):
            self.next()
            letters.append(self.parse_mletter())
        return tuple(letters)

    # -- element layer ---------------------------------------------------------

    def parse_term(self) -> tuple[Scalar, tuple[Letter, ...]]:
        if self.at_word_start():
            return Scalar.one(), self.parse_word()
        coeff = self.parse_scalar_atom()
        if self.at_sym("*"):
            self.next()
            return coeff, self.parse_word()
        if self.at_word_start():
            return coeff, self.parse_word()
        return coeff, ()

    def parse_element(self) -> ParsedElement:
        terms: ParsedElement = []
        negative = False
        if self.at_sym("-"):
            self.next()
            negative = True
        elif self.at_sym("+"):
            self.next()
        coeff, word = self.parse_term()
        terms.append(((-coeff if negative else coeff), word))
        while self.at_sym("+") or self.at_sym("-"):
            sign = self.next().text
            coeff, word = self.parse_term()
            terms.append(((-coeff if sign == "-" else coeff), word))
        return terms


def parse_element_text(text: str, line: int | None = None) -> ParsedElement:
    parser = _Parser(tokenize(text, line), line)
    terms = parser.parse_element()
    parser.expect("END")
    return terms


def parse_scalar_text(text: str, line: int | None = None) -> Scalar:
    parser = _Parser(tokenize(text, line), line)
    value = parser.parse_signed_scalar()
    parser.expect("END")
    return value


def split_top_level_commas(text: str, line: int | None = None) -> list[str]:
    """Split on commas that are not nested in parentheses or braces."""
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
            if depth < 0:
                raise ConfigError("unbalanced parentheses", line)
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    if depth != 0:
        raise ConfigError("unbalanced parentheses", line)
    return parts
