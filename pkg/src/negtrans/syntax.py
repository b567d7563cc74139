"""Concrete syntax: lexer, recursive-descent parser, pretty-printer, corpus.

Grammar (ASCII, with accepted Unicode aliases in brackets):

    formula := quant | iff
    quant   := ("forall" | "exists") name "." formula        [∀ ∃]
    iff     := imp ("<->" (quant | iff))?                    [↔]  sugar
    imp     := or  ("->"  (quant | imp))?                    [→]  right assoc
    or      := and ("\\/" and)*                              [∨]  left assoc
    and     := un  ("/\\" un)*                               [∧]  left assoc
    un      := "~" un | prim                                 [¬]
    prim    := "_|_" | ATOM ( "(" term ("," term)* ")" )? | "(" formula ")"   [⊥]

Atoms are capitalized identifiers. Lowercase identifiers in term position
are variables when they match ``[u-z][0-9']*`` (x, y, z1, ...) and
constants otherwise (a, c0, alice, ...). ``~A`` is parsed as ``A -> _|_``
and ``A <-> B`` as ``(A -> B) /\\ (B -> A)``. Quantifiers extend as far
right as possible and bind weakest; they must be parenthesized when used
as an operand of a binary connective or under ``~``.

The corpus format is JSON Lines: one object per line with fields ``name``,
``formula`` (a string in the grammar above) and optional booleans
``expected_cl`` / ``expected_il``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional

from .formula import (
    And,
    Atom,
    Bottom,
    Constant,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    Variable,
    as_negation,
    iff,
)

_VAR_RE = re.compile(r"[u-z][0-9']*")


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int, expected: tuple = ()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        loc = f"line {line}, column {col}"
        if expected:
            message = f"{message} at {loc} (expected one of: {', '.join(expected)})"
        else:
            message = f"{message} at {loc}"
        super().__init__(message)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    col: int


_PUNCT = [
    ("<->", "IFF"),
    ("->", "IMP"),
    ("/\\", "AND"),
    ("\\/", "OR"),
    ("_|_", "BOT"),
    ("~", "NOT"),
    ("(", "LP"),
    (")", "RP"),
    (",", "COMMA"),
    (".", "DOT"),
]

_UNICODE = {
    "∧": "AND",
    "∨": "OR",
    "→": "IMP",
    "↔": "IFF",
    "¬": "NOT",
    "⊥": "BOT",
    "∀": "FORALL",
    "∃": "EXISTS",
}

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


def _lex(text: str) -> List[_Token]:
    toks: List[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            i += 1
            col += 1
            continue
        if c in _UNICODE:
            toks.append(_Token(_UNICODE[c], c, line, col))
            i += 1
            col += 1
            continue
        for lit, kind in _PUNCT:
            if text.startswith(lit, i):
                toks.append(_Token(kind, lit, line, col))
                i += len(lit)
                col += len(lit)
                break
        else:
            m = _IDENT.match(text, i)
            if m:
                word = m.group()
                if word == "forall":
                    kind = "FORALL"
                elif word == "exists":
                    kind = "EXISTS"
                else:
                    kind = "NAME"
                toks.append(_Token(kind, word, line, col))
                i = m.end()
                col += len(word)
            else:
                raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(_Token("EOF", "", line, col))
    return toks


class _Parser:
    def __init__(self, toks: List[_Token]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def next(self) -> _Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str, what: str) -> _Token:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(
                f"unexpected {t.text!r}" if t.kind != "EOF" else "unexpected end of input",
                t.line,
                t.col,
                expected=(what,),
            )
        return self.next()

    def formula(self) -> Formula:
        if self.peek().kind in ("FORALL", "EXISTS"):
            return self.quant()
        return self.iff()

    def quant(self) -> Formula:
        t = self.next()
        name = self.expect("NAME", "variable name")
        if not _VAR_RE.fullmatch(name.text):
            raise ParseError(
                f"{name.text!r} is not a variable name (use u..z with optional digits)",
                name.line,
                name.col,
            )
        self.expect("DOT", "'.'")
        body = self.formula()
        return (Forall if t.kind == "FORALL" else Exists)(name.text, body)

    def _tail(self) -> Formula:
        if self.peek().kind in ("FORALL", "EXISTS"):
            return self.quant()
        return self.iff()

    def iff(self) -> Formula:
        left = self.imp()
        if self.peek().kind == "IFF":
            self.next()
            right = self._tail()
            return iff(left, right)
        return left

    def imp(self) -> Formula:
        left = self.or_()
        if self.peek().kind == "IMP":
            self.next()
            if self.peek().kind in ("FORALL", "EXISTS"):
                return Imp(left, self.quant())
            return Imp(left, self.imp())
        return left

    def or_(self) -> Formula:
        f = self.and_()
        while self.peek().kind == "OR":
            self.next()
            f = Or(f, self.and_())
        return f

    def and_(self) -> Formula:
        f = self.un()
        while self.peek().kind == "AND":
            self.next()
            f = And(f, self.un())
        return f

    def un(self) -> Formula:
        if self.peek().kind == "NOT":
            self.next()
            return Imp(self.un(), Bottom())
        return self.prim()

    def prim(self) -> Formula:
        t = self.peek()
        if t.kind == "BOT":
            self.next()
            return Bottom()
        if t.kind == "LP":
            self.next()
            f = self.formula()
            self.expect("RP", "')'")
            return f
        if t.kind == "NAME":
            if not t.text[0].isupper():
                raise ParseError(
                    f"atom names must be capitalized, got {t.text!r}", t.line, t.col
                )
            self.next()
            args: list = []
            if self.peek().kind == "LP":
                self.next()
                args.append(self.term())
                while self.peek().kind == "COMMA":
                    self.next()
                    args.append(self.term())
                self.expect("RP", "')'")
            return Atom(t.text, tuple(args))
        raise ParseError(
            f"unexpected {t.text!r}" if t.kind != "EOF" else "unexpected end of input",
            t.line,
            t.col,
            expected=("atom", "'_|_'", "'~'", "'('", "'forall'", "'exists'"),
        )

    def term(self):
        t = self.expect("NAME", "term (variable or constant)")
        if t.text[0].isupper():
            raise ParseError(f"terms must be lowercase, got {t.text!r}", t.line, t.col)
        if _VAR_RE.fullmatch(t.text):
            return Variable(t.text)
        return Constant(t.text)


def parse(text: str) -> Formula:
    """Parse a formula; raises ParseError with line/column on bad input."""
    p = _Parser(_lex(text))
    f = p.formula()
    t = p.peek()
    if t.kind != "EOF":
        raise ParseError(f"trailing input {t.text!r}", t.line, t.col)
    return f


# -- pretty-printer ----------------------------------------------------------

_PREC_ATOM = 5
_PREC_NOT = 4
_PREC_AND = 3
_PREC_OR = 2
_PREC_IMP = 1
_PREC_QUANT = 0


def _prec(f: Formula) -> int:
    if isinstance(f, (Atom, Bottom)):
        return _PREC_ATOM
    if as_negation(f) is not None:
        return _PREC_NOT
    if isinstance(f, And):
        return _PREC_AND
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, Imp):
        return _PREC_IMP
    return _PREC_QUANT


def _term_str(t) -> str:
    return t.name


def _pp(f: Formula, required: int, tail: bool) -> str:
    inner = as_negation(f)
    if inner is not None:
        s = "~" + _pp(inner, _PREC_NOT, False)
        return s if _PREC_NOT >= required else f"({s})"
    if isinstance(f, Bottom):
        return "_|_"
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({','.join(_term_str(t) for t in f.args)})"
    if isinstance(f, And):
        s = f"{_pp(f.left, _PREC_AND, False)} /\\ {_pp(f.right, _PREC_AND + 1, False)}"
        return s if _PREC_AND >= required else f"({s})"
    if isinstance(f, Or):
        s = f"{_pp(f.left, _PREC_OR, False)} \\/ {_pp(f.right, _PREC_OR + 1, False)}"
        return s if _PREC_OR >= required else f"({s})"
    if isinstance(f, Imp):
        s = f"{_pp(f.left, _PREC_IMP + 1, False)} -> {_pp(f.right, _PREC_IMP, tail)}"
        return s if _PREC_IMP >= required else f"({s})"
    if isinstance(f, (Forall, Exists)):
        kw = "forall" if isinstance(f, Forall) else "exists"
        s = f"{kw} {f.var}. {_pp(f.body, _PREC_QUANT, True)}"
        return s if tail else f"({s})"
    raise TypeError(f"not a formula: {f!r}")


def print_formula(a: Formula) -> str:
    """Minimal-parentheses rendering; Imp(X, Bottom) prints as ~X.

    parse(print_formula(a)) is alpha-equal to a.
    """
    return _pp(a, _PREC_QUANT, True)


# -- corpus ------------------------------------------------------------------


@dataclass
class CorpusEntry:
    name: str
    formula: Formula
    expected_cl: Optional[bool] = None
    expected_il: Optional[bool] = None
    source: str = ""


class CorpusError(Exception):
    pass


def load_corpus_lines(lines: Iterable[str], origin: str = "<corpus>") -> List[CorpusEntry]:
    entries: List[CorpusEntry] = []
    seen = {}
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as e:
            raise CorpusError(f"{origin}:{lineno}: bad JSON: {e}") from e
        if not isinstance(obj, dict):
            raise CorpusError(f"{origin}:{lineno}: expected a JSON object")
        try:
            name = obj["name"]
            text = obj["formula"]
        except KeyError as e:
            raise CorpusError(f"{origin}:{lineno}: missing field {e}") from e
        if name in seen:
            raise CorpusError(
                f"{origin}:{lineno}: duplicate name {name!r} (first defined on line {seen[name]})"
            )
        seen[name] = lineno
        for key in ("expected_cl", "expected_il"):
            if obj.get(key) is not None and not isinstance(obj[key], bool):
                raise CorpusError(f"{origin}:{lineno}: {key} must be a boolean")
        try:
            f = parse(text)
        except ParseError as e:
            raise CorpusError(f"{origin}:{lineno}: formula does not parse: {e}") from e
        entries.append(
            CorpusEntry(
                name=name,
                formula=f,
                expected_cl=obj.get("expected_cl"),
                expected_il=obj.get("expected_il"),
                source=text,
            )
        )
    return entries


def load_corpus(path) -> List[CorpusEntry]:
    """Load a JSON Lines corpus file; any bad line aborts with its number."""
    with open(path, "r", encoding="utf-8") as fh:
        return load_corpus_lines(fh, origin=str(path))


def load_default_corpus() -> List[CorpusEntry]:
    """The corpus shipped with the package."""
    from importlib.resources import files

    text = files("negtrans").joinpath("data/default.jsonl").read_text(encoding="utf-8")
    return load_corpus_lines(text.splitlines(), origin="<default corpus>")
