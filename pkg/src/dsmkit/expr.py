"""Recursive-descent parser and evaluator for union/intersection expressions.

Grammar (binding: '&' tighter than '|'):

    Expr   := Term ('|' Term)*
    Term   := Factor ('&' Factor)*
    Factor := atom | '(' Expr ')' | '0'

Atoms are written "t1".."t<n>"; the Greek spelling is accepted on input and
'∩'/'∪' are synonyms of '&'/'|'.  Whitespace is ignored.  There is no
complement operator: the algebra is union/intersection only, so negation
tokens are rejected at the syntax level.  Error offsets are UTF-8 byte
positions into the input.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import AtomRangeError, ParseError, RegionRangeError
from .hyperpowerset import render_expr, to_dnf
from .venn import Frame, VennMask, atom_mask, combine_masks, empty_mask


@dataclass(frozen=True)
class Atom:
    index: int


@dataclass(frozen=True)
class Intersect:
    children: tuple["ExprAst", ...]


@dataclass(frozen=True)
class Union:
    children: tuple["ExprAst", ...]


@dataclass(frozen=True)
class Empty:
    pass


ExprAst = Atom | Intersect | Union | Empty


class CanonicalForm(NamedTuple):
    mask: VennMask
    dnf: str


class _Token(NamedTuple):
    kind: str  # atom | and | or | lparen | rparen | zero | end
    value: int | None
    offset: int


_NEGATION_CHARS = set("!~^¬-\\")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    byte = 0
    while i < len(text):
        ch = text[i]
        width = len(ch.encode("utf-8"))
        if ch.isspace():
            i += 1
            byte += width
            continue
        if ch in "&∩":
            tokens.append(_Token("and", None, byte))
        elif ch in "|∪":
            tokens.append(_Token("or", None, byte))
        elif ch == "(":
            tokens.append(_Token("lparen", None, byte))
        elif ch == ")":
            tokens.append(_Token("rparen", None, byte))
        elif ch == "0":
            if i + 1 < len(text) and text[i + 1].isdigit():
                raise ParseError(
                    f"unexpected digit after '0' at byte {byte}", byte, {"'0'"}
                )
            tokens.append(_Token("zero", None, byte))
        elif ch in "tθ":
            start = byte
            i += 1
            byte += width
            digits = ""
            while i < len(text) and text[i].isdigit():
                digits += text[i]
                i += 1
                byte += 1
            if not digits:
                raise ParseError(
                    f"atom name needs an index, e.g. t1 (byte {start})",
                    start,
                    {"atom"},
                )
            tokens.append(_Token("atom", int(digits), start))
            continue
        elif ch in _NEGATION_CHARS:
            raise ParseError(
                f"complement/negation ({ch!r}) is not part of this algebra"
                f" (byte {byte})",
                byte,
                {"atom", "'('", "'0'", "'&'", "'|'"},
            )
        else:
            raise ParseError(
                f"unexpected character {ch!r} at byte {byte}",
                byte,
                {"atom", "'('", "'0'", "'&'", "'|'", "')'"},
            )
        i += 1
        byte += width
    tokens.append(_Token("end", None, byte))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], frame: Frame):
        self.tokens = tokens
        self.frame = frame
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> ExprAst:
        ast = self.expr()
        tok = self.current
        if tok.kind != "end":
            raise ParseError(
                f"trailing input at byte {tok.offset}",
                tok.offset,
                {"'&'", "'|'", "end of input"},
            )
        return ast

    def expr(self) -> ExprAst:
        terms = [self.term()]
        while self.current.kind == "or":
            self.advance()
            terms.append(self.term())
        return _flatten(Union, terms)

    def term(self) -> ExprAst:
        factors = [self.factor()]
        while self.current.kind == "and":
            self.advance()
            factors.append(self.factor())
        return _flatten(Intersect, factors)

    def factor(self) -> ExprAst:
        tok = self.current
        if tok.kind == "atom":
            self.advance()
            if not 1 <= tok.value <= self.frame.n:
                raise AtomRangeError(
                    f"atom t{tok.value} out of range 1..{self.frame.n}"
                    f" at byte {tok.offset}",
                    tok.offset,
                    {"atom"},
                )
            return Atom(tok.value)
        if tok.kind == "zero":
            self.advance()
            return Empty()
        if tok.kind == "lparen":
            self.advance()
            inner = self.expr()
            closing = self.current
            if closing.kind != "rparen":
                raise ParseError(
                    f"unclosed group at byte {closing.offset}",
                    closing.offset,
                    {"')'", "'&'", "'|'"},
                )
            self.advance()
            return inner
        raise ParseError(
            f"expected an operand at byte {tok.offset}",
            tok.offset,
            {"atom", "'('", "'0'"},
        )


def _flatten(node_type, children: list[ExprAst]) -> ExprAst:
    """n-ary flattening: nested nodes of the same associative kind splice."""
    if len(children) == 1:
        return children[0]
    flat: list[ExprAst] = []
    for child in children:
        if isinstance(child, node_type):
            flat.extend(child.children)
        else:
            flat.append(child)
    return node_type(tuple(flat))


def parse(text: str, frame: Frame) -> ExprAst:
    """Parse ``text`` into an AST, checking atom indices against the frame."""
    return _Parser(_tokenize(text), frame).parse()


def eval_mask(ast: ExprAst, frame: Frame) -> VennMask:
    """Fold the AST into a region mask; isotone by construction."""
    if isinstance(ast, Atom):
        if not 1 <= ast.index <= frame.n:
            raise RegionRangeError(f"atom {ast.index} out of range 1..{frame.n}")
        return atom_mask(ast.index, frame)
    if isinstance(ast, Empty):
        return empty_mask(frame)
    if isinstance(ast, (Intersect, Union)):
        op = "intersect" if isinstance(ast, Intersect) else "union"
        acc = eval_mask(ast.children[0], frame)
        for child in ast.children[1:]:
            acc = combine_masks(acc, eval_mask(child, frame), op)
        return acc
    raise TypeError(f"not an expression node: {ast!r}")


def canonicalize(text: str, frame: Frame) -> CanonicalForm:
    """Parse, evaluate, and reduce to minimal-DNF text. Idempotent."""
    mask = eval_mask(parse(text, frame), frame)
    return CanonicalForm(mask, render_expr(to_dnf(mask)))


def equivalent(e1: str, e2: str, frame: Frame) -> bool:
    """True iff both expressions denote the same lattice element."""
    return eval_mask(parse(e1, frame), frame) == eval_mask(parse(e2, frame), frame)
