"""Parser for functor expressions such as ``"L^2 o L^2"`` or ``"J^4 * J^2"``.

Grammar (``o`` binds tightest, then ``*``, then ``+``)::

    sum   := prod ('+' prod)*
    prod  := comp ('*' comp)*
    comp  := atom ('o' comp)?
    atom  := NAME ['^' INT] | '(' sum ')'

Atoms: T, SP, L (exterior), G (divided power), Lie, SLie, J, Y, E, W, Id,
and Z / Z^k for constant functors.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from .base import PolyFunctor
from .closed import Constant, Div, Ext, Identity, Sym, Tensor
from .combinators import Compose, DirectSum, TensorProd
from .lie import Lie
from .schur import SchurE, SchurJ, SchurY, W
from .superlie import SuperLie

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z]+)|(?P<int>\d+)|(?P<op>[\^*+()]))")

_ATOMS = {
    "T": (Tensor, 1),
    "SP": (Sym, 1),
    "L": (Ext, 1),
    "G": (Div, 1),
    "Lie": (Lie, 1),
    "SLie": (SuperLie, 1),
    "J": (SchurJ, 2),
    "Y": (SchurY, 2),
    "E": (SchurE, 2),
    "W": (W, 1),
}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind is None:
            break
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> PolyFunctor:
        if not self.tokens:
            raise ParseError("empty functor expression", 0)
        f = self.sum()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return f

    def sum(self) -> PolyFunctor:
        f = self.prod()
        while (tok := self.peek()) is not None and tok[1] == "+":
            self.take()
            f = DirectSum(f, self.prod())
        return f

    def prod(self) -> PolyFunctor:
        f = self.comp()
        while (tok := self.peek()) is not None and tok[1] == "*":
            self.take()
            f = TensorProd(f, self.comp())
        return f

    def comp(self) -> PolyFunctor:
        f = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "name" and tok[1] == "o":
            self.take()
            return Compose(f, self.comp())
        return f

    def atom(self) -> PolyFunctor:
        tok = self.take()
        kind, value, pos = tok
        if value == "(":
            f = self.sum()
            self.expect(")")
            return f
        if kind != "name":
            raise ParseError(f"expected a functor, found {value!r}", pos)
        if value == "Id":
            return Identity()
        if value == "Z":
            return Constant(self._exponent(default=1, least=1))
        if value not in _ATOMS:
            raise ParseError(f"unknown functor {value!r}", pos)
        build, least = _ATOMS[value]
        nxt = self.peek()
        if nxt is None or nxt[1] != "^":
            raise ParseError(f"{value} needs a degree, as in {value}^2", pos)
        return build(self._exponent(default=None, least=least))

    def _exponent(self, default: int | None, least: int) -> int:
        tok = self.peek()
        if tok is None or tok[1] != "^":
            if default is None:
                raise ParseError("missing degree", len(self.text))
            return default
        self.take()
        kind, value, pos = self.take()
        if kind != "int":
            raise ParseError(f"expected an integer degree, found {value!r}", pos)
        n = int(value)
        if n < least:
            raise ParseError(f"degree must be at least {least}", pos)
        return n


def parse_functor(text: str) -> PolyFunctor:
    """Parse a functor expression into a descriptor tree."""
    return _Parser(text).parse()


def format_functor(f: PolyFunctor) -> str:
    return f.expr()
