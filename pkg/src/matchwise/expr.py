"""Graph expressions for the command line.

Grammar (whitespace is ignored)::

    expr  := 'K' size | 'P' num | 'C' num | 'S' num | 'M' num | 'E' num
           | 'B' '[' nums ']' | 'U' '[' num ';' nums ']'
           | 'pad' '(' expr ',' num ')' | 'union' '(' expr ',' expr ')'
           | 'g6:' graph6-characters
    size  := num | '{' digits [',' digits] '}'
    num   := digits | '{' digits '}'
    nums  := digits (',' digits)*

``S d`` is the star K_{1,d}, ``M t`` the matching tK_2, ``E s`` the edgeless
graph sK_1, ``B[l1,..,lk]`` a bundle and ``U[t; l1,..,lk]`` its host U_t.
The two-part complete bipartite graph needs braces (``K{3,3}``) so that a
comma inside ``union(..)`` stays unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graph as g
from .constructions import BundleParams, UtParams, build_bundle, build_ut, pad_with_isolates
from .errors import CapError, GraphError


class ParseError(GraphError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


@dataclass(frozen=True)
class Node:
    kind: str
    args: tuple

    def build(self) -> g.Graph:
        k, a = self.kind, self.args
        if k == "K":
            return g.complete(a[0]) if len(a) == 1 else g.complete_bipartite(*a)
        if k == "P":
            return g.path(a[0])
        if k == "C":
            return g.cycle(a[0])
        if k == "S":
            return g.star(a[0])
        if k == "M":
            return g.matching(a[0])
        if k == "E":
            return g.empty(a[0])
        if k == "B":
            return build_bundle(self.bundle)
        if k == "U":
            return build_ut(UtParams(BundleParams.of(*a[1]), a[0]))
        if k == "pad":
            return pad_with_isolates(a[0].build(), a[1])
        if k == "union":
            return g.disjoint_union(a[0].build(), a[1].build())
        if k == "g6":
            return g.graph6_decode(a[0])
        raise GraphError(f"unknown node {k}")

    @property
    def bundle(self) -> BundleParams | None:
        return BundleParams.of(*self.args) if self.kind == "B" else None


class _Parser:
    def __init__(self, text: str):
        self.src = text
        self.s = "".join(text.split())
        self.i = 0

    def error(self, msg: str):
        raise ParseError(msg, self.src, self.i)

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def digits(self) -> int:
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected an integer")
        return int(self.s[start:self.i])

    def num(self) -> int:
        if self.peek() == "{":
            self.i += 1
            v = self.digits()
            self.expect("}")
            return v
        return self.digits()

    def nums(self) -> tuple[int, ...]:
        out = [self.digits()]
        while self.peek() == ",":
            self.i += 1
            out.append(self.digits())
        return tuple(out)

    def keyword(self, word: str) -> None:
        if not self.s.startswith(word, self.i):
            self.error(f"expected {word!r}")
        self.i += len(word)

    def expr(self) -> Node:
        ch = self.peek()
        if ch == "K":
            self.i += 1
            if self.peek() == "_":
                self.i += 1
            if self.peek() == "{":
                self.i += 1
                parts = self.nums()
                self.expect("}")
                if len(parts) > 2:
                    self.error("K takes one or two sizes")
                return Node("K", parts)
            return Node("K", (self.digits(),))
        if ch in "PCSME" and ch:
            self.i += 1
            return Node(ch, (self.num(),))
        if ch == "B":
            self.i += 1
            self.expect("[")
            ell = self.nums()
            self.expect("]")
            return Node("B", ell)
        if ch == "U":
            self.i += 1
            self.expect("[")
            t = self.digits()
            self.expect(";")
            ell = self.nums()
            self.expect("]")
            return Node("U", (t, ell))
        if ch == "p":
            self.keyword("pad")
            self.expect("(")
            inner = self.expr()
            self.expect(",")
            s = self.digits()
            self.expect(")")
            return Node("pad", (inner, s))
        if ch == "u":
            self.keyword("union")
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return Node("union", (left, right))
        if ch == "g":
            self.keyword("g6:")
            start = self.i
            while self.peek() and 63 <= ord(self.peek()) <= 126:
                self.i += 1
            if start == self.i:
                self.error("empty graph6 string")
            return Node("g6", (self.s[start:self.i],))
        self.error("expected a graph expression")


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    if p.i != len(p.s):
        p.error("unexpected trailing input")
    return node


def parse_graph_expr(text: str) -> g.Graph:
    """Evaluate a graph expression such as ``"pad(K2,3)"`` or ``"U[2;1,1]"``."""
    node = parse(text)
    try:
        return node.build()
    except CapError:
        raise
    except GraphError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), text, 0) from exc
