"""Compile small regular expressions to trim deterministic automata.

Grammar (whitespace is ignored)::

    expr   := term ('+' term)*
    term   := factor factor*
    factor := atom '*'*
    atom   := LITERAL | '(' expr ')'

``+`` is union, as in the automata literature, not "one or more".  The
position (Glushkov) automaton is built first and then determinised; the
result is trimmed but not minimised.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import COMMENT, Dfa, trim
from .errors import RegexSyntaxError

SPECIAL = set("+*()")


@dataclass
class _Node:
    nullable: bool
    first: frozenset
    last: frozenset


class _Parser:
    def __init__(self, pattern: str):
        self.tokens = [(i, c) for i, c in enumerate(pattern) if not c.isspace()]
        self.end = len(pattern)
        self.pos = 0
        self.symbols: list[str] = []  # symbol of each position, 1-based
        self.follow: list[set[int]] = [set()]

    def peek(self) -> str | None:
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else None

    def where(self) -> int:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else self.end

    def parse(self) -> _Node:
        if not self.tokens:
            raise RegexSyntaxError(0, "empty pattern")
        node = self.expr()
        if self.pos != len(self.tokens):
            raise RegexSyntaxError(self.where(), f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> _Node:
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            other = self.term()
            node = _Node(node.nullable or other.nullable,
                         node.first | other.first, node.last | other.last)
        return node

    def term(self) -> _Node:
        if self.peek() in (None, "+", ")", "*"):
            raise RegexSyntaxError(self.where(), "expected a literal or '('")
        node = self.factor()
        while self.peek() is not None and self.peek() not in ("+", ")"):
            other = self.factor()
            for p in node.last:
                self.follow[p] |= other.first
            node = _Node(
                node.nullable and other.nullable,
                node.first | other.first if node.nullable else node.first,
                node.last | other.last if other.nullable else other.last,
            )
        return node

    def factor(self) -> _Node:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            for p in node.last:
                self.follow[p] |= node.first
            node = _Node(True, node.first, node.last)
        return node

    def atom(self) -> _Node:
        c = self.peek()
        if c == "(":
            start = self.where()
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise RegexSyntaxError(self.where(), f"unclosed '(' opened at {start}")
            self.pos += 1
            return node
        if c is None or c in SPECIAL:
            raise RegexSyntaxError(self.where(), "expected a literal or '('")
        if c == COMMENT:
            raise RegexSyntaxError(self.where(), f"{COMMENT!r} cannot be used as a symbol")
        self.pos += 1
        self.symbols.append(c)
        self.follow.append(set())
        p = len(self.symbols)
        return _Node(False, frozenset({p}), frozenset({p}))


def compile_regex(pattern: str) -> Dfa:
    parser = _Parser(pattern)
    root = parser.parse()
    symbols = parser.symbols
    follow = parser.follow
    follow[0] = set(root.first)  # position 0 is the start
    alphabet = tuple(sorted(set(symbols)))

    def accepting(s: frozenset) -> bool:
        return bool(s & root.last) or (0 in s and root.nullable)

    start = frozenset({0})
    ids = {start: 0}
    table: list[list[int | None]] = []
    finals = set()
    queue = deque([start])
    while queue:
        s = queue.popleft()
        sid = ids[s]
        if accepting(s):
            finals.add(sid)
        row: list[int | None] = []
        for a in alphabet:
            t = frozenset(q for p in s for q in follow[p] if symbols[q - 1] == a)
            if not t:
                row.append(None)
                continue
            if t not in ids:
                ids[t] = len(ids)
                queue.append(t)
            row.append(ids[t])
        table.append(row)
    return trim(Dfa(len(table), alphabet, tuple(map(tuple, table)), 0, frozenset(finals)))
