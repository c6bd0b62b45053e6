"""Deterministic, possibly partial, finite automata.

States are the integers ``0 .. state_count - 1``.  The transition function is
stored as a table ``table[state][k]`` holding the target of the k-th alphabet
symbol, or ``None`` where the transition is undefined.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    EmptyAutomaton,
    InvalidAutomaton,
    NotACongruence,
    NotTrim,
    ParseError,
)
from .exact_linalg import Matrix, Partition

COMMENT = "#"


@dataclass(frozen=True)
class Dfa:
    state_count: int
    alphabet: tuple
    table: tuple
    initial: int | None
    finals: frozenset

    def __post_init__(self) -> None:
        n = self.state_count
        if type(self.alphabet) is not tuple:
            object.__setattr__(self, "alphabet", tuple(self.alphabet))
        if type(self.finals) is not frozenset:
            object.__setattr__(self, "finals", frozenset(self.finals))
        if type(self.table) is not tuple or any(type(r) is not tuple for r in self.table):
            object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        alphabet = self.alphabet
        k = len(alphabet)
        if n < 0:
            raise InvalidAutomaton("negative state count")
        if list(alphabet) != sorted(set(alphabet)):
            raise InvalidAutomaton("alphabet must be distinct symbols sorted by code point")
        for a in alphabet:
            if not isinstance(a, str) or len(a) != 1 or a.isspace() or a == COMMENT:
                raise InvalidAutomaton(f"invalid symbol {a!r}")
        if len(self.table) != n or any(len(r) != k for r in self.table):
            raise InvalidAutomaton("transition table shape does not match states x alphabet")
        targets = {t for r in self.table for t in r}
        targets.discard(None)
        if targets and not (min(targets) >= 0 and max(targets) < n):
            raise InvalidAutomaton("transition target out of range")
        if n == 0:
            if self.initial is not None or self.finals:
                raise InvalidAutomaton("the empty automaton has no initial or final states")
        elif self.initial is None or not 0 <= self.initial < n:
            raise InvalidAutomaton(f"initial state {self.initial} out of range")
        if self.finals and not (min(self.finals) >= 0 and max(self.finals) < n):
            raise InvalidAutomaton("final state out of range")

    @classmethod
    def _trusted(cls, state_count, alphabet, table, initial, finals) -> Dfa:
        """Skip validation; for tables built from an already valid automaton."""
        d = object.__new__(cls)
        object.__setattr__(d, "state_count", state_count)
        object.__setattr__(d, "alphabet", alphabet)
        object.__setattr__(d, "table", table)
        object.__setattr__(d, "initial", initial)
        object.__setattr__(d, "finals", finals)
        return d

    @classmethod
    def build(
        cls,
        state_count: int,
        alphabet: Iterable[str],
        transitions: Mapping[tuple[int, str], int],
        initial: int | None,
        finals: Iterable[int] = (),
    ) -> Dfa:
        """Construct from a ``(state, symbol) -> state`` mapping."""
        alphabet = tuple(sorted(set(alphabet)))
        index = {a: k for k, a in enumerate(alphabet)}
        table = [[None] * len(alphabet) for _ in range(state_count)]
        for (p, a), q in transitions.items():
            if a not in index:
                raise InvalidAutomaton(f"symbol {a!r} not in alphabet")
            if not 0 <= p < state_count:
                raise InvalidAutomaton(f"source state {p} out of range")
            table[p][index[a]] = q
        return cls(state_count, alphabet, tuple(map(tuple, table)), initial, frozenset(finals))

    @classmethod
    def empty(cls, alphabet: Iterable[str] = ()) -> Dfa:
        return cls(0, tuple(sorted(set(alphabet))), (), None, frozenset())

    @property
    def transitions(self) -> dict[tuple[int, str], int]:
        return {(p, a): q
                for p, row in enumerate(self.table)
                for a, q in zip(self.alphabet, row) if q is not None}

    def step(self, state: int, symbol: str) -> int | None:
        try:
            k = self.alphabet.index(symbol)
        except ValueError:
            return None
        return self.table[state][k]

    def run(self, word: str) -> int | None:
        """State reached from the initial state on ``word``, or None."""
        if self.initial is None:
            return None
        index = {a: k for k, a in enumerate(self.alphabet)}
        q = self.initial
        for ch in word:
            k = index.get(ch)
            if k is None:
                return None
            q = self.table[q][k]
            if q is None:
                return None
        return q

    def accepts(self, word: str) -> bool:
        q = self.run(word)
        return q is not None and q in self.finals

    def with_alphabet(self, alphabet: Iterable[str]) -> Dfa:
        """Same automaton over a larger alphabet; new symbols have no transitions."""
        alphabet = tuple(sorted(set(alphabet) | set(self.alphabet)))
        old = {a: k for k, a in enumerate(self.alphabet)}
        table = tuple(tuple(row[old[a]] if a in old else None for a in alphabet)
                      for row in self.table)
        return Dfa(self.state_count, alphabet, table, self.initial, self.finals)

    def __str__(self) -> str:
        return serialize_dfa(self)


@dataclass(frozen=True)
class VectorPair:
    initial: tuple
    final: tuple


@dataclass(frozen=True)
class NerodePartitionResult:
    partition: Partition
    minimal: Dfa


# -- text format ------------------------------------------------------------

def parse_dfa(text: str) -> Dfa:
    """Parse the line-oriented automaton format.

    ::

        alphabet: a b
        states: 2
        initial: 0
        finals: 0
        trans: 0 a 1
    """
    header: dict[str, tuple[int, list[str]]] = {}
    trans: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT, 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(lineno, f"expected 'key: value', got {line!r}")
        fields = rest.split()
        if key == "trans":
            trans.append((lineno, fields))
        elif key in ("alphabet", "states", "initial", "finals"):
            if key in header:
                raise ParseError(lineno, f"duplicate '{key}' line")
            header[key] = (lineno, fields)
        else:
            raise ParseError(lineno, f"unknown key {key!r}")

    def ints(key: str) -> list[int]:
        lineno, fields = header[key]
        try:
            return [int(x) for x in fields]
        except ValueError:
            raise ParseError(lineno, f"'{key}' expects integers") from None

    if "states" not in header:
        raise ParseError(0, "missing 'states' line")
    counts = ints("states")
    if len(counts) != 1 or counts[0] < 0:
        raise ParseError(header["states"][0], "'states' expects one nonnegative integer")
    n = counts[0]

    alphabet: list[str] = header.get("alphabet", (0, []))[1]
    for a in alphabet:
        if len(a) != 1:
            raise ParseError(header["alphabet"][0], f"symbol {a!r} is not a single character")
    if len(set(alphabet)) != len(alphabet):
        raise ParseError(header["alphabet"][0], "duplicate alphabet symbol")

    initial: int | None = None
    if "initial" in header:
        vals = ints("initial")
        if len(vals) != 1:
            raise ParseError(header["initial"][0], "'initial' expects exactly one state")
        initial = vals[0]
        if not 0 <= initial < n:
            raise ParseError(header["initial"][0], f"initial state {initial} out of range")
    elif n:
        raise ParseError(0, "missing 'initial' line")

    finals: list[int] = []
    if "finals" in header:
        finals = ints("finals")
        for f in finals:
            if not 0 <= f < n:
                raise ParseError(header["finals"][0], f"final state {f} out of range")
    elif n:
        raise ParseError(0, "missing 'finals' line")

    transitions: dict[tuple[int, str], int] = {}
    symbols = set(alphabet)
    for lineno, fields in trans:
        if len(fields) != 3:
            raise ParseError(lineno, "'trans' expects: <source> <symbol> <target>")
        src, sym, dst = fields
        try:
            p, q = int(src), int(dst)
        except ValueError:
            raise ParseError(lineno, "state indices must be integers") from None
        if sym not in symbols:
            raise ParseError(lineno, f"unknown symbol {sym!r}")
        for s in (p, q):
            if not 0 <= s < n:
                raise ParseError(lineno, f"state {s} out of range")
        if (p, sym) in transitions:
            raise ParseError(lineno, f"nondeterminism: second transition for ({p}, {sym})")
        transitions[(p, sym)] = q
    return Dfa.build(n, alphabet, transitions, initial, finals)


def serialize_dfa(d: Dfa) -> str:
    lines = ["alphabet: " + " ".join(d.alphabet) if d.alphabet else "alphabet:",
             f"states: {d.state_count}"]
    if d.state_count:
        lines.append(f"initial: {d.initial}")
        lines.append("finals: " + " ".join(str(f) for f in sorted(d.finals)))
        for p, row in enumerate(d.table):
            for a, q in zip(d.alphabet, row):
                if q is not None:
                    lines.append(f"trans: {p} {a} {q}")
    return "\n".join(line.rstrip() for line in lines) + "\n"


# -- structure --------------------------------------------------------------

def _accessible(d: Dfa) -> set[int]:
    if d.initial is None:
        return set()
    seen = {d.initial}
    todo = [d.initial]
    while todo:
        p = todo.pop()
        for q in d.table[p]:
            if q is not None and q not in seen:
                seen.add(q)
                todo.append(q)
    return seen


def _coaccessible(d: Dfa) -> set[int]:
    preds: list[list[int]] = [[] for _ in range(d.state_count)]
    for p, row in enumerate(d.table):
        for q in row:
            if q is not None:
                preds[q].append(p)
    seen = set(d.finals)
    todo = list(seen)
    while todo:
        q = todo.pop()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return seen


def is_trim(d: Dfa) -> bool:
    useful = _accessible(d) & _coaccessible(d)
    return len(useful) == d.state_count


def _bfs_order(d: Dfa, keep: set[int]) -> list[int]:
    order = [d.initial]
    seen = {d.initial}
    queue = deque(order)
    while queue:
        p = queue.popleft()
        for q in d.table[p]:
            if q is not None and q in keep and q not in seen:
                seen.add(q)
                order.append(q)
                queue.append(q)
    return order


def _renumber(d: Dfa, order: list[int]) -> Dfa:
    new = {old: i for i, old in enumerate(order)}
    table = tuple(tuple(new.get(q) if q is not None else None for q in d.table[old])
                  for old in order)
    return Dfa(len(order), d.alphabet, table, 0,
               frozenset(new[f] for f in d.finals if f in new))


def trim(d: Dfa) -> Dfa:
    """Restrict to useful states, renumbered in BFS order from the initial state."""
    useful = _accessible(d) & _coaccessible(d)
    if d.initial is None or d.initial not in useful:
        return Dfa.empty(d.alphabet)
    return _renumber(d, _bfs_order(d, useful))


def adjacency(d: Dfa) -> Matrix:
    n = d.state_count
    counts = [0] * (n * n)
    for p, row in enumerate(d.table):
        for q in row:
            if q is not None:
                counts[p * n + q] += 1
    return Matrix(n, n, tuple(counts))


def vectors(d: Dfa) -> VectorPair:
    n = d.state_count
    return VectorPair(tuple(int(i == d.initial) for i in range(n)),
                      tuple(int(i in d.finals) for i in range(n)))


# -- Nerode equivalence -----------------------------------------------------

def _moore_classes(d: Dfa) -> list[int]:
    """Nerode class id per state, with state ``n`` as an implicit sink.

    Missing transitions go to the sink; the sink is non-final and loops on
    every symbol.  Refinement starts from the {final, non-final} split.
    """
    n = d.state_count
    sink = n
    table = [[sink if q is None else q for q in row] for row in d.table]
    table.append([sink] * len(d.alphabet))
    finals = d.finals
    cls = [int(p in finals) for p in range(n)] + [0]
    count = len(set(cls))
    while True:
        sigs: dict[tuple, int] = {}
        new = []
        for p in range(n + 1):
            key = (cls[p], *[cls[q] for q in table[p]])
            c = sigs.get(key)
            if c is None:
                c = sigs[key] = len(sigs)
            new.append(c)
        if len(sigs) == count:
            return new
        cls, count = new, len(sigs)


def nerode_partition(d: Dfa) -> NerodePartitionResult:
    """Group states of a trim automaton by equal futures.

    Blocks are ordered by the BFS numbering of the resulting minimal automaton,
    so ``adjacency(result.minimal)`` lines up with the quotient matrix of
    ``adjacency(d)`` by ``result.partition``.
    """
    if d.state_count == 0:
        raise EmptyAutomaton("automaton has no states")
    cls = _moore_classes(d)
    sink_cls = cls[d.state_count]
    if any(c == sink_cls for c in cls[:d.state_count]):
        raise NotTrim("automaton has states that cannot reach a final state")
    members: dict[int, list[int]] = {}
    for p in range(d.state_count):
        members.setdefault(cls[p], []).append(p)
    # BFS over classes using any representative.
    order = [cls[d.initial]]
    seen = set(order)
    queue = deque(order)
    while queue:
        c = queue.popleft()
        rep = members[c][0]
        for q in d.table[rep]:
            if q is not None and cls[q] not in seen:
                seen.add(cls[q])
                order.append(cls[q])
                queue.append(cls[q])
    if len(order) != len(members):
        raise NotTrim("automaton has states that are not accessible")
    partition = Partition._trusted(tuple(tuple(members[c]) for c in order), d.state_count)
    # Refinement has stabilised, so any representative gives the block's edges.
    new_id = {c: i for i, c in enumerate(order)}
    table = tuple(
        tuple(None if q is None else new_id[cls[q]] for q in d.table[members[c][0]])
        for c in order)
    finals = frozenset(i for i, c in enumerate(order) if members[c][0] in d.finals)
    minimal = Dfa._trusted(len(order), d.alphabet, table, 0, finals)
    return NerodePartitionResult(partition, minimal)


def quotient_automaton(d: Dfa, p: Partition) -> Dfa:
    """Merge each block of ``p`` into a single state, keeping block order."""
    if p.ground_size != d.state_count:
        raise InvalidAutomaton(
            f"partition covers {p.ground_size} states, automaton has {d.state_count}")
    where = p.block_index()
    table = []
    finals = set()
    for b, block in enumerate(p.blocks):
        rep = block[0]
        final = rep in d.finals
        for s in block[1:]:
            if (s in d.finals) != final:
                raise NotACongruence(b, None)
        if final:
            finals.add(b)
        row = []
        for k, a in enumerate(d.alphabet):
            targets = {None if d.table[s][k] is None else where[d.table[s][k]] for s in block}
            if len(targets) != 1:
                raise NotACongruence(b, a)
            row.append(targets.pop())
        table.append(tuple(row))
    initial = where[d.initial] if d.initial is not None else None
    return Dfa(len(p.blocks), d.alphabet, tuple(table), initial, frozenset(finals))


def minimize(d: Dfa) -> Dfa:
    """Canonical minimal trim automaton (BFS numbered); empty for the empty language."""
    t = trim(d)
    if t.state_count == 0:
        return t
    return nerode_partition(t).minimal


def equivalent(a: Dfa, b: Dfa) -> bool:
    union = set(a.alphabet) | set(b.alphabet)
    ma = minimize(a.with_alphabet(union))
    mb = minimize(b.with_alphabet(union))
    # BFS numbering over a shared alphabet makes isomorphic minimal automata equal.
    return ma == mb
