"""Seeded random automata, regexes and rank-one matrices for property checks."""

from __future__ import annotations

import random
import string
from typing import Iterator

from .automaton import Dfa, trim
from .exact_linalg import Matrix

SYMBOLS = string.ascii_lowercase


def random_dfa(
    rng: random.Random,
    states: int,
    symbols: int,
    density: float = 0.8,
    final_density: float = 0.3,
) -> Dfa:
    """Each (state, symbol) gets a uniform target with probability ``density``."""
    alphabet = SYMBOLS[:symbols]
    table = tuple(
        tuple(rng.randrange(states) if rng.random() < density else None for _ in alphabet)
        for _ in range(states)
    )
    finals = frozenset(q for q in range(states) if rng.random() < final_density)
    return Dfa(states, tuple(alphabet), table, 0, finals)


def random_trim_dfas(
    seed: int,
    count: int,
    max_states: int = 8,
    max_symbols: int = 4,
    densities: tuple = (0.5, 0.8, 1.0),
) -> list[Dfa]:
    """``count`` nonempty trim automata; empties after trimming are discarded."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = random_dfa(rng, rng.randint(1, max_states), rng.randint(1, max_symbols),
                       rng.choice(densities))
        d = trim(d)
        if d.state_count:
            out.append(d)
    return out


def random_regex(rng: random.Random, alphabet: str, depth: int = 3) -> str:
    if depth == 0 or rng.random() < 0.25:
        return rng.choice(alphabet)
    kind = rng.choice(("cat", "cat", "alt", "star"))
    if kind == "star":
        return "(" + random_regex(rng, alphabet, depth - 1) + ")*"
    left = random_regex(rng, alphabet, depth - 1)
    right = random_regex(rng, alphabet, depth - 1)
    if kind == "alt":
        return "(" + left + "+" + right + ")"
    return left + right


def random_rank_one_matrix(rng: random.Random, dim: int, max_entry: int = 9) -> Matrix:
    """``x y^T`` with positive ``x``, nonnegative nonzero ``y``, entries <= max_entry."""
    while True:
        y = [rng.randint(0, 3) for _ in range(dim)]
        if not any(y):
            continue
        cap = max_entry // max(y)
        x = [rng.randint(1, max(cap, 1)) for _ in range(dim)]
        m = Matrix(dim, dim, tuple(a * b for a in x for b in y))
        if max(m.entries) <= max_entry:
            return m


def dfa_from_matrix(m: Matrix, finals, initial: int = 0) -> Dfa:
    """Label a nonnegative integer matrix as a DFA, symbols assigned row by row."""
    width = max((sum(m.row(i)) for i in range(m.rows)), default=0)
    alphabet = tuple(SYMBOLS[:width])
    table = []
    for i in range(m.rows):
        row: list[int | None] = []
        for j in range(m.cols):
            row.extend([j] * m[i, j])
        row.extend([None] * (width - len(row)))
        table.append(tuple(row))
    return Dfa(m.rows, alphabet, tuple(table), initial, frozenset(finals))


def all_dfas(states: int, symbols: int) -> Iterator[Dfa]:
    """Every accessible DFA in BFS-canonical numbering, initial state 0.

    Each isomorphism class of accessible automata appears exactly once.
    Cells are filled row by row; a cell may point to an already discovered
    state, to nothing, or to the next undiscovered state, which is then the
    BFS numbering by construction.
    """
    alphabet = tuple(SYMBOLS[:symbols])
    cells = states * symbols
    flat: list[int | None] = [None] * cells

    def fill(cell: int, discovered: int) -> Iterator[tuple]:
        if cell == cells:
            if discovered == states:
                yield tuple(tuple(flat[i * symbols:(i + 1) * symbols]) for i in range(states))
            return
        if cell // symbols >= discovered:
            return  # this row's state is unreachable
        choices: list[int | None] = [None, *range(discovered)]
        for t in choices:
            flat[cell] = t
            yield from fill(cell + 1, discovered)
        if discovered < states:
            flat[cell] = discovered
            yield from fill(cell + 1, discovered + 1)

    for rows in fill(0, 1):
        for mask in range(1 << states):
            finals = frozenset(q for q in range(states) if mask >> q & 1)
            yield Dfa._trusted(states, alphabet, rows, 0, finals)
