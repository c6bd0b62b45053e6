"""Rank-one adjacency matrices and the languages whose minimal automata have them.

A rank-one matrix factors as ``out * in`` (column times row), so every power
collapses to ``lam**(n-1) * M`` with ``lam = in . out``.  That gives
constant-time counting once the factorisation is known.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .automaton import Dfa, adjacency, equivalent, minimize, vectors
from .errors import (
    EmptyLanguage,
    ExpansionFailed,
    ExpansionNotIntegral,
    InvalidExponent,
    NotRankOne,
    ZeroMatrix,
)
from .exact_linalg import Matrix, Partition, as_matrix, expansion, quotient_matrix, rank


@dataclass(frozen=True)
class RankOneDecomposition:
    in_vector: tuple
    out_vector: tuple
    lam: int

    def outer(self) -> Matrix:
        return Matrix(len(self.out_vector), len(self.in_vector),
                      tuple(x * y for x in self.out_vector for y in self.in_vector))


@dataclass(frozen=True)
class ClosedFormCount:
    """``C(0) = c0`` and ``C(n) = c * lam**(n-1)`` for ``n >= 1``."""

    c0: int
    c: int
    lam: int

    def __call__(self, n: int) -> int:
        if n < 0:
            raise InvalidExponent(f"negative length {n}")
        if n == 0:
            return self.c0
        return self.c * self.lam ** (n - 1)

    @property
    def alpha(self) -> Fraction | None:
        """Coefficient of ``lam**n``; None when ``lam`` is zero."""
        return Fraction(self.c, self.lam) if self.lam else None


def _check_rank_one(m: Matrix) -> None:
    m = as_matrix(m)
    if not m.is_square:
        raise NotRankOne(f"matrix is {m.rows}x{m.cols}")
    if not m.is_integral:
        raise NotRankOne("matrix is not integral")
    if not any(m.entries):
        raise ZeroMatrix("the zero matrix has no in-vector")
    r = rank(m)
    if r != 1:
        raise NotRankOne(f"matrix rank is {r}")


def in_vector(m: Matrix) -> tuple:
    """Primitive direction of the rows: any nonzero row over the gcd of its entries."""
    m = as_matrix(m)
    _check_rank_one(m)
    row = next(m.row(i) for i in range(m.rows) if any(m.row(i)))
    g = gcd(*row)
    lead = next(x for x in row if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in row)


def out_vector(m: Matrix) -> tuple:
    return decompose(m).out_vector


def decompose(m: Matrix) -> RankOneDecomposition:
    m = as_matrix(m)
    y = in_vector(m)
    j = next(k for k, v in enumerate(y) if v)
    x = []
    for i in range(m.rows):
        q, r = divmod(m[i, j], y[j])
        assert r == 0, "primitive in-vector must divide every row"
        x.append(q)
    dec = RankOneDecomposition(y, tuple(x), sum(a * b for a, b in zip(x, y)))
    assert dec.outer() == m
    return dec


def fast_power(dec: RankOneDecomposition, m: Matrix, n: int) -> Matrix:
    """``m**n`` as ``lam**(n-1) * m``; only valid for n >= 1."""
    if n < 1:
        raise InvalidExponent("fast_power needs n >= 1; the identity is not rank one")
    return as_matrix(m).scale(dec.lam ** (n - 1))


def is_expanded_normal(m: Matrix) -> bool:
    return all(v in (0, 1) for v in in_vector(m))


def canonical_partition(m: Matrix) -> Partition:
    """Consecutive blocks, block i sized ``in[i]`` (or 1 where ``in[i]`` is 0)."""
    sizes = [v if v else 1 for v in in_vector(m)]
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(tuple(range(start, start + s)))
        start += s
    return Partition(tuple(blocks), start)


def _minimal_rank_one(d: Dfa) -> tuple[Dfa, Matrix]:
    mini = minimize(d)
    if mini.state_count == 0:
        raise EmptyLanguage("the language is empty")
    m = adjacency(mini)
    r = rank(m)
    if r != 1:
        raise NotRankOne(f"language rank is {r}")
    return mini, m


def expanded_canonical_automaton(d: Dfa) -> Dfa:
    """Expand the minimal automaton so that its in-vector becomes 0/1.

    State ``p`` of the minimal automaton becomes the copies listed in block p
    of the canonical partition.  The symbols leading from ``p`` to ``q``
    (sorted) are cut into ``|C_q|`` equal runs and run j is sent to the j-th
    copy of ``q``; every copy of ``p`` gets the same routing.
    """
    mini, m = _minimal_rank_one(d)
    part = canonical_partition(m)
    n = part.ground_size
    k = len(mini.alphabet)
    table: list[list[int | None]] = [[None] * k for _ in range(n)]
    for p in range(mini.state_count):
        groups: dict[int, list[int]] = {}
        for a, q in enumerate(mini.table[p]):
            if q is not None:
                groups.setdefault(q, []).append(a)
        row: list[int | None] = [None] * k
        for q, syms in groups.items():
            copies = part.blocks[q]
            size, rem = divmod(len(syms), len(copies))
            if rem:
                raise ExpansionNotIntegral(
                    f"{len(syms)} transitions {p}->{q} cannot be split over {len(copies)} copies")
            for j, copy in enumerate(copies):
                for a in syms[j * size:(j + 1) * size]:
                    row[a] = copy
        for copy in part.blocks[p]:
            table[copy] = list(row)
    finals = frozenset(c for f in mini.finals for c in part.blocks[f])
    out = Dfa(n, mini.alphabet, tuple(map(tuple, table)),
              part.blocks[mini.initial][0], finals)

    if adjacency(out) != expansion(m, part):
        raise ExpansionFailed("label routing does not realise the expanded matrix")
    if quotient_matrix(adjacency(out), part) != m:
        raise ExpansionFailed("quotient of the expansion differs from the minimal matrix")
    if not equivalent(out, d):
        raise ExpansionFailed("expanded automaton is not language-equivalent")
    return out


def closed_form_count(d: Dfa) -> ClosedFormCount:
    mini, m = _minimal_rank_one(d)
    dec = decompose(m)
    vp = vectors(mini)
    mf = [sum(m[i, j] * vp.final[j] for j in range(m.cols)) for i in range(m.rows)]
    c = sum(a * b for a, b in zip(vp.initial, mf))
    return ClosedFormCount(int(mini.initial in mini.finals), c, dec.lam)
