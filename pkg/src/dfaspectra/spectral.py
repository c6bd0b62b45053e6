"""Spectral analysis of automata.

The checks here turn structural facts into executable assertions: quotients
by the Nerode partition never increase rank or nullity, the Nerode partition
is equitable, and the minimal automaton's spectrum sits inside the spectrum
of every equivalent automaton.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .automaton import Dfa, adjacency, is_trim, minimize, nerode_partition
from .errors import EmptyAutomaton
from .exact_linalg import (
    IntPolynomial,
    char_poly,
    is_equitable,
    nullity,
    rank,
    spectrum_included,
)
from .rank_one import RankOneDecomposition, decompose, is_expanded_normal


@dataclass(frozen=True)
class MinimalityCheck:
    given_rank: int
    given_nullity: int
    minimal_rank: int
    minimal_nullity: int

    @property
    def rank_ok(self) -> bool:
        return self.minimal_rank <= self.given_rank

    @property
    def nullity_ok(self) -> bool:
        return self.minimal_nullity <= self.given_nullity


@dataclass(frozen=True)
class AnalysisReport:
    state_count: int
    is_trim: bool
    is_minimal: bool
    rank: int
    nullity: int
    char_poly: IntPolynomial
    language_rank: int
    rank_one: RankOneDecomposition | None
    is_expanded_normal: bool

    def to_dict(self) -> dict:
        ro = None
        if self.rank_one is not None:
            ro = {"inVector": list(self.rank_one.in_vector),
                  "outVector": list(self.rank_one.out_vector),
                  "lambda": self.rank_one.lam}
        return {
            "states": self.state_count,
            "trim": self.is_trim,
            "minimal": self.is_minimal,
            "rank": self.rank,
            "nullity": self.nullity,
            "charPoly": list(self.char_poly.coefficients),
            "languageRank": self.language_rank,
            "rankOne": ro,
            "expandedNormal": self.is_expanded_normal,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def language_rank(d: Dfa) -> int:
    """Rank of the adjacency matrix of the minimal trim automaton of L(d)."""
    return rank(adjacency(minimize(d)))


def verify_minimality(d: Dfa) -> MinimalityCheck:
    if d.state_count == 0:
        raise EmptyAutomaton("automaton has no states")
    given = adjacency(d)
    mini = adjacency(nerode_partition(d).minimal)
    return MinimalityCheck(rank(given), nullity(given), rank(mini), nullity(mini))


def nerode_spectrum_check(d: Dfa) -> tuple[bool, bool]:
    """(Nerode partition is equitable, quotient spectrum is included)."""
    res = nerode_partition(d)
    m = adjacency(d)
    return (is_equitable(m, res.partition),
            spectrum_included(char_poly(adjacency(res.minimal)), char_poly(m)))


def _expanded_normal(m) -> bool:
    return m.rows > 0 and any(m.entries) and rank(m) == 1 and is_expanded_normal(m)


def analyze(d: Dfa) -> AnalysisReport:
    m = adjacency(d)
    mini = minimize(d)
    trim_ok = is_trim(d)
    lrank = rank(adjacency(mini))
    return AnalysisReport(
        state_count=d.state_count,
        is_trim=trim_ok,
        is_minimal=trim_ok and d.state_count == mini.state_count,
        rank=rank(m),
        nullity=nullity(m),
        char_poly=char_poly(m),
        language_rank=lrank,
        rank_one=decompose(adjacency(mini)) if lrank == 1 else None,
        is_expanded_normal=_expanded_normal(m),
    )
