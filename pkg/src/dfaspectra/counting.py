"""Counting, shortlex ranking/unranking, and ranking-based compression.

Words are ordered shortlex: shorter words first, then symbol by symbol in
alphabet order.  Under this order every regular language is in bijection
with an initial segment of the naturals, so ``rank_word`` and
``unrank_word`` are mutual inverses.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache

from .automaton import Dfa, adjacency, minimize
from .errors import IndexOutOfLanguage, MalformedIndexBytes, WordNotInLanguage
from .exact_linalg import rank
from .rank_one import closed_form_count


class CountTable:
    """``T[q][k]``: number of accepted words of length k read from state q.

    Layers are computed on demand.  Extension is guarded by a lock so one
    table can be shared between threads.
    """

    def __init__(self, d: Dfa):
        self.dfa = d
        self._layers: list[list[int]] = [[int(q in d.finals) for q in range(d.state_count)]]
        self._lock = threading.Lock()

    @property
    def max_length(self) -> int:
        return len(self._layers) - 1

    def extend(self, n: int) -> None:
        if n <= self.max_length:
            return
        with self._lock:
            table = self.dfa.table
            while len(self._layers) <= n:
                prev = self._layers[-1]
                self._layers.append([sum(prev[t] for t in row if t is not None)
                                     for row in table])

    def __call__(self, q: int, k: int) -> int:
        if k > self.max_length:
            self.extend(k)
        return self._layers[k][q]


def count_words(d: Dfa, n: int) -> int:
    """Number of words of length ``n`` accepted by ``d``."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if d.state_count == 0:
        return 0
    return CountTable(d)(d.initial, n)


def cumulative_count(d: Dfa, n: int) -> int:
    """Number of accepted words of length at most ``n``."""
    if d.state_count == 0 or n < 0:
        return 0
    table = CountTable(d)
    return sum(table(d.initial, k) for k in range(n + 1))


def _has_cycle(d: Dfa) -> bool:
    color = [0] * d.state_count
    for root in range(d.state_count):
        if color[root]:
            continue
        stack = [(root, iter(d.table[root]))]
        color[root] = 1
        while stack:
            p, it = stack[-1]
            for q in it:
                if q is None:
                    continue
                if color[q] == 1:
                    return True
                if color[q] == 0:
                    color[q] = 1
                    stack.append((q, iter(d.table[q])))
                    break
            else:
                color[p] = 2
                stack.pop()
    return False


class LanguageIndex:
    """Shortlex ranking over L(d), computed on the minimal automaton.

    When the language is rank one the per-state counts come from the closed
    form ``T[q][k] = lam**(k-1) * (M F)[q]`` and no table is built.
    """

    def __init__(self, d: Dfa):
        self.dfa = minimize(d)
        m = self.dfa
        self.alphabet = m.alphabet
        self._index = {a: k for k, a in enumerate(m.alphabet)}
        self.finite = not _has_cycle(m)
        self._closed = None
        if m.state_count:
            adj = adjacency(m)
            if rank(adj) == 1:
                self._closed = closed_form_count(m)
                self._mf = [sum(adj[q, j] for j in m.finals) for q in range(m.state_count)]
        if self._closed is None:
            self._table = CountTable(m)

    @property
    def rank_one(self) -> bool:
        return self._closed is not None

    def count_from(self, q: int, k: int) -> int:
        if self._closed is None:
            return self._table(q, k)
        if k == 0:
            return int(q in self.dfa.finals)
        return self._mf[q] * self._closed.lam ** (k - 1)

    def count(self, n: int) -> int:
        if self.dfa.state_count == 0:
            return 0
        return self.count_from(self.dfa.initial, n)

    def cumulative(self, n: int) -> int:
        if self.dfa.state_count == 0 or n < 0:
            return 0
        if self._closed is not None:
            cf = self._closed
            if n == 0 or cf.lam == 0:
                return cf.c0 + (cf.c if n >= 1 else 0)
            if cf.lam == 1:
                return cf.c0 + cf.c * n
            return cf.c0 + cf.c * (cf.lam ** n - 1) // (cf.lam - 1)
        return sum(self.count(k) for k in range(n + 1))

    def _length_of(self, i: int) -> int:
        """Smallest n such that more than ``i`` words have length <= n."""
        if self.dfa.state_count == 0:
            raise IndexOutOfLanguage(f"index {i}: the language is empty")
        cf = self._closed
        if cf is not None and cf.lam >= 2 and cf.c:
            # Jump near the target using the geometric series, then settle.
            target = max(i - cf.c0, 1) * (cf.lam - 1) // cf.c + 1
            n = max(int(math.log(target) / math.log(cf.lam)) - 1, 0)
            while n > 0 and self.cumulative(n - 1) > i:
                n -= 1
            while self.cumulative(n) <= i:
                n += 1
            return n
        if cf is not None and cf.lam == 1:
            return 0 if i < cf.c0 else (i - cf.c0) // cf.c + 1
        limit =self.dfa.state_count if self.finite else None
        n = 0
        total = self.count(0)
        while total <= i:
            n += 1
            if limit is not None and n >= limit:
                raise IndexOutOfLanguage(
                    f"index {i} but the language has only {total} words")
            total += self.count(n)
        return n

    def rank(self, word: str) -> int:
        m = self.dfa
        if m.state_count == 0:
            raise WordNotInLanguage(f"{word!r}: the language is empty")
        q = m.initial
        r = self.cumulative(len(word) - 1)
        for pos, ch in enumerate(word):
            k = self._index.get(ch)
            nxt = None if k is None else m.table[q][k]
            if nxt is None:
                raise WordNotInLanguage(f"{word!r} is not in the language")
            remaining = len(word) - pos - 1
            for t in m.table[q][:k]:
                if t is not None:
                    r += self.count_from(t, remaining)
            q = nxt
        if q not in m.finals:
            raise WordNotInLanguage(f"{word!r} is not in the language")
        return r

    def unrank(self, i: int) -> str:
        if i < 0:
            raise IndexOutOfLanguage(f"negative index {i}")
        m = self.dfa
        n = self._length_of(i)
        i -= self.cumulative(n - 1)
        q = m.initial
        out = []
        for pos in range(n):
            remaining = n - pos - 1
            for a, t in zip(m.alphabet, m.table[q]):
                if t is None:
                    continue
                c = self.count_from(t, remaining)
                if i < c:
                    out.append(a)
                    q = t
                    break
                i -= c
            else:
                raise AssertionError("count table inconsistent with transitions")
        return "".join(out)


@lru_cache(maxsize=64)
def language_index(d: Dfa) -> LanguageIndex:
    return LanguageIndex(d)


def rank_word(d: Dfa, word: str) -> int:
    return language_index(d).rank(word)


def unrank_word(d: Dfa, i: int) -> str:
    return language_index(d).unrank(i)


def encode_index(i: int) -> bytes:
    """Big-endian with no leading zero byte; zero encodes as ``b""``."""
    return i.to_bytes((i.bit_length() + 7) // 8, "big")


def decode_index(data: bytes) -> int:
    if data[:1] == b"\x00":
        raise MalformedIndexBytes("encoded index has a leading zero byte")
    return int.from_bytes(data, "big")


def compress(d: Dfa, word: str) -> bytes:
    return encode_index(rank_word(d, word))


def decompress(d: Dfa, data: bytes) -> str:
    return unrank_word(d, decode_index(data))


def compression_ratio(d: Dfa, word: str) -> float:
    """Compressed size over word length (0.0 for the empty word)."""
    return len(compress(d, word)) / len(word) if word else 0.0
