"""Shared automata.

A1, B1, C1, D1 and the nonexpanded rank-one example are known only by their
adjacency matrices, so the labelled automata below are reconstructions.
Tests pin their matrices and check equivalence rather than assuming any
particular labelling.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from dfaspectra import Dfa, Matrix  # noqa: E402

B1_MATRIX = Matrix.from_rows([[1, 1, 2], [0, 2, 2], [2, 0, 2]])
EX3_MATRIX = Matrix.from_rows([[0, 2, 1], [0, 4, 2], [0, 2, 1]])
D1_MATRIX = Matrix.from_rows([[2, 4], [1, 2]])


def make_fib():
    return Dfa.build(2, "ab", {(0, "a"): 0, (0, "b"): 1, (1, "a"): 0}, 0, {0})


def make_a1():
    # q0 loops on a,b; q0 <-> q1 on c,d; q1 loops on a,b.
    t = {(0, "a"): 0, (0, "b"): 0, (0, "c"): 1, (0, "d"): 1,
         (1, "a"): 1, (1, "b"): 1, (1, "c"): 0, (1, "d"): 0}
    return Dfa.build(2, "abcd", t, 0, {0})


def make_b1():
    t = {(0, "a"): 0, (0, "b"): 1, (0, "c"): 2, (0, "d"): 2,
         (1, "a"): 1, (1, "b"): 1, (1, "c"): 2, (1, "d"): 2,
         (2, "a"): 2, (2, "b"): 2, (2, "c"): 0, (2, "d"): 0}
    return Dfa.build(3, "abcd", t, 0, {0, 1})


def make_c1():
    # A1 split into copies {0,1} and {2,3}; each symbol pair goes to both copies.
    t = {}
    for p in range(4):
        same, other = (0, 1) if p < 2 else (2, 3), (2, 3) if p < 2 else (0, 1)
        t[(p, "a")], t[(p, "b")] = same
        t[(p, "c")], t[(p, "d")] = other
    return Dfa.build(4, "abcd", t, 0, {0, 1})


def make_d1():
    t = {(0, "a"): 0, (0, "b"): 0, (0, "c"): 1, (0, "d"): 1, (0, "e"): 1, (0, "f"): 1,
         (1, "a"): 0, (1, "b"): 1, (1, "c"): 1}
    return Dfa.build(2, "abcdef", t, 0, {0})


def make_ex3():
    t = {(0, "a"): 1, (0, "b"): 1, (0, "c"): 2,
         (1, "a"): 1, (1, "b"): 1, (1, "c"): 1, (1, "d"): 1, (1, "e"): 2, (1, "f"): 2,
         (2, "a"): 1, (2, "c"): 1, (2, "b"): 2}
    return Dfa.build(3, "abcdef", t, 0, {2})


@pytest.fixture
def fib():
    return make_fib()


@pytest.fixture
def a1():
    return make_a1()


@pytest.fixture
def b1():
    return make_b1()


@pytest.fixture
def c1():
    return make_c1()


@pytest.fixture
def d1():
    return make_d1()


@pytest.fixture
def ex3():
    return make_ex3()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
