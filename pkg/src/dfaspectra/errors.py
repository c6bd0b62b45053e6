"""Exception hierarchy.

Every error carries a stable ``code`` (the class name) so the command line
front end can print ``error: <Code>: <detail>`` without a lookup table.
"""

from __future__ import annotations


class DfaSpectraError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__

    @property
    def detail(self) -> str:
        return str(self)


# -- linear algebra ---------------------------------------------------------

class NonSquare(DfaSpectraError):
    pass


class DimensionMismatch(DfaSpectraError):
    pass


class InvalidPartition(DfaSpectraError):
    pass


class ExpansionNotIntegral(DfaSpectraError):
    pass


class BlockCountMismatch(DfaSpectraError):
    pass


class NonMonic(DfaSpectraError):
    pass


# -- automata ---------------------------------------------------------------

class InvalidAutomaton(DfaSpectraError):
    pass


class ParseError(DfaSpectraError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class RegexSyntaxError(DfaSpectraError):
    def __init__(self, position: int, reason: str):
        super().__init__(f"position {position}: {reason}")
        self.position = position
        self.reason = reason


class EmptyAutomaton(DfaSpectraError):
    pass


class NotTrim(DfaSpectraError):
    pass


class NotACongruence(DfaSpectraError):
    def __init__(self, block: int, symbol: str | None):
        what = "finality" if symbol is None else f"symbol {symbol!r}"
        super().__init__(f"block {block} is not consistent on {what}")
        self.block = block
        self.symbol = symbol


# -- rank one ---------------------------------------------------------------

class NotRankOne(DfaSpectraError):
    pass


class ZeroMatrix(DfaSpectraError):
    pass


class InvalidExponent(DfaSpectraError):
    pass


class EmptyLanguage(DfaSpectraError):
    pass


class ExpansionFailed(DfaSpectraError):
    pass


# -- counting / ranking -----------------------------------------------------

class WordNotInLanguage(DfaSpectraError):
    pass


class IndexOutOfLanguage(DfaSpectraError):
    pass


class MalformedIndexBytes(DfaSpectraError):
    pass
