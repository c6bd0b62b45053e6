"""Exact linear algebra over the integers and rationals.

Everything here works on Python ints and :class:`fractions.Fraction`, so
results are exact at any magnitude.  Matrices are immutable; entries that
are rationals with denominator one are stored as plain ints, which keeps an
integral rational matrix indistinguishable from an integer one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import (
    BlockCountMismatch,
    DimensionMismatch,
    ExpansionNotIntegral,
    InvalidExponent,
    InvalidPartition,
    NonMonic,
    NonSquare,
)

Number = Union[int, Fraction]


def _norm(x: Number) -> Number:
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")
    return x


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of exact numbers."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if not all(type(x) is int for x in self.entries):
            object.__setattr__(self, "entries", tuple(_norm(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[Number]) -> Matrix:
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Number:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def tolist(self) -> list[list[Number]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_integral(self) -> bool:
        return all(isinstance(x, int) for x in self.entries)

    @property
    def T(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j]
                            for j in range(self.cols) for i in range(self.rows)))

    def trace(self) -> Number:
        _require_square(self)
        return _norm(sum((self[i, i] for i in range(self.rows)), 0))

    def scale(self, k: Number) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(k * x for x in self.entries))

    def __add__(self, other: Matrix) -> Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scale(-1)

    def __matmul__(self, other: Matrix) -> Matrix:
        return mat_mul(self, other)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in self.row(i)) + "]"
                               for i in range(self.rows)) + "]"


# The two names describe intent at call sites; the storage is shared.
IntMatrix = Matrix
RatMatrix = Matrix


def _require_square(m: Matrix) -> None:
    if not m.is_square:
        raise NonSquare(f"matrix is {m.rows}x{m.cols}")


def as_matrix(m: Matrix | Sequence[Sequence[Number]]) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix.from_rows(m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bcols = [b.column(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        for c in bcols:
            out.append(sum((x * y for x, y in zip(r, c) if x and y), 0))
    return Matrix(a.rows, b.cols, tuple(out))


def mat_pow(m: Matrix, n: int) -> Matrix:
    """``m**n`` by square-and-multiply; ``mat_pow(m, 0)`` is the identity."""
    _require_square(m)
    if n < 0:
        raise InvalidExponent(f"negative exponent {n}")
    result = Matrix.identity(m.rows)
    base = m
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def _integer_rows(m: Matrix) -> list[list[int]]:
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        den = lcm(*(x.denominator for x in r if isinstance(x, Fraction))) if any(
            isinstance(x, Fraction) for x in r) else 1
        rows.append([int(x * den) for x in r])
    return rows


def rank(m: Matrix) -> int:
    """Exact rank via fraction-free (Bareiss) elimination.

    Rows holding rationals are first scaled to integers, which leaves the rank
    unchanged.  Every division performed below is exact.
    """
    a = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def nullity(m: Matrix) -> int:
    _require_square(m)
    return m.rows - rank(m)


# -- polynomials ------------------------------------------------------------

def _strip(coeffs: Iterable[Number]) -> tuple:
    c = [_norm(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial, coefficients lowest degree first.

    Named for its main use (integer characteristic polynomials) but rational
    coefficients are accepted, since a non-equitable quotient matrix is
    rational.  The zero polynomial has an empty coefficient tuple.
    """

    coefficients: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Number:
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, (int, Fraction)) else acc

    def evaluate_at_matrix(self, m: Matrix) -> Matrix:
        """Horner evaluation with ``m`` substituted for the variable."""
        _require_square(m)
        acc = Matrix.zeros(m.rows)
        ident = Matrix.identity(m.rows)
        for c in reversed(self.coefficients):
            acc = mat_mul(acc, m) + ident.scale(c)
        return acc

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coefficients))[1:])

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _poly_divmod(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in num]
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = Fraction(den[-1])
    for shift in range(len(num) - len(den), -1, -1):
        f = rem[shift + len(den) - 1] / lead
        quot[shift] = f
        if f:
            for k, d in enumerate(den):
                rem[shift + k] -= f * d
    return _strip(quot), _strip(rem[:len(den) - 1])


def _primitive(coeffs: tuple) -> tuple:
    """Scale to coprime integers with positive leading coefficient."""
    if not coeffs:
        return coeffs
    den = lcm(*(Fraction(c).denominator for c in coeffs))
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return tuple(x // g for x in ints)


def _poly_gcd(a: tuple, b: tuple) -> tuple:
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return _primitive(a)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')`` normalised to a primitive integer polynomial."""
    if p.degree <= 0:
        return IntPolynomial((1,))
    g = _poly_gcd(p.coefficients, p.derivative().coefficients)
    q, _ = _poly_divmod(p.coefficients, g)
    return IntPolynomial(_primitive(q))


def char_poly(m: Matrix) -> IntPolynomial:
    """``det(xI - m)`` by the Faddeev-LeVerrier recurrence.

    For integer input each trace division is exact, so the recurrence stays
    in the integers.  The empty matrix has characteristic polynomial 1.
    """
    _require_square(m)
    n = m.rows
    coeffs: list[Number] = [0] * (n + 1)
    coeffs[n] = 1
    ident = Matrix.identity(n)
    acc = Matrix.zeros(n)  # M_{k-1}
    for k in range(1, n + 1):
        acc = mat_mul(m, acc) + ident.scale(coeffs[n - k + 1])
        t = mat_mul(m, acc).trace()
        if isinstance(t, int) and t % k == 0:
            coeffs[n - k] = -(t // k)
        else:
            coeffs[n - k] = -Fraction(t) / k
    return IntPolynomial(tuple(coeffs))


def spectrum_included(p_small: IntPolynomial, p_big: IntPolynomial) -> bool:
    """True iff every root of ``p_small`` is also a root of ``p_big``.

    The squarefree part of ``p_small`` has each of its roots exactly once, so
    root-set inclusion is the same as that part dividing ``p_big``.
    """
    for name, p in (("p_small", p_small), ("p_big", p_big)):
        if not p.is_monic:
            raise NonMonic(f"{name} = {p} is not monic")
    q = squarefree_part(p_small)
    if q.degree == 0:
        return True
    _, r = _poly_divmod(p_big.coefficients, q.coefficients)
    return not r


# -- partitions -------------------------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Ordered blocks of state indices covering ``range(ground_size)``."""

    blocks: tuple
    ground_size: int

    def __post_init__(self) -> None:
        blocks = tuple(tuple(int(x) for x in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set[int] = set()
        for i, b in enumerate(blocks):
            if not b:
                raise InvalidPartition(f"block {i} is empty")
            for x in b:
                if not 0 <= x < self.ground_size:
                    raise InvalidPartition(f"index {x} outside 0..{self.ground_size - 1}")
                if x in seen:
                    raise InvalidPartition(f"index {x} appears in more than one block")
                seen.add(x)
        if len(seen) != self.ground_size:
            missing = sorted(set(range(self.ground_size)) - seen)
            raise InvalidPartition(f"indices {missing} are not covered")

    @classmethod
    def _trusted(cls, blocks: tuple, ground_size: int) -> Partition:
        p = object.__new__(cls)
        object.__setattr__(p, "blocks", blocks)
        object.__setattr__(p, "ground_size", ground_size)
        return p

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], ground_size: int | None = None) -> Partition:
        blocks = tuple(tuple(b) for b in blocks)
        if ground_size is None:
            ground_size = sum(len(b) for b in blocks)
        return cls(blocks, ground_size)

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls(tuple((i,) for i in range(n)), n)

    @classmethod
    def parse(cls, text: str, ground_size: int | None = None) -> Partition:
        """Parse ``"0,1|2"`` style notation; whitespace is ignored."""
        text = "".join(text.split())
        if not text:
            return cls.of((), ground_size or 0)
        try:
            blocks = [[int(x) for x in part.split(",")] for part in text.split("|")]
        except ValueError:
            raise InvalidPartition(f"cannot parse partition {text!r}") from None
        return cls.of(blocks, ground_size)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_index(self) -> list[int]:
        """Map from ground element to the index of its block."""
        where = [0] * self.ground_size
        for i, b in enumerate(self.blocks):
            for x in b:
                where[x] = i
        return where

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def __str__(self) -> str:
        return "|".join(",".join(str(x) for x in b) for b in self.blocks)


def characteristic_matrix(p: Partition) -> Matrix:
    where = p.block_index()
    k = len(p.blocks)
    return Matrix(p.ground_size, k, tuple(int(where[i] == j)
                                          for i in range(p.ground_size) for j in range(k)))


def _check_compatible(m: Matrix, p: Partition) -> None:
    _require_square(m)
    if p.ground_size != m.rows:
        raise DimensionMismatch(
            f"partition covers {p.ground_size} indices but matrix has dimension {m.rows}")


def _inverse_sizes(p: Partition) -> Matrix:
    return Matrix.diagonal([Fraction(1, s) for s in p.sizes()])


def quotient_matrix(m: Matrix, p: Partition) -> Matrix:
    """``(S^T S)^-1 S^T M S``: entry (i, j) is the mean row sum of block (i, j)."""
    _check_compatible(m, p)
    s = characteristic_matrix(p)
    return _inverse_sizes(p) @ (s.T @ m @ s)


def is_equitable(m: Matrix, p: Partition) -> bool:
    _check_compatible(m, p)
    s = characteristic_matrix(p)
    return m @ s == s @ quotient_matrix(m, p)


def expansion(m: Matrix, p: Partition) -> Matrix:
    """``S M (S^T S)^-1 S^T`` where block i of ``p`` holds the copies of index i."""
    _require_square(m)
    if len(p.blocks) != m.rows:
        raise BlockCountMismatch(
            f"partition has {len(p.blocks)} blocks but matrix has dimension {m.rows}")
    s = characteristic_matrix(p)
    out = s @ m @ _inverse_sizes(p) @ s.T
    if not out.is_integral:
        bad = next(i for i, x in enumerate(out.entries) if isinstance(x, Fraction))
        raise ExpansionNotIntegral(
            f"entry ({bad // out.cols}, {bad % out.cols}) is {out.entries[bad]}")
    return out
