"""Independent reference computations used only by the tests.

None of these share code with the package: determinants by cofactor
expansion, kernels by Gauss-Jordan over Fractions, languages by brute-force
enumeration of all strings.
"""

from fractions import Fraction
from itertools import product


def det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * det(minor)
    return total


def char_poly_value(rows, t):
    """det(t*I - M) by cofactor expansion."""
    n = len(rows)
    shifted = [[(t if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
    return det(shifted)


def kernel_basis(rows):
    """Basis of {v : M v = 0} from the reduced row echelon form."""
    if not rows:
        return []
    m = [[Fraction(x) for x in r] for r in rows]
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(v)
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)
    return basis


def accepts(d, word):
    """Run the automaton straight from its transition mapping."""
    if d.state_count == 0:
        return False
    delta = d.transitions
    q = d.initial
    for ch in word:
        if (q, ch) not in delta:
            return False
        q = delta[(q, ch)]
    return q in d.finals


def words_of_length(alphabet, n):
    return ("".join(w) for w in product(sorted(alphabet), repeat=n))


def brute_count(d, n):
    return sum(1 for w in words_of_length(d.alphabet, n) if accepts(d, w))


def shortlex_language(d, max_len):
    """All accepted words of length <= max_len, in shortlex order."""
    out = []
    for n in range(max_len + 1):
        out.extend(w for w in words_of_length(d.alphabet, n) if accepts(d, w))
    return out


def shortlex_language_dfs(d, max_len):
    """Same as shortlex_language, but prunes dead prefixes via the mapping.

    Needed when the alphabet is too large for full enumeration.
    """
    delta = d.transitions
    alphabet = sorted(d.alphabet)
    out = []
    if d.state_count == 0:
        return out
    layer = [("", d.initial)]
    for n in range(max_len + 1):
        out.extend(w for w, q in layer if q in d.finals)
        if n == max_len:
            break
        layer = [(w + a, delta[(q, a)]) for w, q in layer for a in alphabet if (q, a) in delta]
    return out


def char_poly_coeffs(rows):
    """Coefficients of det(t*I - M), low degree first, by Lagrange interpolation."""
    n = len(rows)
    xs = list(range(n + 1))
    ys = [char_poly_value(rows, x) for x in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += ys[i] * b / denom
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def poly_divides(small, big):
    """Whether monic ``small`` divides ``big`` (low degree first)."""
    rem = list(big)
    ds = len(small) - 1
    while len(rem) - 1 >= ds and any(rem):
        f = rem[-1]
        shift = len(rem) - 1 - ds
        for k, c in enumerate(small):
            rem[shift + k] -= f * c
        rem.pop()
    return not any(rem)
