"""Exact characteristic polynomials and the divisibility filter.

If a connected graph has a perfect coloring with color adjacency matrix
A, then the characteristic polynomial of A divides the characteristic
polynomial of the graph's adjacency matrix.  In particular every
eigenvalue of A is an eigenvalue of the graph, with multiplicity.  The
divisibility form of the test is implemented here, with arbitrary
precision integer arithmetic throughout: no eigenvalues are ever
extracted, so irrational spectra (such as the dodecahedron's factors
x^2 - 5) cost nothing.

char_poly uses the Faddeev-LeVerrier recurrence

    M_1 = M,  c_i = -trace(M_i) / i,  M_{i+1} = M (M_i + c_i I),

whose divisions are exact over the integers.  Divisibility is decided
by polynomial long division; a monic divisor keeps every intermediate
value integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from operator import index

from .cam import entries_of


@dataclass(frozen=True)
class IntPolynomial:
    """A monic polynomial with integer coefficients, highest degree first."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(index(c) for c in self.coefficients)
        if not coeffs or coeffs[0] != 1:
            raise ValueError("polynomial must be monic")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = self.degree - i
            if power == 0:
                term = str(abs(c))
            else:
                coeff = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{coeff}x^{power}" if power > 1 else f"{coeff}x"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def char_poly(M) -> IntPolynomial:
    """det(xI - M) of a square integer matrix, with exact coefficients.

    Negative entries are fine; only squareness is required.
    """
    a = entries_of(M)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    coeffs = [1]
    work = [list(row) for row in a]
    for i in range(1, n + 1):
        trace = sum(work[v][v] for v in range(n))
        quotient, remainder = divmod(-trace, i)
        if remainder:
            raise ArithmeticError("trace not divisible; non-integer input?")
        coeffs.append(quotient)
        if i < n:
            for v in range(n):
                work[v][v] += quotient
            work = _mat_mul(a, work)
    return IntPolynomial(tuple(coeffs))


def _mat_mul(a, b):
    n = len(a)
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols]
            for row in a]


def divides(p: IntPolynomial, q: IntPolynomial) -> bool:
    """True iff q = p * r for some polynomial r.

    Long division of q by the monic p; the quotient coefficients land in
    the first degree(q) - degree(p) + 1 slots and the rest is the
    remainder, which must vanish identically.
    """
    if p.degree > q.degree:
        return False
    rest = list(q.coefficients)
    pc = p.coefficients
    span = q.degree - p.degree
    for i in range(span + 1):
        factor = rest[i]
        if factor:
            for j in range(1, p.degree + 1):
                rest[i + j] -= factor * pc[j]
    return all(c == 0 for c in rest[span + 1:])


def spectral_filter(A, G) -> bool:
    """True iff char_poly(A) divides the graph's adjacency char poly."""
    pa = char_poly(entries_of(A))
    return divides(pa, _graph_char_poly(G.adj))


@lru_cache(maxsize=64)
def _graph_char_poly(adj: tuple[tuple[int, ...], ...]) -> IntPolynomial:
    n = len(adj)
    rows = tuple(tuple(1 if u in nbrs else 0 for u in range(n))
                 for nbrs in adj)
    return char_poly(rows)
