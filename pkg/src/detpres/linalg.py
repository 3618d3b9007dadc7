"""Exact rational linear algebra via fraction-free (Bareiss) elimination.

Rows are scaled to integers (row scaling changes neither rank, row space,
nor right kernel) and reduced with the one-step Bareiss recurrence, whose
divisions are exact; a cheap multiply-back check guards the exactness
invariant.  Pivots are chosen by minimal bit length to slow coefficient
growth.  Ranks can be cross-checked modulo a prime: the modular rank never
exceeds the rational one, and a mismatch flags an unlucky prime (or a bug).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vector = tuple[Fraction, ...]


def _integer_rows(rows: Sequence[Sequence[Fraction | int]]) -> list[list[int]]:
    """Scale each row by the lcm of denominators, then divide by the gcd."""
    out: list[list[int]] = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        mult = 1
        for x in fr:
            mult = lcm(mult, x.denominator)
        ints = [int(x * mult) for x in fr]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduce integer rows in place to row echelon form.

    Returns the echelon rows and the list of pivot columns.  Entries of the
    echelon form are (up to sign) minors of the input matrix, so the interim
    divisions are exact.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        best_i = -1
        best_bits = 0
        for i in range(r, m):
            x = rows[i][c]
            if x:
                bits = (-x if x < 0 else x).bit_length()
                if best_i < 0 or bits < best_bits:
                    best_i, best_bits = i, bits
        if best_i < 0:
            continue
        if best_i != r:
            rows[r], rows[best_i] = rows[best_i], rows[r]
        piv = rows[r][c]
        row_r = rows[r]
        for i in range(r + 1, m):
            row_i = rows[i]
            x = row_i[c]
            if x:
                for j in range(c + 1, n):
                    num = piv * row_i[j] - x * row_r[j]
                    q = num // prev
                    if q * prev != num:
                        raise ArithmeticError("fraction-free elimination lost exactness")
                    row_i[j] = q
            else:
                for j in range(c + 1, n):
                    num = piv * row_i[j]
                    q = num // prev
                    if q * prev != num:
                        raise ArithmeticError(
                            "fraction-free elimination lost exactness"
                        )
                    row_i[j] = q
            row_i[c] = 0
        pivots.append(c)
        prev = piv
        r += 1
    return rows, pivots


class RationalMatrix:
    """A dense matrix of exact rationals with echelon-based queries."""

    __slots__ = ("_rows", "nrows", "ncols", "_echelon", "_pivots")

    def __init__(self, rows: Sequence[Sequence[Fraction | int]]) -> None:
        data = [tuple(Fraction(x) for x in row) for row in rows]
        widths = {len(row) for row in data}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = len(data[0]) if data else 0
        self._echelon: list[list[int]] | None = None
        self._pivots: list[int] | None = None

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(m)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def _echelonize(self) -> tuple[list[list[int]], list[int]]:
        if self._echelon is None:
            ech, piv = _bareiss_echelon(_integer_rows(self._rows))
            self._echelon = ech
            self._pivots = piv
        return self._echelon, self._pivots  # type: ignore[return-value]

    def rank(self) -> int:
        """Exact rank over the rationals."""
        _, pivots = self._echelonize()
        return len(pivots)

    def kernel_basis(self) -> list[Vector]:
        """A basis of the right null space; each v satisfies A v = 0 exactly.

        One basis vector per free column, in increasing column order, with a
        1 in its free coordinate and 0 in the other free coordinates.
        """
        ech, pivots = self._echelonize()
        n = self.ncols
        pivot_set = set(pivots)
        free = [c for c in range(n) if c not in pivot_set]
        basis: list[Vector] = []
        for f in free:
            v: list[Fraction] = [Fraction(0)] * n
            v[f] = Fraction(1)
            for i in range(len(pivots) - 1, -1, -1):
                p = pivots[i]
                row = ech[i]
                s = Fraction(0)
                for j in range(p + 1, n):
                    if v[j] and row[j]:
                        s += Fraction(row[j]) * v[j]
                if s:
                    v[p] = -s / row[p]
            basis.append(tuple(v))
        return basis

    def in_row_space(self, v: Sequence[Fraction | int]) -> bool:
        """True iff v is an exact rational combination of the rows."""
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        ech, pivots = self._echelonize()
        w = [Fraction(x) for x in v]
        for i, p in enumerate(pivots):
            if w[p]:
                row = ech[i]
                factor = w[p] / row[p]
                for j in range(p, self.ncols):
                    if row[j]:
                        w[j] -= factor * row[j]
        return all(x == 0 for x in w)

    def rank_mod(self, p: int) -> int:
        """Rank of the matrix reduced modulo the prime ``p``.

        Raises ValueError when p divides a denominator (pick another prime).
        The result is at most the rational rank; strict inequality signals an
        unlucky prime.
        """
        rows = []
        for row in self._rows:
            r = []
            for x in row:
                den = x.denominator % p
                if den == 0:
                    raise ValueError("prime divides a denominator")
                r.append((x.numerator % p) * pow(den, -1, p) % p)
            rows.append(r)
        m, n = self.nrows, self.ncols
        rank = 0
        r = 0
        for c in range(n):
            if r == m:
                break
            piv_row = -1
            for i in range(r, m):
                if rows[i][c] % p:
                    piv_row = i
                    break
            if piv_row < 0:
                continue
            rows[r], rows[piv_row] = rows[piv_row], rows[r]
            inv = pow(rows[r][c], -1, p)
            for i in range(r + 1, m):
                if rows[i][c]:
                    factor = rows[i][c] * inv % p
                    rows[i] = [
                        (a - factor * b) % p for a, b in zip(rows[i], rows[r])
                    ]
            r += 1
            rank += 1
        return rank

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols})"


def matrix_rank(a: RationalMatrix) -> int:
    return a.rank()


def kernel_basis(a: RationalMatrix) -> list[Vector]:
    return a.kernel_basis()


def in_row_space(a: RationalMatrix, v: Sequence[Fraction | int]) -> bool:
    return a.in_row_space(v)


class SparseSpan:
    """Incremental exact row reduction of sparse vectors.

    Feed coefficient vectors as {column: Fraction} dicts; ``add`` reduces the
    vector against the pivots collected so far and reports whether it
    enlarged the span.  Used to measure the dimension of a span without
    materializing a dense matrix.
    """

    __slots__ = ("_pivots",)

    def __init__(self) -> None:
        self._pivots: dict[int, dict[int, Fraction]] = {}

    def add(self, vec: dict[int, Fraction]) -> bool:
        """Reduce ``vec`` (consumed) and return True if it was independent."""
        while vec:
            lead = min(vec)
            piv = self._pivots.get(lead)
            if piv is None:
                c = vec[lead]
                if c != 1:
                    vec = {j: x / c for j, x in vec.items()}
                self._pivots[lead] = vec
                return True
            factor = vec[lead]
            for j, x in piv.items():
                cur = vec.get(j)
                if cur is None:
                    vec[j] = -factor * x
                else:
                    cur -= factor * x
                    if cur == 0:
                        del vec[j]
                    else:
                        vec[j] = cur
        return False

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def contains(self, vec: dict[int, Fraction]) -> bool:
        """True iff ``vec`` lies in the current span (vec is consumed)."""
        saved = dict(self._pivots)
        grew = self.add(vec)
        if grew:
            self._pivots = saved
        return not grew
