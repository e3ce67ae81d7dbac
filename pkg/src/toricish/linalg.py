"""Exact linear algebra over Q and Z, plus wedge-power bases.

Every invariant computed by this package reduces to ranks and kernels of the
matrices built here, so arithmetic is exact throughout: entries are Python
ints or fractions.Fraction, never floats.  All functions are pure and all
returned objects immutable, which makes the module safe to use from several
threads at once.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive_vector(vec) -> tuple[int, ...]:
    """Scale an exact rational vector to the primitive integer vector on the
    same ray.  The direction is preserved: (0, -5) maps to (0, -1)."""
    fracs = [Fraction(x) for x in vec]
    if not any(fracs):
        raise ValueError("zero vector has no primitive representative")
    den = 1
    for f in fracs:
        den = den * f.denominator // math.gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return tuple(x // g for x in ints)


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Clear denominators row by row and strip common factors."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        ints = [int(x * den) for x in row]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


class RatMatrix:
    """Immutable exact matrix.

    rank() uses fraction-free (Bareiss) elimination on integer-scaled rows,
    so the result is deterministic and independent of row or column visit
    order.  kernel_basis() returns a basis of the right kernel; together they
    satisfy rank + len(kernel_basis()) == ncols.
    """

    __slots__ = ("rows", "nrows", "ncols", "_rank")

    def __init__(self, rows, ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("declared column count does not match rows")
            ncols = width
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._rank: int | None = None

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RatMatrix":
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols=ncols)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def matmul(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        out = []
        for row in self.rows:
            if cols:
                out.append(tuple(dot(row, c) for c in cols))
            else:
                out.append((0,) * other.ncols)
        return RatMatrix(out, ncols=other.ncols)

    def rank(self) -> int:
        if self._rank is None:
            a = [r for r in _integer_rows(self.rows) if any(r)]
            m, n = len(a), self.ncols
            r = 0
            prev = 1
            for c in range(n):
                if r == m:
                    break
                piv = None
                for i in range(r, m):
                    x = a[i][c]
                    if x and (piv is None or abs(x) < abs(a[piv][c])):
                        piv = i
                if piv is None:
                    continue
                a[r], a[piv] = a[piv], a[r]
                pc = a[r][c]
                for i in range(r + 1, m):
                    ic = a[i][c]
                    row_i, row_r = a[i], a[r]
                    for j in range(c, n):
                        row_i[j] = (row_i[j] * pc - ic * row_r[j]) // prev
                prev = pc
                r += 1
            self._rank = r
        return self._rank

    def kernel_basis(self) -> list[tuple[Fraction, ...]]:
        m, n = self.nrows, self.ncols
        a = [[Fraction(x) for x in row] for row in self.rows]
        piv_cols: list[int] = []
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, m) if a[i][c]), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(m):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            piv_cols.append(c)
            r += 1
        basis = []
        for free in range(n):
            if free in piv_cols:
                continue
            v = [Fraction(0)] * n
            v[free] = Fraction(1)
            for prow, pcol in enumerate(piv_cols):
                v[pcol] = -a[prow][free]
            basis.append(tuple(v))
        return basis

    def __repr__(self):
        return f"RatMatrix({self.nrows}x{self.ncols})"


def matrix_rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return RatMatrix(rows, ncols=ncols).rank()


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y == g == gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def ext_gcd_list(values: Sequence[int]) -> tuple[int, list[int]]:
    """gcd of the values together with one set of Bezout coefficients."""
    g = 0
    coeffs = [0] * len(values)
    for i, v in enumerate(values):
        if v == 0:
            continue
        if g == 0:
            g = abs(v)
            coeffs = [0] * len(values)
            coeffs[i] = 1 if v > 0 else -1
        else:
            d, x, y = _ext_gcd(g, v)
            coeffs = [c * x for c in coeffs]
            coeffs[i] += y
            g = d
    return g, coeffs


def integer_kernel_basis(rows: Sequence[Sequence[int]], ncols: int) -> tuple[tuple[int, ...], ...]:
    """Z-basis of {x in Z^ncols : r . x == 0 for every row r}.

    Column-style Hermite reduction with a unimodular transform; the result is
    a basis of the full integer kernel, i.e. the returned lattice is
    saturated.
    """
    m = len(rows)
    a = [list(map(int, r)) for r in rows]
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_op(j2: int, j1: int, q: int) -> None:
        for i in range(m):
            a[i][j2] -= q * a[i][j1]
        for i in range(ncols):
            u[i][j2] -= q * u[i][j1]

    def col_swap(j1: int, j2: int) -> None:
        for i in range(m):
            a[i][j1], a[i][j2] = a[i][j2], a[i][j1]
        for i in range(ncols):
            u[i][j1], u[i][j2] = u[i][j2], u[i][j1]

    col = 0
    for row in range(m):
        while True:
            nz = [j for j in range(col, ncols) if a[row][j]]
            if len(nz) <= 1:
                break
            j1 = min(nz, key=lambda j: abs(a[row][j]))
            for j2 in nz:
                if j2 != j1:
                    col_op(j2, j1, a[row][j2] // a[row][j1])
        nz = [j for j in range(col, ncols) if a[row][j]]
        if nz:
            if nz[0] != col:
                col_swap(nz[0], col)
            col += 1
    return tuple(tuple(u[i][j] for i in range(ncols)) for j in range(col, ncols))


class ColumnSolver:
    """Expresses vectors exactly in the span of a fixed list of columns.

    The elimination is done once at construction; solve() is then a couple of
    dot products per call.  Returns None when the target is outside the span.
    """

    def __init__(self, columns: Sequence[Sequence], height: int):
        self.ncols = len(columns)
        self.height = height
        # Augment with the identity so solve() can replay row operations.
        a = []
        for i in range(height):
            row = [Fraction(col[i]) for col in columns]
            row.extend(Fraction(1) if k == i else Fraction(0) for k in range(height))
            a.append(row)
        pivots: list[tuple[int, int]] = []
        r = 0
        for c in range(self.ncols):
            piv = next((i for i in range(r, height) if a[i][c]), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(height):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append((r, c))
            r += 1
        self._reduced = a
        self._pivots = pivots
        self._rank = r

    def solve(self, target: Sequence):
        vals = []
        for i in range(self.height):
            row = self._reduced[i]
            vals.append(dot(row[self.ncols:], target))
        for i in range(self._rank, self.height):
            if vals[i]:
                return None
        # Free columns (if any) take coordinate zero; pivot rows then read off
        # directly because the pivot columns are reduced.
        x = [Fraction(0)] * self.ncols
        for prow, pcol in self._pivots:
            x[pcol] = vals[prow]
        return tuple(x)


def coords_in_lattice_basis(basis_rows: Sequence[Sequence[int]], vec: Sequence[int]) -> tuple[int, ...]:
    """Integer coordinates of vec in a lattice basis given as rows."""
    if not basis_rows:
        raise ValueError("empty basis")
    height = len(vec)
    columns = [tuple(b) for b in basis_rows]
    solver = ColumnSolver(columns, height)
    x = solver.solve(tuple(vec))
    if x is None:
        raise ValueError("vector outside the span of the basis")
    out = []
    for f in x:
        f = Fraction(f)
        if f.denominator != 1:
            raise ValueError("vector not in the lattice generated by the basis")
        out.append(int(f))
    return tuple(out)


@lru_cache(maxsize=None)
def _ksubsets(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    if k < 0:
        return ()
    return tuple(itertools.combinations(range(m), k))


def _det(rows: list[list]) -> Fraction:
    """Determinant by exact Gaussian elimination (small matrices only)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def wedge_coordinates(vectors: Sequence[Sequence], ambient: int):
    """Coordinates of v_1 ^ ... ^ v_k in the standard wedge basis of Q^ambient,
    indexed by lexicographically ordered k-subsets of the coordinates."""
    k = len(vectors)
    out = []
    for subset in _ksubsets(ambient, k):
        out.append(_det([[v[j] for j in subset] for v in vectors]))
    return out


@dataclass(frozen=True)
class WedgeBasis:
    """Basis of the k-th wedge power of a subspace of Q^ambient.

    The subspace is given by a basis (rows); the wedge basis is indexed by
    k-element subsets of the row indices in lexicographic order, with the
    standard sign convention (sorting transpositions contribute -1 each).
    """

    vectors: tuple[tuple[int, ...], ...]
    degree: int
    ambient: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("negative wedge degree")
        for v in self.vectors:
            if len(v) != self.ambient:
                raise ValueError("vector length does not match ambient dimension")

    @property
    def subsets(self) -> tuple[tuple[int, ...], ...]:
        return _ksubsets(len(self.vectors), self.degree)

    @property
    def dim(self) -> int:
        return len(self.subsets)


def interior_product_matrix(source: WedgeBasis, target: WedgeBasis, step: Sequence[int]) -> RatMatrix:
    """Matrix of contraction in the first slot by the pairing with `step`,
    from wedge degree k of the source subspace to degree k-1 of the target.

    Well defined only when the target subspace is contained in the source
    subspace's annihilated part: every target basis vector must pair to zero
    with `step`, and the contracted image must land in the span of the target
    wedges (otherwise the face pair is wrong and a ValueError is raised).
    """
    if source.degree != target.degree + 1:
        raise ValueError("target degree must be one below the source degree")
    if source.ambient != target.ambient:
        raise ValueError("mismatched ambient dimensions")
    for u in target.vectors:
        if dot(u, step) != 0:
            raise ValueError("step vector must annihilate the target subspace")
    amb = source.ambient
    k = source.degree
    height = len(_ksubsets(amb, k - 1))
    target_cols = [
        wedge_coordinates([target.vectors[i] for i in sub], amb)
        for sub in target.subsets
    ]
    solver = ColumnSolver(target_cols, height)
    pairings = [dot(v, step) for v in source.vectors]
    columns = []
    for sub in source.subsets:
        image = [Fraction(0)] * height
        for pos, i in enumerate(sub):
            c = pairings[i]
            if not c:
                continue
            sign = -1 if pos % 2 else 1
            rest = [source.vectors[j] for j in sub if j != i]
            for slot, val in enumerate(wedge_coordinates(rest, amb)):
                if val:
                    image[slot] += sign * c * val
        coeffs = solver.solve(image)
        if coeffs is None:
            raise ValueError("target subspace does not contain image")
        columns.append(coeffs)
    rows = [tuple(col[i] for col in columns) for i in range(target.dim)]
    return RatMatrix(rows, ncols=source.dim)
