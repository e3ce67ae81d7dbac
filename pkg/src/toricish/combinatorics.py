"""Face-number arithmetic: h-vectors, the two transforms attached to
simplicial and simple cross-sections, Stanley's g-polynomial recursion for
intersection-cohomology stalks, and Hodge-Deligne / Hodge-Du Bois tables of
projective toric varieties of simple polytopes.

Two f-vector conventions coexist in the sources and both are exposed here
explicitly: cone mode counts faces of the cone itself (f[0] = 1 for the
apex, f[n] = 1 for the cone), polytope mode counts faces of a polytope with
the extra convention f_{-1} = 1 kept separate.  They are related by
f_l(polytope) = f_{l+1}(cone over it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .cones import Cone, FaceLattice


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class FVector:
    """Face counts of a cone; cone_counts[i] = number of i-dimensional faces."""

    cone_counts: tuple[int, ...]

    @classmethod
    def from_cone(cls, cone: Cone) -> "FVector":
        return cls(cone.face_lattice().f_vector)

    @property
    def rank(self) -> int:
        return len(self.cone_counts) - 1

    @property
    def polytope_counts(self) -> tuple[int, ...]:
        """f-vector of the cross-section polytope (one dimension down);
        the conventional f_{-1} = 1 is not stored."""
        return self.cone_counts[1:-1]


def h_vector(f: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """h_j = sum_{l >= j} (-1)^{l-j} C(l, j) f_{n-1-l}, the transform whose
    entries are the even Betti numbers of a simplicial projective toric
    variety when the cone is over a simplicial polytope."""
    if n is None:
        n = len(f) - 1
    return tuple(
        sum((-1) ** (l - j) * binomial(l, j) * f[n - 1 - l] for l in range(j, n))
        for j in range(n)
    )


def h_tilde_vector(f: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """The companion transform with the roles of the face numbers reversed;
    symmetric and unimodal for cones over simple polytopes."""
    if n is None:
        n = len(f) - 1
    return tuple(
        sum(f[n - l] * binomial(n - 1 - l, j - l) * (-1) ** (j - l) for l in range(j + 1))
        for j in range(n)
    )


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _t_minus_one_power(k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = _poly_mul(out, [-1, 1])
    return out


@dataclass(frozen=True)
class ICStalkPoly:
    """Stalk dimensions of the intersection complex at the torus fixed
    point, as coefficients of the even powers: coefficients[j] multiplies
    q^(2j).  Equals the g-vector of the cross-section polytope."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("stalk polynomial must have constant term 1")


def g_polynomial(fl: FaceLattice) -> ICStalkPoly:
    """Stanley's mutual recursion evaluated on the cross-section polytope
    poset: faces of the cone minus the apex, dimensions shifted down by one,
    with the apex playing the empty face.

    h(F, t) = sum over proper faces G of F (apex included) of
    g(G, t) * (t-1)^(dim F - dim G - 1), with dims taken in the cone;
    g truncates h at half the polytope dimension by first differences.
    """
    n = fl.cone.rank
    if n == 0:
        return ICStalkPoly((1,))
    memo: dict[int, list[int]] = {fl.apex.index: [1]}

    def g_of(face_id: int) -> list[int]:
        if face_id in memo:
            return memo[face_id]
        face = fl.faces[face_id]
        h = _h_poly(face)
        half = (face.dim - 1) // 2
        g = [h[0]] + [h[i] - h[i - 1] for i in range(1, half + 1)]
        while len(g) > 1 and g[-1] == 0:
            g.pop()
        memo[face_id] = g
        return g

    def _h_poly(face) -> list[int]:
        h = [0] * max(face.dim, 1)
        for other in fl.faces:
            if other.index == face.index or not other.ray_set <= face.ray_set:
                continue
            term = _poly_mul(g_of(other.index), _t_minus_one_power(face.dim - other.dim - 1))
            for i, x in enumerate(term):
                if i >= len(h):
                    h.extend([0] * (i - len(h) + 1))
                h[i] += x
        return h

    return ICStalkPoly(tuple(g_of(fl.top.index)))


def hodge_deligne_coefficients(f_polytope: Sequence[int], n: int) -> tuple[int, ...]:
    """Coefficients c_p of (uv)^p in sum_{j=0..n} f_{j-1} (uv - 1)^(n-j),
    with f_{-1} = 1; f_polytope lists f_0 .. f_{n-1}."""
    if len(f_polytope) != n:
        raise ValueError("polytope f-vector must have length n")
    coeffs = [0] * (n + 1)
    for j in range(n + 1):
        fj = 1 if j == 0 else f_polytope[j - 1]
        for p in range(n - j + 1):
            coeffs[p] += fj * binomial(n - j, p) * (-1) ** (n - j - p)
    return tuple(coeffs)


def hodge_du_bois_table(f_polytope: Sequence[int], n: int) -> tuple[tuple[int, ...], ...]:
    """Table T with T[p][q] the (p, q) Hodge-Du Bois number of the projective
    toric variety of a simple n-polytope with the given face numbers:
    ones on the diagonal except f_0 - n at (n-1, n-1), an extra row at
    q = n-1, zero elsewhere."""
    if n < 2:
        return tuple(
            tuple(1 if p == q else 0 for q in range(n + 1)) for p in range(n + 1)
        )
    if len(f_polytope) != n:
        raise ValueError("polytope f-vector must have length n")
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        if p != n - 1:
            table[p][p] = 1
    table[n - 1][n - 1] = f_polytope[0] - n
    for p in range(1, n - 1):
        total = (-1) ** (n - p)
        for j in range(n - p + 1):
            fj = 1 if j == 0 else f_polytope[j - 1]
            sign = 1 if j % 2 else -1
            total += sign * fj * binomial(n - j, p)
        table[p][n - 1] = total
    return tuple(tuple(row) for row in table)


def betti_numbers(table: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Anti-diagonal sums of a Hodge-Du Bois table."""
    n = len(table) - 1
    return tuple(
        sum(table[p][k - p] for p in range(max(0, k - n), min(k, n) + 1))
        for k in range(2 * n + 1)
    )


def hodge_deligne_from_table(table: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Coefficient of (uv)^p recovered from a Hodge-Du Bois table by the
    alternating column sums; used to cross-check the direct expansion."""
    n = len(table) - 1
    return tuple(
        sum((-1) ** (p + q) * table[p][q] for q in range(n + 1)) for p in range(n + 1)
    )


def euler_h1_prediction(f_cone: Sequence[int], n: int, j: int) -> int:
    """Predicted dimension of the first cohomology of the wedge-(n-j)
    complex of a cone over a simple polytope, 1 <= j < n/2, read off from
    the Euler characteristic when that is the only nonvanishing degree."""
    return -binomial(n, j) + sum(
        (-1) ** (l - 1) * f_cone[l] * binomial(n - l, j) for l in range(1, n - j + 1)
    )
