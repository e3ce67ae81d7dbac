"""Rational polyhedral cones and their face lattices.

A Cone is full-dimensional and strongly convex in a lattice of the stated
rank, presented by its primitive extreme ray generators.  The face lattice
carries, for every face, a saturated lattice basis of its span and of its
annihilator; those two bases drive everything else: quotient cones,
face-intrinsic cones, and the lattice step vectors between covering faces.

Cones and face lattices are immutable after construction and safe to share
across threads; construction itself is deterministic (faces are ordered by
dimension, then by their sorted ray index sets).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import (
    RatMatrix,
    coords_in_lattice_basis,
    dot,
    ext_gcd_list,
    integer_kernel_basis,
    primitive_vector,
)


def dual_description(generators: Sequence[Sequence[int]], rank: int) -> tuple[tuple[int, ...], ...]:
    """Extreme rays of {h : <h, g> >= 0 for every generator g}.

    Incremental double description: generators are inserted one at a time
    while the extreme rays of the intersection so far are maintained, with
    the ambient lineality space tracked separately until it is consumed.

    Raises ValueError("cone not full-dimensional; quotient out lineality/span
    first") when the generators do not span, and ValueError("cone contains a
    line") when the dual is degenerate, i.e. the generated cone is not
    strongly convex.
    """
    if rank == 0:
        return ()
    gens: list[tuple[int, ...]] = []
    seen = set()
    for g in generators:
        if not any(Fraction(x) for x in g):
            continue
        p = primitive_vector(g)
        if p not in seen:
            seen.add(p)
            gens.append(p)
    lineality: list[tuple[Fraction, ...]] = [
        tuple(Fraction(1) if j == i else Fraction(0) for j in range(rank)) for i in range(rank)
    ]
    rays: list[tuple[tuple[Fraction, ...], frozenset[int]]] = []

    for idx, g in enumerate(gens):
        lin_vals = [dot(l, g) for l in lineality]
        if any(lin_vals):
            j0 = next(j for j, v in enumerate(lin_vals) if v)
            l0, v0 = lineality[j0], lin_vals[j0]
            if v0 < 0:
                l0, v0 = tuple(-x for x in l0), -v0
            new_lin = []
            for j, l in enumerate(lineality):
                if j == j0:
                    continue
                f = lin_vals[j] / v0 if j != j0 else None
                new_lin.append(tuple(x - f * y for x, y in zip(l, l0)))
            lineality = new_lin
            new_rays = []
            for r, zset in rays:
                f = dot(r, g) / v0
                new_rays.append((tuple(x - f * y for x, y in zip(r, l0)), zset | {idx}))
            new_rays.append((l0, frozenset(range(idx))))
            rays = new_rays
            continue
        vals = [dot(r, g) for r, _ in rays]
        if all(v >= 0 for v in vals):
            rays = [
                (r, zset | {idx} if vals[i] == 0 else zset)
                for i, (r, zset) in enumerate(rays)
            ]
            continue
        plus = [i for i, v in enumerate(vals) if v > 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        kept = [(rays[i][0], rays[i][1]) for i in plus]
        kept += [(rays[i][0], rays[i][1] | {idx}) for i in zero]
        for ip in plus:
            rp, zp = rays[ip]
            vp = vals[ip]
            for im in minus:
                rm, zm = rays[im]
                vm = vals[im]
                common = zp & zm
                adjacent = not any(
                    k != ip and k != im and common <= rays[k][1] for k in range(len(rays))
                )
                if not adjacent:
                    continue
                combo = tuple(vp * x - vm * y for x, y in zip(rm, rp))
                kept.append((combo, common | {idx}))
        rays = kept

    if lineality:
        raise ValueError("cone not full-dimensional; quotient out lineality/span first")

    out = set()
    for r, zset in rays:
        support = [gens[i] for i in zset]
        if RatMatrix(support, ncols=rank).rank() == rank - 1:
            out.add(primitive_vector(r))
    result = tuple(sorted(out))
    if not result or RatMatrix(result, ncols=rank).rank() < rank:
        raise ValueError("cone contains a line")
    return result


class Cone:
    """Strongly convex rational polyhedral cone, full-dimensional in Z^rank.

    Use Cone.from_rays / Cone.from_dual_rays; the constructor itself trusts
    its arguments.  `rays` are the primitive extreme generators, sorted, and
    `facet_normals` the primitive inequality normals of the minimal
    description, also sorted.
    """

    __slots__ = ("rank", "rays", "facet_normals", "_lattice", "_hash")

    def __init__(self, rank: int, rays: tuple, facet_normals: tuple):
        self.rank = rank
        self.rays = rays
        self.facet_normals = facet_normals
        self._lattice = None
        self._hash = hash((rank, rays))

    @classmethod
    def from_rays(cls, vectors: Iterable[Sequence[int]], rank: int | None = None) -> "Cone":
        vectors = list(vectors)
        if rank is None:
            if not vectors:
                raise ValueError("cannot infer the lattice rank from an empty generator list")
            rank = len(vectors[0])
        prim = sorted({primitive_vector(v) for v in vectors if any(Fraction(x) for x in v)})
        if rank == 0:
            if prim:
                raise ValueError("a rank-0 lattice admits no rays")
            return cls(0, (), ())
        if not prim:
            raise ValueError("cone not full-dimensional; quotient out lineality/span first")
        normals = dual_description(prim, rank)
        extreme = []
        for r in prim:
            support = [h for h in normals if dot(h, r) == 0]
            if RatMatrix(support, ncols=rank).rank() == rank - 1:
                extreme.append(r)
        return cls(rank, tuple(extreme), normals)

    @classmethod
    def from_dual_rays(cls, generators: Iterable[Sequence[int]], rank: int | None = None) -> "Cone":
        """Cone whose dual is generated by the given vectors."""
        generators = list(generators)
        if rank is None:
            if not generators:
                raise ValueError("cannot infer the lattice rank from an empty generator list")
            rank = len(generators[0])
        rays = dual_description(generators, rank)
        return cls.from_rays(rays, rank)

    def dual(self) -> "Cone":
        return Cone.from_rays(self.facet_normals, self.rank)

    def face_lattice(self) -> "FaceLattice":
        if self._lattice is None:
            self._lattice = _build_face_lattice(self)
        return self._lattice

    @property
    def f_vector(self) -> tuple[int, ...]:
        return self.face_lattice().f_vector

    def __eq__(self, other):
        return isinstance(other, Cone) and self.rank == other.rank and self.rays == other.rays

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Cone(rank={self.rank}, rays={list(self.rays)})"


@dataclass(frozen=True)
class Face:
    """A face of a cone, identified by the set of extreme rays lying on it.

    span_lattice is a Z-basis of N intersected with the linear span of the
    face; perp_lattice is a Z-basis of the annihilator M intersect face^perp.
    Both are saturated, so they double as exact coordinate systems for
    face-intrinsic cones and quotient lattices.
    """

    index: int
    dim: int
    rays: tuple[int, ...]
    span_lattice: tuple[tuple[int, ...], ...]
    perp_lattice: tuple[tuple[int, ...], ...]

    @property
    def ray_set(self) -> frozenset[int]:
        return frozenset(self.rays)


class FaceLattice:
    """Graded poset of the faces of a cone, with cover relations."""

    __slots__ = ("cone", "faces", "by_dim", "covers", "children", "parents", "_by_rayset")

    def __init__(self, cone, faces, by_dim, covers, children, parents, by_rayset):
        self.cone = cone
        self.faces = faces
        self.by_dim = by_dim
        self.covers = covers
        self.children = children
        self.parents = parents
        self._by_rayset = by_rayset

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(ids) for ids in self.by_dim)

    @property
    def apex(self) -> Face:
        return self.faces[self.by_dim[0][0]]

    @property
    def top(self) -> Face:
        return self.faces[self.by_dim[-1][0]]

    def face_by_rays(self, ray_indices: Iterable[int]) -> Face:
        key = frozenset(ray_indices)
        try:
            return self.faces[self._by_rayset[key]]
        except KeyError:
            raise ValueError(f"no face with ray set {sorted(key)}") from None

    def contains(self, small: Face, big: Face) -> bool:
        return small.ray_set <= big.ray_set

    def facets_of(self, face: Face) -> list[Face]:
        return [self.faces[i] for i in self.children[face.index]]


def _build_face_lattice(cone: Cone) -> FaceLattice:
    n = cone.rank
    nrays = len(cone.rays)
    all_rays = frozenset(range(nrays))
    facet_sets = [
        frozenset(i for i in range(nrays) if dot(h, cone.rays[i]) == 0)
        for h in cone.facet_normals
    ]
    found = {all_rays}
    queue = [all_rays]
    while queue:
        s = queue.pop()
        for fs in facet_sets:
            t = s & fs
            if t not in found:
                found.add(t)
                queue.append(t)

    def face_data(ray_set):
        vectors = [cone.rays[i] for i in sorted(ray_set)]
        perp = integer_kernel_basis(vectors, n)
        span = integer_kernel_basis(perp, n)
        return len(span), span, perp

    annotated = []
    for ray_set in found:
        dim, span, perp = face_data(ray_set)
        annotated.append((dim, tuple(sorted(ray_set)), span, perp))
    annotated.sort(key=lambda t: (t[0], t[1]))

    faces = tuple(
        Face(index=i, dim=dim, rays=rays, span_lattice=span, perp_lattice=perp)
        for i, (dim, rays, span, perp) in enumerate(annotated)
    )
    by_dim = [[] for _ in range(n + 1)]
    for f in faces:
        by_dim[f.dim].append(f.index)
    by_dim = tuple(tuple(ids) for ids in by_dim)

    covers = []
    children = {f.index: [] for f in faces}
    parents = {f.index: [] for f in faces}
    for lo in faces:
        for hi_id in by_dim[lo.dim + 1] if lo.dim + 1 <= n else ():
            hi = faces[hi_id]
            if lo.ray_set <= hi.ray_set:
                covers.append((lo.index, hi.index))
                children[hi.index].append(lo.index)
                parents[lo.index].append(hi.index)
    by_rayset = {f.ray_set: f.index for f in faces}
    return FaceLattice(cone, faces, by_dim, tuple(covers), children, parents, by_rayset)


@lru_cache(maxsize=None)
def _face_cone_cached(cone: Cone, face: Face) -> Cone:
    if face.dim == cone.rank:
        return cone
    if face.dim == 0:
        return Cone(0, (), ())
    coords = [coords_in_lattice_basis(face.span_lattice, cone.rays[i]) for i in face.rays]
    return Cone.from_rays(coords, rank=face.dim)


def face_cone(cone: Cone, face: Face) -> Cone:
    """The face viewed as a full-dimensional cone in its own saturated lattice."""
    return _face_cone_cached(cone, face)


def quotient_cone(cone: Cone, face: Face) -> Cone:
    """Image of the cone in N / (N intersect <face>), rays re-primitivized.

    The projection pairs with the face's perp lattice basis, which is an
    exact coordinate system for the quotient lattice.
    """
    if face.dim == 0:
        return cone
    if face.dim == cone.rank:
        return Cone(0, (), ())
    images = []
    for r in cone.rays:
        w = tuple(dot(u, r) for u in face.perp_lattice)
        if any(w):
            images.append(w)
    return Cone.from_rays(images, rank=cone.rank - face.dim)


def is_simplicial(cone: Cone) -> bool:
    return len(cone.rays) == cone.rank


def is_simple_in_dim(cone: Cone, c: int) -> bool:
    """True when the quotient by every c-dimensional face is simplicial."""
    if not 0 <= c <= cone.rank:
        raise ValueError("face dimension out of range")
    fl = cone.face_lattice()
    return all(
        is_simplicial(quotient_cone(cone, fl.faces[i])) for i in fl.by_dim[c]
    )


def is_cone_over_simple(cone: Cone) -> bool:
    """Cross-section is a simple polytope: simple in dimension 1."""
    if cone.rank == 0:
        return True
    return is_simple_in_dim(cone, 1)


def is_cone_over_simplicial(cone: Cone) -> bool:
    """Cross-section is a simplicial polytope: every proper face simplicial."""
    fl = cone.face_lattice()
    return all(
        len(f.rays) == f.dim for f in fl.faces if f.dim < cone.rank
    )


def normal_step_vector(fl: FaceLattice, mu: Face, tau: Face) -> tuple[int, ...]:
    """Integer vector in the span of tau whose class generates the image ray
    of tau in N / (N intersect <mu>), oriented to pair nonnegatively with the
    dual face of mu.

    Any two valid outputs differ by an element of <mu> intersect N, and all
    contraction matrices built from them coincide.
    """
    if tau.dim != mu.dim + 1 or not mu.ray_set <= tau.ray_set:
        raise ValueError("faces do not form a cover pair")
    cone = fl.cone
    if mu.dim == 0:
        return cone.rays[tau.rays[0]]
    proj = mu.perp_lattice
    images = [tuple(dot(u, b) for u in proj) for b in tau.span_lattice]
    base = next(v for v in images if any(v))
    g0 = primitive_vector(base)
    j0 = next(j for j, x in enumerate(g0) if x)
    factors = []
    for v in images:
        c = v[j0] // g0[j0]
        if tuple(c * x for x in g0) != v:
            raise ValueError("projected span is not one-dimensional")
        factors.append(c)
    g, coeffs = ext_gcd_list(factors)
    if g != 1:
        raise ValueError("quotient image of the face span is not saturated")
    n0 = [0] * cone.rank
    for c, b in zip(coeffs, tau.span_lattice):
        if c:
            n0 = [x + c * y for x, y in zip(n0, b)]
    ray_idx = next(i for i in tau.rays if i not in mu.ray_set)
    ray_img = tuple(dot(u, cone.rays[ray_idx]) for u in proj)
    orientation = ray_img[j0] * g0[j0]
    if orientation < 0:
        n0 = [-x for x in n0]
    return tuple(n0)


def cone_over_polytope(vertices: Sequence[Sequence[int]]) -> Cone:
    """Cone over the polytope placed at height one.

    Its face lattice minus apex and top face is isomorphic to the face
    lattice of the polytope, so f_l(P) = f_{l+1}(cone).
    """
    vertices = [tuple(v) for v in vertices]
    if not vertices:
        raise ValueError("empty vertex list")
    n = len(vertices[0])
    if any(len(v) != n for v in vertices):
        raise ValueError("vertices of mixed dimension")
    gens = [v + (1,) for v in vertices]
    try:
        return Cone.from_rays(gens, rank=n + 1)
    except ValueError as exc:
        raise ValueError("polytope vertices do not affinely span the ambient space") from exc
