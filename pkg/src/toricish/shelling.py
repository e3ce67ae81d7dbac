"""Facet shellings of cones via line shellings of a cross-section.

A shelling of an n-cone is a linear order of its facets such that each facet
meets the union of its predecessors in a nonempty initial segment of some
shelling of its own facet poset (recursively, down to dimension one).  The
order is produced Bruggesser-Mani style: cut the cone by the hyperplane
where the sum of facet normals evaluates to one, then order the facets by
the signed parameter at which a generic rational line through an interior
point crosses their hyperplanes.

Nothing here is canonical: only the shelling property itself is contractual,
and the produced order is certified by the same check exposed as
is_shelling().
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cones import Cone, Face, FaceLattice
from .linalg import dot


@dataclass(frozen=True)
class StepCertificate:
    """For one facet in the order: which of its own facets were already
    covered, and a full shelling of its facet poset starting with them."""

    facet: tuple[int, ...]
    prefix: tuple[tuple[int, ...], ...]
    extension: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Shelling:
    order: tuple[tuple[int, ...], ...]
    direction_index: int
    certificates: tuple[StepCertificate, ...]


def _candidate_direction(cone: Cone, t: int) -> tuple[Fraction, ...] | None:
    """Deterministic rational direction inside the cross-section hyperplane."""
    n = cone.rank
    w = [0] * n
    for h in cone.facet_normals:
        w = [a + b for a, b in zip(w, h)]
    raw = tuple(Fraction(t**k) for k in range(n))
    ww = dot(w, w)
    wr = dot(w, raw)
    d = tuple(r - Fraction(wr, ww) * wi for r, wi in zip(raw, w))
    if not any(d):
        return None
    return d


def shelling(cone: Cone, max_tries: int = 500) -> Shelling:
    """A certified shelling order of the cone's facets.

    Degenerate directions (ties or parallel facets) are skipped by moving to
    the next deterministic candidate; the index of the direction that worked
    is reported in the result.
    """
    if cone.rank < 1:
        raise ValueError("shelling needs a cone of dimension at least 1")
    fl = cone.face_lattice()
    n = cone.rank
    facet_ids = fl.by_dim[n - 1]
    if n == 1:
        order = tuple(fl.faces[i].rays for i in facet_ids)
        certs = _certify(fl, [fl.faces[i] for i in facet_ids])
        return Shelling(order, 0, tuple(certs))
    w = [0] * n
    for h in cone.facet_normals:
        w = [a + b for a, b in zip(w, h)]
    vertices = []
    for r in cone.rays:
        s = dot(w, r)
        vertices.append(tuple(Fraction(x, s) for x in r))
    p = tuple(sum(col, Fraction(0)) / len(vertices) for col in zip(*vertices))

    for t in range(1, max_tries + 1):
        d = _candidate_direction(cone, t)
        if d is None:
            continue
        params = []
        ok = True
        for fid in facet_ids:
            h = _facet_normal(cone, fl.faces[fid])
            hd = dot(h, d)
            if hd == 0:
                ok = False
                break
            params.append((fid, Fraction(-dot(h, p), hd)))
        if not ok:
            continue
        values = [s for _, s in params]
        if len(set(values)) != len(values):
            continue
        positive = sorted((s, fid) for fid, s in params if s > 0)
        negative = sorted((s, fid) for fid, s in params if s < 0)
        ordered = [fl.faces[fid] for _, fid in positive] + [fl.faces[fid] for _, fid in negative]
        certs = _certify(fl, ordered)
        if certs is not None:
            order = tuple(f.rays for f in ordered)
            return Shelling(order, t, tuple(certs))
    raise RuntimeError("no admissible shelling direction found")


def _facet_normal(cone: Cone, facet: Face) -> tuple[int, ...]:
    for h in cone.facet_normals:
        if all(dot(h, cone.rays[i]) == 0 for i in facet.rays):
            return h
    raise ValueError("face is not a facet")


def is_shelling(cone: Cone, order: Sequence[Sequence[int]]) -> bool:
    """Check the recursive shelling condition for an order of the facets,
    given as sequences of ray indices."""
    fl = cone.face_lattice()
    n = cone.rank
    try:
        faces = [fl.face_by_rays(r) for r in order]
    except ValueError:
        return False
    if sorted(f.index for f in faces) != sorted(fl.by_dim[n - 1]):
        return False
    if len(set(f.index for f in faces)) != len(faces):
        return False
    return _certify(fl, faces) is not None


def _certify(fl: FaceLattice, ordered: list[Face]) -> list[StepCertificate] | None:
    if fl.cone.rank == 1:
        return [StepCertificate(f.rays, (), ()) for f in ordered]
    memo: dict = {}
    certs = []
    for j, face in enumerate(ordered):
        earlier = ordered[:j]
        prefix = _covered_facets(fl, face, earlier)
        if j > 0:
            if not prefix:
                return None
            if not _intersections_covered(fl, face, earlier, prefix):
                return None
        ext = _find_shelling(fl, face, frozenset(f.index for f in prefix), memo)
        if ext is None:
            return None
        ext_faces = [fl.faces[i] for i in ext]
        prefix_sorted = tuple(f.rays for f in ext_faces[: len(prefix)])
        certs.append(StepCertificate(face.rays, prefix_sorted, tuple(f.rays for f in ext_faces)))
    return certs


def _covered_facets(fl: FaceLattice, face: Face, earlier: list[Face]) -> list[Face]:
    out = []
    for g in fl.facets_of(face):
        if any(g.ray_set <= e.ray_set for e in earlier):
            out.append(g)
    return out


def _intersections_covered(fl: FaceLattice, face: Face, earlier: list[Face], covered: list[Face]) -> bool:
    """face intersect (union of earlier) must equal the union of the covered
    facets of face.  Containment of each pairwise intersection in a single
    covered facet suffices: a face cannot be covered by finitely many proper
    subfaces."""
    for e in earlier:
        common = face.ray_set & e.ray_set
        if not any(common <= g.ray_set for g in covered):
            return False
    return True


def _find_shelling(fl: FaceLattice, face: Face, prefix: frozenset[int], memo: dict):
    """A shelling order of face's facet poset whose initial segment is
    exactly the given prefix set, or None.  Returns facet indices."""
    if face.dim <= 1:
        return tuple(fl.children[face.index])

    facet_ids = tuple(fl.children[face.index])

    def extend(used: tuple[int, ...], used_set: frozenset[int]):
        if len(used) == len(facet_ids):
            return ()
        key = (face.index, used_set, prefix)
        if key in memo and memo[key] is False:
            return None
        if len(used_set) < len(prefix):
            candidates = [i for i in facet_ids if i in prefix and i not in used_set]
        else:
            candidates = [i for i in facet_ids if i not in used_set]
        for cand in candidates:
            g = fl.faces[cand]
            earlier = [fl.faces[i] for i in used]
            sub_prefix = frozenset(
                gg.index for gg in _covered_facets(fl, g, earlier)
            )
            if used:
                if not sub_prefix:
                    continue
                if not _intersections_covered(fl, g, earlier, [fl.faces[i] for i in sub_prefix]):
                    continue
            if _find_shelling(fl, g, sub_prefix, memo) is None:
                continue
            rest = extend(used + (cand,), used_set | {cand})
            if rest is not None:
                return (cand,) + rest
        memo[key] = False
        return None

    return extend((), frozenset())
