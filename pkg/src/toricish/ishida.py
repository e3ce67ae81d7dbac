"""Cochain complexes of contraction maps attached to a cone, and everything
read off from their cohomology: graded Ext tables for reflexive
differentials, depth, and the local cohomological defect.

For a full-dimensional cone of rank n and 0 <= l <= n, the degree-zero
complex has, in cohomological degree i, one block per i-dimensional face mu,
namely the (l - i)-th wedge power of the annihilator of mu; the differential
is contraction in the first slot by the lattice step vector of each cover
pair.  Graded pieces of the sheaf-level complex are never materialized per
lattice point: all points in the relative interior class of a face give the
same complex, assembled from the face-intrinsic one by tensoring with wedge
powers of the face's annihilator.

All functions are pure; results are memoized per cone, so repeated queries
(tables, verification suites, the CLI) share work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .cones import Cone, Face, face_cone, is_simple_in_dim, is_simplicial, normal_step_vector, quotient_cone
from .linalg import RatMatrix, WedgeBasis, interior_product_matrix


@dataclass(frozen=True)
class IshidaComplex:
    """Degree-zero complex of one cone for one wedge degree l.

    terms[i] lists the face ids contributing at cohomological degree i;
    differentials[i] maps degree i to degree i+1.
    """

    cone: Cone
    degree: int
    term_faces: tuple[tuple[int, ...], ...]
    term_dims: tuple[int, ...]
    differentials: tuple[RatMatrix, ...]

    def d_squared_is_zero(self) -> bool:
        for a, b in zip(self.differentials, self.differentials[1:]):
            if not b.matmul(a).is_zero():
                return False
        return True


@lru_cache(maxsize=None)
def ishida_complex(cone: Cone, degree: int) -> IshidaComplex:
    n = cone.rank
    if not 0 <= degree <= n:
        raise ValueError(f"wedge degree must lie in 0..{n}")
    fl = cone.face_lattice()
    if n == 0:
        return IshidaComplex(cone, 0, ((fl.apex.index,),), (1,), ())

    bases: list[list[WedgeBasis]] = []
    term_faces = []
    term_dims = []
    for i in range(degree + 1):
        row = []
        ids = fl.by_dim[i]
        for fid in ids:
            face = fl.faces[fid]
            row.append(WedgeBasis(face.perp_lattice, degree - i, n))
        bases.append(row)
        term_faces.append(tuple(ids))
        term_dims.append(sum(b.dim for b in row))

    diffs = []
    for i in range(degree):
        src_ids, tgt_ids = term_faces[i], term_faces[i + 1]
        col_off = {}
        off = 0
        for pos, fid in enumerate(src_ids):
            col_off[fid] = off
            off += bases[i][pos].dim
        row_off = {}
        off = 0
        for pos, fid in enumerate(tgt_ids):
            row_off[fid] = off
            off += bases[i + 1][pos].dim
        rows = [[0] * term_dims[i] for _ in range(term_dims[i + 1])]
        for tpos, tid in enumerate(tgt_ids):
            tau = fl.faces[tid]
            tbasis = bases[i + 1][tpos]
            for mid in fl.children[tid]:
                if mid not in col_off:
                    continue
                mu = fl.faces[mid]
                mbasis = bases[i][src_ids.index(mid)]
                step = normal_step_vector(fl, mu, tau)
                block = interior_product_matrix(mbasis, tbasis, step)
                r0, c0 = row_off[tid], col_off[mid]
                for a in range(block.nrows):
                    brow = block.rows[a]
                    target = rows[r0 + a]
                    for b in range(block.ncols):
                        if brow[b]:
                            target[c0 + b] = brow[b]
        diffs.append(RatMatrix([tuple(r) for r in rows], ncols=term_dims[i]))
    return IshidaComplex(cone, degree, tuple(term_faces), tuple(term_dims), tuple(diffs))


def cohomology_dims(cx: IshidaComplex) -> tuple[int, ...]:
    """h^i = dim ker d^i - rank d^{i-1} for i = 0..l."""
    l = cx.degree
    ranks = [d.rank() for d in cx.differentials]
    out = []
    for i in range(l + 1):
        r_out = ranks[i] if i < l else 0
        r_in = ranks[i - 1] if i > 0 else 0
        out.append(cx.term_dims[i] - r_out - r_in)
    return tuple(out)


@lru_cache(maxsize=None)
def degree_zero_cohomology(cone: Cone, degree: int) -> tuple[int, ...]:
    return cohomology_dims(ishida_complex(cone, degree))


@lru_cache(maxsize=None)
def core_table(cone: Cone) -> dict:
    """h^i of the face-intrinsic complexes, for every face and every degree.

    Maps face id -> tuple over m = 0..dim(face) of cohomology tuples.  Each
    face is re-coordinatized as a full-dimensional cone in the saturated
    lattice of its span before its complexes are built.
    """
    fl = cone.face_lattice()
    table = {}
    for face in fl.faces:
        inner = face_cone(cone, face)
        table[face.index] = tuple(
            degree_zero_cohomology(inner, m) for m in range(face.dim + 1)
        )
    return table


def _face_class_dims(n: int, face_dim: int, face_rows, degree: int) -> tuple[int, ...]:
    """Assemble the cohomology of the graded piece attached to one face class
    from the face's intrinsic table: sum over j of C(n - d, j) times
    h^i(intrinsic complex at degree l - j)."""
    nd = n - face_dim
    out = []
    for i in range(degree + 1):
        total = 0
        for j in range(nd + 1):
            m = degree - j
            if not 0 <= m <= face_dim:
                continue
            h = face_rows[m]
            if i < len(h) and h[i]:
                total += math.comb(nd, j) * h[i]
        out.append(total)
    return tuple(out)


def graded_class_cohomology(cone: Cone, degree: int, face: Face) -> tuple[int, ...]:
    """Cohomology dimensions of the degree-u piece of the sheaf complex for
    any lattice point u in the relative-interior class of the face."""
    if not 0 <= degree <= cone.rank:
        raise ValueError(f"wedge degree must lie in 0..{cone.rank}")
    rows = core_table(cone)[face.index]
    return _face_class_dims(cone.rank, face.dim, rows, degree)


@dataclass(frozen=True)
class ExtTable:
    """Graded Ext dimensions of the reflexive differentials against the
    dualizing sheaf, per face class, plus the per-face intrinsic table they
    are assembled from.

    assembled[(face_id, i, k)] is the dimension of the degree-u piece of
    Ext^i(Omega^k, omega) for u in the face's class; zero entries are
    omitted.  depth[k] is None when every Ext^i with i > 0 vanishes, i.e.
    when the depth is maximal.
    """

    cone: Cone
    core: dict
    assembled: dict
    depth: dict
    lcdef: int

    def class_dim(self, face_id: int, i: int, k: int) -> int:
        return self.assembled.get((face_id, i, k), 0)


@lru_cache(maxsize=None)
def ext_table(cone: Cone) -> ExtTable:
    n = cone.rank
    fl = cone.face_lattice()
    core = core_table(cone)
    assembled = {}
    max_positive_i = {k: 0 for k in range(n + 1)}
    for face in fl.faces:
        rows = core[face.index]
        for k in range(n + 1):
            dims = _face_class_dims(n, face.dim, rows, n - k)
            for i, d in enumerate(dims):
                if d:
                    assembled[(face.index, i, k)] = d
                    if i > 0:
                        max_positive_i[k] = max(max_positive_i[k], i)
    depth = {
        k: (n - mi if mi > 0 else None) for k, mi in max_positive_i.items()
    }
    return ExtTable(cone, core, assembled, depth, _lcdef_from_core(cone, core))


def _lcdef_from_core(cone: Cone, core: dict) -> int:
    best = 0
    fl = cone.face_lattice()
    for face in fl.faces:
        rows = core[face.index]
        for m, h in enumerate(rows):
            lp = face.dim - m
            for i, val in enumerate(h):
                if val and i > lp:
                    best = max(best, i - lp)
    return best


def lcdef(cone: Cone) -> int:
    """Local cohomological defect: the smallest c such that the sheaf-level
    complex of every wedge degree n - l has no cohomology above degree
    c + l."""
    return _lcdef_from_core(cone, core_table(cone))


@dataclass(frozen=True)
class CheckReport:
    name: str
    ok: bool
    failures: tuple = ()

    def asdict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "failures": list(self.failures)}


def verify_d_squared(cone: Cone) -> CheckReport:
    failures = []
    for l in range(cone.rank + 1):
        if not ishida_complex(cone, l).d_squared_is_zero():
            failures.append({"degree": l})
    return CheckReport("d_squared", not failures, tuple(failures))


def verify_dualizing_exactness(cone: Cone) -> CheckReport:
    """The top-degree sheaf complex resolves the dualizing sheaf: per face
    class, cohomology concentrated in degree 0 with dimension one at the
    apex class and zero elsewhere."""
    n = cone.rank
    fl = cone.face_lattice()
    failures = []
    for face in fl.faces:
        dims = graded_class_cohomology(cone, n, face)
        expected0 = 1 if face.dim == 0 else 0
        if dims[0] != expected0 or any(dims[1:]):
            failures.append({"face": list(face.rays), "dims": list(dims)})
    return CheckReport("dualizing_exactness", not failures, tuple(failures))


def verify_surjectivity(cone: Cone) -> CheckReport:
    """Vanishing of the top cohomology of every graded piece of the complex
    at wedge degree n - k, for all k up to n/2."""
    n = cone.rank
    fl = cone.face_lattice()
    failures = []
    for k in range(n // 2 + 1):
        l = n - k
        for face in fl.faces:
            dims = graded_class_cohomology(cone, l, face)
            if dims[l]:
                failures.append({"k": k, "face": list(face.rays), "top_dim": dims[l]})
    return CheckReport("surjectivity", not failures, tuple(failures))


def verify_codim_vanishing(cone: Cone) -> CheckReport:
    """If every quotient by a c-dimensional face is simplicial, all graded
    Ext^i with i > c vanish.  Checked at the smallest such c (the property
    is monotone in c)."""
    n = cone.rank
    c = next(c for c in range(n + 1) if is_simple_in_dim(cone, c))
    table = ext_table(cone)
    failures = [
        {"face_class": key[0], "i": key[1], "k": key[2], "dim": d, "c": c}
        for key, d in table.assembled.items()
        if key[1] > c
    ]
    return CheckReport("codim_vanishing", not failures, tuple(failures))


def link_complex_cohomology(cone: Cone, mu: Face, degree: int) -> tuple[int, ...]:
    """Cohomology of the subcomplex over the faces containing mu, running
    from the block of mu (slot 0) up to wedge degree `degree`."""
    n = cone.rank
    fl = cone.face_lattice()
    m = mu.dim
    if not m <= degree <= n:
        raise ValueError("degree out of range for the face")
    levels = []
    for d in range(m, degree + 1):
        ids = [fid for fid in fl.by_dim[d] if mu.ray_set <= fl.faces[fid].ray_set]
        levels.append(ids)
    bases = [
        [WedgeBasis(fl.faces[fid].perp_lattice, degree - (m + s), n) for fid in ids]
        for s, ids in enumerate(levels)
    ]
    dims = [sum(b.dim for b in row) for row in bases]
    diffs = []
    for s in range(len(levels) - 1):
        src_ids, tgt_ids = levels[s], levels[s + 1]
        col_off = {}
        off = 0
        for pos, fid in enumerate(src_ids):
            col_off[fid] = off
            off += bases[s][pos].dim
        rows = [[0] * dims[s] for _ in range(dims[s + 1])]
        row_base = 0
        for tpos, tid in enumerate(tgt_ids):
            tau = fl.faces[tid]
            tbasis = bases[s + 1][tpos]
            for mid in fl.children[tid]:
                if mid not in col_off:
                    continue
                mu2 = fl.faces[mid]
                block = interior_product_matrix(
                    bases[s][src_ids.index(mid)], tbasis, normal_step_vector(fl, mu2, tau)
                )
                for a in range(block.nrows):
                    for b in range(block.ncols):
                        if block.rows[a][b]:
                            rows[row_base + a][col_off[mid] + b] = block.rows[a][b]
            row_base += tbasis.dim
        diffs.append(RatMatrix([tuple(r) for r in rows], ncols=dims[s]))
    ranks = [d.rank() for d in diffs]
    out = []
    for s in range(len(levels)):
        r_out = ranks[s] if s < len(ranks) else 0
        r_in = ranks[s - 1] if s > 0 else 0
        out.append(dims[s] - r_out - r_in)
    return tuple(out)


def verify_link_exactness(cone: Cone, mu: Face, degrees=None) -> CheckReport:
    """Exactness of the subcomplex over faces containing mu, for every wedge
    degree strictly above dim(mu), when the quotient by mu is simplicial."""
    if mu.dim == 0:
        raise ValueError("hypothesis not met: the face must be positive-dimensional")
    if not is_simplicial(quotient_cone(cone, mu)):
        raise ValueError("hypothesis not met: quotient by the face is not simplicial")
    n = cone.rank
    if degrees is None:
        degrees = range(mu.dim + 1, n + 1)
    failures = []
    for l in degrees:
        dims = link_complex_cohomology(cone, mu, l)
        if any(dims):
            failures.append({"face": list(mu.rays), "degree": l, "dims": list(dims)})
    return CheckReport("link_exactness", not failures, tuple(failures))
