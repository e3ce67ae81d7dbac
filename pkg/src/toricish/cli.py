"""Command-line front end.

Input is a JSON cone file with exactly one of "rays", "dual_rays" (the tool
dualizes) or "polytope_vertices" (height-one homogenization).  Output is
either canonical JSON (sorted keys, byte-stable across runs for the same
input and version) or a plain-text table.

Exit codes: 0 success / all checks pass, 1 usage error, 2 verification
failure, 3 computation error.
"""

from __future__ import annotations

import json
import sys

import click

from . import __version__
from .combinatorics import (
    FVector,
    betti_numbers,
    g_polynomial,
    hodge_deligne_coefficients,
    hodge_du_bois_table,
)
from .cones import (
    Cone,
    cone_over_polytope,
    is_cone_over_simple,
    is_cone_over_simplicial,
    is_simple_in_dim,
    is_simplicial,
    quotient_cone,
)
from .decomposition import decomposition_report, ic_multiplicities
from .ishida import (
    cohomology_dims,
    ext_table,
    graded_class_cohomology,
    ishida_complex,
    lcdef,
    verify_codim_vanishing,
    verify_d_squared,
    verify_dualizing_exactness,
    verify_link_exactness,
    verify_surjectivity,
)
from .sampling import sample_cones
from .shelling import is_shelling, shelling

SCHEMA_VERSION = 1

# Bad invocations exit with code 1 (click defaults to 2, which this tool
# reserves for verification failures).
click.exceptions.UsageError.exit_code = 1


class VerificationFailure(Exception):
    pass


def load_cone_file(path: str) -> tuple[Cone, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    keys = [k for k in ("rays", "dual_rays", "polytope_vertices") if k in data]
    if len(keys) != 1:
        raise ValueError(
            'cone file must contain exactly one of "rays", "dual_rays", "polytope_vertices"'
        )
    rank = data.get("lattice_rank")
    if rank is None:
        raise ValueError('cone file is missing "lattice_rank"')
    vectors = [tuple(int(x) for x in v) for v in data[keys[0]]]
    if any(len(v) != rank for v in vectors):
        raise ValueError("vector length does not match lattice_rank")
    if keys[0] == "rays":
        cone = Cone.from_rays(vectors, rank)
    elif keys[0] == "dual_rays":
        cone = Cone.from_dual_rays(vectors, rank)
    else:
        cone = cone_over_polytope(vectors)
    meta = {"name": data.get("name"), "input_form": keys[0]}
    return cone, meta


def emit(payload: dict, fmt: str, out: str | None, table_renderer=None) -> None:
    if fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = table_renderer(payload) if table_renderer else _default_table(payload)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _default_table(payload: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_default_table(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  {json.dumps(item, sort_keys=True)}")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(line for line in lines if line) + ("\n" if indent == 0 else "")


def _payload(command: str, meta: dict, body: dict) -> dict:
    head = {"schema_version": SCHEMA_VERSION, "command": command}
    if meta.get("name"):
        head["name"] = meta["name"]
    head.update(body)
    return head


common_options = [
    click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json", show_default=True),
    click.option("-o", "output", type=click.Path(dir_okay=False, writable=True), default=None, help="Write output to a file."),
]


def with_common(fn):
    for opt in reversed(common_options):
        fn = opt(fn)
    return fn


@click.group()
@click.version_option(version=__version__, prog_name="toricish")
def cli():
    """Exact invariants of rational polyhedral cones and the toric varieties
    they define: face lattices, wedge-complex cohomology, Ext and depth
    tables, local cohomological defect, weight-graded decompositions and
    Hodge tables."""


def run(fn):
    """Shared error-to-exit-code mapping for command bodies."""

    def wrapper(*args, **kwargs):
        try:
            fn(*args, **kwargs)
        except VerificationFailure as exc:
            click.echo(f"verification failed: {exc}", err=True)
            sys.exit(2)
        except (ValueError, RuntimeError, OSError, json.JSONDecodeError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@cli.command()
@click.argument("file", type=click.Path(exists=False))
@with_common
@run
def faces(file, fmt, output):
    """f-vector, face lattice summary, and cone-class predicates."""
    cone, meta = load_cone_file(file)
    fl = cone.face_lattice()
    body = {
        "lattice_rank": cone.rank,
        "rays": [list(r) for r in cone.rays],
        "facet_normals": [list(h) for h in cone.facet_normals],
        "f_vector": list(fl.f_vector),
        "faces_by_dim": {
            str(d): [list(fl.faces[i].rays) for i in fl.by_dim[d]]
            for d in range(cone.rank + 1)
        },
        "predicates": {
            "simplicial": is_simplicial(cone),
            "cone_over_simple": is_cone_over_simple(cone),
            "cone_over_simplicial": is_cone_over_simplicial(cone),
            "simple_in_dim": {
                str(c): is_simple_in_dim(cone, c) for c in range(cone.rank + 1)
            },
        },
    }
    emit(_payload("faces", meta, body), fmt, output)


@cli.command()
@click.argument("file", type=click.Path(exists=False))
@click.option("--l", "degree", type=int, required=True, help="Wedge degree of the complex.")
@click.option("--face", "face_sel", default=None, help="Comma-separated ray indices of a face; reports the graded piece of that face class.")
@with_common
@run
def ishida(file, degree, face_sel, fmt, output):
    """Term dimensions and cohomology of the wedge complex at one degree."""
    cone, meta = load_cone_file(file)
    cx = ishida_complex(cone, degree)
    body = {
        "degree": degree,
        "term_dims": list(cx.term_dims),
        "cohomology": list(cohomology_dims(cx)),
    }
    if face_sel is not None:
        fl = cone.face_lattice()
        indices = [int(x) for x in face_sel.split(",")] if face_sel else []
        face = fl.face_by_rays(indices)
        body["face"] = list(face.rays)
        body["face_class_cohomology"] = list(graded_class_cohomology(cone, degree, face))
    emit(_payload("ishida", meta, body), fmt, output)


@cli.command()
@click.argument("file", type=click.Path(exists=False))
@with_common
@run
def ext(file, fmt, output):
    """Graded Ext table of reflexive differentials, with depth per index."""
    cone, meta = load_cone_file(file)
    fl = cone.face_lattice()
    table = ext_table(cone)
    core = {}
    for face in fl.faces:
        core[",".join(map(str, face.rays))] = {
            str(m): list(h) for m, h in enumerate(table.core[face.index])
        }
    assembled = [
        {
            "face": list(fl.faces[fid].rays),
            "i": i,
            "k": k,
            "dim": d,
        }
        for (fid, i, k), d in sorted(table.assembled.items())
        if i > 0
    ]
    body = {
        "core": core,
        "assembled_positive_ext": assembled,
        "depth": {
            str(k): ("maximal" if v is None else v) for k, v in sorted(table.depth.items())
        },
        "lcdef": table.lcdef,
    }
    emit(_payload("ext", meta, body), fmt, output)


@cli.command(name="lcdef")
@click.argument("file", type=click.Path(exists=False))
@with_common
@run
def lcdef_cmd(file, fmt, output):
    """Local cohomological defect of the associated affine toric variety."""
    cone, meta = load_cone_file(file)
    emit(_payload("lcdef", meta, {"lcdef": lcdef(cone)}), fmt, output)


@cli.command()
@click.argument("file", type=click.Path(exists=False))
@with_common
@run
def decompose(file, fmt, output):
    """Weight-graded summand report of the constant Hodge module."""
    cone, meta = load_cone_file(file)
    report = decomposition_report(cone)
    emit(_payload("decompose", meta, report), fmt, output)


@cli.command()
@click.argument("file", type=click.Path(exists=False))
@with_common
@run
def gpoly(file, fmt, output):
    """Intersection-complex stalk polynomial (g-vector of the cross-section)."""
    cone, meta = load_cone_file(file)
    poly = g_polynomial(cone.face_lattice())
    body = {
        "coefficients": list(poly.coefficients),
        "polynomial": " + ".join(
            (f"{c}" if j == 0 else f"{c}*q^{2*j}") for j, c in enumerate(poly.coefficients)
        ),
    }
    emit(_payload("gpoly", meta, body), fmt, output)


def _hodge_table_renderer(payload: dict) -> str:
    table = payload["hodge_du_bois"]
    n = len(table) - 1
    lines = ["q\\p " + " ".join(f"{p:>4}" for p in range(n + 1))]
    for q in range(n, -1, -1):
        lines.append(f"{q:>3} " + " ".join(f"{table[p][q]:>4}" for p in range(n + 1)))
    lines.append("betti " + " ".join(str(b) for b in payload["betti"]))
    return "\n".join(lines) + "\n"


@cli.command()
@click.argument("file", type=click.Path(exists=False))
@with_common
@run
def hodge(file, fmt, output):
    """Hodge-Du Bois table, Hodge-Deligne coefficients and Betti numbers of
    the projective toric variety of a simple polytope.

    With "polytope_vertices" input the polytope is the one given; with
    "rays"/"dual_rays" the cone is treated as the cone over its
    cross-section polytope."""
    cone, meta = load_cone_file(file)
    if not is_cone_over_simple(cone):
        raise ValueError("the polytope is not simple; the Hodge table formulas do not apply")
    fv = FVector.from_cone(cone)
    n = cone.rank - 1
    f_poly = fv.polytope_counts
    table = hodge_du_bois_table(f_poly, n)
    body = {
        "polytope_dim": n,
        "polytope_f_vector": list(f_poly),
        "hodge_du_bois": [list(row) for row in table],
        "hodge_deligne_uv_coefficients": list(hodge_deligne_coefficients(f_poly, n)),
        "betti": list(betti_numbers(table)),
    }
    emit(_payload("hodge", meta, body), fmt, output, table_renderer=_hodge_table_renderer)


@cli.command(name="shelling")
@click.argument("file", type=click.Path(exists=False))
@with_common
@run
def shelling_cmd(file, fmt, output):
    """A certified facet shelling order."""
    cone, meta = load_cone_file(file)
    result = shelling(cone)
    body = {
        "order": [list(f) for f in result.order],
        "direction_index": result.direction_index,
        "verified": is_shelling(cone, result.order),
        "certificates": [
            {
                "facet": list(c.facet),
                "covered_prefix": [list(g) for g in c.prefix],
                "extension": [list(g) for g in c.extension],
            }
            for c in result.certificates
        ],
    }
    emit(_payload("shelling", meta, body), fmt, output)


SUITES = ("d2", "ish_n", "surjectivity", "codim", "link", "shelling", "inequalities", "closed_forms", "all")


def _run_suite(cone: Cone, suite: str) -> list[dict]:
    reports = []
    if suite in ("d2", "all"):
        reports.append(verify_d_squared(cone).asdict())
    if suite in ("ish_n", "all"):
        reports.append(verify_dualizing_exactness(cone).asdict())
    if suite in ("surjectivity", "all"):
        reports.append(verify_surjectivity(cone).asdict())
    if suite in ("codim", "all"):
        reports.append(verify_codim_vanishing(cone).asdict())
    if suite in ("link", "all"):
        fl = cone.face_lattice()
        failures = []
        for face in fl.faces:
            if face.dim == 0 or not is_simplicial(quotient_cone(cone, face)):
                continue
            rep = verify_link_exactness(cone, face)
            if not rep.ok:
                failures.extend(rep.failures)
        reports.append({"name": "link_exactness", "ok": not failures, "failures": failures})
    if suite in ("shelling", "all"):
        result = shelling(cone)
        ok = is_shelling(cone, result.order)
        reports.append({"name": "shelling", "ok": ok, "failures": [] if ok else [{"order": [list(f) for f in result.order]}]})
    if suite in ("inequalities", "all"):
        reports.append(_facet_inequalities_report(cone))
    if suite in ("closed_forms", "all"):
        reports.append(_closed_forms_report(cone))
    return reports


def _facet_inequalities_report(cone: Cone) -> dict:
    from .ishida import degree_zero_cohomology
    from .cones import face_cone

    if cone.rank != 5:
        return {"name": "facet_inequalities", "ok": True, "failures": [], "skipped": "only meaningful in dimension 5"}
    fl = cone.face_lattice()
    h_sigma = degree_zero_cohomology(cone, 3)
    s1 = s2 = 0
    for fid in fl.by_dim[4]:
        h_facet = degree_zero_cohomology(face_cone(cone, fl.faces[fid]), 3)
        s1 += h_facet[1]
        s2 += h_facet[2]
    failures = []
    if not s1 >= h_sigma[1]:
        failures.append({"inequality": "sum h1(facets) >= h1", "lhs": s1, "rhs": h_sigma[1]})
    if not s2 <= h_sigma[2]:
        failures.append({"inequality": "sum h2(facets) <= h2", "lhs": s2, "rhs": h_sigma[2]})
    return {"name": "facet_inequalities", "ok": not failures, "failures": failures}


def _closed_forms_report(cone: Cone) -> dict:
    applicable = is_cone_over_simplicial(cone) or is_cone_over_simple(cone)
    if not applicable and cone.rank > 6:
        return {"name": "closed_forms", "ok": True, "failures": [], "skipped": "no closed form applies"}
    try:
        ic_multiplicities(cone)  # dispatch cross-checks all applicable routes
    except RuntimeError as exc:
        return {"name": "closed_forms", "ok": False, "failures": [{"error": str(exc)}]}
    return {"name": "closed_forms", "ok": True, "failures": []}


@cli.command()
@click.argument("file", type=click.Path(exists=False), required=False)
@click.option("--suite", type=click.Choice(SUITES), default="all", show_default=True)
@click.option("--random", "random_request", nargs=2, type=int, default=None, metavar="DIM COUNT", help="Verify seeded random cones of the given dimension.")
@click.option("--seed", type=int, default=0, show_default=True)
@with_common
@run
def verify(file, suite, random_request, seed, fmt, output):
    """Run verification suites on a cone file or on seeded random cones."""
    cones: list[tuple[str, Cone]] = []
    if file:
        cone, meta = load_cone_file(file)
        cones.append((meta.get("name") or file, cone))
    if random_request:
        dim, count = random_request
        cap = 8 if dim >= 6 else None
        for i, cone in enumerate(sample_cones(seed, dim, count, max_rays=cap)):
            cones.append((f"random-{dim}d-{i}", cone))
    if not cones:
        raise click.UsageError("provide a cone file and/or --random DIM COUNT")
    results = []
    all_ok = True
    for name, cone in cones:
        reports = _run_suite(cone, suite)
        ok = all(r["ok"] for r in reports)
        all_ok = all_ok and ok
        results.append({"cone": name, "rays": [list(r) for r in cone.rays], "ok": ok, "checks": reports})
    payload = _payload("verify", {}, {"suite": suite, "ok": all_ok, "results": results})
    emit(payload, fmt, output)
    if not all_ok:
        raise VerificationFailure(f"suite '{suite}' reported failures")


def main():
    cli(prog_name="toricish")


if __name__ == "__main__":
    main()
