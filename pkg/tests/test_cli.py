import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from toricish.cli import cli

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, [str(a) for a in args], catch_exceptions=False)


class TestFaces:
    def test_quadric(self, runner):
        res = invoke(runner, "faces", DATA / "quadric.json")
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data["f_vector"] == [1, 4, 4, 1]
        preds = data["predicates"]
        assert preds["cone_over_simplicial"] and preds["cone_over_simple"]
        assert not preds["simplicial"]

    def test_orthant_all_predicates(self, runner):
        res = invoke(runner, "faces", DATA / "orthant.json")
        data = json.loads(res.output)
        assert data["predicates"]["simplicial"]
        assert all(data["predicates"]["simple_in_dim"].values())

    def test_binomial_via_dual_rays(self, runner):
        res = invoke(runner, "faces", DATA / "binomial_hypersurface.json")
        data = json.loads(res.output)
        assert data["f_vector"] == [1, 9, 18, 15, 6, 1]

    def test_golden_bytes(self, runner):
        res = invoke(runner, "faces", DATA / "binomial_hypersurface.json")
        assert res.output == (GOLDEN / "binomial_faces.json").read_text()


class TestIshidaCmd:
    def test_octahedron_l3(self, runner):
        res = invoke(runner, "ishida", DATA / "octahedron.json", "--l", 3)
        data = json.loads(res.output)
        assert data["cohomology"] == [0, 0, 2, 0]

    def test_face_class(self, runner):
        res = invoke(runner, "ishida", DATA / "octahedron.json", "--l", 3, "--face", "0,2,4")
        data = json.loads(res.output)
        assert data["face"] == [0, 2, 4]
        # simplicial facet class: everything vanishes at l = 3 (C(1, 3) = 0)
        assert data["face_class_cohomology"] == [0, 0, 0, 0]
        res = invoke(runner, "ishida", DATA / "octahedron.json", "--l", 1, "--face", "0,2,4")
        data = json.loads(res.output)
        assert data["face_class_cohomology"] == [1, 0]

    def test_bad_degree_exits_3(self, runner):
        res = invoke(runner, "ishida", DATA / "octahedron.json", "--l", 9)
        assert res.exit_code == 3


class TestExtCmd:
    def test_octahedron(self, runner):
        res = invoke(runner, "ext", DATA / "octahedron.json")
        data = json.loads(res.output)
        assert data["lcdef"] == 1
        assert data["depth"]["2"] == "maximal"
        entries = {(e["i"], e["k"]): e["dim"] for e in data["assembled_positive_ext"]}
        assert entries[(1, 3)] == 2 and entries[(2, 1)] == 2


class TestLcdefCmd:
    @pytest.mark.parametrize(
        "name,expected",
        [("quadric.json", 0), ("octahedron.json", 1), ("cube.json", 0)],
    )
    def test_trichotomy(self, runner, name, expected):
        res = invoke(runner, "lcdef", DATA / name)
        assert json.loads(res.output)["lcdef"] == expected


class TestDecomposeCmd:
    def test_quadric_golden(self, runner):
        res = invoke(runner, "decompose", DATA / "quadric.json")
        assert res.output == (GOLDEN / "quadric_decompose.json").read_text()

    def test_cube(self, runner):
        res = invoke(runner, "decompose", DATA / "cube.json")
        data = json.loads(res.output)
        assert data["lcdef"] == 0
        weights = {(r["degree"], r["weight"]) for r in data["rows"]}
        assert (0, 4) in weights and (0, 3) in weights and (0, 2) in weights


class TestGpolyCmd:
    def test_octahedron_golden(self, runner):
        res = invoke(runner, "gpoly", DATA / "octahedron.json")
        assert res.output == (GOLDEN / "octahedron_gpoly.json").read_text()


class TestHodgeCmd:
    def test_binomial_golden(self, runner):
        res = invoke(runner, "hodge", DATA / "binomial_hypersurface.json")
        assert res.output == (GOLDEN / "binomial_hodge.json").read_text()

    def test_square_polytope(self, runner):
        res = invoke(runner, "hodge", DATA / "square_polytope.json")
        data = json.loads(res.output)
        assert data["hodge_du_bois"] == [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
        assert data["hodge_deligne_uv_coefficients"] == [1, 2, 1]

    def test_not_simple_exits_3(self, runner):
        res = invoke(runner, "hodge", DATA / "octahedron.json")
        assert res.exit_code == 3
        assert "not simple" in res.output


class TestShellingCmd:
    def test_quadric(self, runner):
        res = invoke(runner, "shelling", DATA / "quadric.json")
        data = json.loads(res.output)
        assert data["verified"] is True
        assert len(data["order"]) == 4


class TestVerifyCmd:
    def test_file_all_suites(self, runner):
        res = invoke(runner, "verify", DATA / "quadric.json", "--suite", "all")
        assert res.exit_code == 0
        data = json.loads(res.output)
        assert data["ok"] is True
        names = {c["name"] for c in data["results"][0]["checks"]}
        assert {"d_squared", "dualizing_exactness", "surjectivity", "codim_vanishing",
                "link_exactness", "shelling", "facet_inequalities", "closed_forms"} <= names

    def test_random_mode_deterministic(self, runner):
        args = ["verify", "--random", "3", "3", "--seed", "7", "--suite", "d2"]
        a = invoke(runner, *args)
        b = invoke(runner, *args)
        assert a.exit_code == 0 and a.output == b.output

    def test_no_input_is_usage_error(self, runner):
        res = runner.invoke(cli, ["verify"])
        assert res.exit_code == 1

    def test_failure_exits_2(self, runner, monkeypatch):
        from toricish import cli as cli_module
        from toricish.ishida import CheckReport

        monkeypatch.setattr(
            cli_module, "verify_d_squared", lambda cone: CheckReport("d_squared", False, ({"forced": True},))
        )
        res = runner.invoke(cli, ["verify", str(DATA / "quadric.json"), "--suite", "d2"])
        assert res.exit_code == 2


class TestIO:
    def test_byte_stability(self, runner):
        a = invoke(runner, "faces", DATA / "cube.json")
        b = invoke(runner, "faces", DATA / "cube.json")
        assert a.output == b.output

    def test_output_file(self, runner, tmp_path):
        out = tmp_path / "result.json"
        res = invoke(runner, "lcdef", DATA / "quadric.json", "-o", out)
        assert res.exit_code == 0
        assert json.loads(out.read_text())["lcdef"] == 0

    def test_table_format(self, runner):
        res = invoke(runner, "hodge", DATA / "binomial_hypersurface.json", "--format", "table")
        assert "q\\p" in res.output
        assert "betti 1 0 1 0 2 4 5 0 1" in res.output

    def test_missing_file_exits_3(self, runner):
        res = invoke(runner, "lcdef", "/nonexistent/cone.json")
        assert res.exit_code == 3

    def test_usage_error_exits_1(self, runner):
        res = runner.invoke(cli, ["faces"])
        assert res.exit_code == 1

    def test_malformed_json_exits_3(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        res = runner.invoke(cli, ["faces", str(bad)])
        assert res.exit_code == 3

    def test_two_input_forms_rejected(self, runner, tmp_path):
        bad = tmp_path / "two.json"
        bad.write_text(json.dumps({"lattice_rank": 2, "rays": [[1, 0]], "dual_rays": [[1, 0]]}))
        res = runner.invoke(cli, ["faces", str(bad)])
        assert res.exit_code == 3
        assert "exactly one" in res.output

    def test_all_three_input_forms(self, runner, tmp_path):
        # same combinatorics entered three ways: square cone
        rays = {"lattice_rank": 3, "rays": [[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]]}
        dual = {"lattice_rank": 3, "dual_rays": [[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]]}
        poly = {"lattice_rank": 2, "polytope_vertices": [[1, 0], [0, 1], [-1, 0], [0, -1]]}
        f_vectors = []
        for i, payload in enumerate((rays, dual, poly)):
            path = tmp_path / f"in{i}.json"
            path.write_text(json.dumps(payload))
            res = invoke(runner, "faces", path)
            f_vectors.append(json.loads(res.output)["f_vector"])
        assert f_vectors[0] == f_vectors[1] == f_vectors[2] == [1, 4, 4, 1]
