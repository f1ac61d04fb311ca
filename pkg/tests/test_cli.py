import json
import math

import pytest

from sesquipoly.cli import main


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text("0 1\n1 2\n2 0\n")
    return str(path)


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.json"
    edges = [[i, j] for i in range(4) for j in range(i + 1, 4)]
    path.write_text(json.dumps({"n": 4, "edges": edges}))
    return str(path)


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("0 1\n1 2\n2 3\n3 0\n")
    return str(path)


@pytest.fixture
def empty6_file(tmp_path):
    path = tmp_path / "e6.txt"
    path.write_text("n 6\n")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestExact:
    def test_k3_point_value(self, capsys, k3_file):
        code, out = run(capsys, ["exact", "--graph", k3_file, "--x", "2,0",
                                 "--y", "-1,0", "--z", "-2,0"])
        assert code == 0
        data = json.loads(out)
        assert data["value"] == [0.0, 0.0]

    def test_k4_terms(self, capsys, k4_file):
        code, out = run(capsys, ["exact", "--graph", k4_file])
        assert code == 0
        data = json.loads(out)
        assert len(data["terms"]) == 5
        last = data["terms"][-1]
        assert (last["v"], last["e"], last["c"], last["coef"]) == (0, 0, 1, "3")

    def test_empty_graph_single_term(self, capsys, tmp_path):
        path = tmp_path / "e3.txt"
        path.write_text("n 3\n")
        code, out = run(capsys, ["exact", "--graph", str(path)])
        assert code == 0
        data = json.loads(out)
        assert data["terms"] == [{"v": 3, "e": 0, "c": 0, "coef": "1"}]

    def test_specializations_flag(self, capsys, k3_file):
        code, out = run(capsys, ["exact", "--graph", k3_file, "--specializations"])
        data = json.loads(out)
        assert data["char_poly"] == ["1", "0", "-3", "-2"]
        assert data["matching_poly"] == ["1", "0", "-3", "0"]

    def test_enum_cap_exceeded(self, capsys, tmp_path):
        path = tmp_path / "big.txt"
        path.write_text("\n".join(f"{i} {i+1}" for i in range(20)))
        code, out = run(capsys, ["exact", "--graph", str(path)])
        assert code == 3
        assert json.loads(out)["error"] == "cap-exceeded"

    def test_parse_error_exit_code(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 1\n1 1\n")
        code, out = run(capsys, ["exact", "--graph", str(path)])
        assert code == 1
        data = json.loads(out)
        assert data["error"] == "parse-error"
        assert "line 2" in data["detail"]
        assert "bad.txt" in data["detail"]


class TestRegion:
    def test_inside_point(self, capsys, c4_file):
        code, out = run(capsys, ["region", "--graph", c4_file, "--delta", "3",
                                 "--x", "20,0", "--y", "-1,0", "--z", "0.1,0",
                                 "--a", str(math.log(2))])
        assert code == 0
        data = json.loads(out)
        assert data["certificate"]["inside"] is True
        assert data["certificate"]["lhs"] == pytest.approx(1.025)

    def test_degree_two_budget_clamps(self, capsys, c4_file):
        code, out = run(capsys, ["region", "--graph", c4_file,
                                 "--x", "20,0", "--y", "-1,0",
                                 "--a", str(math.log(2))])
        assert code == 0
        data = json.loads(out)
        assert data["delta"] == 2
        assert data["z_max_at_a"] == 0.0
        assert data["certificate"]["inside"] is False
        assert data["certificate"]["failed"] == "main-inequality"

    def test_zero_activities_inside(self, capsys):
        code, out = run(capsys, ["region", "--delta", "3", "--x", "20,0"])
        assert code == 0
        data = json.loads(out)
        assert data["certificate"]["inside"] is True
        assert data["certificate"]["lhs"] == 0.0

    def test_degree_below_two_needs_override(self, capsys, tmp_path):
        path = tmp_path / "p2.txt"
        path.write_text("0 1\n")
        code, out = run(capsys, ["region", "--graph", str(path), "--x", "20,0"])
        assert code == 1
        code, out = run(capsys, ["region", "--graph", str(path), "--x", "20,0",
                                 "--delta", "2"])
        assert code == 0

    def test_delta_below_true_degree_rejected(self, capsys, k4_file):
        code, out = run(capsys, ["region", "--graph", k4_file, "--x", "20,0",
                                 "--delta", "2"])
        assert code == 1

    def test_girth_refine(self, capsys, c4_file):
        code, out = run(capsys, ["region", "--graph", c4_file, "--delta", "3",
                                 "--x", "10,0", "--z", "2.2,0",
                                 "--a", str(math.log(2)), "--girth-refine"])
        assert code == 0
        data = json.loads(out)
        assert data["girth"] == 4
        assert data["certificate"]["inside"] is True


class TestApprox:
    def test_c4_with_analytic_degree(self, capsys, c4_file):
        code, out = run(capsys, ["approx", "--graph", c4_file, "--delta", "3",
                                 "--x", "20,0", "--y", "-1,0", "--z", "0.1,0",
                                 "--a", str(math.log(2)), "--eps", "0.01"])
        assert code == 0
        data = json.loads(out)
        assert data["rho"] == pytest.approx(20.0 / 5.2)
        assert data["m"] == 4  # n = 4 here; the order-5 plan needs n = 10
        assert data["eta_abs"] <= 0.01
        assert data["plan"]["delta"] == 3

    def test_edgeless_is_pure_power(self, capsys, empty6_file):
        code, out = run(capsys, ["approx", "--graph", empty6_file,
                                 "--x", "20,0", "--eps", "0.1"])
        assert code == 0
        data = json.loads(out)
        assert data["phi_hat"][0] == pytest.approx(20.0**6, rel=1e-12)
        assert data["eta_abs"] <= 1e-12

    def test_outside_region_exit_code_and_reason(self, capsys, c4_file):
        code, out = run(capsys, ["approx", "--graph", c4_file,
                                 "--x", "20,0", "--y", "-1,0",
                                 "--a", str(math.log(2))])
        assert code == 2
        data = json.loads(out)
        assert data["error"] == "point-outside-region"
        assert data["reason"] == "main-inequality"

    def test_m_cap_exit_code(self, capsys, c4_file):
        code, out = run(capsys, ["approx", "--graph", c4_file, "--delta", "3",
                                 "--x", "20,0", "--eps", "0.01", "--m-cap", "1"])
        assert code == 3
        assert json.loads(out)["error"] == "cap-exceeded"

    def test_json_file_output(self, capsys, c4_file, tmp_path):
        report = tmp_path / "report.json"
        code, out = run(capsys, ["approx", "--graph", c4_file, "--delta", "3",
                                 "--x", "20,0", "--z", "0.1,0",
                                 "--json", str(report)])
        assert code == 0
        assert out == ""
        data = json.loads(report.read_text())
        assert data["eta_abs"] <= 0.01

    def test_oracle_skipped_beyond_enum_cap(self, capsys, tmp_path):
        path = tmp_path / "p20.txt"
        path.write_text("\n".join(f"{i} {i+1}" for i in range(19)))
        code, out = run(capsys, ["approx", "--graph", str(path),
                                 "--x", "30,0", "--y", "0.1,0", "--eps", "0.5"])
        assert code == 0
        data = json.loads(out)
        assert "oracle_phi" not in data
        assert "eta_abs" not in data
        assert data["plan"]["n"] == 20

    def test_byte_identical_reruns(self, capsys, c4_file):
        argv = ["approx", "--graph", c4_file, "--delta", "3", "--x", "20,0",
                "--y", "-1,0", "--z", "0.1,0", "--eps", "0.01"]
        _, first = run(capsys, argv)
        _, second = run(capsys, argv)
        assert first == second


class TestValidate:
    def test_quick_suites_pass(self, capsys):
        code, out = run(capsys, ["validate", "--suite", "specialization",
                                 "--suite", "derivative", "--max-n", "5"])
        assert code == 0
        assert "char-specialization: PASS" in out
        assert "derivative-identity: PASS" in out
        assert "0 failed" in out

    def test_approx_only_alias(self, capsys):
        code, out = run(capsys, ["validate", "--suite", "approx-only",
                                 "--points", "1", "--max-n", "4"])
        assert code == 0
        assert "approx-guarantee: PASS" in out
        assert "char-specialization" not in out

    def test_region_suite_small(self, capsys):
        code, out = run(capsys, ["validate", "--suite", "region",
                                 "--samples", "20", "--max-n", "5"])
        assert code == 0
        assert "zero-freeness: PASS" in out
        assert "fp-chain: PASS" in out

    def test_corrupt_graph_surfaces_path_and_line(self, capsys, tmp_path):
        path = tmp_path / "broken.txt"
        path.write_text("0 1\noops\n")
        code, out = run(capsys, ["validate", "--graph", str(path),
                                 "--suite", "derivative"])
        assert code == 1
        data = json.loads(out)
        assert "broken.txt" in data["detail"]
        assert "line 2" in data["detail"]

    def test_unknown_suite_rejected(self, capsys):
        code, out = run(capsys, ["validate", "--suite", "nonsense"])
        assert code == 1
