import json

import pytest
from click.testing import CliRunner

from main import main


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def space_file(tmp_path):
    def write(N, d, basis):
        path = tmp_path / f"space_{N}_{d}_{len(list(tmp_path.iterdir()))}.json"
        path.write_text(json.dumps({"N": N, "d": d, "basis": basis}), encoding="utf-8")
        return str(path)

    return write


def lines(result):
    return [line for line in result.stdout.splitlines() if line.strip()]


def test_no_command_prints_help(runner):
    result = runner.invoke(main, [])
    assert result.exit_code == 0
    assert "strata" in result.stdout


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "0.1.0" in result.stdout


def test_strata_json(runner):
    result = runner.invoke(main, ["strata", "--N", "2", "--d", "4"])
    assert result.exit_code == 0, result.output
    poset = json.loads(result.stdout)
    assert poset["family"] == "A"
    assert len(poset["nodes"]) == 7
    assert len(poset["edges"]) == 9
    assert poset["dashed_edges"] == []
    assert poset["nodes"][0] == {"label": "((1,0),(1,0),(1,0),(1,0))", "n": 4, "dimension": 4, "empty": False}
    assert poset["nodes"][-1]["label"] == "((2,2))"


def test_strata_json_with_empty_strata(runner):
    result = runner.invoke(main, ["strata", "--N", "2", "--d", "4", "--include-empty"])
    assert result.exit_code == 0, result.output
    poset = json.loads(result.stdout)
    assert len(poset["nodes"]) == 11
    assert sum(node["empty"] for node in poset["nodes"]) == 4
    assert len(poset["edges"]) == 9
    assert len(poset["dashed_edges"]) == 9


def test_strata_bc_json(runner):
    result = runner.invoke(main, ["strata", "--family", "bc", "--N", "4", "--d", "6"])
    assert result.exit_code == 0, result.output
    poset = json.loads(result.stdout)
    assert poset["family"] == "BC"
    assert len(poset["nodes"]) == 9
    assert len(poset["edges"]) == 13
    assert poset["nodes"][-1]["label"] == "((0,0)_2)"


def test_strata_dot(runner):
    result = runner.invoke(main, ["strata", "--N", "2", "--d", "4", "--format", "dot", "--include-empty"])
    assert result.exit_code == 0, result.output
    assert "digraph Gr_2_4 {" in result.stdout
    assert "rank=same" in result.stdout
    assert "style=dashed" in result.stdout
    assert "n0 -> n1" in result.stdout


def test_strata_table(runner):
    result = runner.invoke(main, ["strata", "--N", "2", "--d", "4", "--format", "table"])
    assert result.exit_code == 0, result.output
    assert "Gr(2,4)" in result.stdout
    assert "Strata: 7" in result.stdout
    assert "Edges: 9" in result.stdout


def test_strata_budget_and_family_errors(runner):
    result = runner.invoke(main, ["strata", "--N", "2", "--d", "4", "--max-cells", "3"])
    assert result.exit_code == 2
    assert "exceeds the budget" in result.stderr
    result = runner.invoke(main, ["strata", "--family", "D", "--N", "2", "--d", "4"])
    assert result.exit_code == 2
    assert "Unknown family" in result.stderr


def test_strata_budget_from_environment(runner, monkeypatch):
    monkeypatch.setenv("GRSTRAT_MAX_CELLS", "2")
    assert runner.invoke(main, ["strata", "--N", "2", "--d", "4"]).exit_code == 2


def test_closure(runner):
    result = runner.invoke(main, ["closure", "--N", "2", "--d", "4", "--label", "2,1;1,0"])
    assert result.exit_code == 0, result.output
    assert lines(result) == ["((2,1),(1,0))", "((2,2))"]


def test_closure_bc_label(runner):
    result = runner.invoke(main, ["closure", "--family", "BC", "--N", "4", "--d", "6", "--label", "0,1_1;0,1"])
    assert result.exit_code == 0, result.output
    assert lines(result) == ["((0,1)_1,(0,1))", "((0,0)_2)"]


def test_closure_rejects_bad_labels(runner):
    result = runner.invoke(main, ["closure", "--N", "2", "--d", "4", "--label", " ; "])
    assert result.exit_code == 2


def test_closure_rejects_labels_that_are_not_strata(runner):
    result = runner.invoke(main, ["closure", "--N", "2", "--d", "4", "--label", "2,0;1,1"])
    assert result.exit_code == 2
    assert "not a stratum" in result.stderr


def test_top(runner):
    result = runner.invoke(main, ["top", "--N", "5", "--d", "8", "--max-cells", "15"])
    assert result.exit_code == 0, result.output
    assert set(lines(result)) == {
        "((0,0)_1,(1,0),(1,0)) 3",
        "((0,1),(1,0),(1,0)) 3",
        "((0,0)_1,(0,1),(0,1)) 3",
        "((0,0)_1,(0,0)_1,(0,0)_1) 1",
    }


def test_fibers(runner):
    result = runner.invoke(main, ["fibers", "--N", "2", "--d", "4"])
    assert result.exit_code == 0, result.output
    output = lines(result)
    assert [line.split(":")[0] for line in output] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    assert output[0] == "4: ((2,2))"
    assert output[-1] == "1,1,1,1: ((1,0),(1,0),(1,0),(1,0))"


def test_diagnose(runner):
    result = runner.invoke(main, ["diagnose", "--N", "2", "--d", "4"])
    assert result.exit_code == 0, result.output
    assert result.stdout == ""


def test_diagnose_larger_grassmannian(runner):
    result = runner.invoke(main, ["diagnose", "--N", "3", "--d", "5"])
    assert result.exit_code == 0, result.output
    assert result.stdout == ""


def test_invdim(runner):
    result = runner.invoke(main, ["invdim", "--N", "2", "--weights", "1,0;1,0;1,0;1,0"])
    assert result.stdout.strip() == "2"
    result = runner.invoke(main, ["invdim", "--family", "BC", "--type", "B", "--rank", "2", "--weights", "0,1;0,1;0,1;0,1"])
    assert result.stdout.strip() == "3"
    result = runner.invoke(main, ["invdim", "--family", "BC", "--type", "C", "--rank", "2", "--weights", "1,0;0,1;0,1"])
    assert result.stdout.strip() == "0"


def test_invdim_needs_its_algebra(runner):
    assert runner.invoke(main, ["invdim", "--weights", "1,0;1,0"]).exit_code == 2
    assert runner.invoke(main, ["invdim", "--family", "BC", "--weights", "1,0"]).exit_code == 2
    result = runner.invoke(main, ["invdim", "--family", "BC", "--type", "B", "--rank", "2", "--weights", "1,0,0"])
    assert result.exit_code == 2


def test_tensor(runner):
    result = runner.invoke(main, ["tensor", "--type", "B", "--rank", "2", "--weights", "1,0;1,0"])
    assert result.exit_code == 0, result.output
    assert lines(result) == ["2,0: 1", "0,2: 1", "0,0: 1"]
    assert runner.invoke(main, ["tensor", "--type", "E", "--rank", "2", "--weights", "1,0"]).exit_code == 2


def test_degree(runner):
    assert runner.invoke(main, ["degree", "--N", "2", "--d", "5"]).stdout.strip() == "5"
    assert runner.invoke(main, ["degree", "--N", "3", "--d", "6"]).stdout.strip() == "42"
    assert runner.invoke(main, ["degree", "--family", "BC", "--N", "4", "--d", "7"]).stdout.strip() == "14"
    result = runner.invoke(main, ["degree", "--family", "BC", "--N", "5", "--d", "8"])
    assert result.exit_code == 2
    assert "even N" in result.stderr


def test_assoc(runner):
    result = runner.invoke(main, ["assoc", "--type", "B", "--rank", "2", "--weight", "0,1", "--N", "4"])
    assert result.stdout.strip() == "1,1,0,0"
    result = runner.invoke(main, ["assoc", "--type", "C", "--rank", "2", "--weight", "0,1", "--k", "1", "--N", "5"])
    assert result.stdout.strip() == "3,3,2,1,1"
    result = runner.invoke(main, ["assoc", "--type", "C", "--rank", "2", "--weight", "0,1", "--N", "4"])
    assert result.exit_code == 2


def test_space_wronskian(runner, space_file):
    result = runner.invoke(main, ["space", "wronskian", "--in", space_file(3, 4, [[1], [0, 1], [0, 0, 0, 1]])])
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "x"


def test_space_exponents(runner, space_file):
    result = runner.invoke(main, ["space", "exponents", "--in", space_file(2, 3, [[1], [0, 0, 1]])])
    assert result.exit_code == 0, result.output
    reports = json.loads(result.stdout)
    assert reports == [
        {"point": "0", "exponents": [0, 2], "partition": "1,0"},
        {"point": "inf", "exponents": [0, 2], "partition": ""},
    ]
    result = runner.invoke(main, ["space", "exponents", "--in", space_file(2, 3, [[1], [0, 0, 1]]), "--point", "1:0,0"])
    assert json.loads(result.stdout) == [{"point": "1", "exponents": [0, 1], "partition": "0,0"}]


def test_space_dual(runner, space_file):
    result = runner.invoke(main, ["space", "dual", "--in", space_file(3, 4, [[1], [0, 1], [0, 0, 0, 1]])])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout) == {"N": 3, "d": 4, "basis": [["1"], ["0", "0", "1"], ["0", "0", "0", "1"]]}


def test_space_selfdual(runner, space_file):
    result = runner.invoke(main, ["space", "selfdual", "--in", space_file(2, 3, [["1"], ["0", "0", "1"]])])
    assert json.loads(result.stdout) == {"status": "pure", "g": ["1"]}
    result = runner.invoke(main, ["space", "selfdual", "--in", space_file(2, 3, [[0, 1], [0, 0, 1]])])
    assert json.loads(result.stdout) == {"status": "self_dual", "g": ["0", "1"]}
    result = runner.invoke(main, ["space", "selfdual", "--in", space_file(3, 4, [[1], [0, 1], [0, 0, 0, 1]])])
    assert json.loads(result.stdout) == {"status": "not_self_dual"}


def test_space_selfdual_with_stratum_data(runner, space_file):
    path = space_file(2, 3, [[1], [0, 0, 1]])
    result = runner.invoke(main, ["space", "selfdual", "--in", path, "--point", "0:1,0", "--point", "inf:1,0"])
    assert json.loads(result.stdout)["status"] == "pure"
    result = runner.invoke(main, ["space", "selfdual", "--in", path, "--point", "1:1,0", "--point", "inf:1,0"])
    assert result.exit_code == 3
    assert "MembershipFailed" in result.stderr


def test_space_square_and_reduce(runner, space_file):
    result = runner.invoke(main, ["space", "square", "--in", space_file(2, 3, [[1], [0, 1]])])
    assert json.loads(result.stdout) == {"N": 3, "d": 5, "basis": [["1"], ["0", "1"], ["0", "0", "1"]]}
    even = space_file(3, 5, [[1], [1, 0, 1], [1, 0, 2, 0, 1]])
    assert runner.invoke(main, ["space", "reduce", "--in", even]).stdout.strip() == "x"
    assert runner.invoke(main, ["space", "reduce", "--in", even, "--N", "2"]).exit_code == 2
    result = runner.invoke(main, ["space", "reduce", "--in", space_file(3, 4, [[1], [0, 1], [0, 0, 0, 1]])])
    assert result.exit_code == 3
    assert "NotAPower" in result.stderr


def test_space_dx(runner, space_file):
    path = space_file(2, 3, [[1], [0, 0, 1]])
    result = runner.invoke(main, ["space", "dx", "--in", path])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report == {
        "order": 2,
        "coefficients": [
            {"numerator": ["-1"], "denominator": ["0", "1"]},
            {"numerator": [], "denominator": ["1"]},
        ],
    }
    factorized = runner.invoke(main, ["space", "dx", "--in", path, "--factorized"])
    assert json.loads(factorized.stdout) == report


def test_space_miura(runner, space_file):
    result = runner.invoke(main, ["space", "miura", "--in", space_file(2, 3, [[1], [0, 0, 1]])])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["matches_fundamental_operator"] is True
    assert runner.invoke(main, ["space", "miura", "--in", space_file(2, 3, [[0, 1], [0, 0, 1]])]).exit_code == 2


@pytest.mark.parametrize(
    "N, d, basis, code, message",
    [
        (2, 3, [[0, 1], [0, 2]], 3, "DependentBasis"),
        (2, 4, [[1], [0, 3, 0, 1]], 3, "UnresolvedSingularity"),
        (2, 3, [[1], ["0.5", 1]], 2, "Invalid space file"),
        (2, 3, [[1]], 2, "Invalid space file"),
        (2, 3, [[1], [0, 0, 0, 1]], 2, "degree"),
    ],
)
def test_space_errors(runner, space_file, N, d, basis, code, message):
    result = runner.invoke(main, ["space", "dual", "--in", space_file(N, d, basis)])
    assert result.exit_code == code
    assert message in result.stderr


def test_commands_write_a_log_file(runner, tmp_path):
    runner.invoke(main, ["degree", "--N", "2", "--d", "4"])
    assert list((tmp_path / "logs").glob("degree_*.log"))
