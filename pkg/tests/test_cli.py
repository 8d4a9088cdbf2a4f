import json

import pytest

from idealsearch.cli import main
from idealsearch.fixtures import demo_poset
from idealsearch.generate import gen_complete_tree
from idealsearch.harness import rows_from_csv
from idealsearch.oracle import Transcript
from idealsearch.poset import Poset


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_chain_file(tmp_path, capsys):
    out_file = tmp_path / "chain.json"
    code, _ = run_cli(capsys, "gen", "--family", "chain", "--n", "5", "--out", str(out_file))
    assert code == 0
    p = Poset.from_json_str(out_file.read_text())
    assert p.height == 5 and p.degree == 1


def test_gen_tree_stdout(capsys):
    code, out = run_cli(capsys, "gen", "--family", "tree", "--l", "2", "--n", "3")
    assert code == 0
    assert Poset.from_json_str(out) == gen_complete_tree(2, 3)


def test_gen_random_deterministic(capsys):
    code, out1 = run_cli(capsys, "gen", "--family", "random", "--l", "3", "--n", "4", "--seed", "9")
    assert code == 0
    _, out2 = run_cli(capsys, "gen", "--family", "random", "--l", "3", "--n", "4", "--seed", "9")
    assert out1 == out2


def test_stats(tmp_path, capsys):
    path = tmp_path / "demo.json"
    path.write_text(demo_poset().to_json_str())
    code, out = run_cli(capsys, "stats", str(path))
    assert code == 0
    stats = json.loads(out)
    assert stats == {
        "nodes": 34,
        "covers": 42,
        "height": 6,
        "degree": 4,
        "pointed": True,
        "ideals": 35,
    }


def test_bound(capsys):
    code, out = run_cli(capsys, "bound", "--k", "2", "--l", "2", "--n", "4")
    assert code == 0
    report = json.loads(out)
    assert report["f_value"] == 7
    assert report["tau_lower"] == 5
    assert report["sandwich_ok"] is True


def test_solve_exact(tmp_path, capsys):
    path = tmp_path / "tree.json"
    path.write_text(gen_complete_tree(2, 3).to_json_str())
    code, out = run_cli(capsys, "solve-exact", str(path), "--k", "2")
    assert code == 0
    assert json.loads(out) == {"q": 4, "nodes": 7, "k": 2}


def test_solve_exact_too_large(tmp_path, capsys):
    path = tmp_path / "big.json"
    path.write_text(gen_complete_tree(2, 5).to_json_str())
    code, _ = run_cli(capsys, "solve-exact", str(path), "--k", "2")
    assert code == 1


def test_decision_tree(tmp_path, capsys):
    path = tmp_path / "chain.json"
    run_cli(capsys, "gen", "--family", "chain", "--n", "2", "--out", str(path))
    code, out = run_cli(capsys, "decision-tree", str(path), "--k", "1")
    assert code == 0
    tree = json.loads(out)
    assert tree["query"] == 1
    assert tree["no"]["query"] == 0


def test_simulate_transcript(tmp_path, capsys):
    path = tmp_path / "demo.json"
    path.write_text(demo_poset().to_json_str())
    code, out = run_cli(capsys, "simulate", str(path), "--k", "3", "--ideal", "27")
    assert code == 0
    transcript = Transcript.from_json_str(out)
    assert transcript.result.generator == 27
    assert transcript.total_queries == 6
    assert transcript.positive_queries == 3


def test_simulate_empty_and_derive(tmp_path, capsys):
    path = tmp_path / "demo.json"
    path.write_text(demo_poset().to_json_str())
    code, plain = run_cli(capsys, "simulate", str(path), "--k", "2", "--ideal", "empty")
    assert code == 0
    code, derived = run_cli(
        capsys, "simulate", str(path), "--k", "2", "--ideal", "empty", "--derive"
    )
    assert code == 0
    t_plain = Transcript.from_json_str(plain)
    t_derived = Transcript.from_json_str(derived)
    assert t_plain.result.is_empty and t_derived.result.is_empty
    assert t_derived.consulted_queries <= t_plain.total_queries


def test_worst_case(tmp_path, capsys):
    path = tmp_path / "chain.json"
    run_cli(capsys, "gen", "--family", "chain", "--n", "10", "--out", str(path))
    code, out = run_cli(capsys, "worst-case", str(path), "--k", "1")
    assert code == 0
    assert json.loads(out) == {
        "worst_case": 10,
        "witness": {"kind": "empty"},
        "nodes": 10,
        "k": 1,
    }


def test_sweep_csv(tmp_path, capsys):
    out_file = tmp_path / "rows.csv"
    code, _ = run_cli(
        capsys, "sweep", "--l", "2", "--k", "2", "--n-max", "5", "--out", str(out_file)
    )
    assert code == 0
    text = out_file.read_text()
    assert text.splitlines()[0] == "l,k,n,tree_size,f,tau,m_growth,M_growth,worst_case,exact_q"
    rows = rows_from_csv(text)
    assert len(rows) == 5


def test_verify(capsys):
    code, out = run_cli(capsys, "verify", "--node-cap", "12", "--k-max", "2", "--seeds", "10")
    assert code == 0
    report = json.loads(out)
    assert report["violations"] == []
    assert report["runs"] > 100


def test_identities(capsys):
    code, out = run_cli(capsys, "identities", "--grid-max", "40")
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == []
    assert report["checks"] > 10000


def test_missing_file(capsys):
    code, _ = run_cli(capsys, "stats", "/nonexistent/poset.json")
    assert code == 1
