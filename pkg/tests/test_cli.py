import json

from golden_recipes import GOLDEN
from paritydet.cli import main
from paritydet.core import DetParityAutomaton, DetRabinAutomaton
from paritydet.fullauto import fixed_letters
from paritydet.hoa import parse_hoa


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_rht_n1(capsys):
    assert run(capsys, "count", "rht", "--n", "1")[:2] == (0, "1\n")


def test_count_ht_json(capsys):
    code, out, _ = run(capsys, "count", "ht", "--n", "3", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["schema"] == "paritydet.report/1" and rec["counts"] == {"ht": 31}


def test_count_lir_table(capsys):
    code, out, _ = run(capsys, "count", "lir", "--n", "2", "--c", "3")
    header = out.splitlines()[0].split()
    assert code == 0 and header[:5] == ["n", "c", "total", "spiked", "unspiked"]


def test_determinise_buchi_to_parity(capsys):
    code, out, _ = run(capsys, "determinise", "--to", "parity", "--in", str(GOLDEN / "buchi_npa.hoa"))
    assert code == 0 and isinstance(parse_hoa(out), DetParityAutomaton)
    assert "parity min even" in out


def test_determinise_max_parity_and_rabin(capsys, tmp_path):
    out_file = tmp_path / "d.hoa"
    assert run(capsys, "determinise", "--to", "parity", "--max-parity", "--in", str(GOLDEN / "npa_c4.hoa"),
               "--out", str(out_file))[0] == 0
    assert "parity max even" in out_file.read_text()
    code, out, _ = run(capsys, "determinise", "--to", "rabin", "--in", str(GOLDEN / "rabin1.hoa"))
    assert code == 0 and isinstance(parse_hoa(out), DetRabinAutomaton)


def test_determinise_rejects_deterministic_input(capsys):
    code, _, err = run(capsys, "determinise", "--to", "rabin", "--in", str(GOLDEN / "dra_npa_c3.hoa"))
    assert code == 2 and "nondeterministic" in err


def test_capacity_exit_code(capsys):
    code, _, err = run(capsys, "determinise", "--to", "rabin", "--max-states", "1",
                       "--in", str(GOLDEN / "npa_c4.hoa"))
    assert code == 3 and "1" in err


def test_check_pass_and_counterexample(capsys, tmp_path):
    nd = GOLDEN / "npa_c3.hoa"
    code, out, _ = run(capsys, "check", "--nd", str(nd), "--det", str(GOLDEN / "dra_npa_c3.hoa"))
    assert code == 0 and out.startswith("pass")
    code, out, _ = run(capsys, "check", "--nd", str(nd), "--det", str(GOLDEN / "dpa_npa_c3.hoa"),
                       "--sample", "30", "2", "3", "--seed", "4", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["passed"] and rec["checked"] == 30 and rec["seed"] == 4
    other = GOLDEN / "dra_npa_c4.hoa"  # same alphabet, different language
    code, out, _ = run(capsys, "check", "--nd", str(nd), "--det", str(other))
    assert code == 1 and out.startswith("counterexample")


def test_gen_random_is_reproducible(capsys):
    a = run(capsys, "gen", "--random", "--n", "3", "--c", "4", "--seed", "5")
    b = run(capsys, "gen", "--random", "--n", "3", "--c", "4", "--seed", "5")
    assert a == b and a[0] == 0
    code, out, _ = run(capsys, "gen", "--random", "--kind", "rabin1", "--n", "2", "--seed", "1")
    assert code == 0 and "Rabin 1" in out


def test_gen_full(capsys, tmp_path):
    letters = tmp_path / "letters.json"
    letters.write_text(json.dumps([{"name": str(a), "cells": a.to_json()} for a in fixed_letters(2, 3)]))
    code, out, _ = run(capsys, "gen", "--full", "--n", "2", "--c", "3", "--letters", str(letters))
    assert code == 0 and out == (GOLDEN / "full_p2_3.hoa").read_text()


def test_dot(capsys):
    code, out, _ = run(capsys, "dot", "--in", str(GOLDEN / "buchi_two_state.hoa"))
    assert code == 0 and out.startswith("digraph")


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "count", "rht")[0] == 2
    assert run(capsys, "gen", "--random", "--letters", "x")[0] == 2
    assert run(capsys, "determinise", "--to", "rabin", "--in", "/nonexistent.hoa")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.hoa"
    bad.write_text("HOA: v1\nStates: x\n--BODY--\n--END--\n")
    code, _, err = run(capsys, "dot", "--in", str(bad))
    assert code == 2 and "line 2" in err
