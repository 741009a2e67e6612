import json
from importlib import resources

import pytest

from bettisplit.cli import main


def data_path(name):
    return str(resources.files("bettisplit") / "data" / name)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestBettiCommand:
    def test_rp2_diagram_char2(self, capsys):
        code, out, _ = run(capsys, "betti", "--char", "2", data_path("rp2.ideal"))
        assert code == 0
        assert "total: 10 15  7  1" in " ".join(out.split()).replace("total: ", "total: ") or "10 15 7 1" in " ".join(out.split())

    def test_serialized_form(self, capsys):
        code, out, _ = run(capsys, "betti", "--json", data_path("rp2.ideal"))
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "betti field=0 convention=ideal"
        assert all(len(l.split()) == 3 for l in lines[1:])
        assert sum(int(l.split()[2]) for l in lines[1:] if l.split()[0] == "0") == 10

    def test_taylor_route_agrees(self, capsys, tmp_path):
        path = write(tmp_path, "k.ideal", "vars 2\nx1\nx2\n")
        _, out_a, _ = run(capsys, "betti", "--json", path)
        _, out_b, _ = run(capsys, "betti", "--json", "--taylor", path)
        assert out_a == out_b

    def test_nonprime_char_rejected(self, capsys):
        code, _, err = run(capsys, "betti", "--char", "6", data_path("rp2.ideal"))
        assert code == 2
        assert "error" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "betti", "no_such_file.ideal")
        assert code == 2

    def test_bad_ideal_file(self, capsys, tmp_path):
        path = write(tmp_path, "bad.ideal", "vars 2\nz9\n")
        code, _, err = run(capsys, "betti", path)
        assert code == 2
        assert "z9" in err

    def test_lattice_guard(self, capsys, tmp_path):
        gens = "\n".join(f"x{i}" for i in range(1, 17))
        path = write(tmp_path, "big.ideal", f"vars 16\n{gens}\n")
        code, _, err = run(capsys, "betti", path)
        assert code == 2
        assert "force" in err


class TestIntersectCommand:
    def test_paper_pair(self, capsys, tmp_path):
        j = write(tmp_path, "j.ideal", "vars 5\nx1*x2*x3\nx1*x3*x5\nx1*x4*x5\n")
        k = write(tmp_path, "k.ideal", "vars 5\nx2*x3*x4\nx2*x4*x5\n")
        code, out, _ = run(capsys, "intersect", j, k)
        assert code == 0
        assert set(out.strip().splitlines()[1:]) == {"x1*x2*x3*x4", "x1*x2*x4*x5"}


class TestSplitCommands:
    def test_split_scan_rp2_char0(self, capsys):
        code, out, _ = run(capsys, "split-scan", "--char", "0", data_path("rp2.ideal"))
        assert code == 0
        assert "splitting variables: none" in out

    def test_split_scan_json_char2(self, capsys):
        code, out, _ = run(capsys, "split-scan", "--char", "2", "--json", data_path("rp2.ideal"))
        reports = json.loads(out)
        assert [r["variable"] for r in reports] == [1, 2, 3, 4, 5, 6]
        assert all(r["betti_splitting"] for r in reports)
        assert all(r["field"] == 2 for r in reports)

    def test_split_check_exit_codes(self, capsys):
        code, out, _ = run(capsys, "split-check", data_path("rp2.ideal"), "--var", "1")
        assert code == 1
        code, out, _ = run(capsys, "split-check", "--char", "2", data_path("rp2.ideal"), "--var", "1")
        assert code == 0

    def test_split_check_user_partition(self, capsys, tmp_path):
        part = write(tmp_path, "part.ideal", "vars 5\nx1*x2*x3\nx1*x3*x5\nx1*x4*x5\n")
        code, out, _ = run(capsys, "split-check", data_path("ek_absent.ideal"), "--part", part, "--json")
        assert code == 0
        rep = json.loads(out)
        assert rep["variable"] == "user"
        assert rep["betti_splitting"] is True

    def test_split_check_degenerate_partition(self, capsys, tmp_path):
        path = write(tmp_path, "i.ideal", "vars 3\nx1*x2\nx1*x3\n")
        code, _, err = run(capsys, "split-check", path, "--var", "1")
        assert code == 2

    def test_ek_check_absent(self, capsys):
        code, out, _ = run(capsys, "ek-check", data_path("ek_absent.ideal"), "--var", "1")
        assert code == 1
        assert out.startswith("absent")
        assert "witness" in out

    def test_ek_check_found_json(self, capsys, tmp_path):
        path = write(tmp_path, "p4.ideal", "vars 4\nx1*x2\nx2*x3\nx3*x4\n")
        code, out, _ = run(capsys, "ek-check", path, "--var", "2", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "found"
        assert payload["function"]


class TestGraphCommands:
    def test_edge_ideal(self, capsys, tmp_path):
        path = write(tmp_path, "c4.graph", "graph 4\n1 2\n2 3\n3 4\n1 4\n")
        code, out, _ = run(capsys, "edge-ideal", path)
        assert code == 0
        assert set(out.strip().splitlines()[1:]) == {"x1*x2", "x2*x3", "x3*x4", "x1*x4"}

    def test_edge_ideal_rejects_ideal_file(self, capsys):
        code, _, err = run(capsys, "edge-ideal", data_path("rp2.ideal"))
        assert code == 2

    def test_cover_ideal_bigraph_variable_order(self, capsys, tmp_path):
        path = write(tmp_path, "m2.bigraph", "bigraph 2\n1 1\n2 2\n")
        code, out, _ = run(capsys, "cover-ideal", path)
        assert code == 0
        # x1, x2 then y1 -> x3, y2 -> x4
        assert set(out.strip().splitlines()[1:]) == {"x1*x2", "x1*x4", "x2*x3", "x3*x4"}

    def test_cover_betti(self, capsys, tmp_path):
        path = write(tmp_path, "m2.bigraph", "bigraph 2\n1 1\n2 2\n")
        code, out, _ = run(capsys, "cover-betti", path, "--json")
        assert code == 0
        assert json.loads(out) == [4, 4, 1]

    def test_cm_gen_deterministic_and_valid(self, capsys):
        code, out1, _ = run(capsys, "cm-gen", "--n", "4", "--density", "0.5", "--seed", "11")
        assert code == 0
        _, out2, _ = run(capsys, "cm-gen", "--n", "4", "--density", "0.5", "--seed", "11")
        assert out1 == out2
        _, out3, _ = run(capsys, "cm-gen", "--n", "4", "--density", "0.5", "--seed", "12")
        assert out1 != out3

    def test_cm_check(self, capsys, tmp_path):
        path = write(tmp_path, "m.bigraph", "bigraph 2\n1 1\n2 2\n1 2\n")
        code, out, _ = run(capsys, "cm-check", path, "--json")
        assert code == 0
        rep = json.loads(out)
        assert rep["valid_labeling"] and rep["pd_reg_a_match"]

    def test_cm_check_invalid(self, capsys, tmp_path):
        path = write(tmp_path, "bad.bigraph", "bigraph 2\n1 1\n1 2\n")
        code, out, _ = run(capsys, "cm-check", path)
        assert code == 1


class TestCharScanCommand:
    def test_rp2(self, capsys):
        code, out, _ = run(capsys, "char-scan", data_path("rp2.ideal"), "--char", "2", "--char", "3")
        assert code == 0
        assert "p=3: no differences" in out
        assert "degree=x1*x2*x3*x4*x5*x6" in out

    def test_char_independent(self, capsys):
        code, out, _ = run(capsys, "char-scan", data_path("char_independent_7.ideal"), "--char", "2")
        assert code == 0
        assert "no differences" in out

    def test_rejects_char_zero(self, capsys):
        code, _, err = run(capsys, "char-scan", data_path("rp2.ideal"), "--char", "0")
        assert code == 2


class TestBorelCommand:
    def test_closure_of_seeds(self, capsys):
        code, out, _ = run(capsys, "borel", data_path("borel_seeds.ideal"))
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "vars 6"
        assert len(lines) == 1 + 38  # the closure has 38 minimal generators
        assert "x1*x4*x5*x6" in lines

    def test_determinism(self, capsys):
        _, out1, _ = run(capsys, "borel", data_path("borel_seeds.ideal"))
        _, out2, _ = run(capsys, "borel", data_path("borel_seeds.ideal"))
        assert out1 == out2
