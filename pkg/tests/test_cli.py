import json
import os
import re

import pytest

from taured.cli import main
from taured.emit import emit_dot
from taured.tilting import PosetQuiver


def check_dot_grammar(text: str) -> None:
    """Minimal DOT digraph grammar: header, node/edge statements, closing brace."""
    lines = [l.strip() for l in text.strip().splitlines()]
    assert re.fullmatch(r"digraph\s+\w+\s*\{", lines[0])
    assert lines[-1] == "}"
    node = re.compile(r'"[^"]+"\s*(\[[^\]]*\])?;')
    edge = re.compile(r'"[^"]+"\s*->\s*"[^"]+"\s*(\[[^\]]*\])?;')
    for l in lines[1:-1]:
        if not l:
            continue
        assert node.fullmatch(l) or edge.fullmatch(l), f"bad DOT statement: {l!r}"


def test_emit_dot_empty():
    text = emit_dot(PosetQuiver((), ()))
    check_dot_grammar(text)
    assert "->" not in text


def test_emit_dot_attributes():
    pq = PosetQuiver(("1+3", "0"), ((0, 1),))
    text = emit_dot(pq, double_border={"1+3"}, highlight={"1+3"})
    check_dot_grammar(text)
    assert "peripheries=2" in text
    assert "fillcolor=red" in text
    assert "⊕" in text
    ascii_text = emit_dot(pq, ascii_labels=True)
    assert "⊕" not in ascii_text


def test_enumerate_json(a3sq_file, capsys):
    assert main(["enumerate", a3sq_file, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert list(payload.keys()) == ["algebra", "indecomposables", "stpairs", "hasse"]
    assert payload["algebra"] == "a3sq"
    assert len(payload["indecomposables"]) == 5
    assert len(payload["stpairs"]) == 12
    assert len(payload["hasse"]["edges"]) == 18
    assert sum(1 for p in payload["stpairs"] if p["is_tau_tilting"]) == 3
    for rec in payload["indecomposables"]:
        assert list(rec.keys()) == ["id", "name", "dim_vector"]
    for p in payload["stpairs"]:
        assert list(p.keys()) == ["id", "module_summands", "support_vertices",
                                  "is_tau_tilting"]


def test_enumerate_tau_tilt_only(a3sq_file, capsys):
    assert main(["enumerate", a3sq_file, "--tau-tilt-only", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["stpairs"]) == 3
    assert all(p["is_tau_tilting"] for p in payload["stpairs"])
    assert len(payload["hasse"]["edges"]) == 2


def test_enumerate_table(a3sq_file, capsys):
    assert main(["enumerate", a3sq_file]) == 0
    out = capsys.readouterr().out
    assert "12 pairs" in out
    assert "1/2+2/3+3" in out


def test_enumerate_dot(a3sq_file, capsys):
    assert main(["enumerate", a3sq_file, "--format", "dot"]) == 0
    check_dot_grammar(capsys.readouterr().out)


def test_hasse_golden(a3sq_file, tmp_path, capsys):
    out = tmp_path / "h.dot"
    assert main(["hasse", a3sq_file, "--out", str(out)]) == 0
    text = out.read_text()
    check_dot_grammar(text)
    golden = os.path.join(os.path.dirname(__file__), "golden", "hasse_a3sq.dot")
    with open(golden, "r", encoding="utf-8") as f:
        assert text == f.read()


def test_reduce(a3sq_file, capsys):
    assert main(["reduce", a3sq_file, "--emit-quotient"]) == 0
    out = capsys.readouterr().out
    assert "arrow b 2 3" in out          # the quotient DSL
    assert "extend (1): 1+3" in out      # the boundary family
    assert "[PASS]" in out and "[FAIL]" not in out


def test_reduce_bad_vertex(a3sq_file, capsys):
    assert main(["reduce", a3sq_file, "--vertex", "3"]) == 1


def test_series_table(capsys):
    assert main(["series", "--kind", "A", "--max", "8", "--closed-form"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[-1].split()[:2] == ["8", "34"]


def test_verify_exit_zero(a3sq_file, capsys):
    assert main(["verify", a3sq_file]) == 0
    out = capsys.readouterr().out
    assert "all checks passed" in out
    assert "oracle-equivalence" in out


def test_parse_error_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra x\nvertices 1\narrow a 1 9\n")
    assert main(["enumerate", str(bad)]) == 2
    assert "parse error" in capsys.readouterr().err


def test_missing_file_exit_two(capsys):
    assert main(["enumerate", "/nonexistent/file.alg"]) == 2


def test_field_flag_and_env(a3sq_file, capsys, monkeypatch):
    assert main(["--field", "fp:5", "enumerate", a3sq_file, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["stpairs"]) == 12
    monkeypatch.setenv("TAURED_FIELD", "fp:7")
    assert main(["enumerate", a3sq_file, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["stpairs"]) == 12


def test_reduce_second_anchor(a3sq_file, capsys):
    assert main(["reduce", a3sq_file, "--vertex", "2"]) == 0
    out = capsys.readouterr().out
    assert "reducing at Q = P_2" in out
    assert "[FAIL]" not in out
