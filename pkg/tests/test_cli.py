from __future__ import annotations

import json

import pytest

from turan4 import __version__
from turan4.cli import main
from turan4.hypergraph import complete, empty, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def last_json(text):
    return json.loads(text.strip().splitlines()[-1])


def test_construct_hm(capsys):
    code, out, _ = run(capsys, "construct", "hm", "--m", "4", "--lambda", "1")
    assert code == 0
    assert out.startswith(f"# turan4 version={__version__} command=construct seed=0")
    doc = last_json(out)
    assert (doc["v"], doc["e"]) == (64, 4976)


def test_construct_k5line_writes_file(capsys, tmp_path):
    path = tmp_path / "k5.t4g"
    code, out, _ = run(capsys, "construct", "k5line", "--out", str(path))
    assert code == 0 and last_json(out)["e"] == 20
    code, out, _ = run(capsys, "alpha", str(path))
    doc = json.loads(out)
    assert code == 0 and doc["alpha"] == 5 and doc["status"] == "Exact"


def test_construct_empty_parity(capsys):
    code, out, _ = run(capsys, "construct", "parity", "--n", "0", "--m", "0")
    assert code == 0 and last_json(out)["e"] == 0


def test_counts_only(capsys):
    code, out, _ = run(capsys, "construct", "rainbow", "--k", "2", "--counts-only")
    doc = last_json(out)
    assert code == 0 and doc["census"] == {"E0": 924, "E1": 576, "E2": 240, "E4": 1}
    code, out, _ = run(capsys, "construct", "hm", "--m", "21", "--lambda", "3", "--counts-only")
    assert last_json(out)["e"] == 2646756
    code, _, err = run(capsys, "construct", "k5line", "--counts-only")
    assert code == 3 and "not available" in err


def test_usage_errors(capsys):
    assert run(capsys, "construct", "bogus")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 3
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "table9", "--format", "xml"])
    assert exc.value.code == 3
    code, _, err = run(capsys, "construct", "hm", "--m", "3")
    assert code == 3 and "m=3" in err


def test_alpha_rainbow_and_circular(capsys, tmp_path):
    for name, args, want in [("rainbow", ["--k", "2"], 4), ("circular", ["--m", "2"], 6)]:
        path = tmp_path / f"{name}.t4g"
        run(capsys, "construct", name, *args, "--out", str(path))
        code, out, _ = run(capsys, "alpha", str(path))
        assert code == 0 and json.loads(out)["alpha"] == want


def test_alpha_empty_and_bruteforce(capsys, tmp_path):
    path = tmp_path / "e.json"
    write_graph(empty(5), path, "json")
    code, out, _ = run(capsys, "alpha", str(path), "--bruteforce")
    assert code == 0 and json.loads(out)["alpha"] == 5


def test_alpha_budget_exhausted(capsys, tmp_path):
    path = tmp_path / "z.t4g"
    run(capsys, "construct", "z2cube", "--out", str(path))
    code, out, _ = run(capsys, "--budget-nodes", "1", "alpha", str(path))
    assert code == 2 and json.loads(out)["status"] == "LowerBoundOnly"


def test_alpha_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.t4g"
    path.write_text("n 4\ne 3\n0 1 2 3\n")
    code, _, err = run(capsys, "alpha", str(path))
    assert code == 3 and "e=3" in err
    assert run(capsys, "alpha", str(tmp_path / "missing.t4g"))[0] == 3


def test_seed_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "construct", "parity", "--random", "--n", "4", "--m", "4", "--seed", "9")
    assert "seed=9" in out.splitlines()[0]


def test_verify_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "invariants", "--samples", "0")
    assert code == 0 and "PASS" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "invariants", "--samples", "20", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["failed"] == 0 and doc["meta"]["seed"] == 0


def test_bounds_tvalues(capsys):
    code, out, _ = run(capsys, "bounds", "tvalues")
    assert code == 0 and "| 6 | 16 | 190-220 |" in out
    assert run(capsys, "bounds", "tvalues", "--format", "csv")[0] == 3


def test_bounds_table9_formats(capsys):
    code, out, _ = run(capsys, "bounds", "table9", "--format", "md", "--restarts", "4")
    assert code == 0 and "| 65 | 0.706335 |" in out
    code, out, _ = run(capsys, "bounds", "table9", "--format", "json", "--restarts", "4")
    rows = json.loads(out)["rows"]
    assert all("t_star_num" in r and "t_star_den" in r for r in rows)
    code, out, _ = run(capsys, "bounds", "table9", "--format", "csv", "--restarts", "4")
    body = [line for line in out.splitlines() if not line.startswith("#")]
    assert len(body) == 1 + 17


def test_optimize(capsys):
    code, out, _ = run(capsys, "optimize", "example2", "--restarts", "4", "--seed", "1")
    doc = json.loads(out)
    from fractions import Fraction

    assert code == 0
    assert Fraction(doc["value_certified_num"], doc["value_certified_den"]) < Fraction("0.80262")
    assert doc["meta"]["seed"] == 1


def test_report_is_byte_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(capsys, "report", "--out-dir", str(a), "--restarts", "4")[0] == 0
    assert run(capsys, "report", "--out-dir", str(b), "--restarts", "4")[0] == 0
    names = sorted(p.name for p in a.iterdir())
    assert names == ["table9.csv", "table9.json", "table9.md", "table9.png"]
    for name in names:
        assert (a / name).read_bytes() == (b / name).read_bytes()
    assert (a / "table9.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert "seed=0" in (a / "table9.md").read_text().splitlines()[0]
