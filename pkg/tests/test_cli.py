"""Command line behaviour: shapes, determinism, exit codes."""

import contextlib
import io
import json
import subprocess
import sys

import pytest

from vermatwist.cli import golden_b2_text, main, render_b2_table


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_sum_formula_table_a1():
    code, out, err = run_cli("sum-formula", "--type", "A1", "--w", "e", "--y", "s")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "sum formula"
    assert "verma vector: +1[e]" in lines
    assert "zero top: no" in lines


def test_sum_formula_json_b2():
    code, out, err = run_cli(
        "sum-formula", "--type", "B2", "--w", "st", "--y", "sts", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"w", "y", "verma", "simple", "layers", "zero_top"}
    assert data["w"] == "st" and data["y"] == "sts"
    assert data["verma"] == {"e": -1, "st": 1, "ts": -1, "sts": 2}
    assert data["layers"] == {"e": 1, "s": 2, "t": 2, "st": 3, "ts": 1, "sts": 2}
    assert data["zero_top"] is True


def test_sum_formula_json_layers_null_when_blocked():
    # singular block: the sum formula still prints, layers are null
    code, out, err = run_cli(
        "sum-formula",
        "--type",
        "B2",
        "--w",
        "e",
        "--y",
        "e",
        "--lambda",
        "-1,-2",
        "--format",
        "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["verma"] == {}
    assert data["simple"] is None
    assert data["layers"] is None
    assert data["zero_top"] is None


def test_sum_formula_table_reports_blocked_layers():
    code, out, err = run_cli(
        "sum-formula", "--type", "B2", "--w", "e", "--y", "e", "--lambda", "-1,-2"
    )
    assert code == 0
    assert "layers: unavailable (UnsupportedBlock:" in out


def test_layers_table_b2():
    code, out, err = run_cli("layers", "--type", "B2", "--w", "st", "--y", "sts")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "layers of the twisted module at w = st, y = sts"
    assert "  0: 0" in lines
    assert "  1: L(e) L(ts)" in lines
    assert "  2: L(s) L(t) L(sts)" in lines
    assert "  3: L(st)" in lines
    assert "zero top: yes" in lines


def test_layers_errors_exit_one_with_error_name():
    code, out, err = run_cli(
        "layers", "--type", "B2", "--w", "e", "--y", "e", "--lambda", "-1,-2"
    )
    assert code == 1
    assert out == ""
    assert err.startswith("error: UnsupportedBlock:")

    code, out, err = run_cli("layers", "--type", "B2", "--w", "e", "--y", "e", "--lambda", "0,0")
    assert code == 1
    assert err.startswith("error: NotAntidominant:")

    code, out, err = run_cli("layers", "--type", "B2", "--w", "zz", "--y", "e")
    assert code == 1
    assert err.startswith("error: ValueError:")


def test_negative_lambda_flag_forms():
    # space separated, equals form, and parenthesized all parse
    for args in (
        ("--lambda", "-3,-2"),
        ("--lambda=-3,-2",),
        ("--lambda", "(-3,-2)"),
    ):
        code, out, err = run_cli("layers", "--type", "B2", "--w", "st", "--y", "sts", *args)
        assert code == 0, (args, err)
        assert "zero top: yes" in out


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        run_cli("sum-formula", "--type", "B2", "--y", "s")  # missing --w
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run_cli("no-such-command")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run_cli("weyl")  # needs --type or --cartan-file
    assert exc.value.code == 2


def test_b2_table_matches_golden():
    code, out, err = run_cli("b2-table")
    assert code == 0
    assert out == golden_b2_text()
    assert out == render_b2_table()


def test_weyl_json_a2():
    code, out, err = run_cli("weyl", "--type", "A2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "A2" and data["rank"] == 2
    assert [e["word"] for e in data["elements"]] == ["e", "s", "t", "st", "ts", "sts"]
    assert [e["length"] for e in data["elements"]] == [0, 1, 1, 2, 2, 3]
    assert ["e", "s"] in data["covers"] or ("e", "s") in [tuple(c) for c in data["covers"]]
    assert len(data["covers"]) == 8


def test_weyl_cartan_file(tmp_path):
    path = tmp_path / "cartan.json"
    path.write_text(json.dumps({"matrix": [[2, -2], [-1, 2]], "rank": 2}))
    code, out, err = run_cli("weyl", "--cartan-file", str(path))
    assert code == 0
    assert "8 elements" in out

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"matrix": [[2, -2], [-1, 2]], "rank": 3}))
    code, out, err = run_cli("weyl", "--cartan-file", str(bad))
    assert code == 1
    assert err.startswith("error:")

    nokey = tmp_path / "nokey.json"
    nokey.write_text(json.dumps({"rows": []}))
    code, out, err = run_cli("weyl", "--cartan-file", str(nokey))
    assert code == 1


def test_sl2_table_and_json():
    code, out, err = run_cli("sl2", "--lambda", "1")
    assert code == 0
    assert "phi equivariance: pass" in out
    assert "psi equivariance: pass" in out
    assert "four-term exactness at X=0: pass" in out
    assert "cokernel valuations over A: pass" in out
    assert "jantzen valuations (index:valuation): 0:0 1:0 2:1" in out

    code, out, err = run_cli("sl2", "--lambda", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["phi_equivariance"] is True
    assert data["psi_equivariance"] is True
    assert data["four_term_exactness_at_X0"] is True
    assert data["cokernel_valuations_over_A"] is True
    assert data["jantzen"]["0"] == 0 and data["jantzen"]["2"] == 1


def test_sl2_non_natural_lambda_skips_four_term():
    code, out, err = run_cli("sl2", "--lambda", "-7/2")
    assert code == 0
    assert "four-term exactness at X=0: skipped (lambda is not a natural number)" in out

    code, out, err = run_cli("sl2", "--lambda", "-7/2", "--format", "json")
    data = json.loads(out)
    assert data["four_term_exactness_at_X0"] is None


def test_sl2_single_check_and_trunc():
    code, out, err = run_cli("sl2", "--lambda", "2", "--check", "phi", "--trunc", "6")
    assert code == 0
    assert "phi equivariance: pass" in out
    assert "psi equivariance" not in out

    # four-term needs a window of 2*lambda + 4
    code, out, err = run_cli("sl2", "--lambda", "4", "--check", "four-term", "--trunc", "6")
    assert code == 1
    assert err.startswith("error: TruncationTooSmall:")


def test_decomp_file_route(tmp_path):
    from vermatwist import (
        build_root_system,
        decomposition_matrix,
        make_block,
        weight,
        word_text,
    )

    rs = build_root_system("B2")
    block = make_block(rs, weight(-2, -2))
    dm = decomposition_matrix(block)
    path = tmp_path / "d.json"
    path.write_text(
        json.dumps(
            {
                "params": [word_text(w) for w in block.params],
                "matrix": [[dm.entry(y, x) for x in block.params] for y in block.params],
            }
        )
    )
    code, out, err = run_cli(
        "layers", "--type", "B2", "--w", "st", "--y", "sts", "--decomp-file", str(path)
    )
    assert code == 0
    assert "zero top: yes" in out

    broken = tmp_path / "broken.json"
    broken.write_text("{")
    code, out, err = run_cli(
        "layers", "--type", "B2", "--w", "st", "--y", "sts", "--decomp-file", str(broken)
    )
    assert code == 1
    assert err.startswith("error: BadDecompositionFile:")


def test_xy_route():
    code, out, err = run_cli(
        "sum-formula", "--type", "B2", "--w", "st", "--y", "s", "--xy", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    # reported at the equivalent direct parameters: twist st*w0, orbit st*s
    assert data["w"] == "ts"
    assert data["y"] == "sts"
    assert data["verma"] == {"e": 1, "st": -1, "ts": 1, "sts": 1}


def test_output_is_deterministic():
    for argv in (
        ("b2-table",),
        ("weyl", "--type", "B2", "--format", "json"),
        ("sum-formula", "--type", "B2", "--w", "ts", "--y", "w0", "--format", "json"),
        ("sl2", "--lambda", "3", "--format", "json"),
    ):
        first = run_cli(*argv)
        second = run_cli(*argv)
        assert first == second


def test_json_outputs_parse_and_round_trip():
    for argv in (
        ("weyl", "--type", "G2", "--format", "json"),
        ("layers", "--type", "B2", "--w", "e", "--y", "w0", "--format", "json"),
        ("sl2", "--lambda", "0", "--format", "json"),
    ):
        code, out, err = run_cli(*argv)
        assert code == 0
        data = json.loads(out)
        assert json.dumps(data, indent=2) + "\n" == out or json.dumps(data, indent=2) == out.rstrip("\n")


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "vermatwist.cli", "b2-table"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == golden_b2_text()
