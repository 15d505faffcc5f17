from __future__ import annotations

import json

import pytest

from p3walls.cli import run


def invoke(capsys, *argv: str) -> tuple[int, str, str]:
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_chern_twist(capsys):
    code, out, err = invoke(capsys, "chern", "twist", "--ch", "1,0,-6,15", "--beta=-4")
    assert (code, out.strip(), err) == (0, "1,4,2,5/3", "")


def test_chern_dual(capsys):
    code, out, _ = invoke(capsys, "chern", "dual", "--ch", "1,-1,-1/2,11/6")
    assert (code, out.strip()) == (0, "1,1,-1/2,-11/6")


def test_chern_resolve(capsys):
    code, out, _ = invoke(
        capsys, "chern", "resolve", "--term=-2:1", "--term=-3:1", "--term=-5:-1"
    )
    assert (code, out.strip()) == (0, "1,0,-6,15")


def test_euler(capsys):
    code, out, _ = invoke(capsys, "euler", "--a", "0,1,-11/2,79/6", "--b", "1,-1,-1/2,11/6")
    assert (code, out.strip()) == (0, "-18")


def test_walls_table(capsys):
    code, out, err = invoke(capsys, "walls", "--v", "1,0,-6,15")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0].split() == ["center", "radius_sq", "sub", "quotient"]
    assert len(lines) == 5
    assert lines[1].split() == ["-13/2", "121/4", "1,-1,1/2", "0,1,-13/2"]
    assert lines[4].split() == ["-4", "4", "1,-2,2", "0,2,-8"]


def test_walls_json(capsys):
    code, out, _ = invoke(capsys, "walls", "--v", "1,0,-6,15", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "p3walls/1"
    assert payload["total"] == "1,0,-6,15"
    assert payload["count"] == 4
    assert payload["region"] == {
        "beta_min": "-12",
        "beta_max": "0",
        "alpha_sq_max": "64",
    }
    assert payload["walls"][0] == {
        "center": "-13/2",
        "radius_sq": "121/4",
        "sub": "1,-1,1/2",
        "quotient": "0,1,-13/2",
        "admissible_top": "beta=-13/2,alpha2=121/4",
    }


def test_walls_brute_force_route(capsys):
    code, out, _ = invoke(
        capsys,
        "walls", "--v", "1,0,-6,15", "--brute-force",
        "--r-max", "3", "--c-max", "12", "--two-d-max", "40",
        "--format", "json",
    )
    assert code == 0 and json.loads(out)["count"] == 4


def test_walls_empty(capsys):
    code, out, _ = invoke(capsys, "walls", "--v", "1,0,0,0")
    assert (code, out.strip()) == (0, "(no walls)")


def test_walls_custom_region(capsys):
    code, out, _ = invoke(
        capsys, "walls", "--v", "1,0,-6,15", "--beta-max=-7", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 3  # the innermost circle stays right of this window
    assert [w["center"] for w in payload["walls"]] == ["-13/2", "-11/2", "-9/2"]


def test_unbounded_search_reports_domain_error(capsys):
    code, out, err = invoke(capsys, "walls", "--v", "1,0,-6,0")
    assert code == 1
    assert out == ""
    assert err.startswith("error:")


def test_hyperbola(capsys):
    code, out, _ = invoke(capsys, "hyperbola", "--v", "1,0,-6,15", "--beta=-9/2")
    assert (code, out.strip()) == (0, "33/4")
    code, out, _ = invoke(capsys, "hyperbola", "--v", "1,0,-6,15", "--beta=-3")
    assert (code, out.strip()) == (0, "none")


def test_hyperbola_rank_zero_is_domain_error(capsys):
    code, out, err = invoke(capsys, "hyperbola", "--v", "0,1,-11/2,79/6", "--beta=-3")
    assert code == 1 and out == "" and err.startswith("error:")


def test_bmt(capsys):
    code, out, _ = invoke(capsys, "bmt", "--v", "1,0,-6,15", "--beta=-4", "--alpha2", "4")
    assert (code, out.strip()) == (0, "24")


def test_genus4_text(capsys):
    code, out, _ = invoke(capsys, "genus4")
    assert code == 0 and out.startswith("total class: 1,0,-6,15")


def test_genus4_json(capsys):
    code, out, _ = invoke(capsys, "genus4", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["schema"] == "p3walls/1"


def test_malformed_character_is_usage_error(capsys):
    code, out, err = invoke(capsys, "walls", "--v", "1,0,x,15")
    assert code == 2 and out == ""
    assert "invalid rational" in err


def test_wrong_arity_is_usage_error(capsys):
    code, out, err = invoke(capsys, "walls", "--v", "1,0,-6")
    assert code == 2 and "4 comma-separated" in err


def test_missing_subcommand_is_usage_error(capsys):
    code, _, err = invoke(capsys, "chern")
    assert code == 2 and "usage" in err


def test_help_exits_zero(capsys):
    code, out, _ = invoke(capsys, "--help")
    assert code == 0 and "walls" in out


@pytest.mark.parametrize("flag", ["--beta-min", "--alpha2-max"])
def test_bad_region_rational_is_usage_error(capsys, flag):
    code, _, err = invoke(capsys, "walls", "--v", "1,0,-6,15", flag, "abc")
    assert code == 2 and "invalid rational" in err


def test_plot_writes_deterministic_svg(tmp_path, capsys):
    first = tmp_path / "a.svg"
    second = tmp_path / "b.svg"
    code, out, _ = invoke(capsys, "plot", "--v", "1,0,-6,15", "--out", str(first))
    assert code == 0 and out.strip() == f"wrote {first}"
    code, _, _ = invoke(capsys, "plot", "--v", "1,0,-6,15", "--out", str(second))
    assert code == 0
    assert first.read_bytes() == second.read_bytes()
    assert first.read_bytes().startswith(b'<?xml version="1.0"')


def test_plot_unwritable_path_is_domain_error(tmp_path, capsys):
    target = tmp_path / "missing" / "out.svg"
    code, out, err = invoke(capsys, "plot", "--v", "1,0,-6,15", "--out", str(target))
    assert code == 1 and err.startswith("error:")
