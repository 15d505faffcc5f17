from __future__ import annotations

import json
from fractions import Fraction

import pytest

from p3walls import genus4
from p3walls.chern import ChernCharacter, curve_ideal_ch, euler_pairing
from p3walls.walls import Circle


def test_canonical_class():
    assert genus4.canonical_class() == ChernCharacter(1, 0, -6, 15)
    assert genus4.canonical_class() == curve_ideal_ch(6, 4)


def test_canonical_walls():
    walls = genus4.canonical_walls()
    assert [w.circle for w in walls] == [
        Circle(Fraction(-13, 2), Fraction(121, 4)),
        Circle(Fraction(-11, 2), Fraction(73, 4)),
        Circle(Fraction(-9, 2), Fraction(33, 4)),
        Circle(Fraction(-4), Fraction(4)),
    ]


def test_destabilizing_pairs_sum_to_total():
    total = genus4.canonical_class()
    pairs = genus4.destabilizing_pairs()
    assert set(pairs) == {Fraction(4), Fraction(33, 4), Fraction(73, 4)}
    for sub, quotient in pairs.values():
        assert sub + quotient == total
    assert str(pairs[Fraction(4)][0]) == "1,-2,2,-4/3"
    assert str(pairs[Fraction(4)][1]) == "0,2,-8,49/3"
    assert str(pairs[Fraction(33, 4)][0]) == "1,-1,-3/2,29/6"
    assert str(pairs[Fraction(73, 4)][0]) == "1,-1,-1/2,11/6"


def test_third_wall_factors():
    line, planar = genus4.third_wall_factors()
    assert str(line) == "1,-1,-1/2,11/6"
    assert str(planar) == "0,1,-11/2,79/6"


def test_point_counts():
    assert genus4.rank_one_point_count(1, Fraction(11, 6)) == 0
    assert genus4.rank_one_point_count(2, Fraction(29, 6)) == 0
    assert genus4.rank_one_point_count(1, Fraction(5, 6)) == 1
    assert genus4.planar_point_count(5, Fraction(79, 6)) == 2
    assert genus4.planar_point_count(5, Fraction(85, 6)) == 1
    assert genus4.planar_point_count(0, Fraction(1, 6)) == 0


def test_line_plane_refinements():
    refs = genus4.line_plane_refinements()
    assert [ref.line_ch.e for ref in refs] == [
        Fraction(-1, 6),
        Fraction(5, 6),
        Fraction(11, 6),
    ]
    assert [(ref.line_points, ref.planar_points) for ref in refs] == [(2, 0), (1, 1), (0, 2)]
    total = genus4.canonical_class()
    for ref in refs:
        assert ref.line_ch + ref.planar_ch == total
        assert ref.line_ch.is_integral() and ref.planar_ch.is_integral()


def test_euler_table():
    table = genus4.euler_table()
    L, P = genus4.LINE_FACTOR, genus4.PLANAR_FACTOR
    assert table[(L, L)] == -3
    assert table[(P, P)] == -2
    assert table[(P, L)] == -18
    assert table[(L, P)] == 0


def test_ext_tables_match_euler_pairings():
    L, P = genus4.LINE_FACTOR, genus4.PLANAR_FACTOR
    for stratum in genus4.Stratum:
        table = genus4.ext_table(stratum)
        assert table[(L, L)].ext1 == 4
        assert table[(P, P)].ext1 == 7
        assert table[(P, L)].ext1 == 18
        assert table[(P, P)].ext2 == 4
        assert table[(L, P)].ext1 == stratum.incidence_defect
        assert table[(L, P)].ext2 is None and table[(L, P)].ext3 is None
        checks = genus4.validate_ext_table(table)
        assert all(check["ok"] for check in checks)
        relations = [c for c in checks if c["kind"] == "inferred_relation"]
        assert len(relations) == 1
        assert relations[0]["relation"] == f"ext2 - ext3 = {stratum.incidence_defect}"


def test_validate_ext_table_flags_wrong_entry():
    table = genus4.ext_table(genus4.Stratum.DISJOINT)
    L = genus4.LINE_FACTOR
    table[(L, L)] = genus4.ExtProfile(1, 5, 0, 0)
    checks = genus4.validate_ext_table(table)
    bad = [c for c in checks if not c["ok"]]
    assert len(bad) == 1 and bad[0]["pair"] == [L, L]


def test_dimension_helpers():
    assert genus4.proj_bundle_dim(9, 16) == 24
    assert genus4.proj_bundle_dim(11, 18) == 28
    assert genus4.extension_ext1_bound(8, 3, 1, 13) == 24
    assert genus4.extension_ext1_bound(4, 7, 2, 18) == 30
    assert [genus4.stratum_ext1_dim(k) for k in (0, 1, 2)] == [28, 29, 30]
    with pytest.raises(ValueError):
        genus4.stratum_ext1_dim(3)


def test_exceptional_ledger_values():
    ledger = {entry.name: entry for entry in genus4.exceptional_ledger()}
    expected = {
        "quadric_family_dim": 9,
        "cubic_system_dim": 16,
        "first_moduli_dim": 24,
        "wall_side_moduli_dim": 24,
        "conic_family_dim": 8,
        "blowup_center_dim": 11,
        "exceptional_divisor_dim": 23,
        "divisor_check": 23,
        "line_family_dim": 4,
        "planar_factor_moduli_dim": 7,
        "second_moduli_dim": 28,
        "ext1_bound_conic_wall": 24,
        "ext1_bound_line_plane_wall": 30,
        "stratum_ext1_defect0": 28,
        "stratum_ext1_defect1": 29,
        "stratum_ext1_defect2": 30,
        "kernel_meets_dim": 14,
        "kernel_spanned_dim": 10,
        "singular_intersection_dim": 23,
        "wall_sensitive_locus_dim": 10,
        "small_locus_image_dim": 7,
        "small_locus_dim": 8,
        "cone_vertex_dim": 9,
        "rank_one_locus_dim": 4,
        "cone_fiber_dim": 14,
        "degenerate_base_dim": 7,
    }
    for name, value in expected.items():
        assert ledger[name].value == value, name
        assert ledger[name].how in ("computed", "recorded")
    # the two independent routes to the moduli dimension agree
    assert ledger["first_moduli_dim"].value == ledger["wall_side_moduli_dim"].value
    v = genus4.canonical_class()
    assert 1 - euler_pairing(v, v) == 24


def test_narrative_statements():
    story = genus4.narrative()
    statements = {item["statement"]: item["status"] for item in story}
    assert statements == {
        "divisorial contraction (ψ)": "computed",
        "small contraction (φ)": "computed",
        "is not Q-factorial": "recorded",
    }


def test_cohomology_consistency():
    check = genus4.cohomology_consistency()
    assert check["matches_total"] is True
    assert check["genus6_class"] == "1,0,-6,17"


def test_report_text():
    text = genus4.report("text")
    assert text.startswith("total class: 1,0,-6,15")
    assert "center -4, radius^2 4" in text
    assert "is not Q-factorial" in text
    assert "ext2 - ext3 = " in text
    with pytest.raises(ValueError):
        genus4.report("yaml")


def test_report_json():
    payload = json.loads(genus4.report("json"))
    assert payload["schema"] == "p3walls/1"
    assert payload["class"] == "1,0,-6,15"
    assert len(payload["walls"]) == 4
    assert payload["walls"][0]["full_pair"] is None
    assert payload["walls"][1]["full_pair"] == ["1,-1,-1/2,11/6", "0,1,-11/2,79/6"]
    assert payload["walls"][3]["full_pair"] == ["1,-2,2,-4/3", "0,2,-8,49/3"]
    assert [ref["line"] for ref in payload["refinements"]] == [
        "1,-1,-1/2,-1/6",
        "1,-1,-1/2,5/6",
        "1,-1,-1/2,11/6",
    ]
    assert payload["euler_table"][f"{genus4.PLANAR_FACTOR}|{genus4.LINE_FACTOR}"] == -18
    assert {item["statement"] for item in payload["narrative"]} == {
        "divisorial contraction (ψ)",
        "small contraction (φ)",
        "is not Q-factorial",
    }
    names = {entry["name"] for entry in payload["ledger"]}
    assert "second_moduli_dim" in names and "cone_fiber_dim" in names
    assert payload["consistency"]["matches_total"] is True
    # deterministic serialization
    assert genus4.report("json") == genus4.report("json")
