import pytest
from helpers import mask, masks, minimal_transversals

from geodetic_games import bits
from geodetic_games.closed_forms import (
    Case,
    Row,
    block_nim,
    cycle_nim,
    default_rows,
    expected_family_N,
    expected_frattini,
    expected_nim,
    genwheel_nim,
    grid_nim,
    multipartite_nim,
    split_nim,
    table1,
    wheel_nim,
)
from geodetic_games.convexity import frattini, maximal_nongenerating, minimal_generating
from geodetic_games.families import family
from geodetic_games.game import Game

DNG, GEN = Game.DNG, Game.GEN


@pytest.mark.parametrize("spec, dng, gen", [
    ("cycle:6", 1, 0), ("grid:3x4", 2, 0), ("wheel:5", 1, 2), ("cycle:5", 1, 1),
    ("cycle:7", 0, 1), ("hypercube:4", 0, 0), ("grid:2x5", 0, 0), ("wheel:8", 0, 0),
    ("genwheel:3,3", 1, 0), ("genwheel:2,5", 1, 0), ("genwheel:1,4", 1, 2),
    ("split:2,3", 0, 1), ("multipartite:1,1,2", 1, 0), ("multipartite:2,2,3", 1, 0), ("multipartite:2,2", 0, 0),
    ("corona(cycle:3)", 1, 0), ("path:4", 1, 0), ("windmill:3x3", 0, 1), ("lattice:2,2", 0, 0),
    ("pan:4", 2, 0), ("petersen", 1, 0), ("diamond", 1, 0), ("fig-nim7", 7, None),
])
def test_expected_nim(spec, dng, gen):
    assert expected_nim(spec, DNG) == dng
    assert expected_nim(spec, GEN) == gen


@pytest.mark.parametrize("spec", ["cycle:4", "hypercube:1", "pan:5", "lattice:2,3,4",
                                  "union(cycle:4,cycle:4)", "fig-disj"])
def test_uncovered_specs_have_no_closed_form(spec):
    g_covered = {"cycle:4"}
    value = expected_nim(spec, DNG)
    assert (value is not None) == (spec in g_covered)


def test_formulas_outside_their_range():
    assert split_nim(2, 1, DNG) is None
    assert cycle_nim(2, DNG) is None
    assert wheel_nim(4, GEN) is None
    assert genwheel_nim(2, 2, DNG) is None
    assert grid_nim(1, 4, DNG) is None
    assert multipartite_nim((3,), DNG) is None
    assert block_nim(1, DNG) == 0 and block_nim(1, GEN) == 1


def test_multipartite_cases():
    # complete graph, one large part, several large parts
    assert multipartite_nim((1, 1, 1), DNG) == 0
    assert multipartite_nim((1, 1, 3), GEN) == 1
    assert multipartite_nim((2, 2), DNG) == 0 and multipartite_nim((2, 2), GEN) == 0
    assert multipartite_nim((1, 2, 2), GEN) == 2
    assert multipartite_nim((2, 2, 2), GEN) == 0 and multipartite_nim((1, 2, 2, 2), GEN) == 1


def test_constructed_examples():
    assert len(expected_family_N("hypercube:3")) == 6
    assert all(bits.size(m) == 4 for m in expected_family_N("hypercube:3"))
    assert len(expected_family_N("multipartite:2,2")) == 4
    w6 = expected_family_N("wheel:6")
    assert len(w6) == 5 and all(bits.size(family("wheel:6").vertices & ~m) == 2 for m in w6)
    assert bits.size(expected_frattini("grid:4x4")) == 4
    assert expected_frattini("multipartite:1,1,2") == 0b0011
    g = family("windmill:3x3")
    assert expected_frattini("windmill:3x3") == 0b1 and frattini(g) == 1


CRITERION_SPECS = (
    [f"cycle:{n}" for n in range(3, 11)]
    + [f"hypercube:{n}" for n in range(2, 5)]
    + [f"grid:{m}x{n}" for m in range(2, 5) for n in range(max(m, 3), 6)] + ["lattice:2,2"]
    + [f"multipartite:{','.join(map(str, p))}" for p in [
        (1, 1), (1, 2), (2, 2), (1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 3, 3), (4, 4), (1, 1, 1, 1, 1, 1, 1, 1),
        (1, 3, 4), (2, 2, 2, 2), (1, 1, 2, 4)]]
    + [f"wheel:{n}" for n in range(5, 10)]
    + [f"genwheel:{m},{n}" for m in (2, 3) for n in range(3, 7)]
    + ["diamond", "pan:4", "path:4", "cycle:4", "fig-barP3", "fig-disj", "petersen",
       "split:3,2", "corona(cycle:4)", "fig-block", "windmill:3x2", "star:5"]
)


@pytest.mark.parametrize("spec", CRITERION_SPECS)
def test_families_match_constructions(spec):
    g = family(spec)
    maximal = maximal_nongenerating(g)
    assert expected_family_N(spec) == maximal
    assert expected_frattini(spec) == frattini(g, maximal=maximal)
    complements = bits.complement_family(maximal, g.n)
    assert minimal_generating(g, maximal=maximal) == minimal_transversals(complements)


def test_fixture_families():
    g = family("path:4")
    assert maximal_nongenerating(g) == (0b0111, 0b1110)
    assert minimal_generating(g) == (0b1001,)
    c4 = family("cycle:4")
    assert maximal_nongenerating(c4) == (0b0011, 0b0110, 0b1001, 0b1100)
    bar = family("fig-barP3")
    assert minimal_generating(bar) == (mask(bar, "v3 v4 v5"),)
    disj = family("fig-disj")
    assert bits.complement_family(maximal_nongenerating(disj), disj.n) == masks(disj, "v1", "v4", "v5 v6", "v7 v8")
    assert len(minimal_generating(disj)) == 4


def test_table1_default_sweep():
    cells = table1()
    assert cells and all(c.ok for c in cells)
    rows = {c.row for c in cells}
    assert rows == {"split", "corona", "block", "cycle", "hypercube", "grid", "multipartite", "wheel", "genwheel"}
    assert sum(1 for c in cells if c.row == "cycle") == 20
    assert any(c.note for c in cells if c.row == "block")


def test_table1_reports_failures():
    bad = Row("bad", [Case("cycle", "cycle:5", lambda: family("cycle:5"), {DNG: 0, GEN: 1})])
    cells = table1([bad])
    by_game = {c.game: c for c in cells}
    assert not by_game["DNG"].ok and by_game["GEN"].ok
    assert by_game["DNG"].as_dict() == {"row": "cycle", "param": "cycle:5", "game": "DNG",
                                  "expected": 0, "computed": 1, "ok": False}


def test_default_rows_cover_all_multipartite_sizes():
    rows = {r.name: r for r in default_rows()}
    parts = [c.param for c in rows["complete multipartite"].cases]
    assert "multipartite:1,1,1,1,1,1,1,1" in parts and "multipartite:4,4" in parts
    assert len(rows["corona H o K1"].cases) == 1 + 4 + 38
