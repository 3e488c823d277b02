import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodetic_games.families import NAMES, SpecError, family, parse_family_spec, render_family_spec


@pytest.mark.parametrize("text", [
    "cycle:5", "grid:3x4", "windmill:3x2", "multipartite:1,2,3", "lattice:2,3,4",
    "petersen", "fig-barP3", "corona(multipartite:2,3)", "union(cycle:3,path:2)",
    "box(path:2,path:3)", "join(complete:1,cycle:4)", "cliquesum(cycle:4@1,path:2@0)",
    "union(box(path:2,path:2),corona(complete:2))",
])
def test_parse_render_roundtrip(text):
    spec = parse_family_spec(text)
    assert render_family_spec(spec) == text
    assert parse_family_spec(str(spec)) == spec


def test_whitespace_tolerated():
    assert str(parse_family_spec(" union( cycle:3 , path:2 ) ")) == "union(cycle:3,path:2)"


@pytest.mark.parametrize("text, pos", [
    ("nope:3", 0), ("cycle:", 6), ("cycle:3)", 7), ("union(cycle:3", 13),
    ("cycle:3,4", 0), ("corona(cycle:3,cycle:4)", 0), ("union(cycle:3)", 0),
    ("cliquesum(cycle:3,path:2)", 17),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(SpecError) as info:
        parse_family_spec(text)
    assert info.value.position == pos


@pytest.mark.parametrize("text", [
    "cycle:2", "wheel:4", "grid:1x3", "grid:2x2", "grid:4x3", "genwheel:1,3", "genwheel:2,2",
    "hypercube:0", "multipartite:0,2", "cliquesum(cycle:4@7,path:2@0)", "hypercube:6",
])
def test_out_of_range_parameters(text):
    with pytest.raises(SpecError):
        family(text)


@pytest.mark.parametrize("text, n, m", [
    ("path:5", 5, 4), ("cycle:7", 7, 7), ("complete:5", 5, 10), ("star:4", 5, 4),
    ("hypercube:3", 8, 12), ("grid:3x4", 12, 17), ("lattice:2,2,2", 8, 12),
    ("wheel:6", 6, 10), ("genwheel:2,4", 6, 12), ("genwheel:1,5", 6, 10),
    ("multipartite:1,2,3", 6, 11), ("split:2,3", 5, 7), ("windmill:3x3", 7, 9),
    ("pan:4", 5, 5), ("petersen", 10, 15), ("diamond", 4, 5), ("fig-nim7", 9, 17),
    ("fig-block", 12, None), ("corona(cycle:4)", 8, 8),
])
def test_family_sizes(text, n, m):
    g = family(text)
    assert g.n == n
    if m is not None:
        assert g.num_edges == m


def test_genwheel_one_centre_is_wheel():
    assert family("genwheel:1,5") == family("wheel:6")


def test_fixture_labels():
    g = family("petersen")
    assert g.labels[0] == "v1" and g.labels[-1] == "v10"
    assert all(g.degree(v) == 3 for v in range(10))
    assert g.diameter == 2


def test_every_name_has_a_builder():
    defaults = {"grid": "3x3", "lattice": "2,3", "wheel": "5", "genwheel": "2,3",
                "multipartite": "1,2", "split": "2,2", "windmill": "3x2", "cycle": "4",
                "pan": "4", "hypercube": "2"}
    fixtures = {"petersen", "diamond", "fig-nim7", "fig-disj", "fig-barP3", "fig-block"}
    for name in NAMES:
        text = name if name in fixtures else f"{name}:{defaults.get(name, '3')}"
        assert family(text).n >= 1


_atom = st.one_of(
    st.integers(1, 6).map(lambda n: f"path:{n}"),
    st.integers(3, 6).map(lambda n: f"cycle:{n}"),
    st.integers(1, 4).map(lambda n: f"complete:{n}"),
    st.tuples(st.integers(1, 3), st.integers(1, 3)).map(lambda p: f"multipartite:{p[0]},{p[1]}"),
)


@st.composite
def _specs(draw, depth=2):
    if depth == 0 or draw(st.booleans()):
        return draw(_atom)
    comb = draw(st.sampled_from(["union", "join", "corona"]))
    if comb == "corona":
        return f"corona({draw(_specs(depth - 1))})"
    return f"{comb}({draw(_specs(depth - 1))},{draw(_specs(depth - 1))})"


@settings(max_examples=200, deadline=None)
@given(_specs())
def test_roundtrip_generated(text):
    spec = parse_family_spec(text)
    assert render_family_spec(spec) == text
