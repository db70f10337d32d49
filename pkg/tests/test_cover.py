import json

import pytest
from hypothesis import given, settings, strategies as st

from liftcover.cover import (
    CoverGraph,
    deck_transformation,
    from_json,
    is_connected,
    is_normal,
    is_normal_bruteforce,
    lift_check,
    perm_compose,
    perm_from_cycles,
    perm_inverse,
    perm_power,
    schreier_generators,
    standardize,
    to_dot,
    to_json,
    word_perm,
)
from liftcover.errors import DisconnectedCoverError, InvalidCoverError, RankMismatchError
from liftcover.families import FamilySpec, build_cover
from liftcover.words import FreeWord, parse_word

from strategies import covers, words

NON_NORMAL = CoverGraph.from_cycles(2, 3, ["(0 1)(2)", "(1 2)(0)"])


def test_empty_word_lifts_everywhere():
    c = build_cover(FamilySpec.Muv(2, 7, 1, 2, 3))
    for s in range(7):
        assert lift_check(FreeWord.identity(2), c, s).closed


def test_lift_on_single_rotation():
    c = build_cover(FamilySpec.M(2, 3, 1))
    assert lift_check(parse_word("a1^3", 2), c, 0).closed
    assert not lift_check(parse_word("a1", 2), c, 0).closed


def test_lift_trace_on_paired_rotation():
    c = build_cover(FamilySpec.Muv(2, 3, 1, 2, 1))
    rep = lift_check(parse_word("a1 a2", 2), c, 0, trace=True)
    assert rep.closed
    assert rep.visited_path == ((0, 1, 1), (1, 2, 1))
    assert rep.end_sheet == 0


def test_trace_and_fast_path_agree():
    c = NON_NORMAL
    w = parse_word("a1^-2 a2^3 a1 a2^-1", 2)
    for s in range(3):
        assert lift_check(w, c, s, trace=True) == lift_check(w, c, s)


def test_lift_rank_mismatch():
    with pytest.raises(RankMismatchError):
        lift_check(FreeWord.identity(3), build_cover(FamilySpec.M(2, 3, 1)))


def test_lift_start_out_of_range():
    with pytest.raises(ValueError):
        lift_check(FreeWord.identity(2), build_cover(FamilySpec.M(2, 3, 1)), 3)


def test_connectivity_examples():
    assert is_connected(build_cover(FamilySpec.M(2, 5, 2)))
    assert not is_connected(CoverGraph(2, 2, ((0, 1), (0, 1))))
    assert is_connected(NON_NORMAL)


def test_normality_examples():
    for spec in [FamilySpec.M(2, 3, 1), FamilySpec.Muv(2, 7, 1, 2, 3), FamilySpec.Nvu(3, 5, 3, 1, 2),
                 FamilySpec.L(2, 1), FamilySpec.L2(3, 1, 3)]:
        assert is_normal(build_cover(spec))
    assert not is_normal(NON_NORMAL)
    assert is_normal(CoverGraph.trivial(3))


def test_normality_needs_connected_cover():
    with pytest.raises(DisconnectedCoverError):
        is_normal(CoverGraph(2, 2, ((0, 1), (0, 1))))


def test_deck_transformations_of_rotation_cover():
    c = build_cover(FamilySpec.Nuv(2, 5, 1, 2, 2))
    for t in range(5):
        phi = deck_transformation(c, t)
        assert phi == tuple((s + t) % 5 for s in range(5))
    assert deck_transformation(NON_NORMAL, 1) is None


def test_invalid_perms_rejected():
    with pytest.raises(InvalidCoverError, match="bijection"):
        CoverGraph(1, 3, ((0, 0, 1),))
    with pytest.raises(InvalidCoverError):
        CoverGraph(2, 3, ((0, 1, 2),))
    with pytest.raises(InvalidCoverError):
        CoverGraph(1, 2, ((0, 1),), base=2)


def test_perm_from_cycles():
    assert perm_from_cycles(4, "(0 2 3)") == (2, 1, 3, 0)
    assert perm_from_cycles(3, "") == (0, 1, 2)
    with pytest.raises(InvalidCoverError):
        perm_from_cycles(3, "(0 1)(1 2)")


@given(st.permutations(range(6)), st.integers(-20, 20))
def test_perm_power_matches_repeated_composition(p, e):
    p = tuple(p)
    step = p if e >= 0 else perm_inverse(p)
    expect = tuple(range(6))
    for _ in range(abs(e)):
        expect = perm_compose(expect, step)
    assert perm_power(p, e) == expect


def test_json_roundtrip():
    c = build_cover(FamilySpec.Muv(2, 3, 1, 2, 1))
    doc = json.loads(to_json(c))
    assert doc["degree"] == 3
    assert from_json(to_json(c)) == c


@given(covers())
def test_json_roundtrip_random(c):
    assert from_json(to_json(c)) == c


@pytest.mark.parametrize("text", [
    '{"n": 1, "degree": 3, "perms": [[0, 0, 1]]}',
    '{"n": 1, "degree": 3}',
    "[1, 2]",
    "{nope",
    '{"n": 1, "degree": 2, "perms": [7]}',
])
def test_json_errors(text):
    with pytest.raises(InvalidCoverError):
        from_json(text)


def test_dot_output():
    dot = to_dot(build_cover(FamilySpec.Muv(2, 3, 1, 2, 1)))
    assert dot.startswith("digraph cover {")
    assert dot.count("->") == 6
    assert 'label="a1"' in dot and 'label="a2"' in dot
    colors = {line.split("color=")[1].split(",")[0] for line in dot.splitlines() if "->" in line}
    assert len(colors) == 2
    assert "v1 [label=\"v1\", shape=doublecircle]" in dot


@given(words(n=3, max_blocks=6), words(n=3, max_blocks=6), covers(n=3, max_degree=6))
def test_path_lifting_composes(w, v, c):
    assert word_perm(w * v, c) == perm_compose(word_perm(w, c), word_perm(v, c))
    assert word_perm(w.inverse(), c) == perm_inverse(word_perm(w, c))


@given(words(n=2, max_blocks=6), covers(n=2, max_degree=6))
def test_lift_matches_word_perm(w, c):
    p = word_perm(w, c)
    for s in range(c.degree):
        assert lift_check(w, c, s).closed == (p[s] == s)


@settings(max_examples=300)
@given(covers(max_degree=7))
def test_is_normal_matches_conjugation_oracle(c):
    if is_connected(c):
        assert is_normal(c) == is_normal_bruteforce(c)


@given(covers(max_degree=6))
def test_schreier_generators(c):
    if not is_connected(c):
        return
    gens = schreier_generators(c)
    assert len(gens) == c.n * c.degree - c.degree + 1
    assert all(lift_check(h, c).closed for h in gens)


@given(covers(max_degree=6), st.data())
def test_standardize_is_relabeling_invariant(c, data):
    if not is_connected(c):
        return
    sigma = data.draw(st.permutations(range(c.degree)))
    relabeled = CoverGraph(c.n, c.degree, tuple(
        tuple(sigma[p[perm_inverse(tuple(sigma))[t]]] for t in range(c.degree)) for p in c.perms
    ), sigma[c.base])
    assert standardize(relabeled) == standardize(c)


@given(words(n=2, max_blocks=5), words(n=2, max_blocks=5), covers(n=2, max_degree=6), st.data())
def test_lift_end_sheets_compose(w, v, c, data):
    s = data.draw(st.integers(0, c.degree - 1))
    mid = lift_check(w, c, s).end_sheet
    assert lift_check(w * v, c, s).end_sheet == lift_check(v, c, mid).end_sheet
    assert lift_check(w.inverse(), c, mid).end_sheet == s
