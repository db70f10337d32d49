import pytest
from hypothesis import given, strategies as st

from liftcover.errors import RankMismatchError, WordSyntaxError
from liftcover.words import FreeWord, block_length, exponent_sums, parse_word

from strategies import word_pairs, words


def test_parse_transcribes_blocks():
    assert parse_word("a1^2 a2^-3 a1", 2).blocks == ((1, 2), (2, -3), (1, 1))


def test_parse_free_reduction_to_identity():
    w = parse_word("a1 a1^-1", 2)
    assert w.blocks == ()
    assert not w


def test_parse_merges_blocks():
    assert parse_word("a1^2 a1", 2).blocks == ((1, 3),)


def test_parse_cascading_reduction():
    assert parse_word("a1 a2 a3^4 a3^-4 a2^-1 a1^2", 3).blocks == ((1, 3),)


@pytest.mark.parametrize("text", ["", "   ", "\t"])
def test_parse_empty(text):
    assert parse_word(text, 3) == FreeWord.identity(3)


def test_parse_large_exponent():
    w = parse_word("a2^123456789012345678901234567890", 2)
    assert exponent_sums(w).sums == (0, 123456789012345678901234567890)


@pytest.mark.parametrize(
    "text, pos",
    [
        ("a1a2", 2),
        ("a1 ^2", 3),
        ("a1^ 2", 2),
        ("a0", 0),
        ("a1^0", 2),
        ("a1^-0", 2),
        ("a01", 0),
        ("b1", 0),
        ("a1 x", 3),
        ("a1^+2", 2),
    ],
)
def test_parse_syntax_errors(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text, 3)
    assert info.value.position == pos


def test_parse_generator_out_of_range():
    with pytest.raises(WordSyntaxError, match="out of range"):
        parse_word("a1 a3", 2)


def test_parse_rank_must_be_positive():
    with pytest.raises(ValueError):
        parse_word("", 0)


def test_exponent_sums_examples():
    assert exponent_sums(FreeWord(2, ((1, 2), (2, -3), (1, 1)))).sums == (3, -3)
    assert exponent_sums(FreeWord.identity(2)).sums == (0, 0)
    m = 5
    assert exponent_sums(FreeWord(2, ((1, 2), (2, m)))).sums == (2, 5)


def test_block_length_examples():
    assert block_length(FreeWord(2, ((1, 2), (2, -3)))) == 1
    assert block_length(FreeWord.identity(2)) == 0
    assert block_length(FreeWord(2, ((1, 1), (2, 1), (1, 1), (2, 1)))) == 2
    assert block_length(FreeWord(2, ((1, 1), (2, 1), (1, 1)))) == 2


def test_rank_mismatch_on_product():
    with pytest.raises(RankMismatchError):
        FreeWord(2, ((1, 1),)) * FreeWord(3, ((1, 1),))


def test_stored_form_is_reduced():
    w = FreeWord(3, ((1, 2), (1, -2), (2, 0), (3, 1), (3, 1)))
    assert w.blocks == ((3, 2),)


@given(words())
def test_render_parse_roundtrip(w):
    assert parse_word(w.render(), w.n) == w


@given(words())
def test_blocks_are_reduced(w):
    assert all(m != 0 for _, m in w.blocks)
    assert all(a[0] != b[0] for a, b in zip(w.blocks, w.blocks[1:]))


@given(word_pairs())
def test_abelianization_is_a_homomorphism(pair):
    w, v = pair
    assert exponent_sums(w * v) == exponent_sums(w) + exponent_sums(v)


@given(words())
def test_inverse_negates_sums(w):
    assert exponent_sums(w.inverse()) == -exponent_sums(w)
    assert (w * w.inverse()) == FreeWord.identity(w.n)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.tuples(st.integers(1, n), st.integers(-5, 5)), max_size=10).map(lambda b: (n, b))))
def test_reduction_preserves_sums(nb):
    n, blocks = nb
    raw = [0] * n
    for g, m in blocks:
        raw[g - 1] += m
    assert exponent_sums(FreeWord(n, tuple(blocks))).sums == tuple(raw)


@given(words(n=3), st.integers(0, 10))
def test_cyclic_permutation_preserves_sums(w, r):
    blocks = w.blocks
    if blocks:
        r %= len(blocks)
        rotated = FreeWord(3, blocks[r:] + blocks[:r])
        assert exponent_sums(rotated) == exponent_sums(w)
