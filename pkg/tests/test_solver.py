import pytest
from hypothesis import given, strategies as st

from liftcover.cover import is_connected, is_normal, lift_check
from liftcover.errors import PreconditionError
from liftcover.families import FamilySpec, all_specs, criterion
from liftcover.solver import (
    A_ZERO,
    AX_EQ_B,
    AX_PLUS_B,
    B_ZERO,
    enumerate_solutions,
    find_prime_normal_cover,
    is_prime,
    mod_inverse,
    solve_lemma,
)
from liftcover.words import FreeWord, parse_word

from strategies import words

ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23]


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.sampled_from(ODD_PRIMES), st.integers(1, 10**6))
def test_mod_inverse(p, a):
    if a % p:
        assert a * mod_inverse(a, p) % p == 1


@pytest.mark.parametrize("a, b, p, case, x", [
    (0, 5, 7, A_ZERO, None),
    (7, 0, 7, A_ZERO, None),
    (3, 14, 7, B_ZERO, None),
    (2, 3, 7, AX_PLUS_B, 2),
    (1, 1, 7, AX_EQ_B, 1),
])
def test_solve_lemma_examples(a, b, p, case, x):
    got = solve_lemma(a, b, p)
    assert (got.case_id, got.x) == (case, x)
    assert got.holds()


def _scan(a, b, p):
    """Every (case, x) satisfied, by exhaustive search over 1 <= x <= (p-1)/2."""
    found = set()
    for x in range(1, (p - 1) // 2 + 1):
        if (a * x + b) % p == 0:
            found.add((AX_PLUS_B, x))
        if (a * x - b) % p == 0:
            found.add((AX_EQ_B, x))
    return found


@given(st.integers(-200, 200), st.integers(-200, 200), st.sampled_from(ODD_PRIMES))
def test_solve_lemma_against_scan(a, b, p):
    got = solve_lemma(a, b, p)
    assert got.holds()
    if a % p == 0:
        assert got.case_id == A_ZERO
    elif b % p == 0:
        assert got.case_id == B_ZERO
    else:
        # with a, b nonzero mod p exactly one of the listed conditions has a solution in range
        assert _scan(a, b, p) == {(got.case_id, got.x)}


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15])
def test_solve_lemma_rejects_non_odd_primes(p):
    with pytest.raises(PreconditionError):
        solve_lemma(1, 1, p)


@pytest.mark.parametrize("text, p, spec", [
    ("a1^2 a2^3", 3, FamilySpec.M(2, 3, 2)),
    ("a1 a2", 3, FamilySpec.Muv(2, 3, 1, 2, 1)),
    ("a1^2 a2^5", 2, FamilySpec.L(2, 1)),
    ("a1 a2^2", 3, FamilySpec.Nuv(2, 3, 1, 2, 1)),
    ("", 5, FamilySpec.M(2, 5, 1)),
    ("a1 a2 a1 a2^2", 7, FamilySpec.Nvu(2, 7, 1, 2, 2)),
    ("a1 a2^2", 2, FamilySpec.L(2, 2)),
    ("a1 a2^3", 2, FamilySpec.L2(2, 1, 2)),
])
def test_find_cover_examples(text, p, spec):
    w = parse_word(text, 2)
    res = find_prime_normal_cover(w, p)
    assert res.spec == spec
    assert res.p == p and res.pair == (1, 2)
    assert lift_check(w, res.cover).closed


def test_find_cover_seven_sheets_details():
    res = find_prime_normal_cover(parse_word("a1 a2 a1 a2^2", 2), 7)
    assert res.lemma.case_id == AX_PLUS_B and res.lemma.x == 2
    assert res.spec.text == "N:2,1^2@7"


@pytest.mark.parametrize("n, p, pair", [(1, 3, None), (2, 4, None), (2, 1, None), (3, 3, (1, 1)), (3, 3, (1, 4))])
def test_find_cover_preconditions(n, p, pair):
    with pytest.raises(PreconditionError):
        find_prime_normal_cover(FreeWord.identity(n), p, pair)


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(words(n=n, max_blocks=10, max_abs=40), st.just(n))),
       st.sampled_from([2, 3, 5, 7, 11, 13]), st.data())
def test_solver_postconditions(wn, p, data):
    w, n = wn
    u, v = data.draw(st.permutations(range(1, n + 1)))[:2]
    res = find_prime_normal_cover(w, p, (u, v))
    c = res.cover
    assert c.degree == p and is_connected(c) and is_normal(c)
    assert criterion(w, res.spec)
    for s in range(p):
        assert lift_check(w, c, s).closed
    used = {res.spec.u, res.spec.v} - {None}
    assert used <= {u, v}


def test_enumerate_solutions_identity():
    assert enumerate_solutions(FreeWord.identity(2), 3) == all_specs(2, 3, pairs=[(1, 2)])


def test_enumerate_solutions_zero_sums():
    got = enumerate_solutions(parse_word("a1^3 a2^3", 2), 3)
    for spec in [FamilySpec.M(2, 3, 1), FamilySpec.M(2, 3, 2), FamilySpec.Muv(2, 3, 1, 2, 1), FamilySpec.Nuv(2, 3, 1, 2, 1)]:
        assert spec in got


def test_enumerate_solutions_single_generator():
    got = enumerate_solutions(parse_word("a1", 2), 3)
    assert FamilySpec.M(2, 3, 2) in got and FamilySpec.M(2, 3, 1) not in got


@given(words(n=2, max_blocks=8, max_abs=20), st.sampled_from([2, 3, 5, 7]))
def test_solver_choice_is_among_solutions(w, p):
    assert find_prime_normal_cover(w, p).spec in enumerate_solutions(w, p)
