from pathlib import Path

import pytest

from liedim import oracle
from liedim.lie_modules import dim_lie, weight_space_dim_formula
from liedim.witt import witt_dim

GOLDEN = Path(__file__).parent / "golden" / "bracketings_n2_r4.txt"


def test_lyndon_words_small():
    assert oracle.lyndon_words(2, 1) == [(0,), (1,)]
    assert oracle.lyndon_words(2, 2) == [(0, 1)]
    assert oracle.lyndon_words(2, 3) == [(0, 0, 1), (0, 1, 1)]
    assert oracle.lyndon_words(2, 4) == [(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1)]
    assert oracle.lyndon_words(1, 2) == []


def test_lyndon_words_sorted_and_lyndon():
    words = oracle.lyndon_words(3, 5)
    assert words == sorted(words)
    assert all(oracle.is_lyndon(w) for w in words)
    assert len(words) == witt_dim(3, 5)


def test_is_lyndon():
    assert oracle.is_lyndon((0,))
    assert oracle.is_lyndon((0, 1, 1))
    assert not oracle.is_lyndon((1, 0))
    assert not oracle.is_lyndon((0, 1, 0, 1))
    assert not oracle.is_lyndon(())


def test_counts_match_witt():
    for n in (1, 2, 3):
        for r in range(1, 9):
            assert len(oracle.lyndon_words(n, r)) == witt_dim(n, r), (n, r)
            assert oracle.aperiodic_count_bruteforce(n, r) == r * witt_dim(n, r), (n, r)


def test_standard_factorization():
    assert oracle.standard_factorization((0, 0, 1)) == ((0,), (0, 1))
    assert oracle.standard_factorization((0, 1, 1)) == ((0, 1), (1,))
    assert oracle.standard_factorization((0, 0, 0, 1)) == ((0,), (0, 0, 1))
    assert oracle.standard_factorization((0, 0, 1, 1)) == ((0,), (0, 1, 1))
    # single letters cannot be split; Lyndonness of the input is the
    # caller's contract (expand_standard_bracketing checks it)
    with pytest.raises(ValueError):
        oracle.standard_factorization((0,))


def test_left_normed_expand():
    assert oracle.left_normed_expand((0,)) == {(0,): 1}
    assert oracle.left_normed_expand((0, 1)) == {(0, 1): 1, (1, 0): -1}
    assert oracle.left_normed_expand((0, 1, 2)) == {
        (0, 1, 2): 1,
        (1, 0, 2): -1,
        (2, 0, 1): -1,
        (2, 1, 0): 1,
    }


def test_antisymmetry():
    for a in range(3):
        for b in range(3):
            total = dict(oracle.left_normed_expand((a, b)))
            for idx, coeff in oracle.left_normed_expand((b, a)).items():
                total[idx] = total.get(idx, 0) + coeff
            assert all(v == 0 for v in total.values()), (a, b)


def test_jacobi_identity():
    x = oracle.left_normed_expand((0,))
    y = oracle.left_normed_expand((1,))
    z = oracle.left_normed_expand((2,))
    total: dict = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        part = oracle._bracket(a, oracle._bracket(b, c))
        for idx, coeff in part.items():
            total[idx] = total.get(idx, 0) + coeff
    assert all(v == 0 for v in total.values())


def test_golden_standard_bracketings():
    for line in GOLDEN.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word_text, _, expansion_text = line.partition(" => ")
        word = tuple(int(ch) for ch in word_text)
        got = oracle.format_expansion(oracle.expand_standard_bracketing(word))
        assert got.split("\n") == expansion_text.split(), word_text


def test_expand_standard_bracketing_rejects_non_lyndon():
    with pytest.raises(ValueError):
        oracle.expand_standard_bracketing((0, 1, 0))


def test_weight_of():
    vec = oracle.left_normed_expand((0, 1, 1))
    assert oracle.weight_of(vec) == (1, 2)
    assert oracle.weight_of(vec, n=4) == (1, 2, 0, 0)
    assert oracle.weight_of({}) == oracle.ZERO_WEIGHT
    mixed = {(0, 1): 1, (1, 0, 0): 1}
    assert oracle.weight_of(mixed) == oracle.INHOMOGENEOUS


def test_format_expansion_multi_digit_letters():
    vec = {(10, 2): 3, (2, 10): -3}
    assert oracle.format_expansion(vec) == "2.10:-3\n10.2:3"
    assert oracle.format_expansion({}) == ""


def test_rank_over_field_basic():
    a, b = (0,), (1,)
    vectors = [{a: 1, b: 1}, {a: 1, b: -1}, {a: 2, b: 0}]
    assert oracle.rank_over_field(vectors) == 2
    # over F_2 the first two rows coincide and the third vanishes
    assert oracle.rank_over_field(vectors, field=2) == 1
    assert oracle.rank_over_field(vectors, field=3) == 2
    assert oracle.rank_over_field([]) == 0
    assert oracle.rank_over_field([{}, {a: 0}]) == 0


def test_rank_over_field_ignores_zero_entries():
    # explicit zero coefficients must not be mistaken for leading entries
    a, b, c = (0,), (1,), (2,)
    vectors = [{a: 0, b: 1}, {a: 1, c: 1}, {a: 1, c: -1}]
    assert oracle.rank_over_field(vectors) == 3
    assert oracle.rank_over_field(vectors, field=3) == 3


def test_rank_over_field_validation():
    with pytest.raises(ValueError):
        oracle.rank_over_field([{(0,): 1}], field=4)
    with pytest.raises(ValueError):
        oracle.rank_over_field([{(0,): 1}, {(0, 1): 1}])


def test_lie_power_rank_small():
    assert oracle.lie_power_rank(1, 2) == 0
    for n in (2, 3):
        for r in range(1, 6):
            w = witt_dim(n, r)
            for f in (None, 2, 3):
                assert oracle.lie_power_rank(n, r, f) == w, (n, r, f)
                assert oracle.lyndon_bracketing_rank(n, r, f) == w, (n, r, f)


def test_lie_module_rank_small():
    for r in range(1, 6):
        for f in (None, 2, 3):
            assert oracle.lie_module_rank(r, f) == dim_lie(r), (r, f)


def test_weight_space_rank_small():
    for q, k in ((1, 2), (1, 3), (1, 4), (2, 2)):
        expected = weight_space_dim_formula(q, k)
        for f in (None, 2):
            assert oracle.weight_space_rank(q, k, f) == expected, (q, k, f)


def test_budget_rejects_oversized_jobs():
    with pytest.raises(oracle.WorkBudgetExceeded):
        oracle.aperiodic_count_bruteforce(2, 10, budget=100)
    with pytest.raises(oracle.WorkBudgetExceeded):
        oracle.lie_module_rank(7)  # needs (7!)^2 > default budget
    # explicit budgets unlock the same call
    assert oracle.aperiodic_count_bruteforce(2, 10, budget=2000) == 990


def test_budget_env_var(monkeypatch):
    monkeypatch.setenv(oracle.BUDGET_ENV_VAR, "50")
    assert oracle.work_budget() == 50
    with pytest.raises(oracle.WorkBudgetExceeded):
        oracle.aperiodic_count_bruteforce(2, 8)
    # explicit argument beats the environment
    assert oracle.aperiodic_count_bruteforce(2, 8, budget=10**6) == 240
    monkeypatch.setenv(oracle.BUDGET_ENV_VAR, "not a number")
    with pytest.raises(ValueError):
        oracle.work_budget()


@pytest.mark.slow
def test_lie_module_rank_r7_slow():
    assert oracle.lie_module_rank(7, 2, budget=10**9) == dim_lie(7) == 720


@pytest.mark.slow
def test_weight_space_rank_23_slow():
    assert oracle.weight_space_rank(2, 3, None, budget=10**9) == 240
