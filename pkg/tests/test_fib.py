import pytest
from hypothesis import given, strategies as st

from fibarctan.errors import ParityError, UnknownIdentityError
from fibarctan.fib import (
    AlgebraicFamily,
    Parity,
    SequenceCache,
    check_algebraic_identity,
    fib,
    fib_pair_doubling,
    lucas,
)


def linear_fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def linear_lucas(n):
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("n, expected", [(0, 0), (10, 55), (-4, -3), (1, 1), (-1, 1), (2, 1)])
def test_fib_examples(n, expected):
    assert fib(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 2), (7, 29), (-3, -4), (1, 1), (-1, -1)])
def test_lucas_examples(n, expected):
    assert lucas(n) == expected


def test_recurrence_over_signed_range():
    for n in range(-100, 101):
        assert fib(n + 1) == fib(n) + fib(n - 1)
        assert lucas(n + 1) == lucas(n) + lucas(n - 1)


def test_reflection():
    for n in range(1, 101):
        assert fib(-n) == (-1) ** (n - 1) * fib(n)
        assert lucas(-n) == (-1) ** n * lucas(n)


@given(st.integers(min_value=0, max_value=3000))
def test_doubling_matches_linear(n):
    f, f1 = fib_pair_doubling(n)
    assert f == linear_fib(n)
    assert f1 == linear_fib(n + 1)


def test_large_index_uses_sparse_store():
    cache = SequenceCache()
    assert fib(5000, cache) == linear_fib(5000)
    assert lucas(5000, cache) == linear_lucas(5000)
    lo, hi = cache.contiguous_range
    assert hi < 5000 and 5000 in cache.sparse


def test_cache_coherence():
    cold, warm, off = SequenceCache(), SequenceCache(), SequenceCache(enabled=False)
    for n in range(0, 400, 7):
        fib(n, warm)
    indices = list(range(-300, 300)) + [1000, 4321, -2500]
    for n in indices:
        expected = fib(n, SequenceCache())
        assert fib(n, cold) == fib(n, warm) == fib(n, off) == expected
        assert lucas(n, cold) == lucas(n, warm) == lucas(n, off)
    assert off.sparse == {} and off.contiguous_range == (0, 1)


def test_cached_prefix_obeys_recurrence():
    cache = SequenceCache()
    fib(200, cache)
    fv, lv = cache.fib_values, cache.lucas_values
    for i in range(2, len(fv)):
        assert fv[i] == fv[i - 1] + fv[i - 2]
        assert lv[i] == lv[i - 1] + lv[i - 2]


def test_concurrent_readers_agree():
    from concurrent.futures import ThreadPoolExecutor

    cache = SequenceCache()
    ns = list(range(0, 2000, 13)) * 4
    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(lambda n: fib(n, cache), ns))
    assert got == [linear_fib(n) for n in ns]


def test_family_parities_match_source():
    expected = {
        "ALG-09": Parity.NONE, "ALG-10": Parity.NONE,
        "ALG-11": Parity.M_ODD, "ALG-12": Parity.M_EVEN,
        "ALG-13": Parity.M_ODD, "ALG-14": Parity.M_EVEN,
        "ALG-15": Parity.M_ODD, "ALG-16": Parity.M_EVEN,
        "ALG-17": Parity.M_ODD, "ALG-18": Parity.M_EVEN,
        "ALG-19": Parity.N_ODD, "ALG-20": Parity.N_EVEN,
        "ALG-21": Parity.N_ODD, "ALG-22": Parity.N_EVEN,
    }
    assert {f.value: f.parity for f in AlgebraicFamily} == expected


def test_algebraic_examples():
    assert check_algebraic_identity("ALG-09", 5, 0)
    assert check_algebraic_identity(AlgebraicFamily.ALG_11, 1, 2)
    assert check_algebraic_identity("alg-09", 0, 3)


@pytest.mark.parametrize("family, m, n", [("ALG-11", 2, 1), ("ALG-12", 3, 0),
                                          ("ALG-19", 1, 2), ("ALG-22", 4, 5)])
def test_parity_violation_raises(family, m, n):
    with pytest.raises(ParityError):
        check_algebraic_identity(family, m, n)


def test_unknown_family():
    with pytest.raises(UnknownIdentityError):
        check_algebraic_identity("ALG-99", 1, 1)


@given(st.sampled_from(list(AlgebraicFamily)), st.integers(0, 150), st.integers(0, 150))
def test_families_hold_on_random_points(family, m, n):
    if not family.parity.admits(m, n):
        m += 1 if family.parity in (Parity.M_ODD, Parity.M_EVEN) else 0
        n += 1 if family.parity in (Parity.N_ODD, Parity.N_EVEN) else 0
    assert check_algebraic_identity(family, m, n)


def test_ratio_lemma():
    for k in range(1, 201):
        assert fib(k + 2) >= 2 * fib(k)
        assert lucas(k + 2) >= 2 * lucas(k)
