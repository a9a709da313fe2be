import random
from collections import Counter
from fractions import Fraction

import pytest

from fibarctan.errors import SequenceLengthError
from fibarctan.telescope import (
    double_shift,
    double_shift_alt,
    double_shift_chain,
    telescope_alt,
    telescope_diff,
)

OPS = [telescope_diff, telescope_alt, double_shift, double_shift_alt, double_shift_chain]


def random_sequence(rnd, max_len=24, bound=10**4):
    return [Fraction(rnd.randint(-bound, bound), rnd.randint(1, bound))
            for _ in range(rnd.randint(0, max_len))]


class TestExamples:
    def test_telescope_diff(self):
        assert telescope_diff([1, 2, 3, 4, 5], 3, 2) == (-6, -6)
        assert telescope_diff([7] * 9, 4, 5) == (0, 0)
        assert telescope_diff([1, 2, 3], 0, 3) == (0, 0)

    def test_telescope_alt(self):
        assert telescope_alt([1, 2, 3, 4, 5, 6], 2, 2) == (0, 0)
        assert telescope_alt([1, 2, 3], 3, 0) == (0, 0)
        assert telescope_alt([1, 1, 1, 1], 2, 1) == (0, 0)

    def test_double_shift(self):
        assert double_shift([1, 2, 3, 4], 2, 2) == (6, 6)
        x = [Fraction(1, 3), 5, -2]
        assert double_shift(x, 3, 0) == (2 * sum(x), 2 * sum(x))
        assert double_shift([4, 9, 1], 0, 3) == (0, 0)

    def test_double_shift_alt(self):
        assert double_shift_alt([1, 2, 3, 4], 2, 1) == (-2, -2)
        lhs, rhs = double_shift_alt([3, 1, 4], 3, 0)
        assert lhs == rhs == 2 * (3 - 1 + 4)
        assert double_shift_alt([5] * 10, 4, 3) == (0, 0)

    @pytest.mark.parametrize("op", OPS)
    def test_too_short(self, op):
        with pytest.raises(SequenceLengthError):
            op([1, 2, 3], 2, 2)
        with pytest.raises(SequenceLengthError):
            op([1, 2, 3], -1, 2)


@pytest.mark.parametrize("op", OPS)
def test_linear_coefficients_agree(op):
    """Both sides are linear in X; feeding unit vectors compares every coefficient."""
    size = 14
    for k in range(size + 1):
        for m in range(size + 1 - k):
            lhs, rhs = Counter(), Counter()
            for i in range(size):
                e = [0] * size
                e[i] = 1
                a, b = op(e, k, m)
                lhs[i], rhs[i] = a, b
            assert lhs == rhs, (op.__name__, k, m)


@pytest.mark.parametrize("op", OPS)
def test_random_corpus_all_pairs(op):
    rnd = random.Random(20240611)
    for _ in range(1000):
        x = random_sequence(rnd)
        for k in range(len(x) + 1):
            for m in range(len(x) + 1 - k):
                lhs, rhs = op(x, k, m)
                assert lhs == rhs, (op.__name__, x, k, m)


def test_diff_role_symmetry():
    rnd = random.Random(3)
    for _ in range(200):
        x = random_sequence(rnd)
        for k in range(len(x) + 1):
            for m in range(len(x) + 1 - k):
                assert telescope_diff(x, k, m)[0] == telescope_diff(x, m, k)[1]
