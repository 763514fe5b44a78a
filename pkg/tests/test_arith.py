import pytest
from hypothesis import given, strategies as st

from quintuple.arith import as_square, is_square, is_square_candidate, isqrt


def newton_isqrt(n):
    # independent floor square root, used only as an oracle
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            return x
        x = y


@pytest.mark.parametrize("n, r", [(0, 0), (16, 4), (15, 3), (1, 1), (10 ** 160, 10 ** 80)])
def test_isqrt_examples(n, r):
    assert isqrt(n) == r


def test_isqrt_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


def test_isqrt_exhaustive_small():
    r = 0
    for n in range(10 ** 6 + 1):
        if (r + 1) * (r + 1) <= n:
            r += 1
        assert isqrt(n) == r


@given(st.integers(min_value=0, max_value=2 ** 256))
def test_isqrt_floor_property(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)
    assert r == newton_isqrt(n)


@given(st.integers(min_value=10 ** 150, max_value=10 ** 170))
def test_isqrt_huge(n):
    assert isqrt(n) == newton_isqrt(n)


@pytest.mark.parametrize("n, r", [(4, 2), (1 * 3 + 1, 2), (8 * 120 + 1, 31), (0, 0), (1, 1)])
def test_as_square_examples(n, r):
    assert as_square(n) == r


@pytest.mark.parametrize("n", [2, 3, 8, 99, -4])
def test_as_square_rejects(n):
    assert as_square(n) is None
    assert not is_square(n)


@given(st.integers(min_value=0, max_value=2 ** 300))
def test_as_square_of_square(r):
    assert as_square(r * r) == r


@given(st.integers(min_value=2, max_value=2 ** 300))
def test_square_plus_one_not_square(r):
    assert as_square(r * r + 1) is None


def test_residue_filter_invisible():
    # the prefilter never rejects a true square
    for r in range(5000):
        assert is_square_candidate(r * r)
    for n in range(20000):
        assert (as_square(n) is not None) == (newton_isqrt(n) ** 2 == n)
