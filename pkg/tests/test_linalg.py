import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indcomplex.linalg import (
    gf2_rank,
    integer_rank,
    modp_rank,
    smith_invariant_factors,
)


def rational_rank(rows):
    """Oracle: Gaussian elimination with exact fractions."""
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c] / mat[r][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        rank += 1
    return rank


def modp_rank_dense_oracle(rows, p):
    """Oracle: brute-force rank over GF(p) via all square minors."""
    m, n = len(rows), len(rows[0]) if rows else 0
    for size in range(min(m, n), 0, -1):
        for ri in itertools.combinations(range(m), size):
            for ci in itertools.combinations(range(n), size):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if _det_mod(sub, p):
                    return size
    return 0


def _det_mod(mat, p):
    n = len(mat)
    if n == 1:
        return mat[0][0] % p
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * _det_mod(minor, p)
    return total % p


def invariant_factors_oracle(rows):
    """Oracle: d_i = gcd of i-by-i minors divided by gcd of (i-1)-minors."""
    m, n = len(rows), len(rows[0]) if rows else 0
    gcds = [1]
    for size in range(1, min(m, n) + 1):
        g = 0
        for ri in itertools.combinations(range(m), size):
            for ci in itertools.combinations(range(n), size):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = math.gcd(g, _det_int(sub))
        if g == 0:
            break
        gcds.append(g)
    return [gcds[i] // gcds[i - 1] for i in range(1, len(gcds))]


def _det_int(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * _det_int(minor)
    return total


def as_columns(rows):
    m = len(rows)
    n = len(rows[0]) if rows else 0
    return [{i: rows[i][j] for i in range(m) if rows[i][j]} for j in range(n)]


def as_bit_columns(rows):
    m = len(rows)
    n = len(rows[0]) if rows else 0
    return [sum(1 << i for i in range(m) if rows[i][j] % 2) for j in range(n)]


small_matrix = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-4, 4), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
)


class TestRanks:
    @given(small_matrix)
    @settings(max_examples=150, deadline=None)
    def test_gf2_rank_matches_minor_oracle(self, rows):
        assert gf2_rank(as_bit_columns(rows)) == modp_rank_dense_oracle(rows, 2)

    @given(small_matrix, st.sampled_from([2, 3, 5]))
    @settings(max_examples=150, deadline=None)
    def test_modp_rank_matches_minor_oracle(self, rows, p):
        assert modp_rank(as_columns(rows), p) == modp_rank_dense_oracle(rows, p)

    @given(small_matrix)
    @settings(max_examples=150, deadline=None)
    def test_integer_rank_matches_fraction_oracle(self, rows):
        assert integer_rank(as_columns(rows)) == rational_rank(rows)

    def test_empty_and_zero(self):
        assert gf2_rank([]) == 0
        assert modp_rank([{}, {}], 3) == 0
        assert integer_rank([{}]) == 0

    def test_modp_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            modp_rank([], 1)


class TestSmith:
    @pytest.mark.parametrize(
        "rows,expected",
        [
            ([[2, 0], [0, 3]], [1, 6]),
            ([[2, 1], [0, 2]], [1, 4]),
            ([[1, 0], [0, 1]], [1, 1]),
            ([[2, 0], [0, 2]], [2, 2]),
            ([[6, 0, 0], [0, 10, 0], [0, 0, 15]], [1, 30, 30]),
            ([[0, 0], [0, 0]], []),
        ],
    )
    def test_known_matrices(self, rows, expected):
        assert smith_invariant_factors(as_columns(rows)) == expected

    @given(small_matrix)
    @settings(max_examples=120, deadline=None)
    def test_matches_minor_gcd_oracle(self, rows):
        assert smith_invariant_factors(as_columns(rows)) == invariant_factors_oracle(rows)

    @given(small_matrix)
    @settings(max_examples=60, deadline=None)
    def test_divisibility_chain(self, rows):
        factors = smith_invariant_factors(as_columns(rows))
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))

    def test_random_unimodular_conjugates_keep_factors(self):
        rng = random.Random(11)
        base = [[2, 0, 0], [0, 6, 0], [0, 0, 0]]
        expected = [2, 6]
        mat = [row[:] for row in base]
        for _ in range(20):
            op = rng.randrange(4)
            i, j = rng.sample(range(3), 2)
            c = rng.randint(-2, 2)
            if op == 0:
                mat[i] = [a + c * b for a, b in zip(mat[i], mat[j])]
            elif op == 1:
                for row in mat:
                    row[i] += c * row[j]
            elif op == 2:
                mat[i], mat[j] = mat[j], mat[i]
            else:
                for row in mat:
                    row[i], row[j] = row[j], row[i]
        assert smith_invariant_factors(as_columns(mat)) == expected
