import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from okpoly import linalg

F = Fraction


def brute_determinant(a):
    n = len(a)
    total = F(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = F(sign)
        for i in range(n):
            term *= a[i][perm[i]]
        total += term
    return total


small_entries = st.integers(min_value=-4, max_value=4)


def sym_matrices(n):
    return st.lists(
        st.lists(small_entries, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(lambda m: [[F(m[i][j] + m[j][i]) for j in range(n)] for i in range(n)])


class TestDeterminant:
    @given(st.integers(min_value=1, max_value=4), st.data())
    @settings(max_examples=50)
    def test_matches_permutation_expansion(self, n, data):
        m = data.draw(sym_matrices(n))
        assert linalg.determinant(m) == brute_determinant(m)

    def test_empty(self):
        assert linalg.determinant([]) == 1


class TestSolve:
    @given(st.integers(min_value=1, max_value=4), st.data())
    @settings(max_examples=50)
    def test_solution_reconstructs_rhs(self, n, data):
        m = data.draw(sym_matrices(n))
        b = data.draw(st.lists(small_entries, min_size=n, max_size=n))
        b = [F(x) for x in b]
        x = linalg.solve_linear(m, b)
        if linalg.determinant(m) == 0:
            assert x is None
        else:
            assert x is not None
            for i in range(n):
                assert sum(m[i][j] * x[j] for j in range(n)) == b[i]

    def test_empty_system(self):
        assert linalg.solve_linear([], []) == []


class TestCharpolySignature:
    def test_charpoly_rank2(self):
        # det(tI - A) for A = [[0,1],[1,0]] is t^2 - 1
        assert linalg.charpoly([[F(0), F(1)], [F(1), F(0)]]) == [F(1), F(0), F(-1)]

    def test_signature_hyperbolic_plane(self):
        assert linalg.signature([[0, 1], [1, 0]]) == (1, 1, 0)

    def test_signature_dp7(self):
        gram = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
        assert linalg.signature(gram) == (1, 2, 0)

    def test_signature_singular(self):
        assert linalg.signature([[1, 1], [1, 1]]) == (1, 0, 1)

    def test_signature_diagonal(self):
        gram = [[1 if i == j == 0 else (-1 if i == j else 0) for j in range(8)] for i in range(8)]
        assert linalg.signature(gram) == (1, 7, 0)


class TestNegativeDefinite:
    def brute_negdef(self, a):
        n = len(a)
        for i in range(1, n + 1):
            minor = brute_determinant([row[:i] for row in a[:i]])
            if (F(-1) ** i) * minor <= 0:
                return False
        return True

    @given(st.integers(min_value=1, max_value=4), st.data())
    @settings(max_examples=60)
    def test_matches_principal_minor_oracle(self, n, data):
        m = data.draw(sym_matrices(n))
        assert linalg.is_negative_definite_matrix(m) == self.brute_negdef(m)

    def test_empty_is_definite(self):
        assert linalg.is_negative_definite_matrix([])

    def test_singular_pair(self):
        assert not linalg.is_negative_definite_matrix([[F(-1), F(1)], [F(1), F(-1)]])

    def test_orthogonal_pair(self):
        assert linalg.is_negative_definite_matrix([[F(-1), F(0)], [F(0), F(-1)]])
