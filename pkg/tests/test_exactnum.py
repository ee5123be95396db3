from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from okpoly.errors import DomainError, NoRealRootError
from okpoly.exactnum import QuadNumber, quad_compare, quad_normalize, quad_solve

F = Fraction

rationals = st.fractions(
    max_numerator=10**6, max_denominator=10**4
)
small_rationals = st.fractions(max_numerator=50, max_denominator=12)
radicands = st.sampled_from([F(2), F(3), F(5), F(7), F(2, 3), F(13)])


def quads(d):
    return st.builds(lambda a, b: QuadNumber(a, b, d), small_rationals, small_rationals)


class TestNormalize:
    def test_rational_embedding(self):
        q = quad_normalize(F(2), F(0), F(5))
        assert (q.a, q.b, q.d) == (F(2), F(0), F(0))

    def test_perfect_square_collapses(self):
        q = quad_normalize(F(0), F(1), F(9))
        assert (q.a, q.b, q.d) == (F(3), F(0), F(0))

    def test_already_canonical(self):
        q = quad_normalize(F(1), F(2), F(2))
        assert (q.a, q.b, q.d) == (F(1), F(2), F(2))

    def test_rational_square_radicand(self):
        q = quad_normalize(F(1), F(2), F(9, 4))
        assert (q.a, q.b, q.d) == (F(4), F(0), F(0))

    def test_negative_radicand_rejected(self):
        with pytest.raises(DomainError):
            quad_normalize(F(0), F(1), F(-1))


class TestCompare:
    def test_sqrt7_vs_21_8(self):
        # cross-multiplication oracle: 7 * 64 = 448 > 441 = 21^2
        assert quad_compare(QuadNumber(F(0), F(1), F(7)), F(21, 8)) > 0

    def test_equal_rationals(self):
        assert quad_compare(QuadNumber(F(3)), 3) == 0

    def test_surd_positive(self):
        assert quad_compare(0, QuadNumber(F(0), F(1), F(2))) < 0

    def test_mixed_signs(self):
        # 5 - 2*sqrt(7) < 0 since 25 < 28
        assert QuadNumber(F(5), F(-2), F(7)).sign() == -1
        # 6 - 2*sqrt(7) > 0 since 36 > 28
        assert QuadNumber(F(6), F(-2), F(7)).sign() == 1

    def test_incompatible_radicands(self):
        with pytest.raises(DomainError):
            QuadNumber(F(0), F(1), F(2)) + QuadNumber(F(0), F(1), F(3))


class TestSolve:
    def test_defining_equation(self):
        root = quad_solve(F(-1, 7), F(0), F(1), "larger")
        assert root == QuadNumber(F(0), F(1), F(7))

    def test_rational_factorization(self):
        assert quad_solve(F(1), F(-5), F(6), "smaller") == QuadNumber(F(2))

    def test_double_root(self):
        root = quad_solve(F(1), F(-16, 3), F(64, 9), "larger")
        assert root == QuadNumber(F(8, 3))
        assert quad_solve(F(1), F(-16, 3), F(64, 9), "smaller") == root

    def test_linear(self):
        assert quad_solve(F(0), F(2), F(-3), "smaller") == QuadNumber(F(3, 2))

    def test_negative_discriminant(self):
        with pytest.raises(NoRealRootError):
            quad_solve(F(1), F(0), F(1), "smaller")

    def test_degenerate(self):
        with pytest.raises(DomainError):
            quad_solve(F(0), F(0), F(1), "smaller")

    @given(
        p=small_rationals.filter(lambda x: x != 0),
        q=small_rationals,
        r=small_rationals,
        branch=st.sampled_from(["smaller", "larger"]),
    )
    @settings(max_examples=60)
    def test_roundtrip_polynomial_evaluation(self, p, q, r, branch):
        if q * q - 4 * p * r < 0:
            return
        x = quad_solve(p, q, r, branch)
        value = p * x * x + q * x + r
        assert value == QuadNumber(F(0))


class TestFieldAxioms:
    @given(d=radicands, data=st.data())
    @settings(max_examples=60)
    def test_associativity_and_distributivity(self, d, data):
        x = data.draw(quads(d))
        y = data.draw(quads(d))
        z = data.draw(quads(d))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(d=radicands, data=st.data())
    @settings(max_examples=60)
    def test_division_inverts_multiplication(self, d, data):
        x = data.draw(quads(d))
        y = data.draw(quads(d).filter(lambda q: q.sign() != 0))
        assert (x * y) / y == x

    @given(d=radicands, data=st.data())
    @settings(max_examples=60)
    def test_order_translation_invariant(self, d, data):
        x = data.draw(quads(d))
        y = data.draw(quads(d))
        z = data.draw(quads(d))
        if x < y:
            assert x + z < y + z

    @given(d=radicands, data=st.data())
    @settings(max_examples=60)
    def test_total_order(self, d, data):
        x = data.draw(quads(d))
        y = data.draw(quads(d))
        assert (x < y) + (x == y) + (y < x) == 1
