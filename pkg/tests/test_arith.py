from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricstab import poly as P
from toricstab import sturm
from toricstab.errors import InvalidInput
from toricstab.gaussian import I, ONE, ZERO, GaussianRational, gq
from toricstab.linalg import nullspace, rank, simplex, smith_divisors, solve

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)


class TestGaussian:
    def test_basic_arithmetic(self):
        z = gq(1, 2)
        assert z * z.conjugate() == 5
        assert (z * I) == gq(-2, 1)
        assert z / z == ONE
        assert z ** -1 == gq(Fraction(1, 5), Fraction(-2, 5))
        assert I ** 4 == 1

    def test_coerce(self):
        assert GaussianRational.coerce("3/4") == Fraction(3, 4)
        assert GaussianRational.coerce({"re": "1", "im": "-1/2"}) == gq(1, Fraction(-1, 2))
        assert GaussianRational.coerce(2) == gq(2)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_json_round_trip(self):
        for z in (gq(3), gq(0, -1), gq(Fraction(1, 3), 2)):
            assert GaussianRational.coerce(z.to_json()) == z

    @given(gaussians, gaussians)
    def test_field_laws(self, a, b):
        assert a + b == b + a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert a.conjugate().conjugate() == a
        if not b.is_zero():
            assert (a / b) * b == a

    @given(gaussians)
    def test_real_iff_fixed_by_conjugation(self, a):
        assert a.is_real() == (a == a.conjugate())


class TestPoly:
    def test_from_roots_and_evaluate(self):
        p = P.from_roots([1, -1])
        assert p == P.make([-1, 0, 1])
        assert P.evaluate(p, 1).is_zero()
        assert P.evaluate(p, 2) == 3

    def test_derivatives(self):
        f = P.make([2, -3, 0, 1])  # z^3 - 3z + 2
        assert P.derivative(f) == P.make([-3, 0, 3])
        assert P.derivative(f, 2) == P.make([0, 6])
        assert P.derivative(f, 4) == ()

    def test_gcd_is_monic_and_divides(self):
        a = P.from_roots([1, 1, 2, I])
        b = P.from_roots([1, I, -I, 3])
        g = P.gcd(a, b)
        assert g == P.from_roots([1, I])
        assert P.divmod_(a, g)[1] == ()
        assert P.gcd(a, ()) == P.monic(a)

    def test_to_str(self):
        assert P.to_str(P.from_roots([1])) == "z - 1"
        assert P.to_str(P.make([1, 0, 1])) == "z^2 + 1"

    @given(st.lists(gaussians, min_size=0, max_size=4), st.lists(gaussians, min_size=0, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_division_identity(self, ra, rb):
        a, b = P.from_roots(ra), P.from_roots(rb)
        q, rem = P.divmod_(a, b)
        assert P.add(P.mul(q, b), rem) == a
        assert P.degree(rem) < P.degree(b) or rem == ()

    @given(st.lists(gaussians, max_size=4), st.lists(gaussians, max_size=3), st.lists(gaussians, max_size=3))
    @settings(max_examples=60, deadline=None)
    def test_gcd_of_planted_products(self, common, ra, rb):
        # distinctness is not required: the gcd must contain the common product
        a = P.from_roots(common + ra)
        b = P.from_roots(common + rb)
        g = P.gcd(a, b)
        assert P.divmod_(g, P.from_roots(common))[1] == ()


class TestSturm:
    def test_count(self):
        assert sturm.count_real_roots([Fraction(-2), 0, 1]) == 2       # z^2 - 2
        assert sturm.count_real_roots([Fraction(1), 0, 1]) == 0        # z^2 + 1
        assert sturm.count_real_roots([Fraction(-2), 0, 1], 0, 2) == 1

    def test_multiple_roots_counted_once(self):
        p = P.real_part(P.from_roots([1, 1, 1, -2]))
        assert sturm.count_real_roots(p) == 2

    def test_isolation_brackets_each_root_once(self):
        roots = [Fraction(-3, 2), Fraction(0), Fraction(1, 3), Fraction(5)]
        p = P.real_part(P.from_roots(roots))
        iv = sturm.isolate_real_roots(p)
        assert len(iv) == 4
        for a, b in iv:
            assert sum(a < x <= b for x in roots) == 1

    @given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=1, max_size=5))
    @settings(max_examples=60, deadline=None)
    def test_count_matches_planted_distinct_roots(self, roots):
        p = P.real_part(P.from_roots(roots))
        assert sturm.count_real_roots(p) == len(set(roots))


class TestLinalg:
    def test_smith(self):
        assert smith_divisors([[1, 0], [1, 2]]) == [1, 2]
        assert smith_divisors([[2, 0], [0, 1]]) == [1, 2]
        assert smith_divisors([[1, 0], [0, 1], [-1, -1]]) == [1, 1]
        assert smith_divisors([[0, 0]]) == []

    def test_rank_solve_nullspace(self):
        m = [[1, 2], [2, 4]]
        assert rank(m) == 1
        assert solve([[1, 1], [1, -1]], [2, 0]) == [1, 1]
        assert solve(m, [1, 0]) is None
        ns = nullspace(m)
        assert len(ns) == 1 and ns[0][0] + 2 * ns[0][1] == 0

    def test_simplex(self):
        res = simplex([[1, 1]], [1], cost=[1, 2])
        assert res.status == "optimal" and res.x == [1, 0] and res.value == 1
        assert not simplex([[1, 1]], [-1]).feasible
        assert simplex([[1, -1]], [0], cost=[-1, 0]).status == "unbounded"

    @given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_smith_product_and_rank(self, m):
        d = smith_divisors(m)
        assert len(d) == rank(m)
        assert all(b % a == 0 for a, b in zip(d, d[1:]))


def test_invalid_coefficient():
    with pytest.raises((InvalidInput, ValueError, TypeError)):
        GaussianRational.coerce(object())
