import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricstab import configs as cf
from toricstab import poly as P
from toricstab.complexes import SimplicialComplex, underlying_complex
from toricstab.errors import InvalidInput, NotSplittable, ShapeError
from toricstab.gaussian import I, GaussianRational, gq
from toricstab.polysys import MonicPolynomial, PolySystem, is_member_Q

from planted import planted_divisor_system

TWO_POINTS = SimplicialComplex(2, ((0, 1),))


def test_divisor_to_poly_examples():
    assert cf.divisor_to_poly(cf.Divisor({1: 1, -1: 1})).full == P.make([-1, 0, 1])
    assert cf.divisor_to_poly(cf.Divisor({2: 3})).full == P.make([-8, 12, -6, 1])
    empty = cf.divisor_to_poly(cf.Divisor())
    assert empty.degree == 0 and empty.full == P.make([1])


def test_poly_to_divisor_examples():
    assert cf.poly_to_divisor(MonicPolynomial((-1, 0))) == cf.Divisor({1: 1, -1: 1})
    assert cf.poly_to_divisor(MonicPolynomial((1, 0))) == cf.Divisor({I: 1, -I: 1})
    with pytest.raises(NotSplittable):
        cf.poly_to_divisor(MonicPolynomial((-2, 0)))


def test_divisor_merges_and_rejects():
    d = cf.Divisor([(1, 1), (1, 2), (I, 1)])
    assert d.multiplicity(1) == 3 and d.degree == 4
    with pytest.raises(InvalidInput):
        cf.Divisor({1: 0})


points = st.builds(gq, st.fractions(-4, 4, max_denominator=3), st.fractions(-4, 4, max_denominator=3))


@given(st.dictionaries(points, st.integers(1, 3), max_size=3))
@settings(max_examples=20, deadline=None)
def test_round_trip(entries):
    xi = cf.Divisor(entries)
    f = cf.divisor_to_poly(xi)
    assert cf.poly_to_divisor(f) == xi
    assert cf.divisor_to_poly(cf.poly_to_divisor(f)) == f


def test_divisor_membership_examples():
    sys = cf.DivisorSystem("R", 2, (cf.Divisor({1: 2}), cf.Divisor({1: 2, -3: 1})))
    assert not cf.divisor_membership(sys, TWO_POINTS)
    sys3 = cf.DivisorSystem("R", 3, sys.divisors)
    assert cf.divisor_membership(sys3, TWO_POINTS)
    c = cf.DivisorSystem("C", 1, (cf.Divisor({I: 1, -I: 1}), cf.Divisor({0: 1, I: 1, -I: 1})))
    assert cf.divisor_membership(c, TWO_POINTS)
    with pytest.raises(ShapeError):
        cf.divisor_membership(c, SimplicialComplex(3, ((0, 1, 2),)))


def test_real_system_must_be_conjugation_closed():
    with pytest.raises(InvalidInput):
        cf.DivisorSystem("R", 1, (cf.Divisor({I: 1}),))


def test_membership_commutes_with_model():
    rng = random.Random(17)
    for _ in range(500):
        dsys, planted, fan = planted_divisor_system(rng)
        K = underlying_complex(fan)
        polys = PolySystem(dsys.field, dsys.n, tuple(cf.divisor_to_poly(d) for d in dsys.divisors))
        assert cf.divisor_membership(dsys, K) == is_member_Q(polys, K) == planted.truth_Q


def test_squash_is_increasing_bijection_onto_half_line():
    N = 7
    xs = sorted({Fraction(a, b) for a in range(-60, 120) for b in (1, 3, 7)})
    ys = [cf.squash(x, N) for x in xs]
    assert all(a < b for a, b in zip(ys, ys[1:]))
    assert all(y < N for y in ys)
    assert cf.squash(Fraction(N - 2), N) == N - 2
    # onto: every y in (N-2, N) is hit by x = knee + (y-knee)/(2-(y-knee))
    for y in (Fraction(N) - Fraction(1, 10 ** 6), Fraction(N - 1), Fraction(2 * N - 3, 2)):
        t = y - (N - 2)
        assert cf.squash((N - 2) + t / (2 - t), N) == y


def test_phi_injective_on_grid():
    N = 5
    grid = [gq(Fraction(a, 4), Fraction(b, 4)) for a in range(-50, 50) for b in range(-50, 50)]
    images = {cf.phi(w, N) for w in grid}
    assert len(images) == len(grid) == 10 ** 4
    assert all(w.re < N for w in images)
    assert all(cf.phi(w.conjugate(), N) == cf.phi(w, N).conjugate() for w in grid[:500])


def test_stabilize_empty_divisors():
    sys = cf.DivisorSystem("R", 1, (cf.Divisor(), cf.Divisor()))
    out = cf.stabilize(sys, (1, 1))
    assert out.divisors == (cf.Divisor({1: 1}), cf.Divisor({2: 1}))


def test_stabilize_rejects_bad_vectors():
    sys = cf.DivisorSystem("C", 1, (cf.Divisor({0: 1}), cf.Divisor({1: 1})))
    with pytest.raises(InvalidInput):
        cf.stabilize(sys, (0, 0))
    with pytest.raises(InvalidInput):
        cf.stabilize(sys, (1, -1))
    with pytest.raises(ShapeError):
        cf.stabilize(sys, (1,))


def test_stabilize_composition_degrees():
    rng = random.Random(3)
    for _ in range(100):
        dsys, _, _ = planted_divisor_system(rng)
        a = tuple(rng.randint(0, 3) for _ in range(dsys.r))
        b = tuple(rng.randint(1, 3) for _ in range(dsys.r))
        if not any(a):
            a = b
        twice = cf.stabilize(cf.stabilize(dsys, a), b)
        assert twice.D == tuple(d + x + y for d, x, y in zip(dsys.D, a, b))


def test_stabilize_preserves_membership_and_reality():
    rng = random.Random(8)
    for _ in range(200):
        dsys, planted, fan = planted_divisor_system(rng)
        if not planted.truth_Q:
            continue
        K = underlying_complex(fan)
        a = tuple(rng.randint(1, 3) for _ in range(dsys.r))
        out = cf.stabilize(dsys, a)
        assert cf.divisor_membership(out, K)
        assert cf.stabilize(dsys.conjugate(), a) == out.conjugate()


def test_scan_examples():
    sys = cf.DivisorSystem("C", 1, (cf.Divisor({0: 1}),))
    eps = Fraction(1, 10)
    assert cf.scan_at(sys, 0, eps).divisors[0] == cf.Divisor({0: 1})
    assert cf.scan_at(sys, 5, eps).divisors[0] == cf.Divisor()
    far = cf.DivisorSystem("C", 1, (cf.Divisor({gq(Fraction(1, 20), 2): 1}),))
    assert cf.scan_at(far, 0, eps).divisors[0] == cf.Divisor()
    with pytest.raises(InvalidInput):
        cf.scan_at(sys, 0, 0)


def test_scan_beyond_support_is_empty():
    rng = random.Random(2)
    for _ in range(50):
        dsys, _, _ = planted_divisor_system(rng)
        top = max((pt.re for d in dsys.divisors for pt, _ in d.entries), default=Fraction(0))
        out = cf.scan_at(dsys, top + 1, Fraction(1, 2))
        assert all(d == cf.Divisor() for d in out.divisors)


def test_divisor_file_round_trip():
    sys = cf.DivisorSystem("R", 2, (cf.Divisor({I: 1, -I: 1, Fraction(1, 2): 2}), cf.Divisor({3: 1})))
    assert cf.divisor_system_from_dict(cf.divisor_system_to_dict(sys)) == sys
