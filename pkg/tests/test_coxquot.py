import random
from fractions import Fraction

import pytest

from toricstab import coxquot as cq
from toricstab.complexes import SimplicialComplex, underlying_complex
from toricstab.corpus import corpus_fans, cp1, cp2, hirzebruch
from toricstab.errors import InvalidInput, NotSpanning, ShapeError
from toricstab.gaussian import GaussianRational, gq
from toricstab.polysys import MonicPolynomial, PolySystem

from planted import planted_system

TWO_POINTS = SimplicialComplex(2, ((0, 1),))
Z = GaussianRational(0)


def test_zero_pattern_examples():
    assert cq.zero_pattern(((1,), (2,), (3,))) == frozenset()
    assert cq.zero_pattern(((0,), (2,), (0,))) == {0, 2}
    assert cq.zero_pattern(((0, 0), (0, 0))) == {0, 1}


def test_in_complement_examples():
    assert not cq.in_complement(((Z,), (Z,)), TWO_POINTS)
    assert cq.in_complement(((Z,), (1,)), TWO_POINTS)
    assert cq.in_complement(((1,), (1,)), TWO_POINTS)
    with pytest.raises(ShapeError):
        cq.in_complement(((1,),), TWO_POINTS)


def test_evaluate_examples():
    sys = PolySystem("R", 2, (MonicPolynomial((0, 0)),))
    assert cq.evaluate_system(sys, 0) == ((0, 0),)
    assert cq.evaluate_system(sys, 1) == ((1, 3),)


def test_in_group_examples():
    rays = cp1().rays
    assert cq.in_group((2, 2), rays)
    assert not cq.in_group((2, 3), rays)
    assert cq.in_group((1, 1, 1, 1), hirzebruch(3).rays)
    with pytest.raises(InvalidInput):
        cq.in_group((0, 1), rays)


def test_in_group_subgroup_property():
    rng = random.Random(4)
    rays = hirzebruch(2).rays
    # (l^d) for relations d is in the group; products and inverses stay there
    members = []
    for _ in range(30):
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        d = (a, b, a, b + 2 * a)          # kernel of the H2 ray matrix: d0 = d2, d3 = d1 + 2 d2
        lam = gq(rng.randint(1, 4), rng.randint(-2, 2))
        mu = tuple(lam ** k for k in d)
        assert cq.in_group(mu, rays)
        members.append(mu)
    for x, y in zip(members, members[1:]):
        assert cq.in_group(tuple(p * q for p, q in zip(x, y)), rays)
        assert cq.in_group(tuple(p.inverse() for p in x), rays)


def test_cox_criterion_examples():
    assert cq.cox_criterion(cp1().rays, (3, 3)) == (True, True)
    assert cq.cox_criterion(cp1().rays, (2, 3)) == (False, False)
    assert cq.cox_criterion(cp2().rays, (1, 1, 1)) == (True, True)


def test_group_rank_examples():
    assert cq.group_rank(cp1().rays) == 1
    assert cq.group_rank(cp2().rays) == 1
    assert cq.group_rank(hirzebruch(1).rays) == 2
    with pytest.raises(NotSpanning):
        cq.group_rank([(1, 0), (-1, 0)])


def test_evaluation_zero_pattern_matches_planted_roots():
    rng = random.Random(21)
    for _ in range(100):
        planted, fan = planted_system(rng)
        n = planted.system.n
        for x in {pt for c in planted.roots for pt in c if pt.is_real()} | {GaussianRational(Fraction(7, 3))}:
            block = cq.evaluate_system(planted.system, x)
            expected = {i for i, c in enumerate(planted.roots) if c[x] >= n}
            assert cq.zero_pattern(block) == expected


@pytest.mark.parametrize("name,fan", sorted(corpus_fans().items()))
def test_group_rank_matches_ray_count(name, fan):
    assert cq.group_rank(fan.rays) == fan.r - fan.m
