import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricstab import lattice_fan as lf
from toricstab.corpus import corpus_fans, cp1, cp2, hirzebruch
from toricstab.errors import InvalidInput, InvalidRay, TooLarge, UnsupportedCone


def test_primitive_generator_examples():
    assert lf.primitive_generator((2, 4)) == (1, 2)
    assert lf.primitive_generator((1, 0)) == (1, 0)
    assert lf.primitive_generator((-3, 6, -9)) == (-1, 2, -3)
    with pytest.raises(InvalidRay):
        lf.primitive_generator((0, 0))


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=4).filter(any))
def test_primitive_generator_idempotent(v):
    p = lf.primitive_generator(v)
    assert lf.primitive_generator(p) == p
    assert lf.is_primitive(p)


def quadrant():
    return lf.Fan(2, ((1, 0), (0, 1)), ((0, 1),))


def test_strong_convexity():
    fan = lf.Fan(2, ((1, 0), (0, 1), (-1, 0)), ((0, 1), (1, 2)))
    assert lf.is_strongly_convex(lf.Cone((0, 1)), fan)
    assert not lf.is_strongly_convex(lf.Cone((0, 2)), fan)
    assert lf.is_strongly_convex(lf.Cone(()), fan)


def test_point_in_cone():
    fan, c = quadrant(), lf.Cone((0, 1))
    assert lf.point_in_cone((1, 1), c, fan)
    assert not lf.point_in_cone((-1, 0), c, fan)
    assert lf.point_in_cone((0, 0), c, fan)
    assert lf.point_in_cone((Fraction(1, 3), 0), c, fan)


def test_point_in_non_simplicial_cone_rejected():
    fan = lf.Fan(2, ((1, 0), (0, 1), (1, 1)), ((0, 1, 2),))
    with pytest.raises(UnsupportedCone):
        lf.point_in_cone((1, 1), lf.Cone((0, 1, 2)), fan)


def test_validate_fan_examples():
    assert lf.validate_fan(cp2()).valid
    assert lf.validate_fan(lf.Fan(2, ((1, 0),), ((0,),))).valid
    # cones over (1,0),(1,2) and (1,2),(0,1) meet exactly along the shared ray
    assert lf.validate_fan(lf.Fan(2, ((1, 0), (1, 2), (0, 1)), ((0, 1), (1, 2)))).valid


def test_validate_fan_overlap_has_witness():
    fan = lf.Fan(2, ((1, 0), (0, 1), (1, 2)), ((0, 1), (2, 1)))
    report = lf.validate_fan(fan)
    assert not report.valid
    v = report.violations[0]
    w = v.witness
    # witness lies in both cones but not in the cone on the shared ray (0,1)
    for cone in v.cones:
        assert lf.point_in_cone(w, cone, fan)
    assert w[0] != 0


def test_smoothness():
    assert lf.is_smooth(cp2())
    assert not lf.is_smooth(lf.Fan(2, ((1, 0), (1, 2)), ((0, 1),)))
    assert lf.is_smooth(lf.Fan(1, ((1,),), ((0,),)))


def test_completeness_examples():
    assert lf.is_complete(cp1())
    assert not lf.is_complete(lf.Fan(1, ((1,),), ((0,),)))
    for a in range(4):
        assert lf.is_complete(hirzebruch(a))
    assert not lf.is_complete(quadrant())


def test_completeness_mixed_dimensions_reported():
    fan = lf.Fan(2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (2,)))
    rep = lf.completeness_report(fan)
    assert not rep.complete and rep.diagnostics


def test_spans_lattice():
    assert lf.spans_lattice([(1, 0), (0, 1), (-1, -1)])
    assert not lf.spans_lattice([(2, 0), (0, 1)])
    assert lf.spans_lattice([(1,)])


def test_positive_relation_examples():
    assert lf.find_positive_relation([(1,), (-1,)]) == (1, 1)
    assert lf.find_positive_relation(cp2().rays) == (1, 1, 1)
    assert lf.find_positive_relation([(1, 0), (0, 1)]) is None
    with pytest.raises(TooLarge):
        lf.find_positive_relation([(1,)] * 17)


@pytest.mark.parametrize("name,fan", sorted(corpus_fans().items()))
def test_corpus_invariants(name, fan):
    assert lf.validate_fan(fan).valid
    assert lf.is_smooth(fan)
    rep = lf.completeness_report(fan, seed=7)
    assert rep.complete and rep.wall_test and rep.sampled_uncovered == 0
    assert lf.spans_lattice(fan.rays, fan.m)
    d = lf.find_positive_relation(fan.rays)
    assert d is not None and min(d) > 0 and lf.verify_relation(fan.rays, d)
    for c in fan.max_cones:
        assert lf.is_strongly_convex(c, fan)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2).filter(any), min_size=1, max_size=5))
@settings(max_examples=80, deadline=None)
def test_relation_is_verified_when_found(rays):
    rays = [lf.primitive_generator(v) for v in rays]
    d = lf.find_positive_relation(rays)
    if d is not None:
        assert min(d) > 0 and lf.verify_relation(rays, d)


def test_loader_primitivizes(tmp_path):
    path = tmp_path / "fan.json"
    path.write_text(json.dumps({"dim": 1, "rays": [[2], [-3]], "max_cones": [[0], [1]]}))
    fan, changed = lf.load_fan(path)
    assert changed and fan.rays == ((1,), (-1,))
    assert lf.fan_from_dict(lf.fan_to_dict(fan))[0] == fan


def test_loader_reports_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 1,\n "rays": [[1]')
    with pytest.raises(InvalidInput, match="line 2"):
        lf.load_fan(path)


def test_fan_rejects_bad_input():
    with pytest.raises(InvalidInput):
        lf.Fan(2, ((1, 0), (1, 0)), ((0,),))
    with pytest.raises(InvalidInput):
        lf.Fan(2, ((1, 0, 0),), ())
