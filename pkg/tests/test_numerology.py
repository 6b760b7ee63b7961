from fractions import Fraction

import pytest

from surfmono.algebra import fermat
from surfmono.branch import discriminant_curve, square_free_part
from surfmono.geometry import frame_for_center, point
from surfmono.numerology import cubic_ramification_class_check, degree_report


def test_reports():
    r = degree_report(3)
    assert (r.deg_r, r.deg_kr, r.genus_bound_r, r.planar_genus_of_b, r.branch_must_be_singular) == (6, 6, 4, 10, True)
    r = degree_report(2)
    assert (r.deg_r, r.genus_bound_r, r.planar_genus_of_b, r.branch_must_be_singular) == (2, 0, 0, False)
    r = degree_report(4)
    assert (r.deg_r, r.deg_kr, r.genus_bound_r, r.planar_genus_of_b, r.branch_must_be_singular) == (12, 36, 19, 55, True)
    assert isinstance(r.genus_bound_r, Fraction)
    assert r.to_dict()["degR"] == 12


def test_singular_for_all_higher_degrees():
    assert all(degree_report(d).branch_must_be_singular for d in range(3, 51))


def test_bad_degree():
    with pytest.raises(ValueError):
        degree_report(1)


def test_cubic_class_identity():
    assert cubic_ramification_class_check()


def test_agrees_with_branch_locus():
    c = discriminant_curve(fermat(3), frame_for_center(point(0, 0, 0, 1)))
    assert c.degree == degree_report(3).deg_r
    # the ramification curve of the coordinate projection is the plane cubic {t = 0}
    assert square_free_part(c).degree == 3
