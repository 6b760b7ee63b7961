"""Degree and genus bookkeeping for projections of degree-d surfaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class DegreeReport:
    d: int
    deg_r: int
    deg_kr: int
    genus_bound_r: Fraction
    planar_genus_of_b: Fraction
    branch_must_be_singular: bool

    def to_dict(self) -> dict:
        def num(x: Fraction):
            return x.numerator if x.denominator == 1 else str(x)

        return {
            "d": self.d,
            "degR": self.deg_r,
            "degKR": self.deg_kr,
            "genusBoundR": num(self.genus_bound_r),
            "planarGenusOfB": num(self.planar_genus_of_b),
            "branchMustBeSingular": self.branch_must_be_singular,
        }


def degree_report(d: int) -> DegreeReport:
    """Ramification curve degree, canonical degree and genus against a smooth plane curve of the same degree."""
    if not isinstance(d, int) or d < 2:
        raise ValueError("degree must be an integer >= 2")
    deg_r = d * (d - 1)
    deg_kr = d * (d - 1) * (2 * d - 5)
    genus = Fraction(deg_kr + 2, 2)
    planar = Fraction((deg_r - 1) * (deg_r - 2), 2)
    return DegreeReport(d, deg_r, deg_kr, genus, planar, genus < planar)


def cubic_ramification_class_check() -> bool:
    """Canonical class bookkeeping for a cubic surface, in multiples of the hyperplane class.

    K_X = -1, the pulled-back plane canonical class is -3, and R = O_X(1),
    so K_X = f^*K + 2R reads -1 = -3 + 2.
    """
    k_x = Fraction(3 - 4)  # adjunction: K_X = (d - 4) H
    k_plane = Fraction(-3)
    r = Fraction(1)
    return k_x == k_plane + 2 * r
