"""Monodromy of linear projections of surfaces in P^3."""

from .algebra import HomogeneousPolynomial, fermat, parse_polynomial, random_polynomial, restrict_to_line, root_structure
from .branch import discriminant_curve, local_multiplicity, pencil_slice, square_free_part
from .contact import classify_type, contact_profile, is_planar_point, sample_tangent_lines_through, test_px
from .focal import foci_on_member, focal_polynomial, is_fundamental_point
from .geometry import ProjectiveLine, ProjectivePoint, frame_for_center, line_through, point
from .numerology import degree_report
from .perms import Permutation, centralizer_in_sd, group_order_and_classify, jordan_symmetric_check
from .tracker import TrackerConfig, run_monodromy, track_loop

__version__ = "0.1.0"

__all__ = [
    "HomogeneousPolynomial", "fermat", "parse_polynomial", "random_polynomial", "restrict_to_line",
    "root_structure", "discriminant_curve", "local_multiplicity", "pencil_slice", "square_free_part",
    "classify_type", "contact_profile", "is_planar_point", "sample_tangent_lines_through", "test_px",
    "foci_on_member", "focal_polynomial", "is_fundamental_point", "ProjectiveLine", "ProjectivePoint",
    "frame_for_center", "line_through", "point", "degree_report", "Permutation", "centralizer_in_sd",
    "group_order_and_classify", "jordan_symmetric_check", "TrackerConfig", "run_monodromy", "track_loop",
]
