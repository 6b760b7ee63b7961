"""Contact of lines with a surface: intersection types, planar points, the P_X test."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_JET_TOL,
    NORMALIZATION_FLOOR,
    AlgebraError,
    HomogeneousPolynomial,
    evaluate,
    gradient,
    restrict_to_line,
    root_structure,
    second_fundamental_form,
    tangent_basis,
)
from .branch import discriminant_curve, refine_branch_point, sample_branch_points, square_free_part
from .geometry import ProjectiveLine, ProjectivePoint, fiber_line, frame_for_center, normalize_coords

SIMPLE_SECANT = "SimpleSecant"
SIMPLE_TANGENT = "SimpleTangent"
ASYMPTOTIC = "Asymptotic"
BITANGENT = "Bitangent"
OTHER = "Other"

PLANAR_TOL = 1e-7
DEFAULT_PX_BUDGET = 200


class ContactError(ValueError):
    pass


def classify_type(kind: tuple[int, ...]) -> str:
    """Tag of an intersection type.

    Asymptotic and Bitangent are kept exclusive: a line with a point of
    contact >= 3 and another of contact >= 2 is tagged Other.
    """
    big = [n for n in kind if n >= 2]
    if not big:
        return SIMPLE_SECANT
    if len(big) == 1:
        return SIMPLE_TANGENT if big[0] == 2 else ASYMPTOTIC
    if all(n == 2 for n in big):
        return BITANGENT
    return OTHER


@dataclass(frozen=True)
class ContactProfile:
    line: ProjectiveLine
    type: tuple[int, ...]
    branching_weight: int
    tag: str
    contact_points: tuple[tuple[ProjectivePoint, int], ...]

    @property
    def is_tangent(self) -> bool:
        return self.branching_weight >= 1

    def to_dict(self) -> dict:
        return {
            "line": self.line.to_json(),
            "type": list(self.type),
            "branchingWeight": self.branching_weight,
            "tag": self.tag,
            "contactPoints": [{"point": p.to_json(), "multiplicity": m} for p, m in self.contact_points],
        }


def contact_profile(
    f: HomogeneousPolynomial,
    line: ProjectiveLine,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    jet_tol: float = DEFAULT_JET_TOL,
) -> ContactProfile:
    """Intersection type of ``line`` with ``{f = 0}``.

    When the direction point of the line lies on the surface (a root at
    infinity) the line is reparametrized through two generic points.
    """
    base, direction = line.base, line.direction
    q = restrict_to_line(f, base, direction)
    bound = np.abs(q.coefficients).max() if q.coefficients.size else 0.0
    if bound <= NORMALIZATION_FLOOR * f.scale * max(1.0, np.abs(base).max() ** f.degree):
        raise ContactError("the line lies on the surface")
    if q.degree < f.degree or abs(q.leading) <= 1e-8 * q.norm:
        rng = np.random.default_rng(0)
        for _ in range(10):
            a, b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
            base, direction = line.base + a * line.direction, line.direction + b * line.base
            q = restrict_to_line(f, base, direction)
            if q.degree == f.degree and abs(q.leading) > 1e-8 * q.norm:
                break
        else:
            raise ContactError("could not parametrize the line off the surface")
    clusters = root_structure(q, cluster_tol=cluster_tol, jet_tol=jet_tol)
    kind = tuple(sorted((c.multiplicity for c in clusters), reverse=True))
    points = tuple((ProjectivePoint(base + c.center * direction), c.multiplicity) for c in clusters)
    return ContactProfile(line, kind, sum(n - 1 for n in kind), classify_type(kind), points)


# --- planar points -----------------------------------------------------------

@dataclass(frozen=True)
class PlanarReport:
    planar: bool
    form: np.ndarray
    form_max: float
    sampled_multiplicities: tuple[int, ...]
    consistent: bool


def planar_report(f: HomogeneousPolynomial, x, tol: float = PLANAR_TOL, directions: int = 6,
                  seed: int = 0) -> PlanarReport:
    """Second fundamental form at ``x`` plus the contact order of sampled tangent lines."""
    x = normalize_coords(np.asarray(getattr(x, "coords", x), dtype=complex))
    try:
        S = second_fundamental_form(f, x)
    except AlgebraError as exc:
        raise ContactError(str(exc)) from exc
    form_max = float(np.abs(S).max())
    U = tangent_basis(gradient(f, x), x)
    rng = np.random.default_rng(seed)
    mults = []
    for _ in range(directions):
        w = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        prof = contact_profile(f, ProjectiveLine(x, U @ w))
        at_x = [m for p, m in prof.contact_points if p.same_as(ProjectivePoint(x), 1e-5)]
        mults.append(max(at_x) if at_x else 0)
    planar = form_max <= tol
    consistent = all((m >= 3) == planar for m in mults)
    return PlanarReport(planar, S, form_max, tuple(mults), consistent)


def is_planar_point(f: HomogeneousPolynomial, x, tol: float = PLANAR_TOL, seed: int = 0) -> bool:
    """Vanishing second fundamental form, confirmed on sampled tangent lines."""
    rep = planar_report(f, x, tol=tol, seed=seed)
    return rep.planar and rep.consistent


# --- tangent lines through a center -----------------------------------------

def _center_point(f: HomogeneousPolynomial, L) -> ProjectivePoint:
    L = L if isinstance(L, ProjectivePoint) else ProjectivePoint(np.asarray(L, dtype=complex))
    if abs(evaluate(f, L.coords)) <= 1e-10 * float(np.abs(f._c).sum()):
        raise ContactError("the center lies on the surface")
    return L


def _tangent_profiles(f, L, count, seed):
    """Yield profiles of lines through ``L`` over sampled branch points."""
    frame = frame_for_center(L)
    curve = square_free_part(discriminant_curve(f, frame, seed=seed), seed=seed)
    ys = sample_branch_points(f, frame, curve, count, seed=seed)
    for i, y in enumerate(ys):
        fiber = fiber_line(frame, y)
        prof = contact_profile(f, fiber)
        # sharpen simple tangents: the sampled y carries the curve's rounding
        if max(prof.type) <= 2 and prof.type.count(2) <= 1:
            pts = [frame.to_frame(p.coords) for p, _ in prof.contact_points]
            k = int(np.argmax(np.abs(y)))
            ts = np.array([u[3] * y[k] / u[k] for u in pts])
            doubles = [i2 for i2, (_, m) in enumerate(prof.contact_points) if m == 2]
            if doubles:
                t0 = ts[doubles[0]]
            else:
                gaps = np.abs(ts[:, None] - ts[None, :]) + np.diag(np.full(len(ts), np.inf))
                a, b = np.unravel_index(np.argmin(gaps), gaps.shape)
                t0 = (ts[a] + ts[b]) / 2
            ref = refine_branch_point(f, frame, y, t0, seed=seed + i)
            if ref is not None:
                prof = contact_profile(f, fiber_line(frame, ref[0]))
        yield i, prof


def sample_tangent_lines_through(f: HomogeneousPolynomial, L, count: int, seed: int = 0) -> list[ContactProfile]:
    """Contact profiles of tangent lines through ``L`` over sampled branch points."""
    if count <= 0:
        return []
    L = _center_point(f, L)
    return [p for _, p in _tangent_profiles(f, L, count, seed) if p.branching_weight >= 1]


@dataclass(frozen=True)
class PXVerdict:
    status: str  # "NotInPX" | "ProbablyInPX"
    witness: ContactProfile | None
    samples_checked: int
    center: ProjectivePoint | None = None

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "samplesChecked": self.samples_checked,
            "center": self.center.to_json() if self.center else None,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def test_px(f: HomogeneousPolynomial, L, sample_budget: int = DEFAULT_PX_BUDGET, seed: int = 0) -> PXVerdict:
    """Look for a simple tangent line through ``L`` among sampled branch points.

    A simple tangent (branching weight 1) witnesses that ``L`` is outside
    P_X; exhausting the budget only makes membership probable.
    """
    L = _center_point(f, L)
    checked = 0
    tangents = 0
    for _, prof in _tangent_profiles(f, L, sample_budget, seed):
        checked += 1
        if prof.branching_weight >= 1:
            tangents += 1
        if prof.branching_weight == 1:
            return PXVerdict("NotInPX", prof, checked, L)
    if tangents == 0:
        raise ContactError("no tangent line through the center was found within the budget")
    return PXVerdict("ProbablyInPX", None, checked, L)


test_px.__test__ = False  # not a pytest test despite the name
