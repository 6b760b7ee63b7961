"""Branch divisor of a projection, its reduced curve, and pencil slices.

For a frame with center at (0:0:0:1) the fiber over ``y`` is the
univariate ``q_y(t) = f(T^-1 (y, t))``; its discriminant is a form of
degree d(d-1) in ``y`` and cuts out the branch divisor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import qmc

from .algebra import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_JET_TOL,
    AlgebraError,
    HomogeneousPolynomial,
    RootCluster,
    UnivariatePolynomial,
    evaluate,
    gradient,
    hessian,
    monomial_exponents,
    restrict_to_line,
    root_structure,
    sylvester_matrix,
)
from .geometry import ProjectiveFrame, normalize_coords

INTERPOLATION_COND_MAX = 1e8
INTERPOLATION_RESIDUAL_TOL = 1e-8
SEPARATION_FLOOR = 1e-4


class BranchLocusError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class PlaneCurve:
    poly: HomogeneousPolynomial
    residual: float = 0.0
    reduced: bool = False

    def __post_init__(self):
        if self.poly.num_vars != 3:
            raise BranchLocusError("plane curves live in 3 variables")

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __call__(self, y):
        return evaluate(self.poly, y)

    def relative_value(self, y) -> float:
        """``|c(y)|`` against the coefficient-sum bound at ``y`` (normalized)."""
        y = normalize_coords(y)
        return abs(self(y)) / float(np.abs(self.poly._c).sum())

    def to_dict(self) -> dict:
        d = self.poly.to_dict()
        d["reduced"] = self.reduced
        d["residual"] = self.residual
        return d


@dataclass(frozen=True)
class SliceLine:
    """Affine line ``y(s) = base + s * direction`` in frame coordinates of P^2."""

    base: tuple[complex, complex, complex]
    direction: tuple[complex, complex, complex]

    def at(self, s) -> np.ndarray:
        s = np.asarray(s, dtype=complex)
        return np.asarray(self.base) + s[..., None] * np.asarray(self.direction)


@dataclass(frozen=True)
class Puncture:
    parameter: complex
    multiplicity: int


@dataclass(frozen=True)
class PencilSlice:
    line: SliceLine
    punctures: tuple[Puncture, ...]
    curve_degree: int
    attempts: int = 1

    @property
    def scale(self) -> float:
        return max([1.0] + [abs(p.parameter) for p in self.punctures])


# --- fiber restriction -------------------------------------------------------

def fiber_coefficients(f: HomogeneousPolynomial, frame: ProjectiveFrame, Y) -> np.ndarray:
    """Coefficients (constant first) of ``t -> f(T^-1 (y, t))`` for each row of ``Y``."""
    Y = np.atleast_2d(np.asarray(Y, dtype=complex))
    d = f.degree
    k = np.arange(d + 1)
    nodes = np.exp(2j * np.pi * k / (d + 1))
    base = np.concatenate([Y, np.zeros((len(Y), 1))], axis=1) @ frame.inverse.T
    C = frame.center_direction
    pts = base[:, None, :] + nodes[None, :, None] * C[None, None, :]
    vals = evaluate(f, pts)
    coef = np.fft.fft(vals, axis=1) / (d + 1)
    coef[:, d] = evaluate(f, C)
    coef[:, 0] = evaluate(f, base)
    return coef


def fiber_polynomial(f, frame, y) -> UnivariatePolynomial:
    return UnivariatePolynomial(fiber_coefficients(f, frame, y)[0])


def discriminant_values(coefs: np.ndarray) -> np.ndarray:
    """Discriminants of a stack of univariate coefficient rows (constant first)."""
    coefs = np.atleast_2d(coefs)
    n = coefs.shape[1] - 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    out = np.empty(len(coefs), dtype=complex)
    for i, c in enumerate(coefs):
        hi = c[::-1]
        dhi = np.polynomial.polynomial.polyder(c)[::-1]
        out[i] = sign * np.linalg.det(sylvester_matrix(hi, dhi)) / hi[0]
    return out


# --- interpolation of plane curves ------------------------------------------

def torus_nodes(count: int, seed: int) -> np.ndarray:
    """Points ``(1, e^{i a}, e^{i b})`` with (a, b) from a scrambled Halton sequence."""
    th = qmc.Halton(d=2, scramble=True, seed=seed).random(count) * 2 * np.pi
    return np.column_stack([np.ones(count), np.exp(1j * th[:, 0]), np.exp(1j * th[:, 1])])


def _vandermonde(Y: np.ndarray, exps: np.ndarray) -> np.ndarray:
    return np.prod(Y[:, None, :] ** exps[None, :, :], axis=-1)


def interpolate_plane_curve(
    values_at,
    degree: int,
    seed: int = 0,
    held_out: int | None = None,
    residual_tol: float = INTERPOLATION_RESIDUAL_TOL,
    node_filter=None,
) -> tuple[HomogeneousPolynomial, float]:
    """Recover a ternary form of known degree from its values.

    ``values_at(Y)`` returns the form at the rows of ``Y``.  The square
    system is solved on ``dim`` nodes and validated on ``held_out`` more.
    If ``node_filter(y)`` is given it returns a value or None; nodes where
    it returns None are skipped and replaced by later sequence points.
    """
    exps = np.array(monomial_exponents(3, degree))
    n = len(exps)
    held_out = held_out or max(8, n // 4)
    for attempt in range(8):
        if node_filter is None:
            Y = torus_nodes(n + held_out, seed + 7919 * attempt)
        else:
            cand = torus_nodes(3 * (n + held_out), seed + 7919 * attempt)
            kept, kept_vals = [], []
            for y in cand:
                v = node_filter(y)
                if v is not None:
                    kept.append(y)
                    kept_vals.append(v)
                    if len(kept) == n + held_out:
                        break
            if len(kept) < n + held_out:
                raise BranchLocusError("too many rejected interpolation nodes")
            Y = np.array(kept)
            kept_vals = np.array(kept_vals)
            values_at = lambda _Y, _v=kept_vals: _v  # noqa: E731
        V = _vandermonde(Y[:n], exps)
        if np.linalg.cond(V) <= INTERPOLATION_COND_MAX:
            break
    else:
        raise BranchLocusError("could not find a well-conditioned node set")
    vals = np.asarray(values_at(Y), dtype=complex)
    coef = np.linalg.solve(V, vals[:n])
    pred = _vandermonde(Y[n:], exps) @ coef
    scale = max(np.abs(vals).max(), 1e-300)
    residual = float(np.abs(pred - vals[n:]).max() / scale)
    if residual > residual_tol:
        raise BranchLocusError(
            f"interpolation residual {residual:.2e} exceeds {residual_tol:.0e} "
            "(center on the surface or singular surface?)"
        )
    return HomogeneousPolynomial.from_terms(zip(map(tuple, exps), coef), num_vars=3), residual


def discriminant_curve(f: HomogeneousPolynomial, frame: ProjectiveFrame, seed: int = 0) -> PlaneCurve:
    """Branch divisor: the fiberwise discriminant as a plane curve of degree d(d-1)."""
    d = f.degree
    if d < 2:
        raise BranchLocusError("projection of a plane has no branch locus")
    lead = abs(evaluate(f, frame.center_direction))
    if lead <= 1e-10 * float(np.abs(f._c).sum()):
        raise BranchLocusError("center lies on the surface")
    poly, residual = interpolate_plane_curve(
        lambda Y: discriminant_values(fiber_coefficients(f, frame, Y)), d * (d - 1), seed=seed
    )
    return PlaneCurve(poly, residual, reduced=False)


def _generic_direction(c: PlaneCurve, rng) -> np.ndarray:
    for _ in range(50):
        b = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        b /= np.linalg.norm(b)
        if c.relative_value(b) > 1e-3:
            return b
    raise BranchLocusError("no direction off the curve found")


def restricted_clusters(
    c: PlaneCurve, base, direction, cluster_tol=DEFAULT_CLUSTER_TOL, jet_tol=DEFAULT_JET_TOL
) -> list[RootCluster]:
    g = restrict_to_line(c.poly, base, direction)
    if g.degree != c.degree:
        raise BranchLocusError("slice direction lies on the curve")
    return root_structure(g, cluster_tol=cluster_tol, jet_tol=jet_tol)


def square_free_part(c: PlaneCurve, seed: int = 0, validation: int = 12) -> PlaneCurve:
    """Reduced curve with the same zero set.

    Along a fixed generic direction ``b`` the reduced form ``h`` restricted
    to ``a + s b`` is ``h(b) * prod(s - r_i)`` over the distinct roots, so
    ``h(a) / h(b) = prod(-r_i)``; these values are interpolated.
    """
    rng = np.random.default_rng(seed)
    b = _generic_direction(c, rng)
    counts = []
    for _ in range(5):
        try:
            counts.append(len(restricted_clusters(c, rng.standard_normal(3) + 1j * rng.standard_normal(3), b)))
        except (BranchLocusError, AlgebraError):
            pass
    if not counts:
        raise BranchLocusError("could not restrict the curve to probe lines")
    e = max(set(counts), key=lambda k: (counts.count(k), k))
    if e == c.degree:
        return PlaneCurve(c.poly, c.residual, reduced=True)

    def node_value(a):
        try:
            cl = restricted_clusters(c, a, b)
        except (BranchLocusError, AlgebraError):
            return None
        if len(cl) != e:
            return None
        return np.prod([-k.center for k in cl])

    poly, residual = interpolate_plane_curve(None, e, seed=seed + 1, node_filter=node_value)
    reduced = PlaneCurve(poly, residual, reduced=True)
    # zero sets agree: points of the reduced curve lie on c
    for _ in range(validation // 3):
        a = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        for cl in restricted_clusters(reduced, a, b):
            y = a + cl.center * b
            if c.relative_value(y) > 1e-7 or cl.multiplicity != 1:
                raise BranchLocusError("square-free part does not reproduce the zero set")
    return reduced


def local_multiplicity(c: PlaneCurve, y, tol: float = 1e-7, seed: int = 0) -> int:
    """Vanishing order of ``c`` at ``y`` along random lines (minimum over three)."""
    y = normalize_coords(getattr(y, "coords", y))
    rng = np.random.default_rng(seed)
    orders = []
    for _ in range(3):
        v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        v -= (y.conj() @ v) / (y.conj() @ y) * y
        g = restrict_to_line(c.poly, y, v / np.linalg.norm(v))
        coef = np.abs(g.coefficients) / g.norm
        if coef[0] > 1e-6:
            raise BranchLocusError("point is not on the curve")
        orders.append(int(np.flatnonzero(coef > tol)[0]))
    return min(orders)


def pencil_slice(
    c: PlaneCurve,
    base_point,
    seed: int = 0,
    separation_floor: float = SEPARATION_FLOOR,
    retries: int = 20,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    real_direction: bool = False,
) -> PencilSlice:
    """Random line through ``base_point`` and where it meets ``c``.

    Retries with a fresh line while two punctures are closer than
    ``separation_floor`` times the slice scale.
    """
    a = np.asarray(getattr(base_point, "coords", base_point), dtype=complex)
    if c.relative_value(a) <= 1e-9:
        raise BranchLocusError("base point lies on the curve")
    rng = np.random.default_rng(seed)
    for attempt in range(1, retries + 1):
        b = rng.standard_normal(3) + (0 if real_direction else 1j * rng.standard_normal(3))
        b = b - (a.conj() @ b) / (a.conj() @ a) * a
        b = b / np.linalg.norm(b) * np.linalg.norm(a)
        try:
            clusters = restricted_clusters(c, a, b, cluster_tol=cluster_tol)
        except (BranchLocusError, AlgebraError):
            continue
        s = np.array([k.center for k in clusters])
        scale = max(1.0, float(np.abs(s).max()))
        if len(s) > 1:
            gaps = np.abs(s[:, None] - s[None, :]) + np.diag(np.full(len(s), np.inf))
            if gaps.min() <= separation_floor * scale:
                continue
        punct = tuple(Puncture(complex(k.center), k.multiplicity) for k in clusters)
        return PencilSlice(SliceLine(tuple(a), tuple(b)), punct, c.degree, attempt)
    raise BranchLocusError("retry budget exhausted: curve degenerate along the pencil")


# --- points on the branch locus ---------------------------------------------

def refine_branch_point(f, frame, y, t0, iters: int = 12, seed: int = 0):
    """Newton on the ramification system ``{f = df/dt = 0}``.

    Unknowns are ``t`` and a shift of ``y`` along a random transverse
    line.  Returns ``(y, t)`` or None when the Jacobian is singular (flex
    or higher contact) or Newton does not settle.
    """
    y = np.asarray(y, dtype=complex)
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    v -= (y.conj() @ v) / (y.conj() @ y) * y
    v /= np.linalg.norm(v)
    A = frame.from_frame(np.concatenate([y, [0]]))
    V = frame.from_frame(np.concatenate([v, [0]]))
    C = frame.center_direction
    s, t = 0j, complex(t0)
    for _ in range(iters):
        P = A + s * V + t * C
        g = gradient(f, P)
        H = hessian(f, P)
        val = np.array([evaluate(f, P), g @ C])
        J = np.array([[g @ V, g @ C], [V @ H @ C, C @ H @ C]])
        if abs(np.linalg.det(J)) <= 1e-10 * max(1e-300, np.abs(J).max() ** 2):
            return None
        step = np.linalg.solve(J, -val)
        s, t = s + step[0], t + step[1]
        if np.abs(step).max() <= 1e-13 * max(1.0, abs(t)):
            break
    else:
        return None
    if abs(s) > 1e-3:
        return None
    return y + s * v, t


def sample_branch_points(
    f: HomogeneousPolynomial,
    frame: ProjectiveFrame,
    curve: PlaneCurve,
    count: int,
    seed: int = 0,
):
    """Points of ``curve`` along a stratified pencil of lines, as P^2 coordinate arrays.

    Lines pass through a random base point with directions spread evenly
    in angle between two random directions; each line contributes its
    distinct intersection points in order.
    """
    if count <= 0:
        return []
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(3)
    while curve.relative_value(a) < 1e-6:
        a = rng.standard_normal(3)
    u = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    w = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    per_line = max(1, len(restricted_clusters(curve, a, u)))
    n_lines = max(1, math.ceil(count / per_line)) + 2
    out = []
    for k in range(n_lines * 4):
        theta = (k + rng.random()) * np.pi / n_lines
        b = math.cos(theta) * u + math.sin(theta) * w
        try:
            clusters = restricted_clusters(curve, a, b)
        except (BranchLocusError, AlgebraError):
            continue
        for cl in clusters:
            out.append(normalize_coords(a + cl.center * b))
            if len(out) == count:
                return out
    if not out:
        raise BranchLocusError("branch-curve sampling failed")
    return out
