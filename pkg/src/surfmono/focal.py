"""Focal points of two-parameter families of lines in P^3.

A member ``s`` of a family is the line through ``p(s)`` and ``v(s)``;
its points are ``x(t) = p + t v`` (``t = inf`` gives ``v``).  The
characteristic matrix sends the two parameter directions to the parts of
``d x / d s_i`` normal to the member.  Its entries are affine in ``t`` and
its determinant, the focal polynomial, has degree at most 2.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import least_squares

from .algebra import HomogeneousPolynomial, evaluate, gradient, hessian, random_polynomial

FD_STEP = 1e-5
ZERO_DET_TOL = 1e-9
ROOT_COINCIDENCE_TOL = 1e-6


class FocalError(ValueError):
    pass


Evaluator = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]
Derivative = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True, eq=False)
class LineFamily:
    """``s -> (p(s), v(s))`` with analytic or finite-difference derivatives.

    ``derivative(s)`` returns arrays of shape (2, 4): rows are the partials
    of ``p`` and of ``v`` along ``s_1`` and ``s_2``.
    """

    name: str
    evaluator: Evaluator
    domain: tuple[tuple[float, float], tuple[float, float]]
    derivative: Derivative | None = None
    step: float = FD_STEP
    complex_parameters: bool = False

    @property
    def mode(self) -> str:
        return "Analytic" if self.derivative is not None else f"FiniteDifference({self.step:g})"

    def __call__(self, s) -> tuple[np.ndarray, np.ndarray]:
        p, v = self.evaluator(np.asarray(s))
        return np.asarray(p, dtype=complex), np.asarray(v, dtype=complex)

    def derivatives(self, s, mode: str | None = None) -> tuple[np.ndarray, np.ndarray]:
        s = np.asarray(s)
        if self.derivative is not None and mode != "fd":
            dp, dv = self.derivative(s)
            return np.asarray(dp, dtype=complex), np.asarray(dv, dtype=complex)
        dp = np.zeros((2, 4), dtype=complex)
        dv = np.zeros((2, 4), dtype=complex)
        for i in range(2):
            h = self.step * max(1.0, abs(s[i]))
            e = np.zeros(2, dtype=s.dtype if np.iscomplexobj(s) else float)
            e[i] = h
            p1, v1 = self(s + e)
            p0, v0 = self(s - e)
            dp[i] = (p1 - p0) / (2 * h)
            dv[i] = (v1 - v0) / (2 * h)
        return dp, dv

    def sample(self, count: int, seed: int = 0) -> np.ndarray:
        rng = np.random.default_rng(seed)
        lo = np.array([d[0] for d in self.domain])
        hi = np.array([d[1] for d in self.domain])
        return lo + (hi - lo) * rng.random((count, 2))


# --- characteristic matrix -------------------------------------------------

def _complement(p: np.ndarray, v: np.ndarray, chart: str | int) -> np.ndarray:
    """2x4 map killing span{p, v}: orthonormal by default, else a seeded random chart."""
    M = np.column_stack([p, v])
    if np.linalg.matrix_rank(M, tol=1e-10 * np.abs(M).max()) < 2:
        raise FocalError("p(s) and v(s) are dependent")
    if chart == "orthonormal":
        Q, _ = np.linalg.qr(np.column_stack([M, np.eye(4, dtype=complex)]))
        return Q[:, 2:4].conj().T
    rng = np.random.default_rng(int(chart))
    W = rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2))
    B = np.column_stack([M, W])
    if np.linalg.cond(B) > 1e10:
        raise FocalError("degenerate chart")
    return np.linalg.inv(B)[2:4]


def characteristic_parts(fam: LineFamily, s, chart: str | int = "orthonormal", mode: str | None = None):
    """``(A0, A1)`` with characteristic matrix ``A(t) = A0 + t A1``."""
    p, v = fam(s)
    dp, dv = fam.derivatives(s, mode)
    N = _complement(p, v, chart)
    return N @ dp.T, N @ dv.T


def characteristic_matrix(fam: LineFamily, s, t, chart: str | int = "orthonormal") -> np.ndarray:
    A0, A1 = characteristic_parts(fam, s, chart)
    return A0 + t * A1


@dataclass(frozen=True)
class Focus:
    t: complex
    point: np.ndarray
    multiplicity: int


@dataclass
class FocusReport:
    s: tuple
    coefficients: tuple[complex, complex, complex]  # constant first
    degree: int
    foci: list[Focus]
    infinite_multiplicity: int
    fundamental: list[bool | None] = field(default_factory=list)

    def to_dict(self) -> dict:
        c = lambda z: [float(np.real(z)), float(np.imag(z))]  # noqa: E731
        return {
            "s": [c(x) for x in self.s],
            "focalPolynomial": [c(x) for x in self.coefficients],
            "degree": self.degree,
            "foci": [{"t": c(f.t), "point": [c(x) for x in f.point], "multiplicity": f.multiplicity}
                     for f in self.foci],
            "infiniteMultiplicity": self.infinite_multiplicity,
            "fundamental": self.fundamental,
        }


def focal_polynomial(fam: LineFamily, s, chart: str | int = "orthonormal", mode: str | None = None):
    """Coefficients ``(c0, c1, c2)`` of ``det A(t)`` and the entry scale."""
    A0, A1 = characteristic_parts(fam, s, chart, mode)
    c0 = np.linalg.det(A0)
    c2 = np.linalg.det(A1)
    c1 = np.linalg.det(A0 + A1) - c0 - c2
    # reference size: the derivatives themselves, so that a family whose
    # derivatives all stay inside the member still reads as degenerate
    p, v = fam(s)
    dp, dv = fam.derivatives(s, mode)
    rel = max(np.abs(dp).max(), np.abs(dv).max()) / max(np.abs(p).max(), np.abs(v).max())
    scale = max(np.abs(A0).max(), np.abs(A1).max(), rel)
    return (complex(c0), complex(c1), complex(c2)), float(scale)


def is_identically_zero(coefs, scale: float, tol: float = ZERO_DET_TOL) -> bool:
    nodes = np.cos((2 * np.arange(5) + 1) * np.pi / 10)
    vals = np.polynomial.polynomial.polyval(nodes, np.asarray(coefs))
    return bool(np.abs(vals).max() <= tol * scale ** 2)


def foci_on_member(fam: LineFamily, s, tol: float = ROOT_COINCIDENCE_TOL,
                   chart: str | int = "orthonormal", mode: str | None = None) -> FocusReport:
    """Roots of the focal polynomial on member ``s`` with multiplicities."""
    s = np.asarray(s)
    coefs, scale = focal_polynomial(fam, s, chart, mode)
    if is_identically_zero(coefs, scale):
        raise FocalError("focal polynomial vanishes identically: the family does not fill space")
    c0, c1, c2 = coefs
    size = max(abs(c0), abs(c1), abs(c2))
    degree = 2 if abs(c2) > 1e-12 * size else (1 if abs(c1) > 1e-12 * size else 0)
    p, v = fam(s)
    foci: list[Focus] = []
    if degree == 2:
        disc = np.sqrt(complex(c1 * c1 - 4 * c0 * c2))
        # stable quadratic formula
        q = -0.5 * (c1 + (disc if (np.conj(c1) * disc).real >= 0 else -disc))
        r1 = q / c2
        r2 = c0 / q if q != 0 else r1
        if abs(r1 - r2) <= tol * max(1.0, abs(r1), abs(r2)):
            t = -c1 / (2 * c2)
            foci.append(Focus(complex(t), p + t * v, 2))
        else:
            for t in sorted((r1, r2), key=lambda z: (z.real, z.imag)):
                foci.append(Focus(complex(t), p + t * v, 1))
    elif degree == 1:
        t = -c0 / c1
        foci.append(Focus(complex(t), p + t * v, 1))
    return FocusReport(tuple(complex(x) for x in s), coefs, degree, foci, 2 - degree)


# --- fundamental points -----------------------------------------------------

def _incidence_residual(fam: LineFamily, x: np.ndarray):
    xn = x / np.linalg.norm(x)

    def res(s):
        p, v = fam(s)
        Q, _ = np.linalg.qr(np.column_stack([p, v]))
        r = xn - Q @ (Q.conj().T @ xn)
        return r

    return res


def is_fundamental_point(fam: LineFamily, x, tol: float = 1e-8, sample_budget: int = 24,
                         seed: int = 0) -> bool | None:
    """Whether a curve of members passes through ``x``.

    Solves ``x in line(s)`` by least squares from ``sample_budget`` starts.
    No solution or only isolated ones (full-rank Jacobian) gives False; a
    rank drop that continues to nearby solutions gives True; anything else
    is None (unresolved).
    """
    x = np.asarray(getattr(x, "coords", x), dtype=complex)
    res = _incidence_residual(fam, x)
    lo = np.array([d[0] for d in fam.domain])
    hi = np.array([d[1] for d in fam.domain])
    width = float(np.max(hi - lo))

    def real_res(s):
        r = res(s)
        return np.concatenate([r.real, r.imag])

    def solve(s0):
        out = least_squares(real_res, s0, bounds=(lo, hi), xtol=1e-14, ftol=1e-15, gtol=1e-15)
        ok = np.linalg.norm(out.fun) <= tol
        return out.x, ok, out.jac

    sols = []
    for s0 in fam.sample(sample_budget, seed):
        s, ok, J = solve(s0)
        if ok:
            sols.append((s, J))
    if not sols:
        return False
    undecided = False
    for s, J in sols:
        sv = np.linalg.svd(J, compute_uv=False)
        if sv.max() <= 1e-8:
            return True  # residual flat to first order: a whole neighbourhood of members
        if sv.min() > 1e-6 * sv.max():
            continue
        _, _, vt = np.linalg.svd(J)
        n = vt[-1]
        delta = 1e-2 * width
        hits = 0
        for sign in (1, -1):
            s1, ok1, _ = solve(np.clip(s + sign * delta * n, lo, hi))
            if ok1 and np.linalg.norm(s1 - s) >= 0.25 * delta:
                hits += 1
        if hits:
            return True
        undecided = True
    return None if undecided else False


# --- demo families -----------------------------------------------------------

def point_family(q=(0, 0, 0, 1), analytic: bool = True) -> LineFamily:
    """All lines through ``q``: ``p = q`` and ``v = (1, s1, s2, 0)``."""
    q = np.asarray(q, dtype=complex)

    def ev(s):
        return q, np.array([1, s[0], s[1], 0], dtype=complex)

    def der(s):
        dv = np.zeros((2, 4), dtype=complex)
        dv[0, 1] = dv[1, 2] = 1
        return np.zeros((2, 4), dtype=complex), dv

    return LineFamily("point", ev, ((-1.0, 1.0), (-1.0, 1.0)), der if analytic else None)


def translation_family() -> LineFamily:
    """Parallel lines ``p = (s1, s2, 0, 1)`` with the fixed direction ``(0, 0, 1, 0)``."""
    v = np.array([0, 0, 1, 0], dtype=complex)

    def ev(s):
        return np.array([s[0], s[1], 0, 1], dtype=complex), v

    def der(s):
        dp = np.zeros((2, 4), dtype=complex)
        dp[0, 0] = dp[1, 1] = 1
        return dp, np.zeros((2, 4), dtype=complex)

    return LineFamily("translation", ev, ((-1.0, 1.0), (-1.0, 1.0)), der)


SPHERE = HomogeneousPolynomial.from_terms(
    [((2, 0, 0, 0), 1), ((0, 2, 0, 0), 1), ((0, 0, 2, 0), 1), ((0, 0, 0, 2), -1)]
)


def sphere_tangent_family(angle: float = 0.7) -> LineFamily:
    """Lines tangent to ``x0^2 + x1^2 + x2^2 = x3^2``, one per tangency point.

    The tangency point is ``(cos s1 cos s2, sin s1 cos s2, sin s2, 1)``;
    the direction makes a fixed ``angle`` with the parallel of latitude.
    ``p(s)`` is the tangency point, so it sits at ``t = 0``.
    """
    ca, sa = math.cos(angle), math.sin(angle)

    def ev(s):
        a, b = float(np.real(s[0])), float(np.real(s[1]))
        P = np.array([math.cos(a) * math.cos(b), math.sin(a) * math.cos(b), math.sin(b), 1.0])
        e1 = np.array([-math.sin(a), math.cos(a), 0.0, 0.0])
        e2 = np.array([-math.cos(a) * math.sin(b), -math.sin(a) * math.sin(b), math.cos(b), 0.0])
        return P.astype(complex), (ca * e1 + sa * e2).astype(complex)

    def der(s):
        a, b = float(np.real(s[0])), float(np.real(s[1]))
        sa_, ca_, sb, cb = math.sin(a), math.cos(a), math.sin(b), math.cos(b)
        dp = np.array([[-sa_ * cb, ca_ * cb, 0, 0], [-ca_ * sb, -sa_ * sb, cb, 0]], dtype=complex)
        de1 = np.array([[-ca_, -sa_, 0, 0], [0, 0, 0, 0]])
        de2 = np.array([[sa_ * sb, -ca_ * sb, 0, 0], [-ca_ * cb, -sa_ * cb, -sb, 0]])
        return dp, (ca * de1 + sa * de2).astype(complex)

    return LineFamily("sphere-tangent", ev, ((0.2, 1.2), (-0.6, 0.6)), der)


def flex_tangent_family() -> LineFamily:
    """Asymptotic tangent lines of the graph ``z = x^3/3 + y^2/2`` over ``x < 0``.

    The graph is the cubic ``x3^2 x2 = x0^3/3 + x1^2 x3/2``; the direction
    ``(1, r, x^2 + y r)`` with ``r = sqrt(-2x)`` kills the second fundamental form.
    """

    def ev(s):
        x, y = float(np.real(s[0])), float(np.real(s[1]))
        r = math.sqrt(-2 * x)
        P = np.array([x, y, x ** 3 / 3 + y ** 2 / 2, 1.0])
        return P.astype(complex), np.array([1.0, r, x * x + y * r, 0.0], dtype=complex)

    def der(s):
        x, y = float(np.real(s[0])), float(np.real(s[1]))
        r = math.sqrt(-2 * x)
        dp = np.array([[1, 0, x * x, 0], [0, 1, y, 0]], dtype=complex)
        dv = np.array([[0, -1 / r, 2 * x - y / r, 0], [0, 0, r, 0]], dtype=complex)
        return dp, dv

    return LineFamily("flex-tangent", ev, ((-1.5, -0.5), (-0.5, 0.5)), der)


FLEX_SURFACE = HomogeneousPolynomial.from_terms(
    [((0, 0, 1, 2), 1), ((3, 0, 0, 0), -1 / 3), ((0, 2, 0, 1), -1 / 2)]
)


def _bitangent_system(f, s, z):
    """Residuals of a line through (1, 0, s1, s2), (0, 1, z0, z1) touching f at t = z2, z3."""
    a = np.array([1, 0, s[0], s[1]], dtype=complex)
    b = np.array([0, 1, z[0], z[1]], dtype=complex)
    out = []
    for t in (z[2], z[3]):
        x = a + t * b
        g = gradient(f, x)
        out.extend([evaluate(f, x), g @ b])
    return np.array(out)


def _bitangent_jacobian(f, s, z):
    a = np.array([1, 0, s[0], s[1]], dtype=complex)
    b = np.array([0, 1, z[0], z[1]], dtype=complex)
    J = np.zeros((4, 4), dtype=complex)
    for k, t in enumerate((z[2], z[3])):
        x = a + t * b
        g = gradient(f, x)
        H = hessian(f, x)
        # d/dz0, d/dz1 move b[2], b[3]; d/dt moves along b
        J[2 * k, 0], J[2 * k, 1] = t * g[2], t * g[3]
        J[2 * k + 1, 0] = t * (H[2] @ b) + g[2]
        J[2 * k + 1, 1] = t * (H[3] @ b) + g[3]
        J[2 * k, 2 + k] = g @ b
        J[2 * k + 1, 2 + k] = b @ H @ b
    return J


def _newton_bitangent(f, s, z, iters: int = 40):
    for _ in range(iters):
        F = _bitangent_system(f, s, z)
        J = _bitangent_jacobian(f, s, z)
        try:
            dz = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            return None
        z = z + dz
        if np.abs(dz).max() <= 1e-14 * max(1.0, np.abs(z).max()):
            return z
        if not np.all(np.isfinite(z)) or np.abs(z).max() > 1e6:
            return None
    return z if np.abs(_bitangent_system(f, s, z)).max() < 1e-12 else None


def bitangent_family(f: HomogeneousPolynomial | None = None, seed: int = 0, radius: float = 0.05) -> LineFamily:
    """Local branch of the bitangent lines of a quartic near a seeded member.

    Members are ``(1, 0, s1, s2) + t (0, 1, z0, z1)``; for each ``s`` the
    unknowns ``z0, z1`` and the tangency parameters are found by Newton from
    the seed solution.  ``p`` sits at ``t = 0`` and the tangency parameters
    are exposed through :func:`bitangent_contacts`.
    """
    rng = np.random.default_rng(seed)
    if f is None:
        f = random_polynomial(4, 4, rng)
    for _ in range(2000):
        s0 = rng.standard_normal(2) * 0.5
        z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        z = _newton_bitangent(f, s0, z)
        if z is not None and abs(z[2] - z[3]) > 1e-3 * max(1.0, abs(z[2])):
            break
    else:
        raise FocalError("no bitangent line found")
    seed_s, seed_z = s0.astype(complex), z

    def solve(s):
        s = np.asarray(s, dtype=complex)
        sol = _newton_bitangent(f, s, seed_z.copy())
        if sol is None:
            raise FocalError("bitangent continuation failed")
        return sol

    def ev(s):
        z = solve(s)
        return (np.array([1, 0, s[0], s[1]], dtype=complex), np.array([0, 1, z[0], z[1]], dtype=complex))

    dom = tuple((float(seed_s[i].real) - radius, float(seed_s[i].real) + radius) for i in range(2))
    fam = LineFamily("bitangent", ev, dom)
    object.__setattr__(fam, "_solve", solve)
    object.__setattr__(fam, "surface", f)
    return fam


def bitangent_contacts(fam: LineFamily, s) -> tuple[complex, complex]:
    z = fam._solve(s)
    return complex(z[2]), complex(z[3])


# --- custom families ---------------------------------------------------------

def _poly2(terms):
    """``[(i, j, c)]`` list for ``sum c s1^i s2^j``."""
    return [(int(t["e"][0]), int(t["e"][1]), complex(*t["c"])) for t in terms]


def _eval2(terms, s):
    return sum(c * s[0] ** i * s[1] ** j for i, j, c in terms)


def _deriv2(terms, k):
    out = []
    for i, j, c in terms:
        e = (i, j)[k]
        if e:
            out.append((i - (k == 0), j - (k == 1), c * e))
    return out


def custom_family(data: dict | str) -> LineFamily:
    """Family from JSON: ``{"p": [comp]*4, "v": [comp]*4, "domain": [[a,b],[c,d]]}``.

    Each component is a list of terms ``{"e": [i, j], "c": [re, im]}`` of a
    polynomial in ``s1, s2``; derivatives are exact.
    """
    if isinstance(data, str):
        data = json.loads(data)
    P = [_poly2(c) for c in data["p"]]
    V = [_poly2(c) for c in data["v"]]
    if len(P) != 4 or len(V) != 4:
        raise FocalError("p and v need four components each")
    dP = [[_deriv2(c, k) for c in P] for k in range(2)]
    dV = [[_deriv2(c, k) for c in V] for k in range(2)]

    def ev(s):
        return (np.array([_eval2(c, s) for c in P], dtype=complex),
                np.array([_eval2(c, s) for c in V], dtype=complex))

    def der(s):
        return (np.array([[_eval2(c, s) for c in row] for row in dP], dtype=complex),
                np.array([[_eval2(c, s) for c in row] for row in dV], dtype=complex))

    dom = tuple(tuple(float(x) for x in d) for d in data.get("domain", [[-1, 1], [-1, 1]]))
    return LineFamily(data.get("name", "custom"), ev, dom, der)


DEMO_FAMILIES = {
    "point": point_family,
    "translation": translation_family,
    "sphere-tangent": sphere_tangent_family,
    "flex-tangent": flex_tangent_family,
    "bitangent": bitangent_family,
}
