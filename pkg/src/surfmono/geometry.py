"""Points, lines and projection frames in complex projective space."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .algebra import HomogeneousPolynomial, monomial_exponents

# Projective equality tolerance on normalized representatives.
EQUALITY_TOL = 1e-9


class GeometryError(ValueError):
    pass


def normalize_coords(x) -> np.ndarray:
    """Scale so the first largest-magnitude coordinate equals 1."""
    x = np.asarray(x, dtype=complex)
    k = int(np.argmax(np.abs(x)))
    if x[k] == 0:
        raise GeometryError("zero vector is not a projective point")
    return x / x[k]


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    coords: np.ndarray

    def __post_init__(self):
        c = normalize_coords(self.coords)
        c.setflags(write=False)
        object.__setattr__(self, "coords", c)

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def same_as(self, other: "ProjectivePoint", tol: float = EQUALITY_TOL) -> bool:
        return len(self.coords) == len(other.coords) and bool(
            np.abs(self.coords - other.coords).max() <= tol
        )

    def to_json(self) -> list[list[float]]:
        return [[float(c.real), float(c.imag)] for c in self.coords]

    @classmethod
    def from_json(cls, data) -> "ProjectivePoint":
        return cls(np.array([complex(a, b) for a, b in data]))

    def __repr__(self):
        return "(" + ":".join(_fmt(c) for c in self.coords) + ")"


def _fmt(c: complex) -> str:
    c = complex(round(c.real, 10), round(c.imag, 10))
    return f"{c.real:g}" if c.imag == 0 else f"{c:g}"


def point(*coords) -> ProjectivePoint:
    if len(coords) == 1:
        coords = coords[0]
    return ProjectivePoint(np.asarray(coords, dtype=complex))


@dataclass(frozen=True, eq=False)
class ProjectiveLine:
    """Line ``{base + t * direction}``; direction kept orthogonal to base."""

    base: np.ndarray
    direction: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.base, dtype=complex)
        b = np.asarray(self.direction, dtype=complex)
        b = b - (a.conj() @ b) / (a.conj() @ a) * a
        sv = np.linalg.svd(np.vstack([a, b]), compute_uv=False)
        if sv[1] <= 1e-12 * sv[0]:
            raise GeometryError("points do not span a line")
        object.__setattr__(self, "base", a)
        object.__setattr__(self, "direction", b)

    @property
    def base_point(self) -> ProjectivePoint:
        return ProjectivePoint(self.base)

    @property
    def direction_point(self) -> ProjectivePoint:
        return ProjectivePoint(self.direction)

    def point_at(self, t: complex) -> np.ndarray:
        return self.base + t * self.direction

    def contains(self, x, tol: float = 1e-9) -> bool:
        M = np.vstack([self.base / np.linalg.norm(self.base),
                       self.direction / np.linalg.norm(self.direction),
                       np.asarray(getattr(x, "coords", x), dtype=complex)
                       / np.linalg.norm(getattr(x, "coords", x))])
        sv = np.linalg.svd(M, compute_uv=False)
        return bool(sv[2] <= tol)

    def to_json(self) -> dict:
        return {"base": ProjectivePoint(self.base).to_json(),
                "direction": [[float(c.real), float(c.imag)] for c in self.direction]}


def line_through(a, b) -> ProjectiveLine:
    a = getattr(a, "coords", a)
    b = getattr(b, "coords", b)
    if ProjectivePoint(a).same_as(ProjectivePoint(b)):
        raise GeometryError("coincident points do not determine a line")
    return ProjectiveLine(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


@dataclass(frozen=True, eq=False)
class ProjectiveFrame:
    """Unitary change of coordinates moving the center to (0:0:0:1).

    With frame coordinates ``(y0:y1:y2:t) = T x`` the projection from the
    center is ``(y0:y1:y2:t) -> (y0:y1:y2)``.
    """

    matrix: np.ndarray
    center: ProjectivePoint

    @cached_property
    def inverse(self) -> np.ndarray:
        return np.linalg.inv(self.matrix)

    def to_frame(self, x) -> np.ndarray:
        return self.matrix @ np.asarray(getattr(x, "coords", x), dtype=complex)

    def from_frame(self, y) -> np.ndarray:
        return self.inverse @ np.asarray(y, dtype=complex)

    def pushforward(self, f: HomogeneousPolynomial) -> HomogeneousPolynomial:
        """``f o T^-1`` expressed in frame coordinates."""
        return compose_linear(f, self.inverse)

    @property
    def center_direction(self) -> np.ndarray:
        """Representative of the center: the image of e4 under ``T^-1``."""
        return self.inverse[:, 3]


def frame_for_center(L) -> ProjectiveFrame:
    """Householder frame ``T`` with ``T L`` proportional to e4."""
    L = L if isinstance(L, ProjectivePoint) else ProjectivePoint(np.asarray(L, dtype=complex))
    u = L.coords / np.linalg.norm(L.coords)
    alpha = np.exp(1j * np.angle(u[3])) if abs(u[3]) > 0 else 1.0
    w = u.copy()
    w[3] -= alpha
    nw = np.vdot(w, w).real
    H = np.eye(4, dtype=complex)
    if nw > 1e-28:
        H -= 2 * np.outer(w, w.conj()) / nw
    return ProjectiveFrame(H, L)


def project(frame: ProjectiveFrame, x) -> ProjectivePoint:
    y = frame.to_frame(x)
    if np.abs(y[:3]).max() <= 1e-12 * np.abs(y).max():
        raise GeometryError("projection is undefined at the center")
    return ProjectivePoint(y[:3])


def fiber_line(frame: ProjectiveFrame, y) -> ProjectiveLine:
    """Line through the center over ``y``; ``t`` is the frame's last coordinate."""
    y = np.asarray(getattr(y, "coords", y), dtype=complex)
    base = frame.from_frame(np.concatenate([y, [0]]))
    return ProjectiveLine(base, frame.center_direction)


def compose_linear(p: HomogeneousPolynomial, A: np.ndarray) -> HomogeneousPolynomial:
    """The form ``y -> p(A y)`` by expansion of powers of linear forms.

    ``A`` has shape (num_vars, m); the result is a form in ``m`` variables.
    """
    A = np.asarray(A, dtype=complex)
    n, m = A.shape
    if n != p.num_vars:
        raise GeometryError("matrix does not match the number of variables")
    unit = [tuple(1 if j == i else 0 for j in range(m)) for i in range(m)]
    linear = [{unit[j]: A[i, j] for j in range(m) if A[i, j] != 0} for i in range(n)]

    def mul(a: dict, b: dict) -> dict:
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return out

    power_cache: dict[tuple[int, int], dict] = {}

    def power(i: int, k: int) -> dict:
        if k == 0:
            return {(0,) * m: 1.0}
        if (i, k) not in power_cache:
            power_cache[(i, k)] = mul(power(i, k - 1), linear[i])
        return power_cache[(i, k)]

    total: dict = {e: 0j for e in monomial_exponents(m, p.degree)}
    for e, c in p.terms:
        prod = {(0,) * m: c}
        for i, k in enumerate(e):
            if k:
                prod = mul(prod, power(i, k))
        for ee, cc in prod.items():
            total[ee] += cc
    return HomogeneousPolynomial.from_terms(total.items())
