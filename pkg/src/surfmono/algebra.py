"""Complex polynomial arithmetic used throughout the package.

Homogeneous forms in 3 or 4 variables are stored sparsely as exponent
vectors with complex coefficients.  Univariate polynomials are dense,
constant term first (numpy.polynomial convention).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

# Coefficients below this fraction of the largest one are dropped on storage.
NORMALIZATION_FLOOR = 1e-14
DEFAULT_CLUSTER_TOL = 1e-7
DEFAULT_JET_TOL = 1e-10


class AlgebraError(ValueError):
    pass


class RootFindingError(AlgebraError):
    pass


def _as_vector(x, n: int | None = None) -> np.ndarray:
    v = np.asarray(x, dtype=complex)
    if n is not None and v.shape[-1] != n:
        raise AlgebraError(f"expected {n} coordinates, got {v.shape[-1]}")
    return v


@dataclass(frozen=True, eq=False)
class HomogeneousPolynomial:
    """Sparse homogeneous form ``sum c_e x^e``.

    Build instances with :meth:`from_terms`; it merges duplicate exponents,
    scales to unit max-magnitude coefficient (unless ``normalize=False``) and
    drops coefficients under the normalization floor.
    """

    num_vars: int
    degree: int
    exponents: tuple[tuple[int, ...], ...]
    coefficients: tuple[complex, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise AlgebraError("degree must be non-negative")
        if len(self.exponents) != len(self.coefficients):
            raise AlgebraError("exponent/coefficient length mismatch")
        if len(set(self.exponents)) != len(self.exponents):
            raise AlgebraError("duplicate exponent vectors")
        for e in self.exponents:
            if len(e) != self.num_vars or sum(e) != self.degree or min(e) < 0:
                raise AlgebraError(f"bad exponent vector {e} for degree {self.degree}")

    @classmethod
    def from_terms(
        cls,
        terms: Iterable[tuple[Sequence[int], complex]],
        num_vars: int | None = None,
        normalize: bool = True,
        floor: float = NORMALIZATION_FLOOR,
    ) -> "HomogeneousPolynomial":
        acc: dict[tuple[int, ...], complex] = {}
        for e, c in terms:
            e = tuple(int(k) for k in e)
            acc[e] = acc.get(e, 0) + complex(c)
        if not acc:
            raise AlgebraError("polynomial has no terms")
        lengths = {len(e) for e in acc}
        degrees = {sum(e) for e in acc}
        if len(lengths) != 1:
            raise AlgebraError("exponent vectors of different lengths")
        if len(degrees) != 1:
            raise AlgebraError("polynomial is not homogeneous")
        n = lengths.pop()
        if num_vars is not None and n != num_vars:
            raise AlgebraError(f"expected {num_vars} variables, got {n}")
        scale = max(abs(c) for c in acc.values())
        if scale == 0:
            raise AlgebraError("zero polynomial")
        items = sorted(
            ((e, c / scale if normalize else c) for e, c in acc.items() if abs(c) > floor * scale),
            reverse=True,
        )
        return cls(n, degrees.pop(), tuple(e for e, _ in items), tuple(c for _, c in items))

    @classmethod
    def from_arrays(cls, exponents: np.ndarray, coefficients: np.ndarray, **kw) -> "HomogeneousPolynomial":
        return cls.from_terms(zip(map(tuple, np.asarray(exponents)), np.asarray(coefficients)), **kw)

    @cached_property
    def _E(self) -> np.ndarray:
        return np.array(self.exponents, dtype=int).reshape(-1, self.num_vars)

    @cached_property
    def _c(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=complex)

    @property
    def terms(self) -> list[tuple[tuple[int, ...], complex]]:
        return list(zip(self.exponents, self.coefficients))

    @property
    def scale(self) -> float:
        return float(np.abs(self._c).max())

    def __call__(self, x) -> complex | np.ndarray:
        return evaluate(self, x)

    def __repr__(self):
        return f"HomogeneousPolynomial({format_polynomial(self)!r})"

    def derivative(self, i: int) -> "HomogeneousPolynomial | None":
        """Partial derivative in variable ``i`` (unnormalized); None if zero."""
        return self._partials[i]

    @cached_property
    def _partials(self) -> tuple["HomogeneousPolynomial | None", ...]:
        out = []
        for i in range(self.num_vars):
            terms = []
            for e, c in self.terms:
                if e[i] > 0:
                    e2 = list(e)
                    e2[i] -= 1
                    terms.append((e2, c * e[i]))
            out.append(
                HomogeneousPolynomial.from_terms(terms, normalize=False, floor=0.0) if terms else None
            )
        return tuple(out)

    def scaled(self, factor: complex) -> "HomogeneousPolynomial":
        return HomogeneousPolynomial(
            self.num_vars, self.degree, self.exponents, tuple(c * factor for c in self.coefficients)
        )

    def to_dict(self) -> dict:
        return {
            "vars": self.num_vars,
            "degree": self.degree,
            "terms": [
                {"e": list(e), "c": [float(c.real), float(c.imag)]} for e, c in self.terms
            ],
        }

    @classmethod
    def from_dict(cls, data: dict, normalize: bool = True) -> "HomogeneousPolynomial":
        terms = [(t["e"], complex(t["c"][0], t["c"][1])) for t in data["terms"]]
        p = cls.from_terms(terms, num_vars=data.get("vars"), normalize=normalize)
        if "degree" in data and p.degree != data["degree"]:
            raise AlgebraError("declared degree does not match terms")
        return p


def evaluate(p: HomogeneousPolynomial, x) -> complex | np.ndarray:
    """Value of ``p`` at ``x``; ``x`` may be a stack of points, shape (..., n)."""
    x = _as_vector(x, p.num_vars)
    if p.degree == 0:
        return np.full(x.shape[:-1], p._c.sum()) if x.ndim > 1 else complex(p._c.sum())
    monomials = np.prod(x[..., None, :] ** p._E, axis=-1)
    val = monomials @ p._c
    return complex(val) if x.ndim == 1 else val


def gradient(p: HomogeneousPolynomial, x) -> np.ndarray:
    x = _as_vector(x, p.num_vars)
    out = np.zeros(x.shape, dtype=complex)
    for i, dp in enumerate(p._partials):
        if dp is not None:
            out[..., i] = evaluate(dp, x)
    return out


def hessian(p: HomogeneousPolynomial, x) -> np.ndarray:
    x = _as_vector(x, p.num_vars)
    n = p.num_vars
    H = np.zeros((n, n), dtype=complex)
    for i, dp in enumerate(p._partials):
        if dp is None:
            continue
        for j in range(i, n):
            ddp = dp.derivative(j)
            if ddp is not None:
                H[i, j] = H[j, i] = evaluate(ddp, x)
    return H


@dataclass(frozen=True, eq=False)
class UnivariatePolynomial:
    """Dense univariate polynomial, constant term first.

    Trailing (highest-order) coefficients that are exactly zero are trimmed.
    """

    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coefficients, dtype=complex)).copy()
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:1]
        c.setflags(write=False)
        object.__setattr__(self, "coefficients", c)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> complex:
        return complex(self.coefficients[-1])

    @property
    def norm(self) -> float:
        return float(np.abs(self.coefficients).max())

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(t, self.coefficients)

    def deriv(self, m: int = 1) -> "UnivariatePolynomial":
        if m > self.degree:
            return UnivariatePolynomial(np.zeros(1))
        return UnivariatePolynomial(np.polynomial.polynomial.polyder(self.coefficients, m))

    def trimmed(self, rel_tol: float) -> "UnivariatePolynomial":
        """Drop highest-order coefficients below ``rel_tol * norm``."""
        c = self.coefficients
        keep = np.flatnonzero(np.abs(c) > rel_tol * self.norm)
        return UnivariatePolynomial(c[: keep[-1] + 1] if keep.size else c[:1])

    def __repr__(self):
        return f"UnivariatePolynomial({np.round(self.coefficients, 12).tolist()})"


def restrict_to_line(p: HomogeneousPolynomial, base, direction) -> UnivariatePolynomial:
    """``q(t) = p(base + t * direction)`` by interpolation at d+1 circle nodes.

    Nodes are the (d+1)-st roots of unity scaled by a radius that balances
    the constant and leading coefficients.  Both end coefficients are then
    replaced by their exact values ``p(base)`` and ``p(direction)``.
    """
    base = _as_vector(base, p.num_vars)
    direction = _as_vector(direction, p.num_vars)
    M = np.vstack([base, direction])
    sv = np.linalg.svd(M, compute_uv=False)
    if sv[0] == 0 or sv[1] <= 1e-12 * sv[0]:
        raise AlgebraError("base point and direction are dependent")
    d = p.degree
    p0 = evaluate(p, base)
    pd = evaluate(p, direction)
    if d == 0:
        return UnivariatePolynomial([p0])
    rho = 1.0
    if abs(p0) > 0 and abs(pd) > 0:
        rho = float(np.clip((abs(p0) / abs(pd)) ** (1.0 / d), 1e-3, 1e3))
    k = np.arange(d + 1)
    nodes = rho * np.exp(2j * np.pi * k / (d + 1))
    vals = evaluate(p, base[None, :] + nodes[:, None] * direction[None, :])
    coef = np.fft.fft(vals) / (d + 1) / rho**k
    coef[0] = p0
    coef[d] = pd
    return UnivariatePolynomial(coef)


def _initial_guesses(c: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Starting points on circles read off the Newton polygon of ``c``."""
    n = len(c) - 1
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(c))
    pts = [(i, logs[i]) for i in range(n + 1) if np.isfinite(logs[i])]
    hull: list[tuple[int, float]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (pt[1] - y1) - (pt[0] - x1) * (y2 - y1) >= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    out = []
    sigma = 0.7 + 0.1 * rng.random()
    for (k0, y0), (k1, y1) in zip(hull, hull[1:]):
        m = k1 - k0
        u = math.exp((y0 - y1) / m)
        ang = 2 * np.pi * np.arange(m) / m + 2 * np.pi * k1 / n + sigma
        out.append(u * np.exp(1j * ang))
    return np.concatenate(out)


def _aberth(c: np.ndarray, max_iter: int, rng: np.random.Generator) -> tuple[np.ndarray, bool]:
    n = len(c) - 1
    z = _initial_guesses(c, rng)
    dc = np.polynomial.polynomial.polyder(c)
    absc = np.abs(c)
    eps = np.finfo(float).eps
    active = np.ones(n, dtype=bool)
    for _ in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            return z, True
        za = z[idx]
        qv = np.polynomial.polynomial.polyval(za, c)
        bound = np.polynomial.polynomial.polyval(np.abs(za), absc)
        done = np.abs(qv) <= 4 * n * eps * bound
        dq = np.polynomial.polynomial.polyval(za, dc)
        diff = za[:, None] - z[None, :]
        diff[np.arange(idx.size), idx] = np.inf
        S = (1.0 / diff).sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            N = qv / dq
            w = N / (1 - N * S)
        bad = ~np.isfinite(w)
        w[bad] = 1e-3 * (1 + abs(za[bad])) * np.exp(2j * np.pi * rng.random(bad.sum()))
        w[done] = 0
        z[idx] = za - w
        small = np.abs(w) <= 4 * eps * np.abs(z[idx])
        active[idx[done | small]] = False
    return z, not active.any()


def all_roots(
    q: UnivariatePolynomial,
    tol: float = 1e-9,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    max_iter: int = 600,
    seed: int = 0,
) -> np.ndarray:
    """All complex roots of ``q`` with multiplicity (Aberth-Ehrlich iteration).

    Roots that coincide within ``cluster_tol`` are polished together on the
    derivative of matching order and returned as exact repeats.
    """
    c = np.asarray(q.coefficients, dtype=complex)
    n = q.degree
    if n < 1:
        raise AlgebraError("degree must be at least 1")
    if abs(c[-1]) <= NORMALIZATION_FLOOR * np.abs(c).max():
        raise AlgebraError("leading coefficient below floor")
    nz = int(np.flatnonzero(c)[0])
    zeros = np.zeros(nz, dtype=complex)
    c = c[nz:]
    if len(c) == 1:
        return zeros
    if len(c) == 2:
        return np.concatenate([zeros, [-c[0] / c[1]]])
    rng = np.random.default_rng(seed)
    scale = np.abs(c).max()
    c = c / scale
    for _attempt in range(3):
        z, ok = _aberth(c.copy(), max_iter, rng)
        if ok:
            break
    res = np.abs(np.polynomial.polynomial.polyval(z, c))
    bound = np.polynomial.polynomial.polyval(np.abs(z), np.abs(c))
    if not np.all(res <= tol * bound):
        raise RootFindingError(
            f"root iteration did not converge (max residual {float((res / bound).max()):.3g})"
        )
    z = _polish_clusters(UnivariatePolynomial(c), z, cluster_roots(z, cluster_tol), cluster_tol)
    return np.concatenate([zeros, z])


def _newton_polish(q: UnivariatePolynomial, z0: complex, order: int, max_move: float) -> complex:
    """Newton on the ``order``-th derivative; falls back to ``z0`` if it wanders."""
    g = q.deriv(order)
    dg = g.deriv()
    z = z0
    for _ in range(8):
        gv, dgv = g(z), dg(z)
        if dgv == 0:
            break
        step = gv / dgv
        z = z - step
        if abs(step) <= 1e-15 * max(1.0, abs(z)):
            break
    return complex(z) if abs(z - z0) <= max_move and np.isfinite(z) else complex(z0)


def _polish_clusters(q, z, clusters, radius) -> np.ndarray:
    out = []
    for cl in clusters:
        if cl.multiplicity == 1:
            out.append(cl.center)
        else:
            center = _newton_polish(q, cl.center, cl.multiplicity - 1, max(radius, 2 * cl.radius))
            out.extend([center] * cl.multiplicity)
    return np.array(out, dtype=complex)


@dataclass(frozen=True)
class RootCluster:
    center: complex
    multiplicity: int
    radius: float = 0.0


def cluster_roots(roots, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> list[RootCluster]:
    """Single-linkage clustering of ``roots`` at distance ``cluster_tol``.

    Centers are multiplicity-weighted means; ``radius`` is the largest
    distance of a member from its center.  Clusters come out ordered by
    first appearance in ``roots``.
    """
    z = np.asarray(roots, dtype=complex).ravel()
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(z[i] - z[j]) <= cluster_tol:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = []
    for members in sorted(groups.values(), key=min):
        pts = z[members]
        center = complex(pts.mean())
        out.append(RootCluster(center, len(members), float(np.abs(pts - center).max())))
    return out


def _jet_vanishes(q: UnivariatePolynomial, c: complex, m: int, jet_tol: float) -> bool:
    """True if a relative coefficient perturbation of size ``jet_tol`` gives q an m-fold root at c.

    Roots outside the unit disc are tested as roots ``1/c`` of the reversed
    polynomial so that the perturbation bound stays scale-free.
    """
    coef = q.coefficients
    if abs(c) > 1:
        coef = coef[::-1]
        c = 1 / c
    n = len(coef) - 1
    g = UnivariatePolynomial(coef)
    norm = g.norm
    r = abs(c)
    for k in range(m):
        bound = jet_tol * norm * sum(math.comb(j, k) * r ** (j - k) for j in range(k, n + 1))
        if abs(g(c)) / math.factorial(k) > bound:
            return False
        g = g.deriv()
    return True


def root_structure(
    q: UnivariatePolynomial,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    jet_tol: float = DEFAULT_JET_TOL,
    roots=None,
) -> list[RootCluster]:
    """Numerical multiplicity structure of the roots of ``q``.

    Starts from linkage clusters at ``cluster_tol`` and then merges groups
    of nearby roots whenever ``q`` is within ``jet_tol`` (relative) of a
    polynomial with a root of that multiplicity at the group mean.  An
    m-fold root perturbed by e splits by about e**(1/m), which plain
    linkage cannot absorb for m >= 3.
    """
    if roots is None:
        roots = all_roots(q, cluster_tol=cluster_tol)
    z = np.asarray(roots, dtype=complex)
    remaining = list(range(len(z)))
    out: list[RootCluster] = []
    while remaining:
        i = remaining[0]
        order = sorted(remaining, key=lambda j: (abs(z[j] - z[i]), j))
        chosen = [i]
        for m in range(len(order), 1, -1):
            group = order[:m]
            c = complex(z[group].mean())
            spread = float(np.abs(z[group] - c).max())
            if spread <= cluster_tol:
                chosen = group
                break
            if spread > 1e-2 * max(1.0, abs(c)):
                continue
            # test the jet at the zero of the (m-1)-st derivative near the mean
            cp = _newton_polish(q, c, m - 1, 2 * spread)
            if _jet_vanishes(q, cp, m, jet_tol):
                chosen = group
                break
        c = complex(z[chosen].mean())
        m = len(chosen)
        radius = float(np.abs(z[chosen] - c).max())
        if m > 1:
            c = _newton_polish(q, c, m - 1, max(cluster_tol, 2 * radius))
        out.append(RootCluster(c, m, radius))
        remaining = [j for j in remaining if j not in chosen]
    return out


def sylvester_matrix(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Sylvester matrix of two coefficient vectors given highest power first."""
    m, n = len(a) - 1, len(b) - 1
    S = np.zeros((m + n, m + n), dtype=complex)
    for i in range(n):
        S[i, i : i + m + 1] = a
    for i in range(m):
        S[n + i, i : i + n + 1] = b
    return S


def resultant(p: UnivariatePolynomial, q: UnivariatePolynomial) -> complex:
    return complex(np.linalg.det(sylvester_matrix(p.coefficients[::-1], q.coefficients[::-1])))


def univariate_discriminant(q: UnivariatePolynomial) -> complex:
    """Classical discriminant ``(-1)^(n(n-1)/2) Res(q, q') / a_n``."""
    n = q.degree
    if n < 2:
        raise AlgebraError("discriminant needs degree >= 2")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(q, q.deriv()) / q.leading


def tangent_basis(g: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Two orthonormal vectors spanning the tangent plane at ``x`` modulo ``x``.

    The tangent directions are ``{v : g.v = 0}``; the representative
    subspace is taken Hermitian-orthogonal to ``x``.  Standard basis vectors
    with the largest projections (ties broken by index) are Gram-Schmidt'ed.
    """
    C = np.vstack([g, x.conj()])
    P = np.eye(len(x)) - np.linalg.pinv(C) @ C
    norms = np.linalg.norm(P, axis=0)
    picks = sorted(range(len(x)), key=lambda i: (-round(norms[i], 12), i))
    basis: list[np.ndarray] = []
    for i in picks:
        v = P[:, i].copy()
        for u in basis:
            v = v - (u.conj() @ v) * u
        nv = np.linalg.norm(v)
        if nv > 1e-8:
            basis.append(v / nv)
        if len(basis) == 2:
            break
    return np.column_stack(basis)


def second_fundamental_form(f: HomogeneousPolynomial, x, on_surface_tol: float = 1e-8) -> np.ndarray:
    """Quadratic part of ``f`` on the tangent plane at the surface point ``x``."""
    x = _as_vector(x, f.num_vars)
    x = x / x[np.argmax(np.abs(x))]
    if abs(evaluate(f, x)) > on_surface_tol * np.abs(f._c).sum():
        raise AlgebraError("point is not on the surface")
    g = gradient(f, x)
    if np.linalg.norm(g) <= 1e-10 * f.scale:
        raise AlgebraError("point is singular")
    U = tangent_basis(g, x)
    H = hessian(f, x)
    return U.T @ H @ U


# --- text format -----------------------------------------------------------

def format_polynomial(p: HomogeneousPolynomial, digits: int = 12) -> str:
    parts = []
    for e, c in p.terms:
        mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k)
        c = complex(round(c.real, digits), round(c.imag, digits))
        if c.imag == 0:
            coef = "" if c.real == 1 and mono else repr(float(c.real))
        else:
            coef = f"({c.real!r},{c.imag!r})"
        parts.append(f"{coef}*{mono}" if coef and mono else (coef or mono))
    return " + ".join(parts)


def parse_polynomial(text: str, num_vars: int | None = None, normalize: bool = True) -> HomogeneousPolynomial:
    """Parse ``x0^3 + 2*x1^3 - (0,1)*x2*x3^2`` style text.

    Coefficients are real literals or ``(re,im)`` pairs; monomial factors
    are ``x<i>`` or ``x<i>^<k>`` separated by ``*`` or whitespace.
    """
    import re

    s = text.replace("**", "^")
    token = re.compile(
        r"\s*(?P<sign>[+-])?\s*(?P<coef>\(\s*[^,()]+,\s*[^,()]+\)|[0-9.]+(?:[eE][+-]?\d+)?)?"
        r"\s*\*?\s*(?P<mono>(?:x\d+(?:\^\d+)?(?:\s*\*?\s*)?)*)"
    )
    pos = 0
    raw: list[tuple[dict[int, int], complex]] = []
    s = s.strip()
    while pos < len(s):
        m = token.match(s, pos)
        if not m or m.end() == pos:
            raise AlgebraError(f"cannot parse polynomial near {s[pos:pos + 20]!r}")
        if m.group("coef") is None and not m.group("mono").strip():
            raise AlgebraError(f"empty term near {s[pos:pos + 20]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = m.group("coef")
        if coef is None:
            c = 1.0
        elif coef.startswith("("):
            re_, im_ = coef.strip("() ").split(",")
            c = complex(float(re_), float(im_))
        else:
            c = float(coef)
        mono: dict[int, int] = {}
        for var, power in re.findall(r"x(\d+)(?:\^(\d+))?", m.group("mono")):
            mono[int(var)] = mono.get(int(var), 0) + int(power or 1)
        raw.append((mono, sign * c))
        pos = m.end()
    n = num_vars or max(3, 1 + max((max(m) for m, _ in raw if m), default=0))
    terms = []
    for mono, c in raw:
        e = [0] * n
        for i, k in mono.items():
            if i >= n:
                raise AlgebraError(f"variable x{i} out of range for {n} variables")
            e[i] = k
        terms.append((e, c))
    return HomogeneousPolynomial.from_terms(terms, num_vars=n, normalize=normalize)


def fermat(degree: int = 3, num_vars: int = 4) -> HomogeneousPolynomial:
    return HomogeneousPolynomial.from_terms(
        [(tuple(degree if j == i else 0 for j in range(num_vars)), 1.0) for i in range(num_vars)]
    )


def monomial_exponents(num_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, lexicographically descending."""
    if num_vars == 1:
        return [(degree,)]
    out = []
    for k in range(degree, -1, -1):
        out.extend((k,) + rest for rest in monomial_exponents(num_vars - 1, degree - k))
    return out


def random_polynomial(num_vars: int, degree: int, rng: np.random.Generator) -> HomogeneousPolynomial:
    """Dense form with iid standard complex Gaussian coefficients."""
    exps = monomial_exponents(num_vars, degree)
    coef = rng.standard_normal(len(exps)) + 1j * rng.standard_normal(len(exps))
    return HomogeneousPolynomial.from_terms(zip(exps, coef))
