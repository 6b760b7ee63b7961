"""Monodromy of a projection by tracking its fiber around branch punctures.

A pencil slice ``y(s) = a + s b`` of the base plane meets the reduced
branch curve in finitely many punctures.  Over the slice the fibers are
the zeros in ``t`` of ``H(s, t) = f(A + s B + t C)`` where ``A, B`` lift
``a, b`` and ``C`` represents the center.  Each lasso around a puncture
continues the base fiber and yields one permutation.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from .algebra import DEFAULT_CLUSTER_TOL, AlgebraError, HomogeneousPolynomial, all_roots, evaluate, UnivariatePolynomial
from .branch import (
    BranchLocusError,
    PencilSlice,
    PlaneCurve,
    discriminant_curve,
    pencil_slice,
    square_free_part,
)
from .geometry import ProjectiveFrame, ProjectivePoint, compose_linear, frame_for_center, normalize_coords
from .perms import Classification, GroupHandle, Permutation, group_order_and_classify

# |f(L)| relative to the coefficient bound below which L counts as on X.
ON_SURFACE_FLOOR = 1e-10


class TrackingError(RuntimeError):
    def __init__(self, message: str, certificate: dict | None = None):
        super().__init__(message)
        self.certificate = certificate or {}


class FiberError(TrackingError):
    pass


@dataclass(frozen=True)
class TrackerConfig:
    initial_step: float = 1 / 32
    corrector_tol: float = 1e-11
    newton_iters: int = 8
    max_halvings: int = 20
    cluster_tol: float = DEFAULT_CLUSTER_TOL
    jump_ratio: float = 0.25
    margin_ratio: float = 10.0
    retracks: int = 3
    radius_shrinks: int = 3
    extra_slices: int = 2
    base_margin: float = 1e-6
    early_stop: bool = True
    threads: int | None = None
    seed: int = 0

    def __post_init__(self):
        for name in ("initial_step", "corrector_tol", "cluster_tol", "jump_ratio", "margin_ratio"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "TrackerConfig":
        return cls(**{k: v for k, v in data.items() if k in cls.__dataclass_fields__})


# --- fibers over a slice ----------------------------------------------------

class SliceSystem:
    """``H(s, t) = f(A + s B + t C)`` for one pencil slice, dense in (s, t)."""

    def __init__(self, f: HomogeneousPolynomial, frame: ProjectiveFrame, slice_line):
        self.degree = d = f.degree
        a = np.asarray(slice_line.base, dtype=complex)
        b = np.asarray(slice_line.direction, dtype=complex)
        M = np.column_stack([
            frame.from_frame(np.concatenate([a, [0]])),
            frame.from_frame(np.concatenate([b, [0]])),
            frame.center_direction,
        ])
        g = compose_linear(f, M)
        P = np.zeros((d + 1, d + 1), dtype=complex)
        for (_, j, k), c in g.terms:
            P[j, k] = c
        self.P = P  # P[j, k]: coefficient of s^j t^k
        self.Ps = P[1:] * np.arange(1, d + 1)[:, None]
        self.Pt = P[:, 1:] * np.arange(1, d + 1)[None, :]

    def fiber_polynomial(self, s: complex) -> UnivariatePolynomial:
        return UnivariatePolynomial(np.power(s, np.arange(self.degree + 1)) @ self.P)

    def evaluate(self, s: complex, t: np.ndarray):
        """``H``, ``dH/ds``, ``dH/dt`` at ``(s, t_i)`` for a vector ``t``."""
        d = self.degree
        sp = np.power(complex(s), np.arange(d + 1))
        tp = np.power.outer(t, np.arange(d + 1))
        h = tp @ (sp @ self.P)
        hs = tp @ (sp[:d] @ self.Ps)
        ht = tp[:, :d] @ (sp @ self.Pt)
        return h, hs, ht

    def scale(self, s: complex, t: np.ndarray) -> np.ndarray:
        """Coefficient bound ``sum |P_jk| |s|^j |t|^k`` used for relative residuals."""
        d = self.degree
        sp = np.power(abs(s), np.arange(d + 1))
        return np.power.outer(np.abs(t), np.arange(d + 1)) @ (sp @ np.abs(self.P))


@dataclass(frozen=True)
class Fiber:
    base_point: tuple[complex, ...]
    parameter: complex
    t_values: tuple[complex, ...]
    points: tuple[tuple[complex, ...], ...]

    @property
    def min_separation(self) -> float:
        return _min_separation(np.array(self.t_values))


def _min_separation(t: np.ndarray) -> float:
    if len(t) < 2:
        return math.inf
    gaps = np.abs(t[:, None] - t[None, :]) + np.diag(np.full(len(t), np.inf))
    return float(gaps.min())


def _newton(system: SliceSystem, s: complex, t: np.ndarray, cfg: TrackerConfig):
    """Corrector; returns (t, converged mask, last residuals)."""
    t = t.copy()
    done = np.zeros(len(t), dtype=bool)
    for _ in range(cfg.newton_iters):
        h, _, ht = system.evaluate(s, t)
        with np.errstate(divide="ignore", invalid="ignore"):
            dt = np.where(ht != 0, h / ht, np.where(h == 0, 0, np.inf))
        dt[done] = 0
        if not np.isfinite(dt).all():
            break
        t = t - dt
        done |= np.abs(dt) <= cfg.corrector_tol * np.maximum(1.0, np.abs(t))
        if done.all():
            break
    h = system.evaluate(s, t)[0]
    return t, done, np.abs(h) / np.maximum(system.scale(s, t), 1e-300)


def _fiber_from_system(system, s, frame, slice_line, cfg) -> Fiber:
    q = system.fiber_polynomial(s)
    try:
        t = all_roots(q, cluster_tol=cfg.cluster_tol, seed=cfg.seed)
    except AlgebraError as exc:
        raise FiberError(f"fiber root finding failed: {exc}") from exc
    t, ok, res = _newton(system, s, np.asarray(t, dtype=complex), cfg)
    sep = _min_separation(t)
    if not ok.all() or sep <= cfg.cluster_tol * max(1.0, float(np.abs(t).max())):
        raise FiberError(f"multiple root in the fiber (separation {sep:.3g}); base point too close to the branch curve")
    order = np.lexsort((t.imag, t.real))
    t = t[order]
    y = np.asarray(slice_line.base) + s * np.asarray(slice_line.direction)
    pts = [tuple(frame.from_frame(np.concatenate([y, [ti]]))) for ti in t]
    return Fiber(tuple(y), complex(s), tuple(complex(x) for x in t), tuple(pts))


def solve_base_fiber(f: HomogeneousPolynomial, frame: ProjectiveFrame, y, tol: float = 1e-11,
                     cfg: TrackerConfig | None = None) -> Fiber:
    """The ``d`` distinct points over ``y``, Newton-refined, ordered by (re, im) of ``t``."""
    cfg = cfg or TrackerConfig(corrector_tol=tol)
    y = normalize_coords(np.asarray(getattr(y, "coords", y), dtype=complex))
    # a slice through y in any direction: only s = 0 is used
    k = int(np.argmin(np.abs(y)))
    e = np.zeros(3, dtype=complex)
    e[k] = 1
    line = _Line(tuple(y), tuple(e))
    system = SliceSystem(f, frame, line)
    return _fiber_from_system(system, 0j, frame, line, cfg)


@dataclass(frozen=True)
class _Line:
    base: tuple
    direction: tuple


# --- loops -----------------------------------------------------------------

@dataclass(frozen=True)
class Piece:
    """Segment ``z0 -> z1`` or a full circle of ``radius`` about ``center`` from angle ``phase``."""

    kind: str  # "segment" | "circle"
    z0: complex
    z1: complex = 0j
    center: complex = 0j
    radius: float = 0.0
    phase: float = 0.0
    turns: float = 1.0

    def at(self, tau: float) -> complex:
        if self.kind == "segment":
            return self.z0 + tau * (self.z1 - self.z0)
        return self.center + self.radius * np.exp(1j * (self.phase + 2 * np.pi * self.turns * tau))

    def reversed(self) -> "Piece":
        if self.kind == "segment":
            return replace(self, z0=self.z1, z1=self.z0)
        return replace(self, phase=self.phase + 2 * np.pi * self.turns, turns=-self.turns)


@dataclass(frozen=True)
class Loop:
    kind: str
    center: complex
    radius: float
    pieces: tuple[Piece, ...]
    puncture_index: int = -1

    @property
    def base(self) -> complex:
        return self.pieces[0].z0 if self.pieces else 0j

    def polyline(self, per_piece: int = 16) -> list[complex]:
        pts = []
        for p in self.pieces:
            pts.extend(p.at(k / per_piece) for k in range(per_piece))
        if self.pieces:
            pts.append(self.pieces[-1].at(1.0))
        return pts

    def reversed(self) -> "Loop":
        return replace(self, pieces=tuple(p.reversed() for p in reversed(self.pieces)))

    def descriptor(self) -> dict:
        return {"kind": self.kind, "center": [self.center.real, self.center.imag],
                "radius": self.radius, "puncture": self.puncture_index}


def constant_loop(s0: complex = 0j) -> Loop:
    return Loop("Constant", complex(s0), 0.0, (Piece("segment", complex(s0), complex(s0)),))


def lasso(s0: complex, center: complex, radius: float, index: int = -1) -> Loop:
    """Segment toward ``center`` stopping at ``radius``, one counterclockwise turn, segment back."""
    u = (center - s0) / abs(center - s0)
    start = center - radius * u
    phase = float(np.angle(-u))
    return Loop("SegmentCircleSegment", complex(center), float(radius), (
        Piece("segment", complex(s0), complex(start)),
        Piece("circle", complex(start), center=complex(center), radius=float(radius), phase=phase),
        Piece("segment", complex(start), complex(s0)),
    ), index)


def _segment_distance(p: complex, a: complex, b: complex) -> float:
    d = b - a
    tau = min(1.0, max(0.0, ((p - a) * d.conjugate()).real / abs(d) ** 2)) if d != 0 else 0.0
    return abs(p - (a + tau * d))


class LoopGenerationError(RuntimeError):
    pass


def generate_loops(slice_: PencilSlice, base_param: complex = 0j, radius_factor: float = 0.5,
                   min_radius_ratio: float = 1e-3) -> list[Loop]:
    """One lasso per puncture, ordered by angle seen from the base point.

    Radii start at ``radius_factor`` times the distance to the nearest
    other puncture (or the base point).  Each puncture owns a safety disk of
    half its radius; a radius is reduced until no straight segment enters
    that disk, and generation fails if this would shrink it below
    ``min_radius_ratio`` of its starting value.
    """
    s = np.array([p.parameter for p in slice_.punctures], dtype=complex)
    if np.any(np.abs(s - base_param) == 0):
        raise LoopGenerationError("base parameter coincides with a puncture")
    n = len(s)
    radii = []
    for j in range(n):
        others = [abs(s[j] - s[i]) for i in range(n) if i != j] + [abs(s[j] - base_param)]
        r = radius_factor * min(others)
        clear = [_segment_distance(s[j], base_param, s[i]) for i in range(n) if i != j]
        if clear and 1.8 * min(clear) < r:
            if 1.8 * min(clear) < min_radius_ratio * r:
                raise LoopGenerationError(f"puncture {j} lies almost on the segment to another puncture")
            r = 1.8 * min(clear)
        radii.append(r)
    loops = [lasso(base_param, s[i], radii[i], i) for i in range(n)]
    angles = [float(np.angle(lp.center - base_param)) for lp in loops]
    return [loops[k] for k in np.argsort(angles, kind="stable")]


# --- tracking ----------------------------------------------------------------

@dataclass
class LoopCertificate:
    steps: int = 0
    rejected: int = 0
    min_separation: float = math.inf
    residual_max: float = 0.0
    retracks: int = 0
    radius_shrinks: int = 0
    margin: float = math.inf

    def merge(self, other: "LoopCertificate") -> None:
        self.steps += other.steps
        self.rejected += other.rejected
        self.min_separation = min(self.min_separation, other.min_separation)
        self.residual_max = max(self.residual_max, other.residual_max)

    def to_dict(self) -> dict:
        out = asdict(self)
        for k, v in out.items():
            if isinstance(v, float) and math.isinf(v):
                out[k] = None
        return out


class StepUnderflow(TrackingError):
    pass


def _track_piece(system, piece: Piece, t: np.ndarray, cfg: TrackerConfig, step0: float, cert: LoopCertificate,
                 trace: list | None = None):
    tau = 0.0
    h = step0
    h_min = step0 / 2 ** cfg.max_halvings
    s = piece.at(0.0)
    streak = 0
    while tau < 1.0:
        h = min(h, 1.0 - tau)
        s1 = piece.at(tau + h)
        sep = _sep_vector(t)
        _, hs, ht = system.evaluate(s, t)
        pred = t - hs / ht * (s1 - s)
        t1, ok, res = _newton(system, s1, pred, cfg)
        moved = np.abs(t1 - t)
        corr = np.abs(t1 - pred)
        sep1 = _min_separation(t1)
        accept = (
            ok.all()
            and np.all(moved <= cfg.jump_ratio * sep)
            and np.all(corr <= 0.5 * cfg.jump_ratio * sep)
            and sep1 > cfg.cluster_tol * max(1.0, float(np.abs(t1).max()))
        )
        if accept:
            tau += h
            s, t = s1, t1
            cert.steps += 1
            cert.min_separation = min(cert.min_separation, sep1)
            cert.residual_max = max(cert.residual_max, float(res.max()))
            if trace is not None:
                trace.append((complex(s), t.copy()))
            streak += 1
            if streak >= 3:
                h = min(step0, 2 * h)
                streak = 0
        else:
            cert.rejected += 1
            streak = 0
            h /= 2
            if h < h_min:
                raise StepUnderflow(f"step underflow at tau={tau:.6g} on a {piece.kind}")
    return t


def _sep_vector(t: np.ndarray) -> np.ndarray:
    if len(t) < 2:
        return np.full(len(t), np.inf)
    gaps = np.abs(t[:, None] - t[None, :]) + np.diag(np.full(len(t), np.inf))
    return gaps.min(axis=1)


def _match(start: np.ndarray, end: np.ndarray, margin_ratio: float):
    """Permutation images ``i -> j`` with end[i] ~ start[j], and the worst margin."""
    D = np.abs(end[:, None] - start[None, :])
    images = np.argmin(D, axis=1)
    if len(start) == 1:
        return [0], math.inf
    srt = np.sort(D, axis=1)
    with np.errstate(divide="ignore"):
        margin = float(np.min(srt[:, 1] / srt[:, 0]))
    if len(set(images.tolist())) != len(start) or margin < margin_ratio:
        return None, margin
    return images.tolist(), margin


def track_loop(system_or_f, frame_or_fiber, fiber_or_loop=None, loop=None, cfg: TrackerConfig | None = None,
               slice_line=None, trace: list | None = None):
    """Continue the fiber along ``loop``; returns ``(Permutation, LoopCertificate)``.

    Call as ``track_loop(system, fiber, loop, cfg=cfg)`` with a
    :class:`SliceSystem`, or ``track_loop(f, frame, fiber, loop, cfg, slice_line)``.
    If ``trace`` is a list it receives ``(s, t_values)`` after every accepted
    step of the final attempt.
    """
    if isinstance(system_or_f, SliceSystem):
        system, fiber, loop = system_or_f, frame_or_fiber, fiber_or_loop
    else:
        system = SliceSystem(system_or_f, frame_or_fiber, slice_line)
        fiber = fiber_or_loop
    cfg = cfg or TrackerConfig()
    t0 = np.array(fiber.t_values, dtype=complex)
    d = len(t0)
    total = LoopCertificate()
    step0 = cfg.initial_step
    for attempt in range(cfg.retracks + 1):
        cert = LoopCertificate(retracks=attempt)
        t = t0.copy()
        steps: list | None = [(complex(loop.base), t0.copy())] if trace is not None else None
        for piece in loop.pieces:
            t = _track_piece(system, piece, t, cfg, step0, cert, steps)
        if len(t) != d:
            raise TrackingError("fiber size changed along the loop")
        images, margin = _match(t0, t, cfg.margin_ratio)
        cert.margin = margin
        total.merge(cert)
        total.retracks = attempt
        total.margin = margin
        if images is not None:
            if trace is not None:
                trace.extend(steps)
            return Permutation(tuple(images)), total
        step0 /= 2
    raise TrackingError(f"endpoint matching ambiguous (margin {total.margin:.3g})", total.to_dict())


# --- driver ------------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    loop: Loop
    permutation: Permutation
    slice_index: int
    certificate: LoopCertificate

    def to_dict(self) -> dict:
        return {"loop": self.loop.descriptor(), "slice": self.slice_index,
                "perm": [list(c) for c in self.permutation.cycles()],
                "certificate": self.certificate.to_dict()}


@dataclass
class MonodromyResult:
    degree: int
    center: ProjectivePoint
    generators: list[Generator]
    group: Classification
    verdict: str  # "Uniform" | "NoEvidenceOfSd"
    loops_tracked: int
    slices_used: int
    base_fiber: Fiber
    certificate: dict = field(default_factory=dict)
    slices: list = field(default_factory=list, repr=False)  # (PencilSlice, SliceSystem, aligned Fiber)

    @property
    def permutations(self) -> list[Permutation]:
        return [g.permutation for g in self.generators]

    @property
    def order(self) -> int:
        return self.group.order

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "center": self.center.to_json(),
            "generators": [g.to_dict() for g in self.generators],
            "groupOrder": self.group.order,
            "classification": str(self.group),
            "transitive": self.group.transitive,
            "verdict": self.verdict if self.verdict == "Uniform" else f"NoEvidenceOfSd({self.loops_tracked})",
            "loopsTracked": self.loops_tracked,
            "slicesUsed": self.slices_used,
            "certificate": self.certificate,
        }


def _thread_count(cfg: TrackerConfig) -> int:
    if cfg.threads is not None:
        return max(1, int(cfg.threads))
    try:
        return max(1, int(os.environ.get("MONODROMY_THREADS", "1")))
    except ValueError:
        return 1


def choose_base_point(curve: PlaneCurve, rng: np.random.Generator, margin: float) -> np.ndarray:
    """Random real point of the unit box off ``curve`` by a relative margin."""
    for _ in range(100):
        y = rng.uniform(-1, 1, 3).astype(complex)
        if np.abs(y).max() > 0.1 and curve.relative_value(y) > margin:
            return y
    raise BranchLocusError("no base point found off the branch curve")


def check_off_surface(f: HomogeneousPolynomial, L) -> ProjectivePoint:
    L = L if isinstance(L, ProjectivePoint) else ProjectivePoint(np.asarray(L, dtype=complex))
    bound = float(np.abs(f._c).sum())
    if abs(evaluate(f, L.coords)) <= ON_SURFACE_FLOOR * bound:
        raise TrackingError("the center lies on the surface; the projection is undefined")
    return L


class _Tracker:
    """Loop runner for one pencil slice with shrink-and-retry on step underflow."""

    def __init__(self, system, fiber, cfg):
        self.system, self.fiber, self.cfg = system, fiber, cfg

    def __call__(self, loop: Loop):
        cur = loop
        for k in range(self.cfg.radius_shrinks + 1):
            try:
                perm, cert = track_loop(self.system, self.fiber, cur, cfg=self.cfg)
                cert.radius_shrinks = k
                return cur, perm, cert
            except StepUnderflow:
                cur = lasso(cur.base, cur.center, cur.radius / 2, cur.puncture_index)
        raise TrackingError(f"step underflow around puncture {loop.puncture_index} after radius shrinks")


def run_monodromy(f: HomogeneousPolynomial, L, cfg: TrackerConfig | None = None) -> MonodromyResult:
    """Generators of the monodromy group of the projection from ``L``.

    Loops come from one pencil slice through a real base point, then up to
    ``cfg.extra_slices`` more slices through the same base point while the
    group is not yet symmetric.  The verdict is ``Uniform`` iff the full
    symmetric group was generated.
    """
    cfg = cfg or TrackerConfig()
    L = check_off_surface(f, L)
    d = f.degree
    rng = np.random.default_rng(cfg.seed)
    cert: dict = {"seed": cfg.seed, "slices": []}
    try:
        frame = frame_for_center(L)
        divisor = discriminant_curve(f, frame, seed=cfg.seed)
        reduced = square_free_part(divisor, seed=cfg.seed)
        cert["divisorDegree"] = divisor.degree
        cert["reducedDegree"] = reduced.degree
        cert["interpolationResidual"] = divisor.residual
        for _ in range(20):
            y0 = choose_base_point(reduced, rng, cfg.base_margin)
            try:
                fiber = solve_base_fiber(f, frame, y0, cfg=cfg)
                break
            except FiberError:
                continue
        else:
            raise FiberError("no base point with a separated fiber")
        cert["basePoint"] = [[float(c.real), float(c.imag)] for c in fiber.base_point]

        generators: list[Generator] = []
        slices: list = []
        group = None
        full = math.factorial(d)
        slice_seed = int(rng.integers(2**31))
        slices_used = 0
        while slices_used < 1 + cfg.extra_slices:
            slice_, loops = _slice_with_loops(reduced, np.array(fiber.base_point), slice_seed + 7 * slices_used)
            system = SliceSystem(f, frame, slice_.line)
            base = _fiber_from_system(system, 0j, frame, slice_.line, cfg)
            # align labels with the base fiber
            sigma, _ = _match(np.array(fiber.t_values), np.array(base.t_values), cfg.margin_ratio)
            if sigma is None:
                raise TrackingError("slice base fiber does not match the base fiber")
            base = replace(base, t_values=tuple(base.t_values[i] for i in np.argsort(sigma)))
            slices.append((slice_, system, base))
            runner = _Tracker(system, base, cfg)
            slice_log = {"index": slices_used, "punctures": len(slice_.punctures),
                         "attempts": slice_.attempts, "loops": 0}
            cert["slices"].append(slice_log)
            for loop, perm, lc in _run_loops(runner, loops, cfg, d, generators, full):
                generators.append(Generator(loop, perm, slices_used, lc))
                slice_log["loops"] += 1
            slices_used += 1
            group = GroupHandle([g.permutation for g in generators], d)
            if group.order == full and cfg.early_stop:
                break
    except (TrackingError, BranchLocusError, AlgebraError) as exc:
        if isinstance(exc, TrackingError):
            exc.certificate = {**cert, **exc.certificate}
            raise
        raise TrackingError(str(exc), cert) from exc

    cls = group_order_and_classify([g.permutation for g in generators], d) if generators else \
        Classification("Symmetric" if d == 1 else "Other", 1, d, d == 1)
    steps = sum(g.certificate.steps for g in generators)
    cert["steps"] = steps
    cert["rejected"] = sum(g.certificate.rejected for g in generators)
    seps = [g.certificate.min_separation for g in generators if math.isfinite(g.certificate.min_separation)]
    cert["minSeparation"] = min(seps) if seps else None
    cert["residualMax"] = max([g.certificate.residual_max for g in generators] + [0.0])
    verdict = "Uniform" if cls.order == math.factorial(d) else "NoEvidenceOfSd"
    return MonodromyResult(d, L, generators, cls, verdict, len(generators), slices_used, fiber, cert, slices)


def trace_generators(result: MonodromyResult, cfg: TrackerConfig | None = None) -> list[list]:
    """Re-track every generator loop of ``result`` recording the fiber paths."""
    cfg = cfg or TrackerConfig()
    out = []
    for g in result.generators:
        _, system, base = result.slices[g.slice_index]
        trace: list = []
        track_loop(system, base, g.loop, cfg=cfg, trace=trace)
        out.append(trace)
    return out


def _slice_with_loops(reduced, y0, seed, tries: int = 20):
    last = None
    for k in range(tries):
        slice_ = pencil_slice(reduced, y0, seed=seed + 1000 * k)
        try:
            return slice_, generate_loops(slice_)
        except LoopGenerationError as exc:
            last = exc
    raise TrackingError(f"could not build non-overlapping loops: {last}")


def _run_loops(runner, loops, cfg, d, generators, full):
    """Track loops in order; stops after the group becomes symmetric when early stopping."""
    threads = _thread_count(cfg)
    perms = [g.permutation for g in generators]
    if threads > 1:
        for i in range(0, len(loops), threads):
            with ThreadPoolExecutor(max_workers=threads) as ex:
                batch = list(ex.map(runner, loops[i:i + threads]))
            for item in batch:
                yield item
                perms.append(item[1])
                if cfg.early_stop and GroupHandle(perms, d).order == full:
                    return
        return
    for loop in loops:
        item = runner(loop)
        yield item
        perms.append(item[1])
        if cfg.early_stop and GroupHandle(perms, d).order == full:
            return
