"""End-to-end runs: the Fermat cubic regression and the center scan."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .algebra import HomogeneousPolynomial, evaluate, fermat
from .branch import discriminant_curve, square_free_part
from .contact import test_px
from .geometry import ProjectivePoint, frame_for_center
from .perms import cycle_type
from .tracker import TrackerConfig, TrackingError, run_monodromy

log = logging.getLogger(__name__)

COORDINATE_POINTS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class RegressionReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def random_centers(f: HomogeneousPolynomial, count: int, seed: int) -> list[np.ndarray]:
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        L = rng.standard_normal(4)
        if abs(evaluate(f, L)) > 1e-3 * np.abs(L).max() ** f.degree:
            out.append(L)
    return out


def _is_a3(result) -> bool:
    cls = result.group
    elements_ok = all(p.is_identity() or cycle_type(p) == [3] for p in result.permutations)
    return cls.order == 3 and cls.kind == "Alternating" and elements_ok


def fermat_regression(random_count: int = 10, seed: int = 0, px_budget: int = 200,
                      cfg: TrackerConfig | None = None) -> RegressionReport:
    """Monodromy, branch divisor and P_X checks on the Fermat cubic surface."""
    f = fermat(3)
    cfg = cfg or TrackerConfig(seed=seed)
    rep = RegressionReport()
    for L in COORDINATE_POINTS:
        try:
            r = run_monodromy(f, L, cfg)
            rep.add(f"monodromy {L}", _is_a3(r), f"{r.group} after {r.loops_tracked} loops")
        except TrackingError as exc:
            rep.add(f"monodromy {L}", False, f"error: {exc}")
    centers = random_centers(f, random_count, seed)
    for k, L in enumerate(centers):
        name = "monodromy random " + ",".join(f"{x:.3f}" for x in L)
        try:
            r = run_monodromy(f, L, TrackerConfig(**{**cfg.to_dict(), "seed": seed + k}))
            rep.add(name, r.group.kind == "Symmetric" and r.group.order == 6, str(r.group))
        except TrackingError as exc:
            rep.add(name, False, f"error: {exc}")

    frame = frame_for_center(COORDINATE_POINTS[3])
    div = discriminant_curve(f, frame, seed=seed)
    expected = {}
    for i in range(3):
        for j in range(3):
            e = [0, 0, 0]
            e[i] += 3
            e[j] += 3
            expected[tuple(e)] = expected.get(tuple(e), 0) + 1
    got = dict(div.poly.terms)
    ratio = got.get((6, 0, 0), 0) / expected[(6, 0, 0)] if got.get((6, 0, 0)) else 0
    err = max([abs(got.get(e, 0) - ratio * c) for e, c in expected.items()]
              + [abs(c) for e, c in got.items() if e not in expected])
    rep.add("branch divisor proportional to (x0^3+x1^3+x2^3)^2", div.degree == 6 and err < 1e-8,
            f"degree {div.degree}, deviation {err:.2e}")
    red = square_free_part(div, seed=seed)
    rep.add("reduced branch curve degree 3", red.degree == 3, f"degree {red.degree}")

    for L in COORDINATE_POINTS:
        v = test_px(f, L, px_budget, seed)
        rep.add(f"px {L}", v.status == "ProbablyInPX", f"{v.status} after {v.samples_checked}")
    for k, L in enumerate(centers):
        v = test_px(f, L, px_budget, seed + k)
        rep.add("px random " + ",".join(f"{x:.3f}" for x in L), v.status == "NotInPX",
                f"{v.status} after {v.samples_checked}")
    return rep


# --- scan --------------------------------------------------------------------

@dataclass
class ScanPoint:
    index: int
    center: ProjectivePoint
    status: str  # "Uniform" | "NoEvidenceOfSd" | "OnSurface" | "Error"
    group: str = ""
    detail: str = ""

    def to_dict(self) -> dict:
        return {"index": self.index, "center": self.center.to_json(), "status": self.status,
                "group": self.group, "detail": self.detail}


@dataclass
class ScanReport:
    grid: int
    points: list[ScanPoint]

    @property
    def candidates(self) -> list[ScanPoint]:
        return [p for p in self.points if p.status == "NoEvidenceOfSd"]

    def to_dict(self) -> dict:
        return {
            "grid": self.grid,
            "scanned": len(self.points),
            "errors": sum(p.status == "Error" for p in self.points),
            "onSurface": sum(p.status == "OnSurface" for p in self.points),
            "candidates": [p.to_dict() for p in self.candidates],
            "points": [p.to_dict() for p in self.points],
        }


def scan_centers(grid: int, box: float = 1.0, center=(0.0, 0.0, 0.0), jitter: float = 0.0,
                 seed: int = 0) -> list[np.ndarray]:
    """``grid^3`` chart points ``(x0 : x1 : x2 : 1)`` on a lattice in a real box, optionally jittered."""
    if grid < 1:
        raise ValueError("grid must be at least 1")
    axis = np.linspace(-box, box, grid) if grid > 1 else np.zeros(1)
    spacing = 2 * box / max(grid - 1, 1)
    rng = np.random.default_rng(seed)
    pts = []
    for x in axis:
        for y in axis:
            for z in axis:
                p = np.array([x, y, z]) + np.asarray(center, dtype=float)
                if jitter:
                    p = p + rng.uniform(-jitter, jitter, 3) * spacing
                pts.append(np.array([*p, 1.0]))
    return pts


def scan(f: HomogeneousPolynomial, grid: int, seed: int = 0, box: float = 1.0, center=(0.0, 0.0, 0.0),
         jitter: float = 0.0, cfg: TrackerConfig | None = None, threads: int | None = None) -> ScanReport:
    """Run the monodromy engine at every scan center; errors are logged and the scan continues."""
    cfg = cfg or TrackerConfig(seed=seed)
    centers = scan_centers(grid, box, center, jitter, seed)

    def one(item):
        i, L = item
        P = ProjectivePoint(L)
        if abs(evaluate(f, P.coords)) <= 1e-10 * float(np.abs(f._c).sum()):
            return ScanPoint(i, P, "OnSurface")
        point_cfg = TrackerConfig(**{**cfg.to_dict(), "seed": (seed * 1_000_003 + i) % 2**63, "threads": 1})
        try:
            r = run_monodromy(f, P, point_cfg)
            return ScanPoint(i, P, r.verdict, str(r.group), f"{r.loops_tracked} loops")
        except Exception as exc:  # noqa: BLE001 - a scan never stops on one point
            log.warning("scan point %d failed: %s", i, exc)
            return ScanPoint(i, P, "Error", detail=str(exc))

    if threads is None:
        threads = max(1, int(os.environ.get("MONODROMY_THREADS", "1") or 1))
    items = list(enumerate(centers))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            points = list(ex.map(one, items))
    else:
        points = [one(it) for it in items]
    return ScanReport(grid, sorted(points, key=lambda p: p.index))
