"""Acceptance criteria, one test each; every test records a PASS/FAIL line."""

import itertools
import math
import time

import numpy as np

from conftest import record_acceptance
from surfmono.algebra import fermat, gradient, random_polynomial, restrict_to_line, root_structure
from surfmono.branch import discriminant_curve, local_multiplicity
from surfmono.contact import contact_profile, is_planar_point, sample_tangent_lines_through
from surfmono.focal import (
    DEMO_FAMILIES,
    bitangent_family,
    foci_on_member,
    point_family,
    sphere_tangent_family,
)
from surfmono.geometry import fiber_line, frame_for_center, point
from surfmono.numerology import degree_report
from surfmono.perms import (
    GroupHandle,
    Permutation,
    centralizer_in_sd,
    compose,
    cycle_type,
    jordan_symmetric_check,
)
from surfmono.pipeline import COORDINATE_POINTS, random_centers
from surfmono.tracker import TrackerConfig, constant_loop, run_monodromy, track_loop

CUBIC = fermat(3)
QUADRIC = fermat(2)


def seeded_quartic(seed=2024):
    return random_polynomial(4, 4, np.random.default_rng(seed))


def surface_samples(f, count, rng):
    """Points of ``f = 0`` on random real-direction lines."""
    pts = []
    while len(pts) < count:
        a, b = rng.standard_normal((2, 4)) + 1j * rng.standard_normal((2, 4))
        q = restrict_to_line(f, a, b)
        for c in root_structure(q):
            pts.append(a + c.center * b)
    return pts[:count]


def test_01_fermat_coordinate_points_alternating():
    details, ok = [], True
    for L in COORDINATE_POINTS:
        t0 = time.perf_counter()
        res = run_monodromy(CUBIC, L, TrackerConfig(seed=0))
        dt = time.perf_counter() - t0
        elems = GroupHandle(res.permutations, 3).elements()
        good = (res.group.order == 3 and dt < 10
                and all(g.is_identity() or cycle_type(g) == [3] for g in elems))
        ok &= good
        details.append(f"{L}: order {res.group.order} in {dt:.2f}s")
    record_acceptance(1, ok, "; ".join(details))
    assert ok


def test_02_fermat_random_centers_symmetric():
    ok, worst = True, 0.0
    kinds = []
    for k, L in enumerate(random_centers(CUBIC, 10, seed=0)):
        t0 = time.perf_counter()
        res = run_monodromy(CUBIC, L, TrackerConfig(seed=k))
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        kinds.append(str(res.group))
        ok &= res.group.kind == "Symmetric" and res.group.order == 6 and dt < 10
    record_acceptance(2, ok, f"{kinds.count('Symmetric(3)')}/10 Symmetric(3), slowest {worst:.2f}s")
    assert ok


def test_03_quadric():
    rng = np.random.default_rng(3)
    groups = []
    for k in range(5):
        L = rng.standard_normal(4)
        groups.append(run_monodromy(QUADRIC, L, TrackerConfig(seed=k)).group)
    curve = discriminant_curve(QUADRIC, frame_for_center(rng.standard_normal(4)))
    ok = all(g.kind == "Symmetric" and g.order == 2 for g in groups) and curve.degree == 2
    record_acceptance(3, ok, f"groups {[str(g) for g in groups]}, branch curve degree {curve.degree}")
    assert ok


def test_04_random_quartic_symmetric():
    f = seeded_quartic()
    rng = np.random.default_rng(4)
    pts = surface_samples(f, 1000, rng)
    grad_min = min(np.linalg.norm(gradient(f, x)) / np.linalg.norm(x) ** 3 for x in pts)
    L = rng.standard_normal(4)
    t0 = time.perf_counter()
    res = run_monodromy(f, L, TrackerConfig(seed=4))
    dt = time.perf_counter() - t0
    ok = grad_min > 1e-6 and res.group.kind == "Symmetric" and res.group.order == 24 and dt < 60
    record_acceptance(4, ok, f"{res.group} order {res.group.order} in {dt:.2f}s, min |grad| {grad_min:.2e}")
    assert ok


def test_05_discriminant_degree_law():
    rng = np.random.default_rng(5)
    out, ok = [], True
    for d in (2, 3, 4):
        f = random_polynomial(4, d, rng)
        c = discriminant_curve(f, frame_for_center(rng.standard_normal(4)), seed=d)
        ok &= c.degree == d * (d - 1) and c.residual < 1e-8
        out.append(f"d={d}: degree {c.degree}, residual {c.residual:.1e}")
    record_acceptance(5, ok, "; ".join(out))
    assert ok


def test_06_local_multiplicity_equals_branching_weight():
    frame = frame_for_center(point(0, 0, 0, 1))
    div = discriminant_curve(CUBIC, frame)
    m = local_multiplicity(div, [1, -1, 0])
    b = contact_profile(CUBIC, fiber_line(frame, [1, -1, 0])).branching_weight
    fermat_ok = m == 2 == b

    f = seeded_quartic()
    L = np.array([0.4, -0.3, 0.8, 1.0])
    frame = frame_for_center(L)
    div4 = discriminant_curve(f, frame)
    profs = sample_tangent_lines_through(f, L, 20, seed=6)
    pairs = []
    for p in profs:
        y = frame.to_frame(p.line.base)[:3]
        pairs.append((local_multiplicity(div4, y), p.branching_weight))
    quartic_ok = len(pairs) == 20 and all(pair == (1, 1) for pair in pairs)
    ok = fermat_ok and quartic_ok
    record_acceptance(6, ok, f"Fermat (1:-1:0): mult {m}, b {b}; quartic: "
                             f"{sum(pr == (1, 1) for pr in pairs)}/{len(pairs)} points with mult = b = 1")
    assert ok


def test_07_planar_points():
    rng = np.random.default_rng(7)
    at_flex = is_planar_point(CUBIC, [1, -1, 0, 0], tol=1e-7)
    randoms = []
    for _ in range(20):
        x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        x[3] = np.roots([1, 0, 0, (x[:3] ** 3).sum()])[0]
        randoms.append(is_planar_point(CUBIC, x, tol=1e-7))
    ok = at_flex and not any(randoms)
    record_acceptance(7, ok, f"(1:-1:0:0) planar={at_flex}; random points planar {sum(randoms)}/20")
    assert ok


def test_08_focal_calculus():
    parts, ok = [], True
    for name, make in DEMO_FAMILIES.items():
        fam = bitangent_family(seed=0) if name == "bitangent" else make()
        reps = [foci_on_member(fam, s) for s in fam.sample(100, 8)]
        affine_ok = all(r.degree <= 2 for r in reps)
        # roots on the member line counted projectively (finite ones plus the point at infinity)
        projective = [r.degree + r.infinite_multiplicity for r in reps]
        full = sum(p == 2 for p in projective)
        fam_ok = affine_ok and full >= 95
        ok &= fam_ok
        parts.append(f"{name}: affine deg<=2 {affine_ok}, degree 2 on {full}/100")

    sph = sphere_tangent_family()
    doubles = 0
    for s in sph.sample(100, 8):
        r = foci_on_member(sph, s, tol=1e-6)
        doubles += any(f.multiplicity == 2 and abs(f.t) <= 1e-6 for f in r.foci)
    sphere_ok = doubles >= 95
    ok &= sphere_ok
    parts.append(f"sphere-tangent double focus at tangency on {doubles}/100")

    q = np.array([0.0, 0.0, 0.0, 1.0])
    pf = point_family(q)
    hits = 0
    for s in pf.sample(100, 8):
        r = foci_on_member(pf, s, tol=1e-6)
        hits += (len(r.foci) == 1 and r.foci[0].multiplicity == 2
                 and np.allclose(r.foci[0].point / r.foci[0].point[3], q, atol=1e-9))
    point_ok = hits == 100
    ok &= point_ok
    parts.append(f"point family double focus at q on {hits}/100")
    record_acceptance(8, ok, "; ".join(parts))
    assert ok


def test_09_transposition_generators():
    rng = np.random.default_rng(9)
    checked = violations = 0
    for _ in range(1000):
        d = int(rng.integers(2, 9))
        k = int(rng.integers(1, 2 * d + 1))
        gens = []
        for _ in range(k):
            i, j = rng.choice(d, 2, replace=False)
            gens.append(Permutation.from_cycles([(i + 1, j + 1)], d))
        if jordan_symmetric_check(gens):
            checked += 1
            if GroupHandle(gens, d).order != math.factorial(d):
                violations += 1
    ok = violations == 0 and checked > 100
    record_acceptance(9, ok, f"{checked} transitive transposition sets, {violations} with order != d!")
    assert ok


def test_10_centralizer():
    order = centralizer_in_sd([Permutation.from_cycles([(1, 2, 3)], 3)]).order
    ok = order == 3
    record_acceptance(10, ok, f"centralizer of A3 in S3 has order {order}")
    assert ok


def test_11_numerology():
    r = degree_report(3)
    cubic_ok = (r.deg_r, r.deg_kr, r.genus_bound_r, r.branch_must_be_singular) == (6, 6, 4, True)
    all_singular = all(degree_report(d).branch_must_be_singular for d in range(3, 51))
    ok = cubic_ok and all_singular
    record_acceptance(11, ok, f"d=3 {r.to_dict()}; singular for 3<=d<=50: {all_singular}")
    assert ok


def test_12_tracker_invariants():
    rng = np.random.default_rng(12)
    violations = []
    pairs = [(d, s) for s, d in zip(range(50), itertools.cycle((2, 3, 4)))]
    for d, s in pairs:
        f = random_polynomial(4, d, np.random.default_rng(500 + s))
        L = rng.standard_normal(4)
        cfg = TrackerConfig(seed=s, early_stop=False, extra_slices=0)
        res = run_monodromy(f, L, cfg)
        _, system, base = res.slices[0]
        ident = Permutation.identity(d)
        if track_loop(system, base, constant_loop(), cfg=cfg)[0] != ident:
            violations.append((d, s, "constant loop"))
        for g in res.generators:
            back, cert = track_loop(system, base, g.loop.reversed(), cfg=cfg)
            if compose(back, g.permutation) != ident:
                violations.append((d, s, "inverse loop"))
            for c in (g.certificate, cert):
                if not c.min_separation > cfg.cluster_tol:
                    violations.append((d, s, "separation"))
        if len(base.t_values) != d or any(g.permutation.degree != d for g in res.generators):
            violations.append((d, s, "fiber size"))
        again = run_monodromy(f, L, cfg)
        if ([g.permutation for g in again.generators] != res.permutations
                or [g.loop.descriptor() for g in again.generators] != [g.loop.descriptor() for g in res.generators]):
            violations.append((d, s, "determinism"))
    ok = not violations
    record_acceptance(12, ok, f"{len(pairs)} (surface, center) pairs, {len(violations)} violations {violations[:3]}")
    assert ok
