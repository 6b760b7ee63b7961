import math

import numpy as np
import pytest

from conftest import smooth_surface
from surfmono.algebra import evaluate
from surfmono.branch import Puncture, PencilSlice, SliceLine, discriminant_curve, pencil_slice, square_free_part
from surfmono.geometry import frame_for_center, point
from surfmono.perms import GroupHandle, Permutation, compose, cycle_type
from surfmono.tracker import (
    FiberError,
    LoopGenerationError,
    SliceSystem,
    TrackerConfig,
    TrackingError,
    constant_loop,
    generate_loops,
    run_monodromy,
    solve_base_fiber,
    track_loop,
    trace_generators,
)

E4 = frame_for_center(point(0, 0, 0, 1))


def synthetic_slice(params):
    return PencilSlice(SliceLine((1, 0, 0), (0, 1, 0)), tuple(Puncture(complex(p), 1) for p in params), len(params))


def test_base_fiber_examples(cubic, quadric):
    fb = solve_base_fiber(cubic, E4, [1, 0, 0])
    np.testing.assert_allclose(np.sort_complex(np.array(fb.t_values)), np.sort_complex(np.roots([1, 0, 0, 1])),
                               atol=1e-12)
    fb = solve_base_fiber(quadric, E4, [1, 0, 0])
    np.testing.assert_allclose(np.sort_complex(np.array(fb.t_values)), [-1j, 1j], atol=1e-12)
    for x in fb.points:
        assert abs(evaluate(quadric, np.array(x))) < 1e-12
    with pytest.raises(FiberError):
        solve_base_fiber(cubic, E4, [1, -1, 0])


def test_generate_loops_construction():
    sl = synthetic_slice([1.0, 1j * 1.5, -1.2 - 0.4j])
    loops = generate_loops(sl)
    assert len(loops) == 3
    angles = [np.angle(lp.center) for lp in loops]
    assert angles == sorted(angles)
    for i, a in enumerate(loops):
        for b in loops[i + 1:]:
            assert abs(a.center - b.center) > a.radius + b.radius
    assert len(generate_loops(synthetic_slice([0.5 + 0.5j]))) == 1
    with pytest.raises(LoopGenerationError):
        generate_loops(synthetic_slice([1.0, 2.0 + 1e-9j]))


def angular_product(perms):
    out = Permutation.identity(perms[0].degree)
    for p in perms:
        out = compose(p, out)
    return out


def track_all(f, L, seed=0):
    cfg = TrackerConfig(seed=seed, early_stop=False, extra_slices=0)
    res = run_monodromy(f, L, cfg)
    return res, cfg


def test_fermat_coordinate_loops_are_three_cycles(cubic):
    res, _ = track_all(cubic, point(0, 0, 0, 1))
    assert res.generators
    for g in res.generators:
        assert cycle_type(g.permutation) == [3]
    assert res.group.order == 3 and res.verdict == "NoEvidenceOfSd"


def test_quadric_loops_are_transpositions(quadric):
    res, _ = track_all(quadric, point(0.2, 0.5, -1, 0.7))
    assert all(g.permutation.images == (1, 0) for g in res.generators)
    assert str(res.group) == "Symmetric(2)" and res.verdict == "Uniform"


def test_examples(cubic):
    res = run_monodromy(cubic, point(0, 0, 1, 2))
    assert (res.group.kind, res.group.order, res.verdict) == ("Symmetric", 6, "Uniform")
    with pytest.raises(TrackingError):
        run_monodromy(cubic, point(1, -1, 0, 0))


CASES = [(d, seed) for d in (2, 3, 4) for seed in range(6)]


@pytest.mark.parametrize("d,seed", CASES)
def test_invariants(d, seed):
    f = smooth_surface(d, 1000 * d + seed)
    rng = np.random.default_rng(seed)
    L = rng.standard_normal(4)
    res, cfg = track_all(f, L, seed)
    slice_, system, base = res.slices[0]
    loops = [g.loop for g in res.generators if g.slice_index == 0]
    perms = [g.permutation for g in res.generators if g.slice_index == 0]
    ident = Permutation.identity(d)
    # constant loop
    p, _ = track_loop(system, base, constant_loop(), cfg=cfg)
    assert p == ident
    # inverse cancellation and fiber conservation
    for loop, perm, g in zip(loops, perms, res.generators):
        q, cert = track_loop(system, base, loop.reversed(), cfg=cfg)
        assert compose(q, perm) == ident
        assert g.certificate.min_separation > cfg.cluster_tol
    trace = trace_generators(res, cfg)
    assert all(len(t) == d for tr in trace for _, t in tr)
    # every puncture encircled once, counterclockwise in angular order: the product is trivial
    assert len(loops) == len(slice_.punctures)
    assert angular_product(perms) == ident
    # transitivity for an irreducible surface
    assert res.group.transitive
    # determinism
    again = run_monodromy(f, L, cfg)
    assert [g.permutation for g in again.generators] == [g.permutation for g in res.generators]
    assert [g.loop.descriptor() for g in again.generators] == [g.loop.descriptor() for g in res.generators]


def test_conjugation_stability():
    f = smooth_surface(3, 77)
    L = np.array([0.3, -0.4, 1.1, 0.5])
    res, cfg = track_all(f, L)
    _, system, base = res.slices[0]
    loops = [g.loop for g in res.generators]
    reordered = [track_loop(system, base, lp, cfg=cfg)[0] for lp in reversed(loops)]
    G1 = GroupHandle([g.permutation for g in res.generators], 3)
    G2 = GroupHandle(reordered, 3)
    assert {g.images for g in G1.elements()} == {g.images for g in G2.elements()}


def test_threads_do_not_change_results():
    f = smooth_surface(4, 5)
    L = np.array([0.7, 0.1, -0.3, 1.0])
    a = run_monodromy(f, L, TrackerConfig(threads=1))
    b = run_monodromy(f, L, TrackerConfig(threads=3))
    assert [g.permutation for g in a.generators] == [g.permutation for g in b.generators]
    assert a.group == b.group


def test_result_report_shape(cubic):
    rep = run_monodromy(cubic, point(0, 0, 0, 1)).to_dict()
    assert rep["groupOrder"] == 3 and rep["classification"] == "Alternating(3)"
    assert rep["verdict"].startswith("NoEvidenceOfSd(")
    assert {"steps", "minSeparation", "residualMax"} <= set(rep["certificate"])
    g = rep["generators"][0]
    assert set(g["loop"]) >= {"center", "radius"} and g["perm"]


def test_pencil_on_reduced_fermat_gives_three_loops(cubic):
    red = square_free_part(discriminant_curve(cubic, E4))
    sl = pencil_slice(red, [0.4, -0.2, 0.9], seed=1)
    assert len(generate_loops(sl)) == 3
    system = SliceSystem(cubic, E4, sl.line)
    assert system.P.shape == (4, 4)
    assert math.isfinite(system.scale(0.1, np.array([0.2])).item())
