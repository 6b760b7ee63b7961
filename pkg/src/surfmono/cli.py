"""Command line: ``surfmono <command> ...``.

Every command accepts ``--json`` (print the report as JSON on stdout).
Report files carry ``schemaVersion`` and a ``generatedAt`` timestamp and
are otherwise byte-stable for fixed inputs and seed.
"""

from __future__ import annotations

import csv
import datetime as _dt
import json
import logging
import sys
from pathlib import Path

import click
import numpy as np

from .algebra import AlgebraError
from .branch import BranchLocusError, discriminant_curve, pencil_slice, sample_branch_points, square_free_part
from .config import SCHEMA_VERSION, RunConfig, load_surface, parse_point, parse_point_json
from .contact import ContactError, contact_profile, test_px
from .focal import DEMO_FAMILIES, FocalError, custom_family, foci_on_member
from .geometry import GeometryError, ProjectiveLine, ProjectivePoint, frame_for_center
from .numerology import degree_report
from .perms import PermutationError
from .pipeline import fermat_regression, scan
from .tracker import TrackingError, run_monodromy, trace_generators

log = logging.getLogger("surfmono")

USER_ERRORS = (AlgebraError, BranchLocusError, ContactError, FocalError, GeometryError, PermutationError,
               TrackingError, ValueError, OSError)


def _envelope(command: str, body: dict) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "command": command,
        "generatedAt": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        **body,
    }


def _emit(command: str, body: dict, out: str | None, as_json: bool, summary: str) -> None:
    report = _envelope(command, body)
    text = json.dumps(report, indent=2, sort_keys=True)
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text + "\n")
    click.echo(text if as_json else summary)


def _fail(exc: Exception, as_json: bool) -> None:
    cert = getattr(exc, "certificate", None)
    if as_json:
        click.echo(json.dumps({"schemaVersion": SCHEMA_VERSION, "error": type(exc).__name__,
                               "message": str(exc), "certificate": cert or {}}, indent=2, sort_keys=True))
    else:
        click.echo(f"error: {exc}", err=True)
    sys.exit(2)


def _point(point: str | None, point_json: str | None) -> ProjectivePoint:
    if point_json:
        return parse_point_json(point_json)
    if point:
        return parse_point(point)
    raise click.UsageError("give --point or --point-json")


def _config(config: str | None, seed: int | None) -> RunConfig:
    cfg = RunConfig.load(config) if config else RunConfig()
    if seed is not None:
        cfg = RunConfig.from_dict({**cfg.to_dict(), "seed": seed})
    return cfg


def _write_csv(path: str, header: list[str], rows) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)


def _plot_path(out: str | None, plot: str | None, suffix: str) -> str:
    if plot:
        return plot
    stem = Path(out).with_suffix("") if out else Path("surfmono")
    return f"{stem}.{suffix}.png"


json_option = click.option("--json", "as_json", is_flag=True, help="Print the report as JSON.")
surface_option = click.option("--surface", default="fermat", show_default=True,
                              help="JSON or text file, a name (fermat, quadric) or an inline polynomial.")


@click.group()
@click.option("-v", "--verbose", count=True, help="Increase log verbosity.")
def main(verbose: int) -> None:
    """Monodromy of projections of surfaces in P^3."""
    logging.basicConfig(level=logging.WARNING - 10 * min(verbose, 2), format="%(levelname)s %(name)s: %(message)s")


@main.command()
@surface_option
@click.option("--point", help="Center as comma separated coordinates, e.g. 0,0,0,1.")
@click.option("--point-json", help="Center as JSON [[re,im],...] or a file holding it.")
@click.option("--seed", type=int, default=None)
@click.option("--config", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--paths-csv", type=click.Path(dir_okay=False), help="Write tracked fiber paths as CSV.")
@click.option("--plot", "plot", flag_value="auto", default=None,
              help="Render the slice and fiber paths to PNG next to --out.")
@json_option
def analyze(surface, point, point_json, seed, config, out, paths_csv, plot, as_json):
    """Monodromy group of the projection from a center."""
    try:
        cfg = _config(config, seed)
        out = out or cfg.output_path
        f = load_surface(surface)
        L = _point(point, point_json)
        tcfg = cfg.tracker_config()
        res = run_monodromy(f, L, tcfg)
        if paths_csv or plot:
            traces = trace_generators(res, tcfg)
        if paths_csv:
            rows = []
            for k, tr in enumerate(traces):
                for step, (s, t) in enumerate(tr):
                    for j, tj in enumerate(t):
                        rows.append([k, step, j, s.real, s.imag, tj.real, tj.imag])
            _write_csv(paths_csv, ["loop", "step", "sheet", "s_re", "s_im", "t_re", "t_im"], rows)
        if plot:
            from . import plotting

            slice_, _, _ = res.slices[0]
            plotting.plot_slice(slice_, [g.loop for g in res.generators if g.slice_index == 0],
                                _plot_path(out, None, "slice"), title=str(res.group))
            plotting.plot_fiber_paths(traces, _plot_path(out, None, "paths"))
    except USER_ERRORS as exc:
        _fail(exc, as_json)
    body = {"config": cfg.to_dict(), **res.to_dict()}
    _emit("analyze", body, out, as_json,
          f"{res.group} (order {res.group.order}) verdict {body['verdict']} after {res.loops_tracked} loops")


@main.command("scan")
@surface_option
@click.option("--grid", type=int, default=3, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--box", type=float, default=1.0, show_default=True, help="Half width of the chart box.")
@click.option("--center", default="0,0,0", show_default=True, help="Box center in the x3 = 1 chart.")
@click.option("--jitter", type=float, default=0.0, show_default=True,
              help="Uniform jitter as a fraction of the grid spacing.")
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--plot", type=click.Path(dir_okay=False), help="Render the scan to this PNG.")
@json_option
def scan_cmd(surface, grid, seed, box, center, jitter, out, plot, as_json):
    """Run analyze over a grid of real centers and list the non-uniform candidates."""
    try:
        f = load_surface(surface)
        c = [float(x) for x in center.split(",")]
        if len(c) != 3:
            raise ValueError("--center needs three coordinates")
        rep = scan(f, grid, seed=seed, box=box, center=c, jitter=jitter)
        if plot:
            from . import plotting

            plotting.plot_scan(rep, plot)
    except USER_ERRORS as exc:
        _fail(exc, as_json)
    body = rep.to_dict()
    lines = [f"scanned {body['scanned']} centers, {len(rep.candidates)} candidates"]
    lines += [f"  {p.center} {p.group}" for p in rep.candidates]
    _emit("scan", body, out, as_json, "\n".join(lines))


@main.command("branch-curve")
@surface_option
@click.option("--point", help="Center as comma separated coordinates.")
@click.option("--point-json")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--reduced", is_flag=True, help="Output the square-free part.")
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--slice-csv", type=click.Path(dir_okay=False), help="Write punctures of a pencil slice as CSV.")
@click.option("--samples-csv", type=click.Path(dir_okay=False), help="Write sampled curve points as CSV.")
@click.option("--samples", type=int, default=60, show_default=True)
@click.option("--plot", type=click.Path(dir_okay=False), help="Render sampled curve points to this PNG.")
@json_option
def branch_curve(surface, point, point_json, seed, reduced, out, slice_csv, samples_csv, samples, plot, as_json):
    """Branch divisor (or its square-free part) of the projection from a center."""
    try:
        f = load_surface(surface)
        L = _point(point, point_json)
        frame = frame_for_center(L)
        curve = discriminant_curve(f, frame, seed=seed)
        red = square_free_part(curve, seed=seed)
        chosen = red if reduced else curve
        if slice_csv:
            rng = np.random.default_rng(seed)
            y0 = rng.uniform(-1, 1, 3).astype(complex)
            sl = pencil_slice(red, y0, seed=seed)
            _write_csv(slice_csv, ["index", "s_re", "s_im", "multiplicity"],
                       [[i, p.parameter.real, p.parameter.imag, p.multiplicity] for i, p in enumerate(sl.punctures)])
        pts = sample_branch_points(f, frame, red, samples, seed=seed) if (samples_csv or plot) else []
        if samples_csv:
            _write_csv(samples_csv, ["y0_re", "y0_im", "y1_re", "y1_im", "y2_re", "y2_im"],
                       [[v for c in y for v in (c.real, c.imag)] for y in pts])
        if plot:
            from . import plotting

            plotting.plot_branch_samples(pts, plot)
    except USER_ERRORS as exc:
        _fail(exc, as_json)
    body = {"center": L.to_json(), "divisorDegree": curve.degree, "reducedDegree": red.degree,
            "curve": chosen.to_dict()}
    _emit("branch-curve", body, out, as_json,
          f"branch divisor degree {curve.degree}, square-free part degree {red.degree}")


def _parse_line(line: str | None, line_json: str | None) -> ProjectiveLine:
    if line_json:
        data = json.loads(Path(line_json).read_text()) if Path(line_json).exists() else json.loads(line_json)
        a = ProjectivePoint.from_json(data["base"]).coords
        b = np.array([complex(x, y) for x, y in data["direction"]])
        return ProjectiveLine(a, b)
    if line:
        parts = line.split(";")
        if len(parts) != 2:
            raise click.UsageError("--line takes two points separated by ';', e.g. '1,0,0,0;0,0,0,1'")
        return ProjectiveLine(parse_point(parts[0]).coords, parse_point(parts[1]).coords)
    raise click.UsageError("give --line or --line-json")


@main.command()
@surface_option
@click.option("--line", help="Two points 'a;b', each comma separated.")
@click.option("--line-json", help='JSON {"base": [[re,im],...], "direction": [[re,im],...]} or a file.')
@json_option
def contact(surface, line, line_json, as_json):
    """Intersection type and branching weight of a line."""
    try:
        f = load_surface(surface)
        prof = contact_profile(f, _parse_line(line, line_json))
    except USER_ERRORS as exc:
        _fail(exc, as_json)
    _emit("contact", prof.to_dict(), None, as_json,
          f"type {prof.type} weight {prof.branching_weight} {prof.tag}")


@main.command("px-test")
@surface_option
@click.option("--point")
@click.option("--point-json")
@click.option("--budget", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@json_option
def px_test(surface, point, point_json, budget, seed, out, as_json):
    """Search for a simple tangent line through a center."""
    try:
        f = load_surface(surface)
        v = test_px(f, _point(point, point_json), budget, seed)
    except USER_ERRORS as exc:
        _fail(exc, as_json)
    _emit("px-test", v.to_dict(), out, as_json, f"{v.status} after {v.samples_checked} samples")


@main.command("focal-demo")
@click.option("--family", type=click.Choice([*DEMO_FAMILIES, "custom-json"]), default="point", show_default=True)
@click.option("--custom", help="Custom family JSON or a file holding it (with --family custom-json).")
@click.option("--samples", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), help="Write foci of sampled members as CSV.")
@click.option("--plot", type=click.Path(dir_okay=False), help="Render foci to this PNG.")
@json_option
def focal_demo(family, custom, samples, seed, out, csv_path, plot, as_json):
    """Focal polynomials and foci on sampled members of a line family."""
    try:
        if family == "custom-json":
            if not custom:
                raise click.UsageError("--family custom-json needs --custom")
            fam = custom_family(Path(custom).read_text() if Path(custom).exists() else custom)
        else:
            fam = DEMO_FAMILIES[family]()
        reports = [foci_on_member(fam, s) for s in fam.sample(samples, seed)]
        if csv_path:
            rows = [[k, f.t.real, f.t.imag, f.multiplicity, r.degree]
                    for k, r in enumerate(reports) for f in r.foci]
            _write_csv(csv_path, ["member", "t_re", "t_im", "multiplicity", "degree"], rows)
        if plot:
            from . import plotting

            plotting.plot_foci(reports, plot)
    except USER_ERRORS as exc:
        _fail(exc, as_json)
    degrees = [r.degree for r in reports]
    body = {"family": fam.name, "derivatives": fam.mode, "members": [r.to_dict() for r in reports],
            "maxDegree": max(degrees, default=0)}
    doubles = sum(f.multiplicity == 2 for r in reports for f in r.foci)
    _emit("focal-demo", body, out, as_json,
          f"{fam.name}: {len(reports)} members, focal degrees {sorted(set(degrees))}, {doubles} double foci")


@main.command()
@click.option("--degree", type=int, required=True)
@json_option
def numerology(degree, as_json):
    """Degree and genus bookkeeping for the branch curve."""
    try:
        rep = degree_report(degree).to_dict()
    except USER_ERRORS as exc:
        _fail(exc, as_json)
    click.echo(json.dumps(_envelope("numerology", rep) if as_json else rep, indent=2, sort_keys=True))


@main.command("fermat-regression")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--random", "random_count", type=int, default=10, show_default=True)
@click.option("--budget", type=int, default=200, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@json_option
def fermat_regression_cmd(seed, random_count, budget, out, as_json):
    """Full pipeline on the Fermat cubic; exits 1 on any mismatch."""
    try:
        rep = fermat_regression(random_count, seed, budget)
    except USER_ERRORS as exc:
        _fail(exc, as_json)
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in rep.checks]
    _emit("fermat-regression", rep.to_dict(), out, as_json, "\n".join(lines))
    if not rep.passed:
        sys.exit(1)


if __name__ == "__main__":
    main()
