"""PNG figures for reports: slice punctures and loops, fiber paths, scan and focal summaries.

Rendering uses the Agg backend only, so nothing ever opens a window.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

plt.rcParams["figure.dpi"] = 120
plt.rcParams["savefig.bbox"] = "tight"
plt.rcParams["axes.linewidth"] = 0.6


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_slice(slice_, loops=(), path="slice.png", title: str | None = None) -> Path:
    """Punctures of a pencil slice in the s-plane with the lassos drawn over them."""
    fig, ax = plt.subplots(figsize=(5, 5))
    for loop in loops:
        z = np.array(loop.polyline(32))
        ax.plot(z.real, z.imag, lw=0.7, color="tab:blue", alpha=0.7)
    s = np.array([p.parameter for p in slice_.punctures])
    m = np.array([p.multiplicity for p in slice_.punctures])
    if s.size:
        ax.scatter(s.real, s.imag, c=np.where(m > 1, "tab:red", "k"), s=12, zorder=3)
    ax.plot([0], [0], marker="*", color="tab:green", ms=10, zorder=4, label="base point")
    ax.set_aspect("equal")
    ax.set_xlabel("Re s")
    ax.set_ylabel("Im s")
    ax.legend(loc="best", fontsize=8)
    if title:
        ax.set_title(title, fontsize=9)
    return _save(fig, path)


def plot_fiber_paths(traces, path="paths.png", max_loops: int = 6) -> Path:
    """Fiber coordinates ``t`` along tracked loops, one panel per loop."""
    traces = list(traces)[:max_loops]
    n = max(1, len(traces))
    cols = min(3, n)
    rows = (n + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 3.2 * rows), squeeze=False)
    for k, ax in enumerate(axes.ravel()):
        if k >= len(traces) or not traces[k]:
            ax.axis("off")
            continue
        T = np.array([t for _, t in traces[k]])
        for j in range(T.shape[1]):
            ax.plot(T[:, j].real, T[:, j].imag, lw=0.8)
            ax.plot(T[0, j].real, T[0, j].imag, "ko", ms=3)
        ax.set_title(f"loop {k}", fontsize=8)
        ax.tick_params(labelsize=7)
    return _save(fig, path)


def plot_branch_samples(points, path="branch.png") -> Path:
    """Affine chart of sampled branch-curve points (real and imaginary parts of y1/y0, y2/y0)."""
    P = np.asarray(points, dtype=complex)
    fig, ax = plt.subplots(figsize=(5, 4))
    if P.size:
        a = P[:, 1] / P[:, 0]
        b = P[:, 2] / P[:, 0]
        ax.scatter(a.real, b.real, s=6, label="real parts")
        ax.scatter(a.imag, b.imag, s=6, marker="x", label="imaginary parts")
        ax.legend(fontsize=8)
    ax.set_xlabel("y1 / y0")
    ax.set_ylabel("y2 / y0")
    return _save(fig, path)


def plot_scan(report, path="scan.png") -> Path:
    """Scan centers in the (x0, x1) chart projection, candidates highlighted."""
    colors = {"Uniform": "0.7", "NoEvidenceOfSd": "tab:red", "OnSurface": "tab:blue", "Error": "tab:orange"}
    fig, ax = plt.subplots(figsize=(5, 4))
    for status, color in colors.items():
        pts = [p.center.coords for p in report.points if p.status == status]
        if not pts:
            continue
        pts = np.array([c / c[3] for c in pts])
        ax.scatter(pts[:, 0].real, pts[:, 1].real, c=color, s=14 if status != "NoEvidenceOfSd" else 40,
                   label=status)
    ax.set_xlabel("x0 / x3")
    ax.set_ylabel("x1 / x3")
    ax.legend(fontsize=8)
    return _save(fig, path)


def plot_foci(reports, path="foci.png") -> Path:
    """Focus parameters over sampled members; double foci drawn larger."""
    fig, ax = plt.subplots(figsize=(5, 4))
    for rep in reports:
        for f in rep.foci:
            ax.scatter(np.real(f.t), np.imag(f.t), s=10 if f.multiplicity == 1 else 40,
                       c="k" if f.multiplicity == 1 else "tab:red")
    ax.set_xlabel("Re t")
    ax.set_ylabel("Im t")
    return _save(fig, path)
