"""Figures and delimited tables for verification reports."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .trc import TrcReport  # noqa: E402

CSV_FIELDS = [
    "id", "m", "dim", "mdim", "trk_bound", "hrk_zk", "hrk_rzk",
    "theorem_bound", "trc_bound", "theorem_tight",
    "cross_check_ok", "theorem_ok", "trc_ok", "slice_ok",
]

_STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 11,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def write_csv(reports: Sequence[TrcReport], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in reports:
            row = {k: v for k, v in r.to_json().items() if k in CSV_FIELDS}
            for flag in ("cross_check_ok", "theorem_ok", "trc_ok", "slice_ok"):
                row[flag] = r.flags.get(flag, "")
            writer.writerow(row)
    return path


def _bound_panel(ax, bounds, values, tight, title, xlabel, ylabel):
    top = max(max(bounds), max(values)) * 1.5
    ax.plot([1, top], [1, top], color="0.6", lw=1, ls="--", label="equality")
    loose = [(b, v) for b, v, t in zip(bounds, values, tight) if not t]
    snug = [(b, v) for b, v, t in zip(bounds, values, tight) if t]
    if loose:
        ax.scatter(*zip(*loose), s=14, alpha=0.6, label="strict")
    if snug:
        ax.scatter(*zip(*snug), s=22, marker="D", color="C3", label="tight")
    ax.set_xscale("log", base=2)
    ax.set_yscale("log", base=2)
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.legend(loc="upper left")


def plot_bounds(reports: Sequence[TrcReport], path: str | Path) -> Path:
    """hrk against its lower bound for Z_K and the real moment-angle complex."""
    path = Path(path)
    with plt.rc_context(_STYLE):
        fig, (left, right) = plt.subplots(1, 2, figsize=(9, 4))
        _bound_panel(left, [r.trc_bound for r in reports], [r.hrk_zk for r in reports],
                     [r.hrk_zk == r.trc_bound for r in reports],
                     r"$\mathcal{Z}_K$", r"$2^{m-1-\dim K}$", r"hrk$(\mathcal{Z}_K)$")
        _bound_panel(right, [r.theorem_bound for r in reports], [r.hrk_rzk for r in reports],
                     [r.theorem_tight for r in reports],
                     r"$\mathbb{R}\mathcal{Z}_K$", r"$2^{m-1-\mathrm{mdim}\,K}$",
                     r"hrk$(\mathbb{R}\mathcal{Z}_K)$")
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_slices(reports: Sequence[TrcReport], path: str | Path) -> Path:
    """Every (complex, vertex) slice comparison as one point."""
    path = Path(path)
    lhs = [s["lhs"] for r in reports for s in r.slices]
    rhs = [s["rhs"] for r in reports for s in r.slices]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 4))
        if lhs:
            _bound_panel(ax, rhs, lhs, [a == b for a, b in zip(lhs, rhs)],
                         "hyperplane sections", r"$2^{m-k-1}\,$hrk$(\mathbb{R}\mathcal{Z}_{lk\,v})$",
                         r"hrk$(\mathbb{R}\mathcal{Z}_K)$")
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_report(report: TrcReport, path: str | Path) -> Path:
    """Graded Betti numbers of Z_K from both routes, side by side."""
    path = Path(path)
    hoch = {int(d): r for d, r in report.betti_zk.items()}
    cube = {int(d): r for d, r in report.betti_rzk_double.items()}
    degrees = list(range(0, max([0, *hoch, *cube]) + 1))
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6, 3.5))
        width = 0.4
        ax.bar([d - width / 2 for d in degrees], [hoch.get(d, 0) for d in degrees], width,
               label="full subcomplexes")
        ax.bar([d + width / 2 for d in degrees], [cube.get(d, 0) for d in degrees], width,
               label="cubes of the double")
        ax.set_xticks(degrees)
        ax.set_xlabel("degree")
        ax.set_ylabel("rank")
        ax.set_title(f"{report.id}: hrk = {report.hrk_zk}, bound {report.trc_bound}")
        ax.legend()
        fig.savefig(path)
        plt.close(fig)
    return path


def render_corpus(reports: Sequence[TrcReport], outdir: str | Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    return [
        write_csv(reports, outdir / "corpus.csv"),
        plot_bounds(reports, outdir / "bounds.png"),
        plot_slices(reports, outdir / "slices.png"),
    ]


def render_report(report: TrcReport, outdir: str | Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    return [
        write_csv([report], outdir / f"{report.id}.csv"),
        plot_report(report, outdir / f"{report.id}_betti.png"),
        plot_slices([report], outdir / f"{report.id}_slices.png"),
    ]
