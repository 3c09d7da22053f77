"""Figures written next to the JSONL output when ``--figures DIR`` is given.

Everything here is for looking at results; no verdict depends on it. Root
positions are floating-point (numpy) and only drawn, never tested.
"""
from __future__ import annotations

import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .exactpoly import Poly  # noqa: E402

plt.rcParams["figure.figsize"] = (6.0, 3.5)
plt.rcParams["figure.dpi"] = 120
plt.rcParams["savefig.bbox"] = "tight"
plt.rcParams["axes.grid"] = True
plt.rcParams["grid.linestyle"] = ":"

STATUS_COLORS = {
    "PurelyPeriodic": "tab:green",
    "Periodic": "tab:blue",
    "BudgetExhausted": "tab:red",
    "degenerate": "tab:gray",
}


def _save(fig, out_dir: str, name: str) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    fig.savefig(path)
    plt.close(fig)
    return path


def scan_lengths(records: Sequence, out_dir: str, name: str = "scan_lengths.png") -> str:
    """Bar chart of l0 + l1 per m; exhausted cases are drawn at the budget, hatched."""
    fig, ax = plt.subplots()
    for rec in records:
        m = rec.params["m"]
        color = STATUS_COLORS.get(rec.status, "black")
        if rec.l1 is not None:
            ax.bar(m, rec.l0 + rec.l1, color=color)
        elif rec.status == "BudgetExhausted":
            ax.bar(m, rec.params.get("budget", rec.steps_used), color="none",
                   edgecolor=color, hatch="//")
    ax.set_yscale("log")
    ax.set_xlabel("m")
    ax.set_ylabel("preperiod + period")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in STATUS_COLORS.values()]
    ax.legend(handles, list(STATUS_COLORS), fontsize=7, loc="upper left")
    return _save(fig, out_dir, name)


def digit_stream(digits: Sequence, out_dir: str, name: str = "digits.png", l0=None, l1=None) -> str:
    """Each coordinate of the digit vectors against the step index."""
    fig, ax = plt.subplots()
    arr = np.array([list(d) if isinstance(d, (list, tuple)) else [d] for d in digits], dtype=float)
    for i in range(arr.shape[1] if arr.size else 0):
        ax.plot(arr[:, i], marker=".", lw=0.6, label=f"a_{i + 1}")
    if l0 is not None and l1 is not None:
        ax.axvspan(l0 - 0.5, l0 + l1 - 0.5, color="tab:green", alpha=0.1, label="period")
    ax.set_xlabel("step")
    ax.set_ylabel("digit")
    ax.legend(fontsize=7)
    return _save(fig, out_dir, name)


def roots_plane(f: Poly, out_dir: str, name: str = "roots.png") -> str:
    """Approximate roots of f in the complex plane with the unit circle."""
    roots = np.roots([float(c) for c in reversed(f.coeffs)])
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    theta = np.linspace(0, 2 * np.pi, 400)
    ax.plot(np.cos(theta), np.sin(theta), color="gray", lw=0.8)
    inside = np.abs(roots) < 1
    ax.scatter(roots.real[inside], roots.imag[inside], color="tab:blue", label="|z| < 1")
    ax.scatter(roots.real[~inside], roots.imag[~inside], color="tab:red", label="|z| >= 1")
    ax.set_aspect("equal")
    ax.set_title(str(f), fontsize=8)
    ax.legend(fontsize=7)
    return _save(fig, out_dir, name)


def grid_summary(records: Sequence, out_dir: str, name: str = "family_grid.png") -> str:
    """Fraction of passing family records for each (n, m - n) cell."""
    cells: dict = {}
    for r in records:
        key = (r.params["n"], r.params["m"] - r.params["n"])
        ok, tot = cells.get(key, (0, 0))
        cells[key] = (ok + bool(r.extra.get("passed")), tot + 1)
    ns = sorted({k[0] for k in cells})
    ds = sorted({k[1] for k in cells})
    grid = np.full((len(ns), len(ds)), np.nan)
    for (n, d), (ok, tot) in cells.items():
        grid[ns.index(n), ds.index(d)] = ok / tot
    fig, ax = plt.subplots()
    im = ax.imshow(grid, vmin=0, vmax=1, cmap="RdYlGn", aspect="auto")
    ax.set_xticks(range(len(ds)), [str(d) for d in ds])
    ax.set_yticks(range(len(ns)), [str(n) for n in ns])
    ax.set_xlabel("m - n")
    ax.set_ylabel("n")
    ax.grid(False)
    for (n, d), (ok, tot) in cells.items():
        ax.text(ds.index(d), ns.index(n), f"{ok}/{tot}", ha="center", va="center", fontsize=7)
    fig.colorbar(im, ax=ax, label="pass fraction")
    return _save(fig, out_dir, name)
