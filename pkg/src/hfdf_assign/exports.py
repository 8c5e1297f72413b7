"""Frontier exports: CSV and JSON tables plus a standalone SVG plot.

All writers are deterministic: the same frontier produces byte-identical
files on every run.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .model import Frontier

SVG_WIDTH = 640
SVG_HEIGHT = 480
MARGIN_LEFT = 70
MARGIN_RIGHT = 20
MARGIN_TOP = 20
MARGIN_BOTTOM = 50
MARKER_RADIUS = 4

X_AXIS_LABEL = "f2 (negated excess coverage)"
Y_AXIS_LABEL = "f1 (expected accurate LOBs)"


def _require_points(f: Frontier) -> None:
    if not f.points:
        raise ValueError("empty frontier")


def write_frontier_csv(f: Frontier, path) -> None:
    """budget,f1,f2, then x_j_k cells row-major, then y_k. LF line endings."""
    _require_points(f)
    j_n, k_n = f.points[0].assignment.x.shape
    header = ["budget", "f1", "f2"]
    header += [f"x_{j}_{k}" for j in range(j_n) for k in range(k_n)]
    header += [f"y_{k}" for k in range(k_n)]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for p in f.points:
            row = [p.budget, f"{p.f1:.6f}", p.f2]
            row += [int(v) for v in p.assignment.x.reshape(-1)]
            row += [int(v) for v in p.assignment.y]
            writer.writerow(row)


def write_frontier_json(f: Frontier, path) -> None:
    records = [
        {
            "budget": p.budget,
            "f1": p.f1,
            "f2": p.f2,
            "x": p.assignment.x.tolist(),
            "y": p.assignment.y.tolist(),
        }
        for p in f.points
    ]
    Path(path).write_text(json.dumps(records, indent=2) + "\n", encoding="utf-8")


def plot_extent(f: Frontier) -> tuple[float, float, float, float]:
    """Data ranges (f2_lo, f2_hi, f1_lo, f1_hi) shown by the plot.

    The horizontal axis always ends at 0 (no excess); degenerate ranges are
    widened so the affine map below stays invertible.
    """
    _require_points(f)
    f2s = [p.f2 for p in f.points]
    f1s = [p.f1 for p in f.points]
    x_lo, x_hi = float(min(f2s)), 0.0
    if x_lo == x_hi:
        x_lo = -1.0
    y_lo, y_hi = float(min(f1s)), float(max(f1s))
    if y_lo == y_hi:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    return x_lo, x_hi, y_lo, y_hi


def to_pixel(f2: float, f1: float, extent: tuple[float, float, float, float]) -> tuple[float, float]:
    """Affine data-to-pixel map; f1 increases upward."""
    x_lo, x_hi, y_lo, y_hi = extent
    plot_w = SVG_WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = SVG_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    px = MARGIN_LEFT + (f2 - x_lo) / (x_hi - x_lo) * plot_w
    py = MARGIN_TOP + (y_hi - f1) / (y_hi - y_lo) * plot_h
    return px, py


def emit_plot(f: Frontier, path) -> None:
    """Write the frontier as a static SVG scatter with a connecting polyline."""
    _require_points(f)
    extent = plot_extent(f)
    x_lo, x_hi, y_lo, y_hi = extent
    left, top = MARGIN_LEFT, MARGIN_TOP
    right = SVG_WIDTH - MARGIN_RIGHT
    bottom = SVG_HEIGHT - MARGIN_BOTTOM

    ordered = sorted(f.points, key=lambda p: p.f2)
    pixels = [to_pixel(p.f2, p.f1, extent) for p in ordered]

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        f'<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>',
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="black"/>',
    ]
    if len(pixels) > 1:
        pts = " ".join(f"{px:.2f},{py:.2f}" for px, py in pixels)
        parts.append(f'<polyline points="{pts}" fill="none" stroke="steelblue"/>')
    for px, py in pixels:
        parts.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="{MARKER_RADIUS}" fill="firebrick"/>')
    parts += [
        f'<text x="{left}" y="{bottom + 16}" font-size="11" text-anchor="middle">{x_lo:g}</text>',
        f'<text x="{right}" y="{bottom + 16}" font-size="11" text-anchor="middle">{x_hi:g}</text>',
        f'<text x="{left - 6}" y="{bottom}" font-size="11" text-anchor="end">{y_lo:.6f}</text>',
        f'<text x="{left - 6}" y="{top + 8}" font-size="11" text-anchor="end">{y_hi:.6f}</text>',
        f'<text x="{(left + right) / 2:.2f}" y="{SVG_HEIGHT - 12}" font-size="13" '
        f'text-anchor="middle">{X_AXIS_LABEL}</text>',
        f'<text x="14" y="{(top + bottom) / 2:.2f}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 14 {(top + bottom) / 2:.2f})">{Y_AXIS_LABEL}</text>',
        "</svg>",
    ]
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")
