"""Minimal deterministic SVG line charts for sweep results.

One chart per quantity, stacked vertically in a single standalone SVG 1.1
document, one polyline per series. The writer is hand-rolled so identical
results produce byte-identical files; axes are linear, auto-scaled to the
data range with a 5% margin.
"""
from __future__ import annotations

from .sweep import SweepResult

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")

_CHART_W = 640.0
_CHART_H = 340.0
_MARGIN_L = 72.0
_MARGIN_R = 150.0
_MARGIN_T = 40.0
_MARGIN_B = 48.0
_TICKS = 5


def _fmt(x: float) -> str:
    # Fixed-precision coordinates keep the byte stream stable.
    return f"{x:.2f}"


def _fmt_tick(x: float) -> str:
    return f"{x:.4g}"


def _limits(values) -> tuple[float, float]:
    finite = [v for v in values if v is not None]
    if not finite:
        return -1.0, 1.0
    lo, hi = min(finite), max(finite)
    if hi == lo:
        lo, hi = lo - 1.0, hi + 1.0
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def _chart(result: SweepResult, quantity: str, y_offset: float, color_of) -> list[str]:
    columns = result.columns
    qi = columns.index(quantity)
    x_lo, x_hi = _limits([row[1] for row in result.rows])
    y_lo, y_hi = _limits([row[qi] for row in result.rows])

    plot_w = _CHART_W - _MARGIN_L - _MARGIN_R
    plot_h = _CHART_H - _MARGIN_T - _MARGIN_B

    def sx(v: float) -> float:
        return _MARGIN_L + (v - x_lo) / (x_hi - x_lo) * plot_w

    def sy(v: float) -> float:
        return y_offset + _MARGIN_T + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

    out = [
        f'<text x="{_fmt(_MARGIN_L)}" y="{_fmt(y_offset + 24)}" '
        f'font-size="15" font-family="sans-serif">{quantity}</text>',
        f'<rect x="{_fmt(_MARGIN_L)}" y="{_fmt(y_offset + _MARGIN_T)}" '
        f'width="{_fmt(plot_w)}" height="{_fmt(plot_h)}" '
        'fill="none" stroke="#333333" stroke-width="1"/>',
    ]
    for i in range(_TICKS):
        fx = x_lo + (x_hi - x_lo) * i / (_TICKS - 1)
        fy = y_lo + (y_hi - y_lo) * i / (_TICKS - 1)
        px, py = sx(fx), sy(fy)
        top = y_offset + _MARGIN_T
        out.append(
            f'<line x1="{_fmt(px)}" y1="{_fmt(top + plot_h)}" x2="{_fmt(px)}" '
            f'y2="{_fmt(top + plot_h + 5)}" stroke="#333333" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(px)}" y="{_fmt(top + plot_h + 19)}" font-size="11" '
            f'font-family="sans-serif" text-anchor="middle">{_fmt_tick(fx)}</text>'
        )
        out.append(
            f'<line x1="{_fmt(_MARGIN_L - 5)}" y1="{_fmt(py)}" x2="{_fmt(_MARGIN_L)}" '
            f'y2="{_fmt(py)}" stroke="#333333" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(_MARGIN_L - 8)}" y="{_fmt(py + 4)}" font-size="11" '
            f'font-family="sans-serif" text-anchor="end">{_fmt_tick(fy)}</text>'
        )
    out.append(
        f'<text x="{_fmt(_MARGIN_L + plot_w / 2)}" y="{_fmt(y_offset + _CHART_H - 10)}" '
        f'font-size="12" font-family="sans-serif" text-anchor="middle">{columns[1]}</text>'
    )

    labels = []
    for row in result.rows:
        if row[0] not in labels:
            labels.append(row[0])
    for si, label in enumerate(labels):
        color = color_of(label, si)
        pts = [
            (row[1], row[qi]) for row in result.rows if row[0] == label
        ]
        # None cells (absent quantities) break the polyline into segments.
        segment: list[str] = []
        segments: list[list[str]] = []
        for x, y in pts:
            if y is None:
                if segment:
                    segments.append(segment)
                segment = []
            else:
                segment.append(f"{_fmt(sx(x))},{_fmt(sy(y))}")
        if segment:
            segments.append(segment)
        for seg in segments:
            out.append(
                f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                f'points="{" ".join(seg)}"/>'
            )
        ly = y_offset + _MARGIN_T + 8 + 18 * si
        lx = _MARGIN_L + plot_w + 14
        out.append(
            f'<line x1="{_fmt(lx)}" y1="{_fmt(ly)}" x2="{_fmt(lx + 22)}" '
            f'y2="{_fmt(ly)}" stroke="{color}" stroke-width="1.5"/>'
        )
        out.append(
            f'<text x="{_fmt(lx + 27)}" y="{_fmt(ly + 4)}" font-size="11" '
            f'font-family="sans-serif">{label}</text>'
        )
    return out


def emit_svg(result: SweepResult, path) -> None:
    """Write one stacked line chart per quantity; no file if there are none."""
    quantities = result.columns[2:]
    if not quantities:
        return
    total_h = _CHART_H * len(quantities)
    body = []
    for i, q in enumerate(quantities):
        body.extend(
            _chart(result, q, i * _CHART_H, lambda label, si: _PALETTE[si % len(_PALETTE)])
        )
    doc = "\n".join(
        [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(_CHART_W)}" height="{_fmt(total_h)}" '
            f'viewBox="0 0 {_fmt(_CHART_W)} {_fmt(total_h)}">',
            '<rect width="100%" height="100%" fill="#ffffff"/>',
            *body,
            "</svg>",
        ]
    ) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(doc)
