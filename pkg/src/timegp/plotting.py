"""Dependency-free SVG line charts for sweep results.

Output is deterministic (fixed coordinate formatting), so charts can be
byte-compared in tests.
"""

from __future__ import annotations

from .errors import UsageError

WIDTH = 800
HEIGHT = 500
MARGIN_LEFT = 70
MARGIN_RIGHT = 140
MARGIN_TOP = 40
MARGIN_BOTTOM = 55

PALETTE = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
]


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    if hi == lo:
        return [lo]
    step = (hi - lo) / (n - 1)
    return [lo + i * step for i in range(n)]


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def line_chart_svg(series: dict[str, tuple[list[float], list[float]]],
                   x_label: str, y_label: str, title: str = "") -> str:
    """Render labeled (xs, ys) series as a self-contained SVG document."""
    if not series or all(len(xs) == 0 for xs, _ in series.values()):
        raise UsageError("no data to plot")

    all_x = [x for xs, _ in series.values() for x in xs]
    all_y = [y for _, ys in series.values() for y in ys]
    x_lo, x_hi = min(all_x), max(all_x)
    y_lo, y_hi = min(all_y), max(all_y)
    if x_hi == x_lo:
        x_hi = x_lo + 1
    if y_hi == y_lo:
        y_hi = y_lo + 1

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def px(x):
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y):
        return MARGIN_TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    out = []
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
               f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">')
    out.append(f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>')
    if title:
        out.append(f'<text x="{WIDTH // 2}" y="24" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="16">{title}</text>')

    # axes
    x0, y0 = MARGIN_LEFT, MARGIN_TOP + plot_h
    out.append(f'<line x1="{x0}" y1="{MARGIN_TOP}" x2="{x0}" y2="{y0}" '
               f'stroke="black"/>')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{MARGIN_LEFT + plot_w}" '
               f'y2="{y0}" stroke="black"/>')
    for t in _ticks(x_lo, x_hi):
        tx = px(t)
        out.append(f'<line x1="{tx:.2f}" y1="{y0}" x2="{tx:.2f}" '
                   f'y2="{y0 + 5}" stroke="black"/>')
        out.append(f'<text x="{tx:.2f}" y="{y0 + 20}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="11">{_fmt(t)}</text>')
    for t in _ticks(y_lo, y_hi):
        ty = py(t)
        out.append(f'<line x1="{x0 - 5}" y1="{ty:.2f}" x2="{x0}" '
                   f'y2="{ty:.2f}" stroke="black"/>')
        out.append(f'<text x="{x0 - 8}" y="{ty + 4:.2f}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="11">{_fmt(t)}</text>')
    out.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.2f}" y="{HEIGHT - 12}" '
               f'text-anchor="middle" font-family="sans-serif" '
               f'font-size="13">{x_label}</text>')
    out.append(f'<text x="18" y="{MARGIN_TOP + plot_h / 2:.2f}" '
               f'text-anchor="middle" font-family="sans-serif" font-size="13" '
               f'transform="rotate(-90 18 {MARGIN_TOP + plot_h / 2:.2f})">'
               f'{y_label}</text>')

    # series + legend
    legend_x = MARGIN_LEFT + plot_w + 15
    for i, (label, (xs, ys)) in enumerate(series.items()):
        color = PALETTE[i % len(PALETTE)]
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                   f'points="{pts}"/>')
        ly = MARGIN_TOP + 10 + i * 18
        out.append(f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 20}" '
                   f'y2="{ly}" stroke="{color}" stroke-width="1.5"/>')
        out.append(f'<text x="{legend_x + 26}" y="{ly + 4}" '
                   f'font-family="sans-serif" font-size="12">{label}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
