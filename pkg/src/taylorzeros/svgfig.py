"""Deterministic SVG scatter plots of zero sets with a reference circle.

No timestamps, no generated ids, fixed-precision coordinates: identical
inputs produce byte-identical files.
"""

from __future__ import annotations

_SIZE = 640
_HALF = _SIZE / 2
_MARGIN = 1.15


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def render_scatter_svg(
    points: list[complex],
    circle_radius: float,
    title: str,
) -> str:
    """Axis-equal scatter of complex points plus the circle |z| = radius."""
    extent = circle_radius
    for z in points:
        extent = max(extent, abs(z.real), abs(z.imag))
    extent = max(extent, 1e-12) * _MARGIN
    scale = (_HALF - 20.0) / extent

    def sx(x: float) -> str:
        return _fmt(_HALF + x * scale)

    def sy(y: float) -> str:
        return _fmt(_HALF - y * scale)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_SIZE}" height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f'<rect x="0" y="0" width="{_SIZE}" height="{_SIZE}" fill="white"/>',
        f'<line x1="0" y1="{_fmt(_HALF)}" x2="{_SIZE}" y2="{_fmt(_HALF)}" '
        'stroke="#cccccc" stroke-width="1"/>',
        f'<line x1="{_fmt(_HALF)}" y1="0" x2="{_fmt(_HALF)}" y2="{_SIZE}" '
        'stroke="#cccccc" stroke-width="1"/>',
        f'<circle cx="{_fmt(_HALF)}" cy="{_fmt(_HALF)}" r="{_fmt(circle_radius * scale)}" '
        'fill="none" stroke="#d62728" stroke-width="1.5"/>',
    ]
    for z in points:
        lines.append(
            f'<circle cx="{sx(z.real)}" cy="{sy(z.imag)}" r="4" '
            'fill="#1f77b4" fill-opacity="0.85"/>'
        )
    lines.append(
        f'<text x="10" y="20" font-family="monospace" font-size="13">{title}</text>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
