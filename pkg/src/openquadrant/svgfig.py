"""SVG rendering of the regions A, B and Q in the plane.

A = {xy >= 1} ∩ Q sits above the hyperbola xy = 1; B adds the wedge
{y >= x > 0}; Q is the open quadrant itself.  The unbounded sets are
clipped to the viewport [-1, 5]^2, the hyperbola is approximated by a
256-segment polyline, and all coordinates are formatted with fixed
precision, so output bytes depend only on the arguments.
"""

from __future__ import annotations

VIEW_MIN = -1.0
VIEW_MAX = 5.0
SIZE = 600
HYPERBOLA_SEGMENTS = 256

_FILL = "#c8c8c8"
_EDGE = "#303030"

SET_NAMES = ("A", "B", "Q")


def _px(x: float) -> str:
    return f"{(x - VIEW_MIN) / (VIEW_MAX - VIEW_MIN) * SIZE:.2f}"


def _py(y: float) -> str:
    return f"{SIZE - (y - VIEW_MIN) / (VIEW_MAX - VIEW_MIN) * SIZE:.2f}"


def _pts(points) -> str:
    return " ".join(f"{_px(x)},{_py(y)}" for x, y in points)


def _hyperbola_points():
    # log-spaced in x from 0.2 (where y = 1/x leaves the viewport) to 5
    x0, x1 = 1.0 / VIEW_MAX, VIEW_MAX
    ratio = x1 / x0
    pts = []
    for i in range(HYPERBOLA_SEGMENTS + 1):
        x = x0 * ratio ** (i / HYPERBOLA_SEGMENTS)
        pts.append((x, 1.0 / x))
    return pts


def region_figure(sets) -> str:
    """SVG picture of the requested subset of {A, B, Q}."""
    sets = list(sets)
    for s in sets:
        if s not in SET_NAMES:
            raise ValueError(f"unknown set {s!r}; choose from {SET_NAMES}")
    body = [
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
        # axes
        f'<line x1="{_px(VIEW_MIN)}" y1="{_py(0)}" x2="{_px(VIEW_MAX)}" y2="{_py(0)}" '
        f'stroke="#909090" stroke-width="1"/>',
        f'<line x1="{_px(0)}" y1="{_py(VIEW_MIN)}" x2="{_px(0)}" y2="{_py(VIEW_MAX)}" '
        f'stroke="#909090" stroke-width="1"/>',
    ]
    hyper = _hyperbola_points()
    label_anchor = None

    for s in sets:
        if s == "Q":
            square = [(0, 0), (VIEW_MAX, 0), (VIEW_MAX, VIEW_MAX), (0, VIEW_MAX)]
            body.append(f'<polygon points="{_pts(square)}" fill="{_FILL}"/>')
        elif s == "A":
            region = hyper + [(VIEW_MAX, VIEW_MAX)]
            body.append(f'<polygon points="{_pts(region)}" fill="{_FILL}"/>')
        else:  # B = A plus the wedge above the diagonal
            region = hyper + [(VIEW_MAX, VIEW_MAX)]
            body.append(f'<polygon points="{_pts(region)}" fill="{_FILL}"/>')
            wedge = [(0, 0), (VIEW_MAX, VIEW_MAX), (0, VIEW_MAX)]
            body.append(f'<polygon points="{_pts(wedge)}" fill="{_FILL}"/>')
        label_anchor = s

    # boundaries drawn after the fills
    for s in sets:
        if s in ("A", "B"):
            body.append(
                f'<polyline points="{_pts(hyper)}" fill="none" '
                f'stroke="{_EDGE}" stroke-width="1.5"/>'
            )
        if s == "B":
            diag = [(0, 0), (VIEW_MAX, VIEW_MAX)]
            body.append(
                f'<polyline points="{_pts(diag)}" fill="none" '
                f'stroke="{_EDGE}" stroke-width="1.5"/>'
            )
        if s == "Q":
            edge = [(0, VIEW_MAX), (0, 0), (VIEW_MAX, 0)]
            body.append(
                f'<polyline points="{_pts(edge)}" fill="none" '
                f'stroke="{_EDGE}" stroke-width="1.5" stroke-dasharray="6 4"/>'
            )

    if label_anchor is not None:
        body.append(
            f'<text x="{_px(4.1)}" y="{_py(4.2)}" font-family="sans-serif" '
            f'font-size="24" fill="#000000">{"".join(sets)}</text>'
        )

    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )
