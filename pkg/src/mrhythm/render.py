"""SVG circle graphs of marked rhythms.

Beat a of Z_N sits on the circle at angle 2*pi*a/N, measured counterclockwise
from the positive x-axis. The onsets are drawn as disks joined in index order
by a closed polygon, and the marked onset gets an extra ring.
"""

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .config import (
    DEFAULT_CANVAS,
    DEFAULT_FONT_SIZE,
    DEFAULT_LABEL_OFFSET,
    DEFAULT_MARKER_RING,
    DEFAULT_NODE_RADIUS,
    DEFAULT_RADIUS,
    DEFAULT_STROKE_WIDTH,
)
from .core import MarkedRhythm, format_state

SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class CircleGraphStyle:
    """Pixel dimensions of a circle graph.

    Attributes:
        size: Width and height of the square canvas.
        radius: Radius of the beat circle.
        node_radius: Radius of an onset disk.
        ring_radius: Radius of the ring around the marked onset.
        font_size: Beat label font size.
        stroke_width: Width of the rim, polygon and ring strokes.
        label_offset: Distance of beat labels outside the circle.
    """

    size: int = DEFAULT_CANVAS
    radius: int = DEFAULT_RADIUS
    node_radius: int = DEFAULT_NODE_RADIUS
    ring_radius: int = DEFAULT_MARKER_RING
    font_size: int = DEFAULT_FONT_SIZE
    stroke_width: int = DEFAULT_STROKE_WIDTH
    label_offset: int = DEFAULT_LABEL_OFFSET

    def __post_init__(self) -> None:
        for name in (
            "size",
            "radius",
            "node_radius",
            "ring_radius",
            "font_size",
            "stroke_width",
            "label_offset",
        ):
            value = getattr(self, name)
            if value <= 0:
                raise ValueError(f"Style {name} must be positive, got {value}")
        if self.ring_radius <= self.node_radius:
            raise ValueError(
                f"Marker ring radius {self.ring_radius} must exceed node radius {self.node_radius}"
            )

    @property
    def center(self) -> float:
        return self.size / 2


def beat_position(beat: int, N: int, radius: float, center: float) -> tuple[float, float]:
    """Canvas coordinates of a beat; screen y grows downward, so sin is negated."""
    theta = 2 * math.pi * beat / N
    return center + radius * math.cos(theta), center - radius * math.sin(theta)


def _fmt(x: float) -> str:
    text = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def circle_graph_svg(A: MarkedRhythm, style: CircleGraphStyle | None = None) -> str:
    """Render a marked rhythm as an SVG 1.1 document.

    The document holds one rim circle, N beat labels, one rhythm polygon,
    n onset disks and one marker ring.
    """
    style = style or CircleGraphStyle()
    N = A.params.N
    c = style.center
    stroke = str(style.stroke_width)

    root = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=f"{style.size}px",
        height=f"{style.size}px",
        viewBox=f"0 0 {style.size} {style.size}",
    )
    ET.SubElement(root, "title").text = format_state(A)

    ET.SubElement(
        root,
        "circle",
        {
            "class": "rim",
            "cx": _fmt(c),
            "cy": _fmt(c),
            "r": str(style.radius),
            "fill": "none",
            "stroke": "#888888",
            "stroke-width": stroke,
        },
    )

    labels = ET.SubElement(root, "g", {"class": "beat-labels"})
    for beat in range(N):
        x, y = beat_position(beat, N, style.radius + style.label_offset, c)
        label = ET.SubElement(
            labels,
            "text",
            {
                "class": "beat-label",
                "x": _fmt(x),
                "y": _fmt(y),
                "font-size": str(style.font_size),
                "text-anchor": "middle",
                "dominant-baseline": "central",
            },
        )
        label.text = str(beat)

    nodes = [beat_position(a, N, style.radius, c) for a in A.rhythm.entries]
    ET.SubElement(
        root,
        "polygon",
        {
            "class": "rhythm-polygon",
            "points": " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in nodes),
            "fill": "none",
            "stroke": "#000000",
            "stroke-width": stroke,
        },
    )

    group = ET.SubElement(root, "g", {"class": "nodes"})
    for j, (x, y) in enumerate(nodes):
        ET.SubElement(
            group,
            "circle",
            {
                "class": "node",
                "data-index": str(j),
                "cx": _fmt(x),
                "cy": _fmt(y),
                "r": str(style.node_radius),
                "fill": "#000000",
            },
        )

    mx, my = nodes[A.marker]
    ET.SubElement(
        root,
        "circle",
        {
            "class": "marker-ring",
            "cx": _fmt(mx),
            "cy": _fmt(my),
            "r": str(style.ring_radius),
            "fill": "none",
            "stroke": "#d62728",
            "stroke-width": stroke,
        },
    )

    return ET.tostring(root, encoding="unicode") + "\n"


def write_svg(A: MarkedRhythm, path, style: CircleGraphStyle | None = None) -> None:
    """Write the circle graph of ``A`` to ``path``."""
    with open(path, "w", encoding="utf-8") as f:
        f.write(circle_graph_svg(A, style))
