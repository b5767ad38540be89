"""Chart-type prediction from rendered SVG output.

Features are mark-element histograms and shape statistics taken from the
SVG, with everything under axis groups (class containing ``axis`` or
``tick``) counted separately so tick lines and labels never masquerade as
marks. Classification is a fixed rule cascade over those features; the
interface admits a trained classifier as a drop-in later. All features are
ratios or counts, so uniformly rescaling coordinates never changes the
verdict.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .errors import MalformedSvg
from .templates import VizType

_MARK_TAGS = ("rect", "circle", "path", "line", "text", "g")

_PATH_COMMANDS = re.compile(r"[MmLlHhVvCcSsQqTtAaZz]")

_AXIS_CLASS = re.compile(r"(axis|tick)")


@dataclass(frozen=True)
class SvgFeatureVector:
    rect_count: int
    circle_count: int
    path_count: int
    line_count: int
    text_count: int
    group_count: int
    axis_groups: int
    # Fractions over path commands excluding moves and closes.
    line_command_fraction: float
    curve_command_fraction: float
    arc_command_fraction: float
    closed_path_fraction: float
    filled_path_fraction: float
    rect_baseline_ratio: float
    circle_radius_cv: float
    circle_position_ratio: float

    @property
    def mark_total(self) -> int:
        return self.rect_count + self.circle_count + self.path_count + self.line_count


@dataclass(frozen=True)
class Classification:
    viz: VizType | None
    confidence: float

    @property
    def is_unknown(self) -> bool:
        return self.viz is None


UNKNOWN = Classification(viz=None, confidence=0.0)


def _local_name(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _is_axis_group(element: ET.Element) -> bool:
    cls = element.get("class", "")
    return bool(cls and _AXIS_CLASS.search(cls))


def _floats(element: ET.Element, *names: str) -> list[float]:
    values = []
    for name in names:
        raw = element.get(name)
        try:
            values.append(float(raw))
        except (TypeError, ValueError):
            values.append(0.0)
    return values


def extract_features(svg_text: str) -> SvgFeatureVector:
    """Deterministic feature vector from SVG text; raises MalformedSvg."""
    try:
        root = ET.fromstring(svg_text)
    except ET.ParseError as exc:
        raise MalformedSvg(f"not well-formed xml: {exc}") from exc
    if _local_name(root.tag) != "svg":
        raise MalformedSvg(f"root element is <{_local_name(root.tag)}>, expected <svg>")

    counts = {tag: 0 for tag in _MARK_TAGS}
    axis_groups = 0
    path_ds: list[str] = []
    path_fills: list[str] = []
    rect_bottoms: list[float] = []
    circle_rs: list[float] = []
    circle_positions: list[tuple[float, float]] = []

    def visit(element: ET.Element) -> None:
        nonlocal axis_groups
        name = _local_name(element.tag)
        if name == "g" and _is_axis_group(element):
            axis_groups += 1
            return  # axis internals are not marks
        if name in counts:
            counts[name] += 1
        if name == "path":
            path_ds.append(element.get("d", ""))
            path_fills.append(element.get("fill", ""))
        elif name == "rect":
            x, y, w, h = _floats(element, "x", "y", "width", "height")
            rect_bottoms.append(y + h)
        elif name == "circle":
            r, cx, cy = _floats(element, "r", "cx", "cy")
            circle_rs.append(r)
            circle_positions.append((cx, cy))
        for child in element:
            visit(child)

    for child in root:
        visit(child)

    commands = []
    closed = 0
    filled = 0
    for d, fill in zip(path_ds, path_fills):
        letters = _PATH_COMMANDS.findall(d)
        commands.extend(letters)
        if any(c in "Zz" for c in letters):
            closed += 1
        if fill and fill.lower() != "none":
            filled += 1
    drawing = [c.upper() for c in commands if c.upper() not in ("M", "Z")]
    total_draw = len(drawing) or 1
    line_frac = sum(1 for c in drawing if c in ("L", "H", "V")) / total_draw
    curve_frac = sum(1 for c in drawing if c in ("C", "S", "Q", "T")) / total_draw
    arc_frac = sum(1 for c in drawing if c == "A") / total_draw

    if rect_bottoms:
        span = max(rect_bottoms) - min(rect_bottoms)
        epsilon = max(abs(v) for v in rect_bottoms) * 1e-6 + 1e-9
        if span <= epsilon:
            baseline_ratio = 1.0
        else:
            tolerance = span * 0.02 + epsilon
            best = max(
                sum(1 for other in rect_bottoms if abs(other - v) <= tolerance)
                for v in rect_bottoms
            )
            baseline_ratio = best / len(rect_bottoms)
    else:
        baseline_ratio = 0.0

    if circle_rs:
        mean_r = sum(circle_rs) / len(circle_rs)
        if mean_r > 0:
            variance = sum((r - mean_r) ** 2 for r in circle_rs) / len(circle_rs)
            radius_cv = variance**0.5 / mean_r
        else:
            radius_cv = 0.0
        position_ratio = len(set(circle_positions)) / len(circle_positions)
    else:
        radius_cv = 0.0
        position_ratio = 0.0

    return SvgFeatureVector(
        rect_count=counts["rect"],
        circle_count=counts["circle"],
        path_count=counts["path"],
        line_count=counts["line"],
        text_count=counts["text"],
        group_count=counts["g"],
        axis_groups=axis_groups,
        line_command_fraction=round(line_frac, 9),
        curve_command_fraction=round(curve_frac, 9),
        arc_command_fraction=round(arc_frac, 9),
        closed_path_fraction=round(closed / len(path_ds), 9) if path_ds else 0.0,
        filled_path_fraction=round(filled / len(path_ds), 9) if path_ds else 0.0,
        rect_baseline_ratio=round(baseline_ratio, 9),
        circle_radius_cv=round(radius_cv, 9),
        circle_position_ratio=round(position_ratio, 9),
    )


def classify(features: SvgFeatureVector) -> Classification:
    """Rule cascade over the feature vector; Unknown when nothing fires."""
    f = features
    if f.mark_total == 0:
        return UNKNOWN
    # Arc-heavy paths: pie slices.
    if f.path_count >= 2 and f.arc_command_fraction >= 0.25:
        return Classification(VizType.PIE, min(1.0, 0.6 + f.arc_command_fraction))
    # Circles joined by free-standing line segments: node-link graph.
    if f.circle_count >= 2 and f.line_count >= 1 and f.line_count >= f.circle_count / 2:
        balance = min(f.line_count, f.circle_count) / max(f.line_count, f.circle_count)
        return Classification(VizType.GRAPH, min(1.0, 0.7 + 0.3 * balance))
    # Baseline-aligned rectangles: bars.
    if f.rect_count >= 2 and f.rect_baseline_ratio >= 0.75:
        return Classification(VizType.BAR, f.rect_baseline_ratio)
    # Polyline paths: filled and closed means area, open and unfilled means line.
    if f.path_count >= 1 and f.line_command_fraction >= 0.8:
        if f.closed_path_fraction >= 0.5 and f.filled_path_fraction >= 0.5:
            return Classification(VizType.AREA, min(1.0, 0.5 + 0.5 * f.line_command_fraction))
        return Classification(VizType.LINE, min(1.0, 0.5 + 0.5 * f.line_command_fraction))
    # Many circles at varied positions: scatterplot.
    if f.circle_count >= 3 and f.circle_position_ratio >= 0.3:
        return Classification(
            VizType.SCATTERPLOT, min(1.0, 0.5 + 0.5 * f.circle_position_ratio)
        )
    return UNKNOWN
