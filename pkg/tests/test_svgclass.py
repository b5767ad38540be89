import re

import pytest

from vizsmith.errors import MalformedSvg
from vizsmith.svgfeatures import classify, extract_features
from vizsmith.templates import VizType

ALL_FIXTURES = [
    (viz, dataset)
    for viz in VizType
    for dataset in ("iris", "cars")
]


class TestExtractFeatures:
    def test_iris_scatter_mark_counts(self, svg_fixture_dir):
        features = extract_features((svg_fixture_dir / "scatterplot_iris.svg").read_text())
        assert features.circle_count == 150
        assert features.rect_count == 0
        assert features.axis_groups == 2

    def test_empty_svg_all_zero(self):
        features = extract_features("<svg/>")
        assert features.mark_total == 0
        assert features.rect_baseline_ratio == 0.0

    def test_truncated_xml(self):
        with pytest.raises(MalformedSvg):
            extract_features("<svg><circle")

    def test_non_svg_root(self):
        with pytest.raises(MalformedSvg):
            extract_features("<html></html>")

    def test_axis_content_not_counted_as_marks(self):
        svg = (
            '<svg><g class="x-axis"><line x2="6"/><line x2="6"/><text>0</text></g>'
            '<circle cx="1" cy="2" r="3"/></svg>'
        )
        features = extract_features(svg)
        assert features.line_count == 0
        assert features.text_count == 0
        assert features.circle_count == 1

    def test_ratios_in_unit_interval(self, svg_fixture_dir):
        for path in svg_fixture_dir.glob("*.svg"):
            f = extract_features(path.read_text())
            for value in (
                f.line_command_fraction,
                f.curve_command_fraction,
                f.arc_command_fraction,
                f.closed_path_fraction,
                f.filled_path_fraction,
                f.rect_baseline_ratio,
                f.circle_position_ratio,
            ):
                assert 0.0 <= value <= 1.0, path.name


class TestClassify:
    @pytest.mark.parametrize("viz,dataset", ALL_FIXTURES)
    def test_closed_loop(self, svg_fixture_dir, viz, dataset):
        text = (svg_fixture_dir / f"{viz.value}_{dataset}.svg").read_text()
        result = classify(extract_features(text))
        assert result.viz is viz
        assert result.confidence >= 0.8

    def test_all_zero_unknown(self):
        result = classify(extract_features("<svg/>"))
        assert result.is_unknown

    @pytest.mark.parametrize("viz,dataset", ALL_FIXTURES)
    def test_scale_invariance(self, svg_fixture_dir, viz, dataset):
        text = (svg_fixture_dir / f"{viz.value}_{dataset}.svg").read_text()

        def scale(match):
            return f'{match.group(1)}="{float(match.group(2)) * 4.25}"'

        scaled = re.sub(
            r'\b(cx|cy|r|x1|x2|y1|y2|x|y|width|height)="([-\d.]+)"', scale, text
        )
        scaled = re.sub(
            r"([MLA])([-\d.]+),([-\d.]+)",
            lambda m: f"{m.group(1)}{float(m.group(2)) * 4.25},{float(m.group(3)) * 4.25}",
            scaled,
        )
        assert classify(extract_features(scaled)).viz is viz

    def test_unclassifiable_marks_fall_through(self):
        # A couple of text labels only: no rule fires.
        svg = "<svg><text>a</text><text>b</text></svg>"
        assert classify(extract_features(svg)).is_unknown
