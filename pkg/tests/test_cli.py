import pathlib

import pytest
from click.testing import CliRunner

from vizsmith.cli import main
from vizsmith.jsast import parse

DATA = pathlib.Path(__file__).parents[1] / "src" / "vizsmith" / "data"


@pytest.fixture()
def runner():
    return CliRunner()


class TestFit:
    def test_scatter_golden_shape(self, runner):
        result = runner.invoke(
            main, ["fit", "--template", "scatterplot", "--data", str(DATA / "iris.csv")]
        )
        assert result.exit_code == 0, result.output
        parse(result.output)
        assert '.attr("cx", d => x(+d.sepalLength))' in result.output

    def test_explicit_binding(self, runner):
        result = runner.invoke(
            main,
            [
                "fit", "--template", "scatterplot", "--data", str(DATA / "iris.csv"),
                "--bind", "X_ATTR=petalLength", "--bind", "Y_ATTR=petalWidth",
            ],
        )
        assert result.exit_code == 0
        assert "petalLength" in result.output

    def test_bad_viz_errors_on_stderr(self, runner):
        result = runner.invoke(
            main,
            ["fit", "--template", "sunburst", "--data", str(DATA / "iris.csv")],
        )
        assert result.exit_code == 1
        assert "UnknownVizType" in result.output or "UnknownVizType" in (
            result.stderr if hasattr(result, "stderr") else ""
        )


class TestAugment:
    def test_pipeline(self, runner, tmp_path):
        fitted = runner.invoke(
            main, ["fit", "--template", "scatterplot", "--data", str(DATA / "iris.csv")]
        )
        source_path = tmp_path / "chart.js"
        source_path.write_text(fitted.output)
        result = runner.invoke(
            main,
            [
                "augment", "--source", str(source_path),
                "--interaction", "hover", "--viz", "scatterplot",
            ],
        )
        assert result.exit_code == 0, result.output
        assert '"mouseover"' in result.output

    def test_state_guard(self, runner, tmp_path):
        fitted = runner.invoke(
            main, ["fit", "--template", "scatterplot", "--data", str(DATA / "iris.csv")]
        )
        source_path = tmp_path / "chart.js"
        source_path.write_text(fitted.output)
        result = runner.invoke(
            main,
            [
                "augment", "--source", str(source_path),
                "--interaction", "hover", "--viz", "scatterplot",
                "--state", "hover",
            ],
        )
        assert result.exit_code == 1


class TestRecommend:
    def test_area_offers_at_most_brush_and_hover(self, runner):
        result = runner.invoke(main, ["recommend", "--viz", "area", "--state", ""])
        assert result.exit_code == 0
        offered = {line.split()[1] for line in result.output.splitlines()}
        assert offered <= {"brush", "hover"}

    def test_state_excludes_done(self, runner):
        result = runner.invoke(main, ["recommend", "--viz", "area", "--state", "hover"])
        offered = {line.split()[1] for line in result.output.splitlines()}
        assert "hover" not in offered


class TestClassify:
    def test_fixture(self, runner, svg_fixture_dir):
        result = runner.invoke(
            main, ["classify", "--svg", str(svg_fixture_dir / "pie_cars.svg")]
        )
        assert result.exit_code == 0
        name, confidence = result.output.split()
        assert name == "pie"
        assert float(confidence) >= 0.8


class TestStats:
    def test_packaged_corpus_block(self, runner):
        result = runner.invoke(main, ["stats"])
        assert result.exit_code == 0
        assert "examples 1500 viable 1228" in result.output
        assert "interactive 659 (43.9%)" in result.output
        assert "bar 251 (19.8%)" in result.output
        assert "hover 390" in result.output
        assert "distinct pairs 39 (click+hover 14.0% of occurrences)" in result.output


class TestXval:
    def test_76_24_corpus(self, runner, tmp_path):
        lines = ["id,viz_type,viable,interactions"]
        lines += [f"h{i},scatterplot,true,hover" for i in range(76)]
        lines += [f"z{i},scatterplot,true,zoom" for i in range(24)]
        corpus_path = tmp_path / "corpus.csv"
        corpus_path.write_text("\n".join(lines) + "\n")
        result = runner.invoke(main, ["xval", "--corpus", str(corpus_path), "--k", "1"])
        assert result.exit_code == 0, result.output
        assert "overall 0.76" in result.output
