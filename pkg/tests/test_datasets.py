import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vizsmith.datasets import (
    AttributeType,
    Dataset,
    infer_attribute_type,
    load_dataset,
    select_attributes,
)
from vizsmith.errors import (
    AllValuesMissing,
    DatasetParseError,
    EmptyDataset,
    NoCompatibleAttribute,
)
from vizsmith.templates import VizType


class TestLoad:
    def test_iris_profile(self, iris):
        assert [a.name for a in iris.attributes] == [
            "sepalLength", "sepalWidth", "petalLength", "petalWidth", "species",
        ]
        types = {a.name: a.inferred_type for a in iris.attributes}
        assert types["sepalLength"] is AttributeType.QUANTITATIVE
        assert types["sepalWidth"] is AttributeType.QUANTITATIVE
        assert types["petalLength"] is AttributeType.QUANTITATIVE
        assert types["petalWidth"] is AttributeType.QUANTITATIVE
        assert types["species"] is AttributeType.NOMINAL
        assert len(iris.rows) == 150

    def test_single_row(self):
        ds = load_dataset(b"a\n1\n", "csv")
        assert len(ds.attributes) == 1
        assert ds.attributes[0].inferred_type is AttributeType.QUANTITATIVE

    def test_ragged_row_reports_index(self):
        with pytest.raises(DatasetParseError) as err:
            load_dataset(b"a,b\n1,2\n3\n", "csv")
        assert err.value.row == 2

    def test_duplicate_header(self):
        with pytest.raises(DatasetParseError):
            load_dataset(b"a,a\n1,2\n", "csv")

    def test_empty_payload(self):
        with pytest.raises(EmptyDataset):
            load_dataset(b"", "csv")

    def test_header_only(self):
        with pytest.raises(EmptyDataset):
            load_dataset(b"a,b\n", "csv")

    def test_json_array(self):
        ds = load_dataset(b'[{"a": 1, "b": "x"}, {"a": 2}]', "json")
        assert ds.attribute("a").inferred_type is AttributeType.QUANTITATIVE
        assert ds.rows[1]["b"] == ""
        assert ds.attribute("b").null_count == 1

    def test_json_nested_rejected(self):
        with pytest.raises(DatasetParseError):
            load_dataset(b'[{"a": {"nested": 1}}]', "json")

    def test_null_count(self):
        ds = load_dataset(b"a,b\n1,2\n,3\n", "csv")
        assert ds.attribute("a").null_count == 1
        assert ds.attribute("b").null_count == 0

    def test_blank_lines_skipped(self):
        ds = load_dataset(b"a\n1\n\n2\n", "csv")
        assert len(ds.rows) == 2


class TestInference:
    def test_quantitative(self):
        assert infer_attribute_type(["1.2", "3", "4.5"]) is AttributeType.QUANTITATIVE

    def test_temporal_iso(self):
        assert infer_attribute_type(["2020-01-01", "2020-02-01"]) is AttributeType.TEMPORAL

    def test_temporal_day_month_year(self):
        assert infer_attribute_type(["01-Jan-20", "05-Feb-21"]) is AttributeType.TEMPORAL

    def test_nominal(self):
        assert infer_attribute_type(["setosa", "virginica"]) is AttributeType.NOMINAL

    def test_ordinal_vocabulary(self):
        assert infer_attribute_type(["low", "high", "medium"]) is AttributeType.ORDINAL

    def test_95_percent_threshold(self):
        values = ["1"] * 19 + ["n/a"]
        assert infer_attribute_type(values) is AttributeType.QUANTITATIVE
        values = ["1"] * 18 + ["n/a", "?"]
        assert infer_attribute_type(values) is AttributeType.NOMINAL

    def test_missing_excluded(self):
        assert infer_attribute_type(["", "2", ""]) is AttributeType.QUANTITATIVE

    def test_all_missing(self):
        with pytest.raises(AllValuesMissing):
            infer_attribute_type(["", "  "])

    def test_discrete_quantitative_flag(self):
        ds = load_dataset(b"c\n" + b"\n".join(str(i % 4).encode() for i in range(40)), "csv")
        assert ds.attribute("c").usable_as_categorical
        ds = load_dataset(
            b"c\n" + b"\n".join(str(i).encode() for i in range(40)), "csv"
        )
        assert not ds.attribute("c").usable_as_categorical


class TestSelectAttributes:
    def test_iris_scatter_first_match(self, iris):
        binding = select_attributes(iris, VizType.SCATTERPLOT)
        assert binding.slots == {"X_ATTR": "sepalLength", "Y_ATTR": "sepalWidth"}

    def test_iris_scatter_skips_used(self, iris):
        binding = select_attributes(
            iris, VizType.SCATTERPLOT, {"sepalLength", "sepalWidth"}
        )
        assert binding.slots == {"X_ATTR": "petalLength", "Y_ATTR": "petalWidth"}

    def test_no_compatible_attribute(self):
        ds = load_dataset(b"species\nsetosa\nvirginica\n", "csv")
        with pytest.raises(NoCompatibleAttribute) as err:
            select_attributes(ds, VizType.SCATTERPLOT)
        assert err.value.slot == "X_ATTR"

    def test_bar_binding_uses_category(self, iris):
        binding = select_attributes(iris, VizType.BAR)
        assert binding.slots == {"CAT_ATTR": "species", "VAL_ATTR": "sepalLength"}
        assert binding.scales == {"CAT_ATTR": "band", "VAL_ATTR": "linear"}

    def test_temporal_line_gets_time_scale(self):
        ds = load_dataset(
            b"when,v\n2020-01-01,1\n2020-02-01,2\n2020-03-01,3\n", "csv"
        )
        binding = select_attributes(ds, VizType.LINE)
        assert binding.slots == {"X_ATTR": "when", "Y_ATTR": "v"}
        assert binding.scales["X_ATTR"] == "time"

    def test_binding_never_reuses_attribute(self, cars):
        for viz in VizType:
            binding = select_attributes(cars, viz)
            names = list(binding.slots.values())
            assert len(names) == len(set(names))

    @settings(max_examples=25, deadline=None)
    @given(seed=st.randoms(use_true_random=False))
    def test_row_order_never_changes_binding(self, iris, seed):
        rows = list(iris.rows)
        seed.shuffle(rows)
        shuffled = Dataset(name="iris", attributes=iris.attributes, rows=rows)
        binding = select_attributes(shuffled, VizType.SCATTERPLOT)
        assert binding.slots == {"X_ATTR": "sepalLength", "Y_ATTR": "sepalWidth"}
