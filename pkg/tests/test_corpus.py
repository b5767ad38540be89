import pytest

from vizsmith.corpus import (
    CodedExample,
    compute_stats,
    emit_seed,
    ingest,
    load_packaged_corpus,
)
from vizsmith.corpus_fixture import generate_csv
from vizsmith.errors import NoViableExamples, SchemaError

from .oracle import observations as oracle_observations


class TestIngest:
    def test_packaged_corpus_row_counts(self):
        examples = load_packaged_corpus()
        assert len(examples) == 1500
        assert sum(1 for e in examples if e.viable) == 1228

    def test_missing_header(self):
        with pytest.raises(SchemaError):
            ingest("")

    def test_wrong_header(self):
        with pytest.raises(SchemaError):
            ingest("id,kind,ok,widgets\n")

    def test_unknown_interaction_token(self):
        with pytest.raises(SchemaError) as err:
            ingest("id,viz_type,viable,interactions\nx1,bar,true,wiggle\n")
        assert err.value.row == 1

    def test_unknown_viz_token(self):
        with pytest.raises(SchemaError) as err:
            ingest("id,viz_type,viable,interactions\nx1,starburst,true,\n")
        assert err.value.row == 1

    def test_non_viable_rows_flagged_not_dropped(self):
        examples = ingest(
            "id,viz_type,viable,interactions\nx1,bar,true,hover\nx2,,false,\n"
        )
        assert len(examples) == 2
        assert not examples[1].viable

    def test_multi_viz_rows(self):
        examples = ingest("id,viz_type,viable,interactions\nx1,bar;line,true,hover\n")
        assert examples[0].visualizations == ("bar", "line")
        assert examples[0].viz == "bar"


@pytest.fixture(scope="module")
def stats():
    return compute_stats(load_packaged_corpus())


class TestComputeStats:
    def test_published_viz_marginals(self, stats):
        assert stats.viz_instance_counts["bar"] == 251
        assert stats.viz_percentage("bar") == 19.8
        assert stats.viz_instance_counts["geographic"] == 192
        assert stats.viz_percentage("geographic") == 15.2
        assert stats.viz_instance_counts["line"] == 137
        assert stats.viz_percentage("line") == 10.8
        assert stats.viz_percentage("custom") == 21.4

    def test_interactivity(self, stats):
        assert stats.interactive_count == 659
        assert stats.interactive_fraction == 43.9
        assert stats.total_examples == 1500

    def test_interaction_marginals(self, stats):
        assert stats.interaction_counts["hover"] == 390
        assert stats.interaction_counts["visualize"] == 118
        assert stats.interaction_counts["click"] == 100
        assert sum(stats.interaction_counts.values()) == 859

    def test_pairings(self, stats):
        assert stats.distinct_pair_count == 39
        assert stats.pair_share("click", "hover") == 14.0
        assert stats.pair_count("click", "hover") == stats.pair_count("hover", "click")
        most_frequent = max(stats.pair_counts.values())
        assert stats.pair_count("click", "hover") == most_frequent

    def test_percentages_sum_to_one_hundred(self, stats):
        total = sum(stats.viz_percentage(v) for v in stats.viz_instance_counts)
        assert total == pytest.approx(100.0, abs=0.1)

    def test_conservation(self, stats):
        assert stats.total_viz_instances == sum(stats.viz_instance_counts.values())
        per_viz_sets = stats.per_viz_interactions
        assert set(per_viz_sets["area"]) == {"brush", "hover"}
        assert set(per_viz_sets["line"]) == {
            "hover", "click", "visualize", "zoom", "drag", "brush",
        }

    def test_single_example(self):
        stats = compute_stats(
            [CodedExample("a", ("bar",), frozenset({"hover"}), True)]
        )
        assert stats.interaction_counts == {"hover": 1}
        assert stats.total_pair_occurrences == 0

    def test_no_viable(self):
        with pytest.raises(NoViableExamples):
            compute_stats([CodedExample("a", (), frozenset(), False)])


class TestEmitSeed:
    def test_area_states_restricted(self):
        stats = compute_stats(load_packaged_corpus())
        table = emit_seed(stats, "area")
        tokens = set()
        for state in table:
            tokens |= state
        assert tokens == {"brush", "hover"}

    def test_static_corpus_only_empty_state(self):
        stats = compute_stats([CodedExample("a", ("bar",), frozenset(), True)])
        assert emit_seed(stats, "bar") == {frozenset(): 1}

    def test_state_count_bounded(self):
        stats = compute_stats(load_packaged_corpus())
        assert len(emit_seed(stats)) <= 2**6

    def test_seed_counts_match_oracle(self):
        examples = load_packaged_corpus()
        stats = compute_stats(examples)
        table = emit_seed(stats)
        sets = [e.interactions for e in examples if e.viable]
        for state in table:
            superset_total = sum(c for s, c in table.items() if state <= s)
            assert superset_total == oracle_observations(sets, state)


class TestFixtureGenerator:
    def test_regeneration_is_deterministic(self):
        assert generate_csv() == generate_csv()

    def test_packaged_file_matches_generator(self):
        from importlib import resources

        packaged = (resources.files("vizsmith.data") / "corpus_fixture.csv").read_text()
        assert packaged == generate_csv()
