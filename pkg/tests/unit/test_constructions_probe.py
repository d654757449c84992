"""Unit tests for the faithfulness probe."""

from concurrent.futures import ThreadPoolExecutor

import pytest

from groups.errors import MissingOracleError, ShiftforgeError, UnknownGeneratorError
from groups.oracles import FreeOracle
from groups.words import enumerate_ball
from constructions.probe import ball_chunks, faithfulness_probe, merge_chunks, probe_words


@pytest.fixture
def star_p4(spec_builder):
    builder = spec_builder("star_p4.json")
    return builder.system("star"), builder.oracle("p4")


class TestFaithfulnessProbe:
    """Test the star product against the P4 RAAG."""

    def test_golden_report(self, star_p4, golden_dir):
        """Test byte equality with the stored radius-4 report."""
        handle, oracle = star_p4
        report = faithfulness_probe(handle, oracle, 4, system_name="star", claimed_name="p4")
        assert report.to_text().encode("utf-8") == (golden_dir / "star_p4_r4.txt").read_bytes()

    def test_counts_and_gap_condition(self, star_p4):
        """Test every divergence: push word freely trivial, some syllable weighted."""
        handle, oracle = star_p4
        report = faithfulness_probe(handle, oracle, 4)
        assert (report.compared, report.undecided, report.diverged) == (3201, 0, 16)
        assert report.all_pass_gap_condition()
        assert report.summary() == "compared: 3201 diverged: 16"
        assert report.claimed == "raag"

    def test_threads_do_not_change_the_report(self, star_p4):
        """Test the same bytes with a thread pool mapper."""
        handle, oracle = star_p4
        serial = faithfulness_probe(handle, oracle, 3)
        with ThreadPoolExecutor(max_workers=4) as pool:
            threaded = faithfulness_probe(handle, oracle, 3, mapper=pool.map)
        assert threaded.to_text() == serial.to_text()

    def test_small_radius_has_no_divergence(self, star_p4):
        """Test radius 1."""
        handle, oracle = star_p4
        assert faithfulness_probe(handle, oracle, 1).diverged == 0

    def test_rejects_bad_inputs(self, star_p4):
        """Test radius bounds, a missing oracle and a mismatched alphabet."""
        handle, oracle = star_p4
        with pytest.raises(ShiftforgeError):
            faithfulness_probe(handle, oracle, 9)
        with pytest.raises(ShiftforgeError):
            faithfulness_probe(handle, oracle, -1)
        with pytest.raises(MissingOracleError):
            faithfulness_probe(handle, None, 2)
        with pytest.raises(UnknownGeneratorError):
            faithfulness_probe(handle, FreeOracle(("a1", "b1")), 2)


class TestReportOutput:
    """Test report renderings."""

    def test_table(self, star_p4):
        """Test the rich table title and a row."""
        handle, oracle = star_p4
        text = faithfulness_probe(handle, oracle, 4, system_name="star", claimed_name="p4").to_table()
        assert "star vs p4, radius 4" in text
        assert "a1 b2 a1^-1 b2^-1" in text

    def test_dict(self, star_p4):
        """Test the serializable form."""
        handle, oracle = star_p4
        data = faithfulness_probe(handle, oracle, 4).to_dict()
        assert data["diverged"] == 16
        assert data["apply_order"] == "rightmost-first"
        assert data["divergences"][0] == {
            "word": "a1 b2 a1^-1 b2^-1",
            "model": "TRIVIAL",
            "claimed": "NONTRIVIAL",
            "x_word": "1",
            "syllable_weights": "1,0,-1,0",
        }


class TestChunks:
    """Test splitting and merging the ball."""

    def test_ball_chunks(self):
        """Test one chunk for the empty word and one per first letter."""
        chunks = ball_chunks("ab", 2)
        assert len(chunks) == 5
        assert sum(len(c) for c in chunks) == 17
        assert chunks[0][0].letters == ()

    def test_merge_matches_single_chunk(self, star_p4):
        """Test that chunking does not change the divergences."""
        handle, oracle = star_p4
        words = enumerate_ball(handle.alphabet, 4)
        whole = merge_chunks([probe_words(handle, oracle, words)])
        split = merge_chunks(probe_words(handle, oracle, c) for c in ball_chunks(handle.alphabet, 4))
        assert whole.divergences == split.divergences
        assert whole.compared == split.compared == 3201
