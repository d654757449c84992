"""Unit tests for the eval, probe and query workers."""

import pytest

from actions.verdicts import Status
from groups.errors import MissingOracleError, ShiftforgeError, WordSyntaxError
from workers import EvalWorker, ProbeWorker, QueryWorker, certificate_line
from workers.query_worker import QueryOutcome


class TestEvalWorker:
    """Test batch evaluation."""

    def test_verdicts_in_word_order(self, spec_builder):
        """Test that threads keep the input order."""
        builder = spec_builder("star_p4.json")
        worker = EvalWorker(builder, max_workers=3)
        verdicts = worker.evaluate(builder.system("star"), ["[b1,b2]", "[a1,a2]", "[a1,b1]", "a1 a1^-1"])
        assert [v.status for v in verdicts] == [Status.TRIVIAL, Status.NONTRIVIAL, Status.TRIVIAL, Status.TRIVIAL]

    def test_syntax_error_stops_before_solving(self, spec_builder, mocker):
        """Test that a malformed word fails the batch with no solver call."""
        builder = spec_builder("free.json")
        handle = builder.system("free2")
        solve = mocker.spy(handle, "solve")
        with pytest.raises(WordSyntaxError):
            EvalWorker(builder).evaluate(handle, ["a b", "a^"])
        solve.assert_not_called()

    def test_process_task(self, spec_builder):
        """Test the task dict interface."""
        result = EvalWorker(spec_builder("lamplighter.json")).handle_task(
            {"system": "lamplighter", "words": ["[a, t a t^-1]", "t"]}
        )
        assert result["system"] == "lamplighter"
        assert [v.is_trivial for v in result["verdicts"]] == [True, False]

    def test_worker_ids(self, spec_builder):
        """Test the generated worker id and the configured pool size."""
        worker = EvalWorker(spec_builder("free.json"))
        assert worker.worker_id.startswith("eval_worker_")
        assert worker.max_workers == 4


class TestProbeWorker:
    """Test probes and report files."""

    def test_writes_golden_bytes(self, spec_builder, golden_dir, tmp_path):
        """Test the report file against the golden copy."""
        worker = ProbeWorker(spec_builder("star_p4.json"), report_dir=tmp_path)
        result = worker.process_task({"system": "star", "claimed": "p4", "radius": 4})
        assert result["path"] == tmp_path / "star-p4-r4.txt"
        assert result["path"].read_bytes() == (golden_dir / "star_p4_r4.txt").read_bytes()

    def test_explicit_output(self, spec_builder, tmp_path):
        """Test an output path given with the task."""
        worker = ProbeWorker(spec_builder("star_p4.json"), report_dir=tmp_path)
        target = tmp_path / "nested" / "report.txt"
        result = worker.process_task({"system": "star", "claimed": "p4", "radius": 1, "output": target})
        assert result["path"] == target
        assert target.read_text(encoding="utf-8").startswith("faithfulness probe\n")

    def test_needs_a_diagonal_system(self, spec_builder, tmp_path):
        """Test that free systems cannot be probed."""
        worker = ProbeWorker(spec_builder("free.json"), report_dir=tmp_path)
        with pytest.raises(ShiftforgeError):
            worker.probe("free2", "f2", 1)

    def test_missing_claimed_group(self, spec_builder, tmp_path):
        """Test a claimed group with no entry."""
        worker = ProbeWorker(spec_builder("star_p4.json"), report_dir=tmp_path)
        with pytest.raises(MissingOracleError):
            worker.probe("star", "p5", 1)

    def test_logs_the_finished_probe(self, spec_builder, tmp_path, mocker):
        """Test the structured log event."""
        worker = ProbeWorker(spec_builder("star_p4.json"), report_dir=tmp_path)
        log = mocker.patch.object(worker, "log")
        worker.probe("star", "p4", 1)
        log.info.assert_called_once()
        assert log.info.call_args.args == ("probe_finished",)
        assert log.info.call_args.kwargs["diverged"] == 0


class TestQueryWorker:
    """Test the queries block of every spec."""

    @pytest.mark.parametrize("name", ["bs.json", "free.json", "ladder.json", "lamplighter.json",
                                      "raag_families.json", "star_p4.json"])
    def test_every_query_passes(self, spec_builder, name):
        """Test that every stated expectation holds."""
        outcomes = QueryWorker(spec_builder(name).build_all()).check()
        assert outcomes
        assert all(o.passed is not False for o in outcomes), [o.title for o in outcomes if o.passed is False]

    def test_outcome_lines(self, spec_builder):
        """Test the eval and certify output lines."""
        outcomes = QueryWorker(spec_builder("ladder.json")).check()
        titles = [o.title for o in outcomes]
        assert titles[0] == "classify ladder"
        assert outcomes[0].lines == ("(inf, 0, finite(2), finite(2))",)
        certify = outcomes[titles.index("certify ladder m=2 n=2")]
        assert certify.lines == ("no certificate",)
        assert certify.passed is True
        evaluated = outcomes[-1]
        assert evaluated.lines[1] == "t t^-1\tTRIVIAL [window=16]"

    def test_failed_query_is_logged(self, spec_builder, mocker):
        """Test a query whose expectation does not hold."""
        builder = spec_builder("lamplighter.json")
        query = builder.document.queries[0].model_copy(update={"expect": [Status.NONTRIVIAL] * 5})
        worker = QueryWorker(builder)
        log = mocker.patch.object(worker, "log")
        outcome = worker.handle_task({"kind": "eval", "query": query})["outcome"]
        assert outcome.passed is False
        log.warning.assert_called_once_with("query_failed", query="eval lamplighter")

    def test_certificate_line(self):
        """Test the missing-certificate line."""
        assert certificate_line(None) == "no certificate"
        assert QueryOutcome("t", ()).passed is None
