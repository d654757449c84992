"""Worker for the `queries` block of a spec document."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from surfaces.ends import Incomparable
from surfaces.schreier_surface import classify

from constructions.certificates import CertificateResult, NonconjugacyCertificate, nonconjugacy_certificate
from models.systems import CertifyQuery, ClassifyQuery, EvalQuery, ProbeQuery
from workers.base_worker import BaseWorker
from workers.eval_worker import EvalWorker
from workers.probe_worker import ProbeWorker


def certificate_line(result: CertificateResult) -> str:
    if isinstance(result, NonconjugacyCertificate):
        return f"certificate {result}"
    if isinstance(result, Incomparable):
        return str(result)
    return "no certificate"


@dataclass(frozen=True)
class QueryOutcome:
    """Output lines of one query; `passed` is None when the query states no expectation."""

    title: str
    lines: Tuple[str, ...]
    passed: Optional[bool] = None


class QueryWorker(BaseWorker):
    @property
    def worker_name(self) -> str:
        return "query_worker"

    def _eval(self, query: EvalQuery) -> QueryOutcome:
        handle = self.builder.system(query.system)
        verdicts = EvalWorker(self.builder, max_workers=self.max_workers).evaluate(handle, query.words)
        lines = tuple(f"{word}\t{verdict.line()}" for word, verdict in zip(query.words, verdicts))
        passed = None
        if query.expect is not None:
            passed = all(v.status is expected for v, expected in zip(verdicts, query.expect))
        return QueryOutcome(f"eval {query.system}", lines, passed)

    def _probe(self, query: ProbeQuery) -> QueryOutcome:
        report = ProbeWorker(self.builder, max_workers=self.max_workers).probe(
            query.system, query.claimed, query.radius
        )
        passed = None
        if query.expect_diverged is not None:
            passed = report.diverged == query.expect_diverged and report.all_pass_gap_condition()
        return QueryOutcome(f"probe {query.system} vs {query.claimed} r={query.radius}", (report.summary(),), passed)

    def _certify(self, query: CertifyQuery) -> QueryOutcome:
        result = nonconjugacy_certificate(self.builder.surface(query.surface), query.m, query.n)
        passed = None
        if query.expect_certificate is not None:
            passed = isinstance(result, NonconjugacyCertificate) == query.expect_certificate
            if isinstance(result, Incomparable):
                passed = False
        return QueryOutcome(f"certify {query.surface} m={query.m} n={query.n}", (certificate_line(result),), passed)

    def _classify(self, query: ClassifyQuery) -> QueryOutcome:
        text = str(classify(self.builder.surface(query.surface)))
        passed = None if query.expect is None else text == query.expect
        return QueryOutcome(f"classify {query.surface}", (text,), passed)

    def process_task(self, task: Dict[str, Any]) -> Dict[str, Any]:
        query = task["query"]
        if isinstance(query, EvalQuery):
            outcome = self._eval(query)
        elif isinstance(query, ProbeQuery):
            outcome = self._probe(query)
        elif isinstance(query, CertifyQuery):
            outcome = self._certify(query)
        else:
            outcome = self._classify(query)
        if outcome.passed is False:
            self.log.warning("query_failed", query=outcome.title)
        return {"outcome": outcome}

    def check(self) -> List[QueryOutcome]:
        """Run every query of the document in order."""
        results = self.run({"kind": query.kind, "query": query} for query in self.builder.document.queries)
        return [r["outcome"] for r in results]
