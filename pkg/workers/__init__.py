"""Workers for batch evaluation, probes and spec queries."""

from .base_worker import BaseWorker
from .eval_worker import EvalWorker
from .probe_worker import ProbeWorker
from .query_worker import QueryOutcome, QueryWorker, certificate_line

__all__ = [
    "BaseWorker",
    "EvalWorker",
    "ProbeWorker",
    "QueryOutcome",
    "QueryWorker",
    "certificate_line",
]
