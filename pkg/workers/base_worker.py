"""Base worker class for batch tasks over a spec document."""

import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Any, Dict, Iterable, Iterator, List, Optional
from uuid import uuid4

import structlog

from config import get_settings
from groups.errors import ShiftforgeError
from models.builder import SpecBuilder

logger = structlog.get_logger(__name__)


class BaseWorker(ABC):
    """Abstract base class for all workers.

    A worker takes task dicts, resolves their names through a SpecBuilder
    and returns result dicts.  Fan-out goes through `executor()`; callers see
    results in task order whatever the thread scheduling.
    """

    def __init__(self, builder: SpecBuilder, worker_id: Optional[str] = None, max_workers: Optional[int] = None):
        self.settings = get_settings()
        self.builder = builder
        self.worker_id = worker_id or f"{self.worker_name}_{uuid4().hex[:8]}"
        self.max_workers = max_workers or self.settings.probe_workers
        self.log = logger.bind(worker=self.worker_id)

    @property
    @abstractmethod
    def worker_name(self) -> str:
        """Return the name of this worker type."""
        pass

    @abstractmethod
    def process_task(self, task: Dict[str, Any]) -> Dict[str, Any]:
        """Process a single task and return its result."""
        pass

    @contextmanager
    def executor(self) -> Iterator[ThreadPoolExecutor]:
        with ThreadPoolExecutor(max_workers=self.max_workers, thread_name_prefix=self.worker_name) as pool:
            yield pool

    def handle_task(self, task: Dict[str, Any]) -> Dict[str, Any]:
        started = time.perf_counter()
        self.log.debug("task_started", task=task.get("kind", self.worker_name))
        try:
            result = self.process_task(task)
        except ShiftforgeError as e:
            self.log.error("task_failed", error=str(e), error_type=type(e).__name__)
            raise
        self.log.debug("task_finished", elapsed=round(time.perf_counter() - started, 3))
        return result

    def run(self, tasks: Iterable[Dict[str, Any]]) -> List[Dict[str, Any]]:
        """Process tasks one after another, stopping at the first failure."""
        results = [self.handle_task(task) for task in tasks]
        self.log.debug("batch_finished", tasks=len(results))
        return results
