"""Worker for batch word evaluation against a named system."""

from typing import Any, Dict, List, Sequence

from actions.verdicts import Verdict
from constructions.handles import SubgroupHandle
from workers.base_worker import BaseWorker


class EvalWorker(BaseWorker):
    """Evaluates word lists; each word is independent, so the batch fans out over threads."""

    @property
    def worker_name(self) -> str:
        return "eval_worker"

    def evaluate(self, handle: SubgroupHandle, words: Sequence[str]) -> List[Verdict]:
        # parse the whole batch first so a syntax error stops it before any solving
        parsed = [handle.parse(text) for text in words]
        with self.executor() as pool:
            verdicts = list(pool.map(handle.solve, parsed))
        self.log.debug(
            "batch_evaluated",
            system=handle.name,
            words=len(verdicts),
            trivial=sum(v.is_trivial for v in verdicts),
            undecided=sum(not v.is_decided for v in verdicts),
        )
        return verdicts

    def process_task(self, task: Dict[str, Any]) -> Dict[str, Any]:
        handle = self.builder.system(task["system"])
        verdicts = self.evaluate(handle, task["words"])
        return {"system": task["system"], "words": list(task["words"]), "verdicts": verdicts}
