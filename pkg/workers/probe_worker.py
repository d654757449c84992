"""Worker for faithfulness probes and their report files."""

from pathlib import Path
from typing import Any, Dict, Optional, Union

from groups.errors import MissingOracleError, ShiftforgeError
from constructions.handles import DiagonalHandle
from constructions.probe import ProbeReport, faithfulness_probe
from workers.base_worker import BaseWorker


class ProbeWorker(BaseWorker):
    """Runs a probe with the ball chunks spread over the thread pool, then writes the report."""

    def __init__(self, builder, report_dir: Optional[Union[str, Path]] = None, **kwargs):
        super().__init__(builder, **kwargs)
        self.report_dir = Path(report_dir if report_dir is not None else self.settings.report_dir)

    @property
    def worker_name(self) -> str:
        return "probe_worker"

    def probe(self, system: str, claimed: str, radius: int) -> ProbeReport:
        handle = self.builder.system(system)
        if not isinstance(handle, DiagonalHandle):
            raise ShiftforgeError(f"system {system!r} is a {handle.kind} system; probes need a star or indicable system")
        if claimed not in self.builder.document.groups:
            raise MissingOracleError(f"no oracle named {claimed!r} for the claimed group")
        oracle = self.builder.oracle(claimed)
        with self.executor() as pool:
            report = faithfulness_probe(handle, oracle, radius, mapper=pool.map,
                                        system_name=system, claimed_name=claimed)
        self.log.info(
            "probe_finished",
            system=system,
            claimed=claimed,
            radius=radius,
            compared=report.compared,
            diverged=report.diverged,
        )
        return report

    def report_path(self, report: ProbeReport) -> Path:
        return self.report_dir / f"{report.system}-{report.claimed}-r{report.radius}.txt"

    def write_report(self, report: ProbeReport, path: Optional[Union[str, Path]] = None) -> Path:
        """Write the plain report; bytes only depend on the report contents."""
        target = Path(path) if path is not None else self.report_path(report)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(report.to_text().encode("utf-8"))
        return target

    def process_task(self, task: Dict[str, Any]) -> Dict[str, Any]:
        report = self.probe(task["system"], task["claimed"], task["radius"])
        path = self.write_report(report, task.get("output"))
        return {"report": report, "path": path}
