"""Tri-state triviality verdicts."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Status(str, Enum):
    TRIVIAL = "TRIVIAL"
    NONTRIVIAL = "NONTRIVIAL"
    UNKNOWN = "UNKNOWN"
    TRUNCATED = "TRUNCATED"


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: Optional[str] = None
    reason: Optional[str] = None
    window: Optional[int] = None

    @classmethod
    def trivial(cls, window: Optional[int] = None, reason: Optional[str] = None) -> "Verdict":
        return cls(Status.TRIVIAL, reason=reason, window=window)

    @classmethod
    def nontrivial(cls, witness: str, window: Optional[int] = None) -> "Verdict":
        return cls(Status.NONTRIVIAL, witness=witness, window=window)

    @classmethod
    def unknown(cls, reason: str, window: Optional[int] = None) -> "Verdict":
        return cls(Status.UNKNOWN, reason=reason, window=window)

    @classmethod
    def truncated(cls, reason: str, window: Optional[int] = None) -> "Verdict":
        return cls(Status.TRUNCATED, reason=reason, window=window)

    @property
    def is_trivial(self) -> bool:
        return self.status is Status.TRIVIAL

    @property
    def is_nontrivial(self) -> bool:
        return self.status is Status.NONTRIVIAL

    @property
    def is_decided(self) -> bool:
        return self.status in (Status.TRIVIAL, Status.NONTRIVIAL)

    def line(self) -> str:
        """One output line: TRIVIAL | NONTRIVIAL <witness> | UNKNOWN <reason>, plus the window tag."""
        parts = [self.status.value]
        if self.status is Status.NONTRIVIAL and self.witness:
            parts.append(self.witness)
        elif self.status in (Status.UNKNOWN, Status.TRUNCATED) and self.reason:
            parts.append(self.reason)
        if self.window is not None:
            parts.append(f"[window={self.window}]")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.line()


@dataclass(frozen=True)
class Undecided:
    """A sufficient criterion that did not apply."""

    reason: str

    def __str__(self) -> str:
        return f"UNKNOWN {self.reason}"
