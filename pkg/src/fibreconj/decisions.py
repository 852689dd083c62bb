"""Three-valued decisions with certificates.

Every definite verdict carries a certificate that an independent checker
can validate; Unknown never asserts anything and records why the search
gave up instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any


class Verdict(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @property
    def is_definite(self) -> bool:
        return self is not Verdict.UNKNOWN


@dataclass(frozen=True)
class Decision:
    """Answer to a single word-problem style query."""

    verdict: Verdict
    certificate: Any = None

    @property
    def yes(self) -> bool:
        return self.verdict is Verdict.YES

    @property
    def no(self) -> bool:
        return self.verdict is Verdict.NO

    @property
    def unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN


@dataclass(frozen=True)
class PowerDecision:
    """Answer to "is w a power of u": Yes carries the exponent."""

    verdict: Verdict
    p: int | None = None
    certificate: Any = None

    @property
    def yes(self) -> bool:
        return self.verdict is Verdict.YES

    @property
    def no(self) -> bool:
        return self.verdict is Verdict.NO

    @property
    def unknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN


class OracleUnknown(Exception):
    """Raised when a computation cannot proceed past an Unknown verdict."""
