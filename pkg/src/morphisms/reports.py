# file: src/morphisms/reports.py
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class VerdictReport(BaseModel):
    """
    Один вердикт: claim на конкретном экземпляре.

    holds=False всегда идёт с witness - строкой, по которой провал
    воспроизводится (индексы, множества, n).
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    claim: str
    instance: str
    holds: bool
    witness: Optional[str] = None
    vacuous: bool = False
    elapsed_ms: float = Field(default=0.0, ge=0.0)

    @model_validator(mode="after")
    def _witness_for_failures(self) -> "VerdictReport":
        if not self.holds and not self.witness:
            raise ValueError(f"failed claim {self.claim!r} on {self.instance!r} has no witness")
        return self

    @property
    def sort_key(self):
        return self.claim, self.instance


class ClaimSummary(BaseModel):
    model_config = ConfigDict(extra="forbid")

    claim: str
    instances: int = 0
    held: int = 0
    vacuous: int = 0
    failed: int = 0


def summarize(reports: List[VerdictReport]) -> List[ClaimSummary]:
    by_claim = {}
    for r in reports:
        s = by_claim.setdefault(r.claim, ClaimSummary(claim=r.claim))
        s.instances += 1
        if not r.holds:
            s.failed += 1
        elif r.vacuous:
            s.vacuous += 1
        else:
            s.held += 1
    return [by_claim[c] for c in sorted(by_claim)]
