from dataclasses import dataclass, field
from typing import Dict, List, Union

Params = Dict[str, Union[int, str]]


@dataclass(frozen=True)
class Failure:
    params: Params
    expected: str
    actual: str
    kind: str = "mismatch"


@dataclass
class CheckReport:
    """Outcome of one check suite over its parameter grid.

    `findings` hold discrepancies against stated claims that are recorded
    but do not fail the suite.
    """

    claim_id: str
    grid: Dict[str, str]
    points_checked: int = 0
    failures: List[Failure] = field(default_factory=list)
    equality_witnesses: List[Params] = field(default_factory=list)
    findings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(
        self,
        ok: bool,
        params: Params,
        expected: object,
        actual: object,
        kind: str = "mismatch",
    ) -> bool:
        self.points_checked += 1
        if not ok:
            self.failures.append(Failure(dict(params), str(expected), str(actual), kind))
        return ok

    def expect_equal(self, params: Params, expected: object, actual: object, kind: str = "mismatch") -> bool:
        return self.check(expected == actual, params, expected, actual, kind)

    def witness(self, params: Params) -> None:
        self.equality_witnesses.append(dict(params))

    def note(self, finding: str) -> None:
        self.findings.append(finding)

    def absorb(self, other: "CheckReport") -> None:
        """Fold a sub-report (same claim) into this one, keeping order."""
        self.points_checked += other.points_checked
        self.failures.extend(other.failures)
        self.equality_witnesses.extend(other.equality_witnesses)
        self.findings.extend(other.findings)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{self.claim_id}: {verdict} ({self.points_checked} points, "
            f"{len(self.failures)} failures, {len(self.equality_witnesses)} equality witnesses)"
        )
