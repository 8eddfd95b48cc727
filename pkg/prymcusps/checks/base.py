"""Base class for property checks run by the verification sweep."""

import time
from abc import ABC, abstractmethod
from typing import Callable, Iterable, List, TypeVar

from pydantic import BaseModel, Field

from prymcusps.models.state import SweepState
from prymcusps.utils.logger import get_logger

T = TypeVar("T")

# Counterexamples kept per check and discriminant
MAX_RECORDED_FAILURES = 3


class CheckOutcome(BaseModel):
    """Result of one check on one discriminant."""

    checked: int = Field(default=0, ge=0)
    failed: int = Field(default=0, ge=0)
    failures: List[str] = Field(default_factory=list)

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append(describe())


def tally(items: Iterable[T], predicate: Callable[[T], bool], describe: Callable[[T], str] = str) -> CheckOutcome:
    """
    Apply a predicate to every item and count the failures.

    Args:
        items: Objects to check
        predicate: Returns True when the property holds
        describe: Counterexample description

    Returns:
        CheckOutcome over all items
    """
    outcome = CheckOutcome()
    for item in items:
        outcome.record(bool(predicate(item)), lambda: describe(item))
    return outcome


class BaseCheck(ABC):
    """
    Base class for all property checks in the sweep.

    Provides:
    - Standard execute interface
    - Error capture and logging
    - Execution time tracking
    """

    name: str = "check"
    description: str = ""

    def applies(self, D: int) -> bool:
        """Whether the property is meaningful for discriminant D."""
        return True

    @abstractmethod
    def execute(self, state: SweepState) -> CheckOutcome:
        """
        Check the property on the prototypes in state.

        Args:
            state: Sweep state for one discriminant

        Returns:
            CheckOutcome
        """

    def run(self, state: SweepState) -> SweepState:
        """
        Wrapper for execute with logging and error handling.

        An exception inside execute is recorded as a failure of this check.

        Args:
            state: Sweep state for one discriminant

        Returns:
            Updated state
        """
        D = state["discriminant"]
        if not self.applies(D):
            return state
        log = get_logger(__name__, discriminant=D, check_name=self.name)

        start_time = time.time()
        try:
            outcome = self.execute(state)
            outcome.failures = [f"D={D} {failure}" for failure in outcome.failures]
        except Exception as e:
            log.error(
                f"{self.name}_failed",
                error=str(e),
                exc_info=True,
            )
            state["errors"].append(f"{self.name} (D={D}): {e}")
            outcome = CheckOutcome(checked=1, failed=1, failures=[f"D={D} exception: {e}"])

        execution_time = time.time() - start_time
        state["metadata"][f"{self.name}_time"] = execution_time
        state["results"][self.name] = outcome.model_dump()
        if outcome.failed:
            log.warning(
                "property_violated",
                failed=outcome.failed,
                first_counterexample=outcome.failures[0] if outcome.failures else None,
            )
        return state
