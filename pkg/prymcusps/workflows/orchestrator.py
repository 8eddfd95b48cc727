"""Verification sweep: runs every property check over a range of discriminants."""

import asyncio
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, List, Optional, Sequence

from prymcusps.checks import ALL_CHECKS, CHECK_REGISTRY
from prymcusps.config import get_settings
from prymcusps.errors import InvalidDiscriminantError
from prymcusps.models.schemas import PropertyTally, VerificationReport
from prymcusps.models.state import SweepState
from prymcusps.services.prototypes import algebraic_prototypes, enumerate_prototypes
from prymcusps.services.quadfield import validate_discriminant
from prymcusps.utils.cache import get_all_cache_stats
from prymcusps.utils.logger import get_logger

logger = get_logger(__name__)


def discriminants_up_to(dmax: int, dmin: int = 5) -> List[int]:
    """All valid non-square discriminants in [dmin, dmax], ascending."""
    result = []
    for D in range(max(dmin, 1), dmax + 1):
        try:
            validate_discriminant(D)
        except InvalidDiscriminantError:
            continue
        result.append(D)
    return result


def verify_discriminant(D: int, check_names: Sequence[str]) -> Dict[str, Any]:
    """
    Run the named checks on one discriminant.

    Top-level so that worker processes can import it.

    Args:
        D: Discriminant
        check_names: Names from CHECK_REGISTRY, in execution order

    Returns:
        The final sweep state's results, errors and metadata
    """
    state: SweepState = {
        "discriminant": D,
        "prototypes": enumerate_prototypes(D),
        "algebraic": algebraic_prototypes(D),
        "results": {},
        "errors": [],
        "metadata": {},
    }
    for name in check_names:
        state = CHECK_REGISTRY[name]().run(state)
    logger.debug(
        "discriminant_verified",
        discriminant=D,
        prototypes=len(state["prototypes"]),
        errors=len(state["errors"]),
    )
    return {
        "discriminant": D,
        "results": state["results"],
        "errors": state["errors"],
        "metadata": state["metadata"],
    }


class VerificationOrchestrator:
    """
    Drives the property checks over many discriminants.

    Workflow:
    1. Enumerate prototypes for each discriminant
    2. Run every applicable check on that state
    3. Merge the per-discriminant results into one tally, in D order

    With more than one worker the discriminants are spread over a process
    pool and gathered with asyncio; the tally does not depend on the
    worker count.
    """

    def __init__(self, check_names: Optional[Sequence[str]] = None, max_workers: Optional[int] = None):
        self.check_names = list(check_names) if check_names else [c.name for c in ALL_CHECKS]
        unknown = [name for name in self.check_names if name not in CHECK_REGISTRY]
        if unknown:
            raise ValueError(f"unknown checks: {unknown}")
        self.max_workers = max_workers or get_settings().max_workers
        logger.info(
            "orchestrator_initialized",
            checks=len(self.check_names),
            max_workers=self.max_workers,
        )

    async def _gather(self, discriminants: Sequence[int]) -> List[Dict[str, Any]]:
        if self.max_workers <= 1:
            return [verify_discriminant(D, self.check_names) for D in discriminants]
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.max_workers) as executor:
            tasks = [
                loop.run_in_executor(executor, verify_discriminant, D, self.check_names)
                for D in discriminants
            ]
            return list(await asyncio.gather(*tasks))

    def _merge(self, dmax: int, outputs: Iterable[Dict[str, Any]], elapsed: float) -> VerificationReport:
        tallies = {name: PropertyTally(name=name) for name in self.check_names}
        errors: List[str] = []
        count = 0
        for output in outputs:
            count += 1
            errors.extend(output["errors"])
            for name, result in output["results"].items():
                tally = tallies[name]
                tally.discriminants += 1
                tally.checked += result["checked"]
                tally.failed += result["failed"]
                if result["failures"] and tally.first_counterexample is None:
                    tally.first_counterexample = result["failures"][0]
        return VerificationReport(
            dmax=dmax,
            discriminants=count,
            properties=list(tallies.values()),
            errors=errors,
            elapsed_seconds=round(elapsed, 3),
        )

    async def execute(self, discriminants: Sequence[int], dmax: Optional[int] = None) -> VerificationReport:
        """
        Verify every check on the given discriminants.

        Args:
            discriminants: Valid discriminants, in the order to report them
            dmax: Upper bound recorded in the report (defaults to the largest D)

        Returns:
            VerificationReport with one tally per property
        """
        start_time = time.time()
        logger.info("verification_starting", discriminants=len(discriminants))
        outputs = await self._gather(discriminants)
        report = self._merge(dmax or max(discriminants, default=0), outputs, time.time() - start_time)
        logger.info(
            "verification_completed",
            discriminants=report.discriminants,
            passed=report.passed,
            elapsed_seconds=report.elapsed_seconds,
            cache_stats=get_all_cache_stats(),
        )
        return report

    def run(self, dmax: int, dmin: int = 5) -> VerificationReport:
        """Synchronous entry point: verify all discriminants in [dmin, dmax]."""
        return asyncio.run(self.execute(discriminants_up_to(dmax, dmin), dmax=dmax))


def create_orchestrator(
    check_names: Optional[Sequence[str]] = None,
    max_workers: Optional[int] = None,
) -> VerificationOrchestrator:
    """
    Factory function to create the orchestrator.

    Args:
        check_names: Subset of checks to run (all by default)
        max_workers: Worker processes (settings default if omitted)

    Returns:
        Configured orchestrator
    """
    return VerificationOrchestrator(check_names=check_names, max_workers=max_workers)
