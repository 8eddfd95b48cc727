"""Component and geometric-type census over a range of discriminants."""

import argparse
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import pandas as pd

from prymcusps.services.report_service import census_frame, type_census
from prymcusps.utils.logger import get_logger
from prymcusps.workflows.orchestrator import discriminants_up_to

logger = get_logger(__name__)


def run_census(dmax: int, output_dir: Path) -> None:
    """
    Write component and type censuses for every D up to dmax as CSV.

    Args:
        dmax: Largest discriminant
        output_dir: Directory receiving components.csv and types.csv
    """
    discriminants = discriminants_up_to(dmax)
    logger.info("census_starting", dmax=dmax, discriminants=len(discriminants))

    try:
        components = census_frame(discriminants)
        types = pd.concat(
            [type_census(D).assign(D=D) for D in discriminants if D % 8 != 5],
            ignore_index=True,
        )

        output_dir.mkdir(parents=True, exist_ok=True)
        components.to_csv(output_dir / "components.csv", index=False)
        types[["D", "type", "component", "cusps"]].to_csv(output_dir / "types.csv", index=False)

        # Components of D = 1 mod 8 must be balanced
        two = components[components.D % 8 == 1].pivot(index="D", columns="component", values="cusps")
        unbalanced = two[two[1] != two[2]] if not two.empty else two
        if not unbalanced.empty:
            logger.warning("unbalanced_components", discriminants=unbalanced.index.tolist())

        logger.info(
            "census_complete",
            cusps=int(components.cusps.sum()),
            output_dir=str(output_dir),
        )

    except Exception as e:
        logger.error("census_failed", error=str(e))
        raise


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dmax", type=int, default=500)
    parser.add_argument("--output-dir", type=Path, default=Path("census"))
    args = parser.parse_args()
    run_census(args.dmax, args.output_dir)
