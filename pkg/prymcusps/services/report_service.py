"""Report records and tabular output for enumerations and censuses."""

import json
from typing import Iterable, List, Optional

import pandas as pd

from prymcusps.config import get_settings
from prymcusps.models.schemas import ReportRecord
from prymcusps.services.galois import conjugate
from prymcusps.services.homology import component_census, spin_component
from prymcusps.services.prototypes import algebraic_prototypes, enumerate_prototypes, geometric_type
from prymcusps.services.stablecurve import fiber_ids, s_param
from prymcusps.utils.formatters import format_decimal, format_exact
from prymcusps.utils.logger import get_logger

logger = get_logger(__name__)

CSV_COLUMNS = [
    "D", "w", "h", "t", "e", "eps", "type", "component",
    "s_exact", "s_decimal", "conj_w", "conj_h", "conj_e", "conj_eps",
]


def build_records(D: int, digits: Optional[int] = None) -> List[ReportRecord]:
    """
    One report record per prototype of D, in canonical order.

    Args:
        D: Discriminant
        digits: Decimal digits of s_decimal (default from settings)

    Returns:
        List of ReportRecord
    """
    digits = digits or get_settings().display_digits
    ids = fiber_ids(algebraic_prototypes(D))
    records = []
    for P in enumerate_prototypes(D):
        A = P.forget_twist()
        s = s_param(A)
        partner = conjugate(A)
        records.append(
            ReportRecord(
                D=P.D, w=P.w, h=P.h, t=P.t, e=P.e, eps=P.eps,
                type=geometric_type(P),
                component=spin_component(P),
                fiber_id=ids[A],
                s_exact=format_exact(s),
                s_decimal=format_decimal(s, digits),
                conj_w=partner.w, conj_h=partner.h, conj_e=partner.e, conj_eps=partner.eps,
            )
        )
    logger.debug("report_records_built", discriminant=D, records=len(records))
    return records


def records_to_frame(records: Iterable[ReportRecord]) -> pd.DataFrame:
    """Records as a DataFrame with the fixed CSV columns."""
    rows = [r.model_dump(mode="json") for r in records]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def records_to_csv(records: Iterable[ReportRecord]) -> str:
    """CSV text with header D,w,h,t,e,eps,type,component,s_exact,s_decimal,conj_w,conj_h,conj_e,conj_eps."""
    return records_to_frame(records).to_csv(index=False, lineterminator="\n")


def records_to_json(records: Iterable[ReportRecord]) -> str:
    """JSON array of records; exact fields are strings, never floats."""
    return json.dumps([r.model_dump(mode="json") for r in records], indent=2)


def census_frame(discriminants: Iterable[int]) -> pd.DataFrame:
    """
    Component census over several discriminants.

    Args:
        discriminants: Valid discriminants

    Returns:
        DataFrame with one row per (D, component) and the cusp counts
    """
    rows = []
    for D in discriminants:
        census = component_census(D)
        for count in census.components:
            rows.append({
                "D": D,
                "component": int(count.label),
                "cusps": count.cusps,
                "algebraic_prototypes": count.algebraic_prototypes,
            })
    return pd.DataFrame(rows, columns=["D", "component", "cusps", "algebraic_prototypes"])


def type_census(D: int) -> pd.DataFrame:
    """Number of cusps of each geometric type and component for D."""
    frame = records_to_frame(build_records(D))
    if frame.empty:
        return pd.DataFrame(columns=["type", "component", "cusps"])
    return (
        frame.groupby(["type", "component"], sort=True)
        .size()
        .reset_index(name="cusps")
    )
