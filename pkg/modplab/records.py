"""Flat profile tables for breuil-enumerate, in JSON or CSV."""

import csv
import io
import json
from typing import Iterable, List, Literal

from pydantic import BaseModel, Field

from .breuil_rank_one import (
    enumerate_profiles,
    from_profile,
    generic_fiber_exponent,
    profile_kappa,
)
from .tame_arith import TameParams

RecordFormat = Literal["json", "csv"]

CSV_COLUMNS = ("p", "d", "r", "xVec", "yVec", "kappa0", "kappa0Lemma", "agree")


class ProfileRecord(BaseModel):
    """One niveau-1 profile with kappa_0 computed both ways."""

    p: int
    d: int
    r: int
    xVec: List[int] = Field(..., description="x_i values")
    yVec: List[int] = Field(..., description="y_i values")
    kappa0: int = Field(..., description="Closed-form exponent of the profile")
    kappa0Lemma: int = Field(..., description="generic_fiber_exponent(from_profile(P))")
    agree: bool


def profile_records(
    params: TameParams, r: int, allowed_x: Iterable[int]
) -> List[ProfileRecord]:
    """A record for every profile enumerate_profiles yields, in the same order."""
    records = []
    for profile in enumerate_profiles(params, r, allowed_x):
        closed = profile_kappa(profile)
        via_lemma = generic_fiber_exponent(from_profile(profile))
        records.append(
            ProfileRecord(
                p=params.p,
                d=params.d,
                r=r,
                xVec=list(profile.x_vec),
                yVec=list(profile.y_vec),
                kappa0=closed,
                kappa0Lemma=via_lemma,
                agree=closed == via_lemma,
            )
        )
    return records


def write_records(records: Iterable[ProfileRecord], fmt: RecordFormat = "json") -> str:
    """
    Serialize records.

    Args:
        records: Profile records
        fmt: "json" for an array of objects, "csv" for a header plus one row
            per record with vectors joined by ';'

    Returns:
        The serialized table
    """
    if fmt == "json":
        return json.dumps([r.model_dump(mode="json") for r in records], indent=2)
    if fmt != "csv":
        raise ValueError(f"unknown record format {fmt!r}")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(
            [
                record.p,
                record.d,
                record.r,
                ";".join(map(str, record.xVec)),
                ";".join(map(str, record.yVec)),
                record.kappa0,
                record.kappa0Lemma,
                str(record.agree).lower(),
            ]
        )
    return buffer.getvalue()
