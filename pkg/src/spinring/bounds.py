"""Degree bounds for generators and relations, all genera.

The generic bound is (e, 2e) with e = max(5, e_1, ..., e_r), overridden
by the fourteen tabulated exceptional signatures.  The modular-forms
front end reports the even-weight constants 6*max(3, e_i) and
12*max(3, e_i), or the log spin bounds when odd-weight forms exist.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .divisor import Signature, SpinParityError

LOG_SPIN = "log-spin"
MODULAR_EVEN = "modular-even"
MODULAR_ODD = "modular-odd"

_EVEN_CASE_NOTE = ("even-weight constants from the prior subring bounds; "
                   "the sharper factor-two refinements are out of scope")


@dataclass(frozen=True)
class ExceptionalPayload:
    label: str
    generator_degrees: tuple[int, ...]
    relation_degrees: tuple[int, ...]

    def as_json(self) -> dict:
        return {"label": self.label,
                "generatorDegrees": list(self.generator_degrees),
                "relationDegrees": list(self.relation_degrees)}


@dataclass(frozen=True)
class BoundsReport:
    e: int
    gen_bound: int
    rel_bound: int
    mode: str
    exceptional: ExceptionalPayload | None = None
    note: str | None = None

    def as_json(self) -> dict:
        return {"e": self.e, "genBound": self.gen_bound,
                "relBound": self.rel_bound, "mode": self.mode,
                "exceptional": self.exceptional.as_json()
                if self.exceptional else None,
                "note": self.note}


def is_exceptional(sig: Signature) -> ExceptionalPayload | None:
    """The matching exceptional-table row, if any (genus-1 rows are
    keyed by the torsion flag as well as the sorted stabilizers)."""
    row = catalog.exceptional_row(sig)
    if row is None:
        return None
    return ExceptionalPayload(row["label"],
                              catalog.row_generator_degrees(row),
                              catalog.row_relation_degrees(row))


def degree_bounds(sig: Signature) -> BoundsReport:
    e = max(5, *sig.stabilizers) if sig.stabilizers else 5
    return BoundsReport(e, e, 2 * e, LOG_SPIN, is_exceptional(sig))


def modular_form_bounds(sig: Signature, has_odd_forms: bool) -> BoundsReport:
    if not has_odd_forms:
        m = max(3, *sig.stabilizers) if sig.stabilizers else 3
        return BoundsReport(m, 6 * m, 12 * m, MODULAR_EVEN,
                            note=_EVEN_CASE_NOTE)
    for e in sig.stabilizers:
        if e % 2 == 0:
            raise SpinParityError(
                f"odd-weight forms force odd stabilizers; got {e}")
    report = degree_bounds(sig)
    return BoundsReport(report.e, report.gen_bound, report.rel_bound,
                        MODULAR_ODD, report.exceptional)
