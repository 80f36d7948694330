"""Pass/fail records with a concrete witness on failure."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class Witness:
    row: int
    col: int
    lhs: Any
    rhs: Any

    def to_json(self) -> dict:
        return {"row": self.row, "col": self.col, "lhs": _json(self.lhs), "rhs": _json(self.rhs)}


@dataclass(frozen=True)
class RelationReport:
    relation: str
    status: str
    witness: Optional[Witness] = None
    note: str = ""
    informational: bool = False

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be 'pass' or 'fail', not {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError(f"failed relation {self.relation!r} needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "relation": self.relation,
            "status": self.status,
            "witness": None if self.witness is None else self.witness.to_json(),
        }
        if self.note:
            out["note"] = self.note
        if self.informational:
            out["informational"] = True
        return out

    def summary(self) -> str:
        tag = "info" if self.informational else self.status.upper()
        line = f"{tag:4}  {self.relation}"
        if self.note:
            line += f"  ({self.note})"
        if self.witness is not None:
            w = self.witness
            line += f"\n      first difference at ({w.row}, {w.col}): lhs={w.lhs}  rhs={w.rhs}"
        return line


def _json(value: Any) -> Any:
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


def compare(relation: str, lhs, rhs, note: str = "") -> RelationReport:
    """Compare two matrices (or matrix-like objects) entrywise in row-major order."""
    pos = lhs.first_difference(rhs)
    if pos is None:
        return RelationReport(relation, "pass", note=note)
    i, j = pos
    return RelationReport(relation, "fail", Witness(i, j, lhs[i, j], rhs[i, j]), note=note)


def compare_values(relation: str, lhs, rhs, note: str = "") -> RelationReport:
    """Compare two single values; the witness position is (0, 0)."""
    if lhs == rhs:
        return RelationReport(relation, "pass", note=note)
    return RelationReport(relation, "fail", Witness(0, 0, lhs, rhs), note=note)
