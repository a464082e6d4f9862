"""Flat output records and their text / CSV / JSON serializations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from typing import Optional

FIELDS = ("type", "ell", "ell_m", "ell0", "parts", "s", "rank", "method", "subcategory_rank", "degenerate")


@dataclass(frozen=True)
class OutputRecord:
    type: str
    ell: int
    ell_m: int
    ell0: int
    parts: tuple[int, ...]
    s: Optional[int]
    rank: Optional[int]
    method: str
    subcategory_rank: Optional[int] = None
    degenerate: bool = False

    @classmethod
    def from_result(cls, result) -> "OutputRecord":
        return cls(
            type=result.lie_type.label,
            ell=result.ell,
            ell_m=result.ell_m,
            ell0=result.ell0,
            parts=tuple(result.parts),
            s=result.s,
            rank=result.rank,
            method=result.method.short,
            subcategory_rank=result.subcategory_rank,
        )

    @classmethod
    def degenerate_level(cls, params, ell: int, method: str) -> "OutputRecord":
        return cls(
            type=params.lie_type.label,
            ell=ell,
            ell_m=params.ell_m,
            ell0=params.ell0,
            parts=tuple(params.parts),
            s=None,
            rank=None,
            method=method,
            degenerate=True,
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["parts"] = list(self.parts)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        names = {f.name for f in fields(cls)}
        kw = {k: v for k, v in d.items() if k in names}
        kw["parts"] = tuple(kw["parts"])
        return cls(**kw)

    def csv_row(self) -> list[str]:
        d = self.to_dict()
        d["parts"] = " ".join(map(str, self.parts))
        d["degenerate"] = "true" if self.degenerate else "false"
        return ["" if d[k] is None else str(d[k]) for k in FIELDS]

    @classmethod
    def from_csv_row(cls, row: dict) -> "OutputRecord":
        def opt(v):
            return None if v == "" else int(v)

        return cls(
            type=row["type"],
            ell=int(row["ell"]),
            ell_m=int(row["ell_m"]),
            ell0=int(row["ell0"]),
            parts=tuple(int(p) for p in row["parts"].split()),
            s=opt(row["s"]),
            rank=opt(row["rank"]),
            method=row["method"],
            subcategory_rank=opt(row["subcategory_rank"]),
            degenerate=row["degenerate"] == "true",
        )

    def text_lines(self) -> list[str]:
        d = self.to_dict()
        d["parts"] = ",".join(map(str, self.parts))
        d["degenerate"] = "true" if self.degenerate else "false"
        return [f"{k} = {'-' if d[k] is None else d[k]}" for k in FIELDS]


def to_json(records) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2)


def from_json(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_dict(d) for d in json.loads(text)]


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


def from_csv(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_csv_row(row) for row in csv.DictReader(io.StringIO(text))]


def parse_text(text: str) -> OutputRecord:
    """Inverse of :meth:`OutputRecord.text_lines` (ignores unknown lines)."""
    d = {}
    for line in text.splitlines():
        key, sep, value = line.partition(" = ")
        if sep and key in FIELDS:
            d[key] = value
    def opt(v):
        return None if v == "-" else int(v)

    return OutputRecord(
        type=d["type"],
        ell=int(d["ell"]),
        ell_m=int(d["ell_m"]),
        ell0=int(d["ell0"]),
        parts=tuple(int(p) for p in d["parts"].split(",")),
        s=opt(d["s"]),
        rank=opt(d["rank"]),
        method=d["method"],
        subcategory_rank=opt(d["subcategory_rank"]),
        degenerate=d["degenerate"] == "true",
    )
