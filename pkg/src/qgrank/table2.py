"""Reader for the hard-coded rank-table fixture (``data/table2.txt``).

The fixture is a comparison oracle only; nothing in the computation
pipeline reads it.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .root_systems import LieType


@dataclass(frozen=True)
class TableRow:
    lie_type: LieType
    ell_m: int
    parts: tuple[int, ...]
    ell0: int
    line: int = 0

    @property
    def key(self):
        return (self.lie_type, self.ell_m)


class FixtureFormatError(ValueError):
    pass


def default_fixture_text() -> str:
    return resources.files("qgrank").joinpath("data/table2.txt").read_text()


def parse_table(text: str) -> list[TableRow]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 5:
            raise FixtureFormatError(f"line {lineno}: expected 5 fields, got {len(fields)}")
        series, rank, ell_m, parts, ell0 = fields
        try:
            rows.append(
                TableRow(
                    lie_type=LieType(series, int(rank)),
                    ell_m=int(ell_m),
                    parts=tuple(int(p) for p in parts.split(",")),
                    ell0=int(ell0),
                    line=lineno,
                )
            )
        except ValueError as exc:
            raise FixtureFormatError(f"line {lineno}: {exc}") from exc
    return rows


def load_table(path: str | Path | None = None) -> list[TableRow]:
    if path is None:
        return parse_table(default_fixture_text())
    return parse_table(Path(path).read_text())
