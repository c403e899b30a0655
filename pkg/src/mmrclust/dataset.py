"""Ingestion of per-country MMR time series from CSV, and matrix assembly.

Two layouts are accepted: *wide* (one row per country, one column per year)
and *long* (one ``country,year,mmr`` observation per row).  Both produce the
same in-memory types.  Cells are trimmed before interpretation; an empty cell
or the token ``NA`` (any case) marks a missing value.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    DuplicateCountryError,
    DuplicateObservationError,
    EmptyDatasetError,
    EmptyInputError,
    HeaderMalformedError,
    InvalidSeriesError,
    NonNumericCellError,
    RowArityError,
)

# Plain decimal or scientific notation.  Deliberately narrower than float():
# no underscores, no inf/nan tokens, no embedded whitespace.
_NUMBER_RE = re.compile(r"^[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")

_MISSING_TOKENS = frozenset({"", "na"})

LONG_HEADER = ("country", "year", "mmr")


@dataclass
class CountrySeries:
    """One country's MMR trajectory over contiguous years; None marks a gap."""

    name: str
    year_start: int
    values: tuple[float | None, ...]

    def __post_init__(self) -> None:
        self.values = tuple(self.values)
        if not self.name:
            raise InvalidSeriesError("country name must be non-empty")
        if len(self.values) < 2:
            raise InvalidSeriesError(
                f"series {self.name!r} spans fewer than 2 years"
            )
        for offset, value in enumerate(self.values):
            if value is None:
                continue
            if not math.isfinite(value) or value < 0:
                raise InvalidSeriesError(
                    f"series {self.name!r}, year {self.year_start + offset}: "
                    f"values must be finite and >= 0, got {value!r}"
                )

    @property
    def year_end(self) -> int:
        return self.year_start + len(self.values) - 1


@dataclass
class Dataset:
    """Country series sharing one contiguous year range, no duplicate names."""

    series: list[CountrySeries]
    year_start: int
    year_end: int

    def __post_init__(self) -> None:
        span = self.year_end - self.year_start + 1
        seen: set[str] = set()
        for member in self.series:
            if member.year_start != self.year_start or len(member.values) != span:
                raise InvalidSeriesError(
                    f"series {member.name!r} does not cover "
                    f"{self.year_start}..{self.year_end}"
                )
            if member.name in seen:
                raise DuplicateCountryError(f"duplicate country {member.name!r}")
            seen.add(member.name)

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(range(self.year_start, self.year_end + 1))


@dataclass(eq=False)
class DataMatrix:
    """Row-labelled numeric matrix: one row per country, one column per year.

    Missing cells are NaN.  Preprocessing removes them; every downstream
    consumer requires a fully finite matrix.
    """

    labels: tuple[str, ...]
    columns: tuple[int, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        self.labels = tuple(self.labels)
        self.columns = tuple(self.columns)
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (len(self.labels), len(self.columns)):
            raise DimensionMismatchError(
                f"matrix shape {self.values.shape} does not match "
                f"{len(self.labels)} labels x {len(self.columns)} columns"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def with_values(self, values: np.ndarray) -> "DataMatrix":
        return DataMatrix(self.labels, self.columns, values)


def _lines(text: str) -> list[str]:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def _parse_value(cell: str, lineno: int) -> float | None:
    if cell.lower() in _MISSING_TOKENS:
        return None
    if not _NUMBER_RE.match(cell):
        raise NonNumericCellError(f"line {lineno}: cannot interpret cell {cell!r}")
    return float(cell)


def parse_wide_csv(text: str) -> Dataset:
    """Parse the wide layout: header ``country,<year>,...``, one row per country.

    Header years must be strictly increasing integers.  Gap years in the
    header are materialised as all-missing columns so that every series
    covers a contiguous range.
    """
    rows = _lines(text)
    if not rows:
        raise EmptyInputError("document contains no content")
    header = [cell.strip() for cell in rows[0].split(",")]
    if header[0] != "country":
        raise HeaderMalformedError(
            f"first header cell must be 'country', got {header[0]!r}"
        )
    if len(header) < 3:
        raise HeaderMalformedError("wide layout needs at least two year columns")
    years: list[int] = []
    for cell in header[1:]:
        if not _INT_RE.match(cell):
            raise HeaderMalformedError(f"year column {cell!r} is not an integer")
        years.append(int(cell))
    for prev, cur in zip(years, years[1:]):
        if cur <= prev:
            raise HeaderMalformedError(
                f"year columns must be strictly increasing ({prev} then {cur})"
            )
    if len(rows) == 1:
        raise EmptyInputError("document has a header but no data rows")

    year_start, year_end = years[0], years[-1]
    span = year_end - year_start + 1
    offsets = [year - year_start for year in years]
    series: list[CountrySeries] = []
    seen: set[str] = set()
    for lineno, row in enumerate(rows[1:], start=2):
        cells = [cell.strip() for cell in row.split(",")]
        if len(cells) != len(header):
            raise RowArityError(
                f"line {lineno}: expected {len(header)} cells, got {len(cells)}"
            )
        name = cells[0]
        if name in seen:
            raise DuplicateCountryError(f"line {lineno}: duplicate country {name!r}")
        seen.add(name)
        values: list[float | None] = [None] * span
        for offset, cell in zip(offsets, cells[1:]):
            values[offset] = _parse_value(cell, lineno)
        series.append(CountrySeries(name, year_start, tuple(values)))
    return Dataset(series, year_start, year_end)


def parse_long_csv(text: str) -> Dataset:
    """Parse the long layout (header exactly ``country,year,mmr``) and pivot.

    The year range is [min, max] over all observations; combinations that
    never appear become missing.  Row order follows each country's first
    appearance.
    """
    rows = _lines(text)
    if not rows:
        raise EmptyInputError("document contains no content")
    header = tuple(cell.strip() for cell in rows[0].split(","))
    if header != LONG_HEADER:
        raise HeaderMalformedError(
            "long layout header must be exactly 'country,year,mmr'"
        )
    if len(rows) == 1:
        raise EmptyInputError("document has a header but no observations")

    observed: dict[str, dict[int, float | None]] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        cells = [cell.strip() for cell in row.split(",")]
        if len(cells) != 3:
            raise RowArityError(f"line {lineno}: expected 3 cells, got {len(cells)}")
        name, year_cell, value_cell = cells
        if not _INT_RE.match(year_cell):
            raise NonNumericCellError(
                f"line {lineno}: year {year_cell!r} is not an integer"
            )
        year = int(year_cell)
        value = _parse_value(value_cell, lineno)
        per_country = observed.setdefault(name, {})
        if year in per_country:
            raise DuplicateObservationError(
                f"line {lineno}: duplicate observation ({name!r}, {year})"
            )
        per_country[year] = value

    all_years = [year for per in observed.values() for year in per]
    year_start, year_end = min(all_years), max(all_years)
    series = [
        CountrySeries(
            name,
            year_start,
            tuple(per.get(year) for year in range(year_start, year_end + 1)),
        )
        for name, per in observed.items()
    ]
    return Dataset(series, year_start, year_end)


def to_matrix(dataset: Dataset) -> DataMatrix:
    """Assemble the n x d matrix: row per series, column per year, NaN for gaps."""
    if not dataset.series:
        raise EmptyDatasetError("dataset has no series")
    span = dataset.year_end - dataset.year_start + 1
    values = np.full((len(dataset.series), span), np.nan)
    for i, member in enumerate(dataset.series):
        values[i] = [np.nan if v is None else v for v in member.values]
    return DataMatrix(
        tuple(member.name for member in dataset.series),
        dataset.years,
        values,
    )


def to_wide_csv(dataset: Dataset) -> str:
    """Serialize back to the wide layout; missing values become ``NA``."""
    lines = ["country," + ",".join(str(year) for year in dataset.years)]
    for member in dataset.series:
        cells = [member.name] + [
            "NA" if v is None else repr(float(v)) for v in member.values
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
