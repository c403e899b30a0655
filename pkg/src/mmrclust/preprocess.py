"""Cleaning chain: missing-value imputation, label encoding, feature scaling.

Scalers are fitted once and reused verbatim in the prediction flow, so their
parameters are an explicit, serializable object rather than hidden state.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._arrays import as_values
from .dataset import DataMatrix
from .errors import (
    AllMissingColumnError,
    AllMissingRowError,
    DimensionMismatchError,
    EmptyInputError,
    InvariantViolationError,
    MissingCellsPresentError,
)


class ImputeStrategy(str, Enum):
    MEAN_COLUMN = "mean_column"
    LINEAR_INTERPOLATE = "linear_interpolate"
    FORWARD_FILL = "forward_fill"


class ScalerKind(str, Enum):
    STANDARD = "standard"
    MINMAX = "minmax"


@dataclass
class FittedScaler:
    """Per-column affine parameters: (mean, std) or (min, max) pairs.

    Standard scaling uses the population standard deviation (divide by n).
    Zero-variance columns map to 0 when applied.
    """

    kind: ScalerKind
    params: np.ndarray  # shape (d, 2)

    def __post_init__(self) -> None:
        self.kind = ScalerKind(self.kind)
        self.params = np.asarray(self.params, dtype=float)
        if self.params.ndim != 2 or self.params.shape[1] != 2:
            raise InvariantViolationError(
                f"scaler params must be (d, 2), got {self.params.shape}"
            )
        if not np.isfinite(self.params).all():
            raise InvariantViolationError("scaler params must be finite")
        if self.kind is ScalerKind.STANDARD and (self.params[:, 1] < 0).any():
            raise InvariantViolationError("standard deviations must be >= 0")
        if self.kind is ScalerKind.MINMAX and (
            self.params[:, 1] < self.params[:, 0]
        ).any():
            raise InvariantViolationError("minmax params must satisfy max >= min")

    @property
    def d(self) -> int:
        return self.params.shape[0]


@dataclass
class LabelCodebook:
    """First-occurrence mapping from label strings to codes 0..m-1."""

    codes: dict[str, int]

    def __getitem__(self, label: str) -> int:
        return self.codes[label]

    def __len__(self) -> int:
        return len(self.codes)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.codes)


def impute(matrix: DataMatrix, strategy: ImputeStrategy) -> DataMatrix:
    """Fill every missing cell; present cells pass through unchanged.

    MEAN_COLUMN uses the column mean of present values.  LINEAR_INTERPOLATE
    fills interior gaps linearly along the row (year axis) and boundary gaps
    with the nearest present value.  FORWARD_FILL carries the nearest earlier
    value forward, falling back to the nearest later value at the start.
    """
    strategy = ImputeStrategy(strategy)
    values = as_values(matrix).copy()
    missing = np.isnan(values)
    n, d = values.shape

    if strategy is ImputeStrategy.MEAN_COLUMN:
        dead = np.flatnonzero(missing.all(axis=0))
        if dead.size:
            raise AllMissingColumnError(
                f"column(s) {dead.tolist()} have no present values"
            )
        with np.errstate(invalid="ignore"):
            means = np.nanmean(values, axis=0)
        rows, cols = np.nonzero(missing)
        values[rows, cols] = means[cols]
    else:
        dead = np.flatnonzero(missing.all(axis=1))
        if dead.size:
            raise AllMissingRowError(f"row(s) {dead.tolist()} have no present values")
        for i in range(n):
            gap = missing[i]
            if not gap.any():
                continue
            present = np.flatnonzero(~gap)
            if strategy is ImputeStrategy.LINEAR_INTERPOLATE:
                holes = np.flatnonzero(gap)
                values[i, holes] = np.interp(holes, present, values[i, present])
            else:  # FORWARD_FILL
                carry = np.where(~gap, np.arange(d), -1)
                np.maximum.accumulate(carry, out=carry)
                holes = np.flatnonzero(gap & (carry >= 0))
                values[i, holes] = values[i, carry[holes]]
                leading = np.flatnonzero(gap & (carry < 0))
                values[i, leading] = values[i, present[0]]

    if isinstance(matrix, DataMatrix):
        return matrix.with_values(values)
    return DataMatrix(
        tuple(str(i) for i in range(n)), tuple(range(d)), values
    )


def fit_scaler(matrix: DataMatrix, kind: ScalerKind) -> FittedScaler:
    """Learn per-column parameters from a fully numeric matrix."""
    kind = ScalerKind(kind)
    values = as_values(matrix)
    if np.isnan(values).any():
        raise MissingCellsPresentError("cannot fit a scaler with missing cells")
    if kind is ScalerKind.STANDARD:
        params = np.column_stack([values.mean(axis=0), values.std(axis=0)])
    else:
        params = np.column_stack([values.min(axis=0), values.max(axis=0)])
    return FittedScaler(kind, params)


def apply_scaler(scaler: FittedScaler, matrix: DataMatrix) -> DataMatrix:
    """Apply fitted parameters columnwise; zero-range columns map to 0."""
    values = as_values(matrix)
    if values.shape[1] != scaler.d:
        raise DimensionMismatchError(
            f"matrix has {values.shape[1]} columns, scaler expects {scaler.d}"
        )
    if np.isnan(values).any():
        raise MissingCellsPresentError("cannot scale a matrix with missing cells")
    shift = scaler.params[:, 0]
    if scaler.kind is ScalerKind.STANDARD:
        span = scaler.params[:, 1]
    else:
        span = scaler.params[:, 1] - scaler.params[:, 0]
    safe = np.where(span == 0.0, 1.0, span)
    scaled = np.where(span == 0.0, 0.0, (values - shift) / safe)
    if isinstance(matrix, DataMatrix):
        return matrix.with_values(scaled)
    return DataMatrix(
        tuple(str(i) for i in range(values.shape[0])),
        tuple(range(values.shape[1])),
        scaled,
    )


def encode_labels(labels) -> LabelCodebook:
    """Assign codes 0,1,2,... by first occurrence; duplicates reuse their code."""
    codes: dict[str, int] = {}
    for label in labels:
        if label not in codes:
            codes[label] = len(codes)
    if not codes:
        raise EmptyInputError("no labels to encode")
    return LabelCodebook(codes)
