"""Internal array coercion helpers shared by the numeric modules."""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, NonFiniteCellError


def as_values(matrix) -> np.ndarray:
    """Return the 2-D float array behind a DataMatrix or array-like."""
    values = getattr(matrix, "values", matrix)
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D matrix, got shape {arr.shape}")
    return arr


def require_finite(arr: np.ndarray, context: str) -> np.ndarray:
    if not np.isfinite(arr).all():
        raise NonFiniteCellError(f"{context}: matrix contains non-finite cells")
    return arr


def row_labels(matrix, n: int) -> tuple[str, ...]:
    """Country names from a DataMatrix, or synthesized row names for raw arrays."""
    labels = getattr(matrix, "labels", None)
    if labels is None:
        return tuple(f"row{i}" for i in range(n))
    return tuple(labels)
