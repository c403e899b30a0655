"""Exception types raised across the package.

Every domain failure derives from :class:`MMRClustError` so callers (and the
CLI) can distinguish data/pipeline problems from programming errors.
"""


class MMRClustError(Exception):
    """Base class for all errors raised by this package."""


# --- ingestion -----------------------------------------------------------

class EmptyInputError(MMRClustError):
    """Document is empty or contains a header with no data rows."""


class HeaderMalformedError(MMRClustError):
    """CSV header does not match the expected layout."""


class RowArityError(MMRClustError):
    """A data row has the wrong number of cells."""


class DuplicateCountryError(MMRClustError):
    """The same country name appears on two rows."""


class DuplicateObservationError(MMRClustError):
    """The same (country, year) pair appears twice in long-format input."""


class NonNumericCellError(MMRClustError):
    """A cell is neither numeric, empty, nor a missing-value token."""


class InvalidSeriesError(MMRClustError):
    """A country series violates its own invariants (length, range, name)."""


class EmptyDatasetError(MMRClustError):
    """Operation requires at least one series."""


# --- preprocessing -------------------------------------------------------

class AllMissingColumnError(MMRClustError):
    """Column-mean imputation found a column with no present values."""


class AllMissingRowError(MMRClustError):
    """Row-wise imputation found a row with no present values."""


class MissingCellsPresentError(MMRClustError):
    """Operation requires a fully numeric matrix but found missing cells."""


class DimensionMismatchError(MMRClustError):
    """Shapes of the supplied arrays do not agree."""


class NonFiniteCellError(MMRClustError):
    """Matrix contains NaN or infinite cells where finite values are required."""


# --- clustering ----------------------------------------------------------

class KZeroError(MMRClustError):
    """Cluster count must be at least 1."""


class KTooLargeError(MMRClustError):
    """Cluster count exceeds the number of rows."""


class KOutOfRangeError(MMRClustError):
    """Requested flat-cut cluster count is outside [1, n]."""


class LabelOutOfRangeError(MMRClustError):
    """A cluster label falls outside the valid index range."""


class SingleClusterError(MMRClustError):
    """Silhouette needs at least two clusters."""


class EmptyClusterError(MMRClustError):
    """A referenced cluster has no members."""


class TooFewRowsError(MMRClustError):
    """Operation needs more rows than the matrix provides."""


# --- pairing -------------------------------------------------------------

class LengthMismatchError(MMRClustError):
    """Paired series have different lengths."""


class ConstantSeriesError(MMRClustError):
    """Correlation is undefined for a constant series."""


class TooShortError(MMRClustError):
    """Correlation needs at least three observations."""


class TooFewCountriesError(MMRClustError):
    """Pairing needs at least two countries."""


class TooFewYearsError(MMRClustError):
    """Pairing needs at least three year columns."""


# --- model persistence ---------------------------------------------------

class IOFailureError(MMRClustError):
    """Reading or writing a model document failed."""


class SchemaVersionMismatchError(MMRClustError):
    """Model document carries an unsupported schema version."""


class CorruptDocumentError(MMRClustError):
    """Model document is not parseable or structurally complete."""


class InvariantViolationError(MMRClustError):
    """A reconstructed or constructed model violates its invariants."""


class YearRangeMismatchError(MMRClustError):
    """Prediction data covers a different year range than the model."""
