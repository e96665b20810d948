"""Exception taxonomy.

Three branches matter to the CLI exit-code contract: ConfigError (exit 2),
DataError (exit 3), and everything else under HelioError (exit 4).
"""


class HelioError(Exception):
    """Base class for all package errors."""


class ConfigError(HelioError):
    """Invalid configuration or parameters, rejected before any work starts."""


class DataError(HelioError):
    """Problems with input data or data-shaped arguments."""


class TrainingError(HelioError):
    """Failures while fitting, tuning, or explaining models."""


# -- dataset / features -----------------------------------------------------

class EmptyFileError(DataError):
    pass


class MissingColumnError(DataError):
    def __init__(self, column: str):
        super().__init__(f"mapped CSV header not found: {column!r}")
        self.column = column


class ParseError(DataError):
    def __init__(self, row: int, column: str, cell: str):
        super().__init__(f"non-numeric cell {cell!r} at data row {row}, column {column!r}")
        self.row = row
        self.column = column


class DirtyDataError(DataError):
    pass


class ConstantColumnError(DataError):
    def __init__(self, name: str):
        super().__init__(f"feature column {name!r} is constant")
        self.name = name


class TooFewRowsError(DataError):
    pass


class BadFoldCountError(DataError):
    pass


class ConstantVectorError(DataError):
    pass


class LengthMismatchError(DataError):
    pass


class EmptyInputError(DataError):
    pass


class EmptySelectionError(DataError):
    pass


class ConstantTargetError(DataError):
    pass


class SchemaMismatchError(DataError):
    pass


class DimensionMismatchError(HelioError):
    pass


# -- models / tuner ---------------------------------------------------------

class TooFewSamplesError(TrainingError):
    pass


class BadRoundError(TrainingError):
    pass


class DivergedError(TrainingError):
    pass


class BadArchitectureError(TrainingError):
    pass


class NotATreeModelError(TrainingError):
    pass


class TooManyFeaturesError(TrainingError):
    pass


class OutOfDomainError(TrainingError):
    pass


class SingularKernelError(TrainingError):
    pass


class CvFoldError(TrainingError):
    """A trainer raised inside cross-validation; carries the fold index."""

    def __init__(self, fold: int, cause: Exception):
        super().__init__(f"fold {fold}: {cause}")
        self.fold = fold
        self.cause = cause
