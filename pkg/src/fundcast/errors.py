"""Exception hierarchy shared across the pipeline.

Python's builtin ``ReferenceError`` (weakref machinery) forced a rename for
dangling-id failures; everything else is named after what went wrong.
"""


class FundcastError(Exception):
    """Base class for all package errors."""


class MissingTableError(FundcastError):
    """A required fixture file is absent from the corpus directory."""


class CorpusParseError(FundcastError):
    """A fixture row failed validation; carries file and line context."""

    def __init__(self, message, path=None, line=None):
        self.path = str(path) if path is not None else None
        self.line = line
        where = ""
        if path is not None:
            where = f" [{path}" + (f":{line}" if line is not None else "") + "]"
        super().__init__(message + where)


class UnknownCompanyError(FundcastError):
    """A record references a company_id not present in the companies table."""


class EmptyQueryError(FundcastError):
    """No website or handle available to build a tweet query from."""


class ConfigError(FundcastError):
    """A user-supplied configuration value is out of range or unknown."""


class EmptyCorpusError(FundcastError):
    """An operation that needs at least one record received none."""


class DegenerateTrainingError(FundcastError):
    """Training data contains a single class and cannot be fit."""


class SchemaError(FundcastError):
    """Rows do not conform to the manifest a model was trained against."""


class NotAWordError(FundcastError):
    """Syllable counting was asked to score a token without letters."""


class EmptyInputError(FundcastError):
    """A distribution was requested over an empty token list."""


class UndefinedMetricError(FundcastError):
    """A readability score is undefined for zero words or sentences."""


class InvalidObservationError(FundcastError):
    """An observation date precedes the company's founding date."""
