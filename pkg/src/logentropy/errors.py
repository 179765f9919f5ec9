"""Exception hierarchy shared by the numerical modules and the CLI."""


class LogEntropyError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(LogEntropyError):
    """An argument lies outside the domain of a function."""


class DegenerateVarianceError(LogEntropyError):
    """The log-variate has (numerically) zero variance."""


class InconsistentMomentsError(LogEntropyError):
    """Supplied cross-moments cannot belong to any distribution."""


class DataError(LogEntropyError):
    """Input data could not be ingested or preprocessed."""
