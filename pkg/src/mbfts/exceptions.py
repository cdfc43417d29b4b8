"""Exception hierarchy.

Everything raised on purpose by the library derives from ``MbftsError`` so
callers (and the CLI) can separate data/domain failures from bugs.
"""


class MbftsError(Exception):
    pass


class InvalidArgumentError(MbftsError, ValueError):
    pass


class DomainError(MbftsError, ValueError):
    pass


class OutOfUniverseError(DomainError):
    def __init__(self, value, lo, hi, year=None):
        self.value = value
        self.lo = lo
        self.hi = hi
        self.year = year
        where = f" (year {year})" if year is not None else ""
        super().__init__(f"value {value!r}{where} outside universe [{lo!r}, {hi!r}]")


class InsufficientDataError(MbftsError, ValueError):
    pass


class NoMatchError(MbftsError, LookupError):
    pass


class InconsistencyError(MbftsError, ValueError):
    pass


class DataError(MbftsError, ValueError):
    pass


class ParseError(DataError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
