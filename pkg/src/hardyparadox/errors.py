"""Exception hierarchy.

Domain errors (bad scenario, no solution, size caps) map to CLI exit code 2,
input errors (files, schema) to exit code 1.
"""


class HardyError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HardyError, ValueError):
    pass


class InvalidScenarioError(DomainError):
    pass


class WeightError(InvalidScenarioError):
    pass


class DimensionError(DomainError):
    pass


class SizeError(DomainError):
    pass


class NoSymmetricSolutionError(DomainError):
    pass


class UnsupportedSettingsError(DomainError):
    pass


class NoThresholdError(DomainError):
    pass


class IncompleteTableError(DomainError):
    def __init__(self, missing):
        self.missing = list(missing)
        names = ", ".join(str(m) for m in self.missing)
        super().__init__(f"probability table is missing {len(self.missing)} string(s): {names}")


class InputError(HardyError):
    pass


class ParseError(InputError, ValueError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class ConsistencyError(ParseError):
    pass


class MissingSettingError(InputError, LookupError):
    pass
