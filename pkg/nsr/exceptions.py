class NSRError(Exception):
    ...


class ScalarDivisionError(NSRError, ZeroDivisionError):
    ...


class PoleError(NSRError):
    def __init__(self, message: str, point=None, key=None):
        super().__init__(message)
        self.point = point
        self.key = key


class DegreeOverflowError(NSRError):
    ...


class ResourceCapError(NSRError):
    ...


class CoordinateMismatchError(NSRError):
    ...


class SeriesInversionError(NSRError):
    ...


class DegenerateParametersError(NSRError):
    def __init__(self, message: str, key=None, tuple=None):
        super().__init__(message)
        self.key = key
        self.tuple = tuple


class InternalMismatchError(NSRError):
    ...


class InvalidCheckSpecError(NSRError):
    ...


class UnsatisfiableConstraintsError(NSRError):
    ...


class MissingRootError(NSRError):
    ...


class DegreeConstraintError(NSRError):
    ...
