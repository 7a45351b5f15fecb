"""Engine exceptions."""


class KoszulError(Exception):
    """Base class for engine errors."""

    def __init__(self, message, errors=None):
        super().__init__(message)
        self.message = message
        self.errors = list(errors or [])

    def to_dict(self):
        """Convert error to dictionary."""
        return {'error': self.__class__.__name__, 'message': self.message, 'errors': self.errors}


class DimensionError(KoszulError):
    """Vectors or matrices of incompatible length."""


class PreconditionError(KoszulError):
    """An operation was called outside its domain."""


class TruncationError(KoszulError):
    """A v_i with i above the truncation level was requested."""


class PresentationError(KoszulError):
    """A module presentation failed validation."""


class ParseError(KoszulError):
    """Monomial, element or expression text could not be parsed."""


class UnknownClassError(KoszulError):
    """A named class or generator does not exist."""


class CompletenessFault(KoszulError):
    """A differential landed outside the enumerated region."""

    def __init__(self, message, monomial=None, cell=None):
        super().__init__(message)
        self.monomial = monomial
        self.cell = cell


class VerificationError(KoszulError):
    """A consistency check or relation verification failed."""
