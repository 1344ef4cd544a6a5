class SuperVoganError(Exception):
    pass


class ParameterError(SuperVoganError, ValueError):
    """Family parameters outside their valid range."""


class StructuralError(SuperVoganError, ValueError):
    """Inconsistent root data, basis mismatch, or malformed diagram."""


class DegeneracyError(SuperVoganError, ArithmeticError):
    """Mark kernel is not one-dimensional or not strictly positive."""


class SizeBoundError(SuperVoganError, ValueError):
    pass


class ParseError(SuperVoganError, ValueError):
    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location
