"""Exception hierarchy. Each class carries the category the CLI reports."""


class ZigzagError(Exception):
    category = "error"


class ParseError(ZigzagError, ValueError):
    category = "parse"


class ValidationError(ZigzagError, ValueError):
    category = "validation"


class ConfigurationError(ValidationError):
    pass


class StructuralError(ZigzagError):
    category = "structural"


class DivergenceError(ValidationError):
    def __init__(self, message, time):
        super().__init__(message)
        self.time = time
