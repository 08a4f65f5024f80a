class ParameterError(ValueError):
    """A family or path parameter lies outside its allowed domain."""


class UndefinedTransformError(ValueError):
    """The B-transform was applied to the length-0 path with e != f."""


class ExcludedCaseError(ValueError):
    """decompose was called on the all-scoring path with m' = 0 and L' odd."""


class MoveError(ValueError):
    """A particle move was requested that the path does not permit."""
