"""Exception types shared across the package."""


class DesingError(Exception):
    """Domain error: malformed operator, wrong singularity, dependent input."""


class UnsupportedAlgebraicPointError(DesingError):
    """A computation would need a point outside the rational numbers."""


class OperatorSyntaxError(DesingError):
    """Operator expression failed to parse."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position
