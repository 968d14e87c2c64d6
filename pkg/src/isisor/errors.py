"""Exception types shared across the package."""


class IsisorError(Exception):
    """Base class for every package-specific error."""


class InvalidInputError(IsisorError):
    """An argument violates a documented value contract (range, size, shape)."""


class PreconditionError(InvalidInputError):
    """A structural precondition failed (e.g. a step is not slide-adjacent,
    or the expansion loop finds no movable token, which signals an even hole)."""


class ResourceLimitError(IsisorError):
    """A configured desk-scale cap (node count, state count, vertex count)
    would be exceeded.  The message names the offending count."""


class FormatError(InvalidInputError):
    """A text payload does not conform to its documented file format."""
