"""Exception hierarchy for the nestpoly package."""


class NestpolyError(Exception):
    """Base class for all nestpoly errors."""


class InputError(NestpolyError):
    """Invalid input data (bad polygon, bad document)."""


class TooFewVertices(InputError):
    pass


class DuplicateConsecutiveVertex(InputError):
    pass


class DegenerateAllCollinear(InputError):
    pass


class ParseError(InputError):
    """Malformed document text (not valid JSON)."""


class SemanticError(InputError):
    """Well-formed JSON that violates the instance schema."""


class OutOfDomain(NestpolyError):
    """A query position lies outside the domain of the queried object."""


class OverlapDetected(NestpolyError):
    """Two polygons were found to overlap in their interiors."""


class ParityInconsistency(NestpolyError):
    """Side-of-interior parities cannot be assigned consistently.

    Signals a polygon that is not simple.
    """


class InternalOrderViolation(NestpolyError):
    """Debug assertion failure inside the sweep status structure."""


class ContainmentCycle(NestpolyError):
    """Mutual containment reported by the brute-force reference."""


class DegeneratePolygon(NestpolyError):
    """No interior point could be produced for a polygon."""


class GenerationFailed(NestpolyError):
    """The instance generator could not satisfy its constraints."""
