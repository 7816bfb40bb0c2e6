"""Exception hierarchy.

Every error carries a short ``code`` that the command line front end
reports verbatim in its JSON error object.
"""


class ToricError(Exception):
    code = "Error"


class InputError(ToricError):
    code = "InputError"


class UsageError(InputError):
    code = "UsageError"


class ParseError(InputError):
    code = "ParseError"


class Unbounded(ToricError):
    code = "Unbounded"


class NotFullDimensional(ToricError):
    code = "NotFullDimensional"


class EmptyPolytope(ToricError):
    code = "EmptyPolytope"


class RedundantHalfSpace(ToricError):
    code = "RedundantHalfSpace"

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"halfspace {index} does not support a facet")


class NotSimple(ToricError):
    code = "NotSimple"

    def __init__(self, vertex_index, message=None):
        self.vertex_index = vertex_index
        super().__init__(message or f"vertex {vertex_index} lies on more than dim facets")


class NotUnimodular(ToricError):
    code = "NotUnimodular"


class NotDelzant(ToricError):
    code = "NotDelzant"


class NotQuantizable(ToricError):
    code = "NotQuantizable"


class PointOutsidePolytope(ToricError):
    code = "PointOutsidePolytope"


class NotInterior(ToricError):
    code = "NotInterior"


class NonGenericVector(ToricError):
    code = "NonGenericVector"

    def __init__(self, vertex, edge, message=None):
        self.vertex = vertex
        self.edge = edge
        super().__init__(
            message or f"weight vanishes on edge {list(edge)} at vertex {[str(x) for x in vertex]}"
        )


class InvalidParams(ToricError):
    code = "InvalidParams"


class NotDiagonal(ToricError):
    code = "NotDiagonal"
