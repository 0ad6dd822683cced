"""Exception hierarchy. Everything derives from ``ScoalgError`` (a ``ValueError``)."""


class ScoalgError(ValueError):
    pass


class MixedGrading(ScoalgError):
    pass


class ArityMismatch(ScoalgError):
    pass


class LengthMismatch(ScoalgError):
    pass


class DegreeZero(ScoalgError):
    pass


class IndexOutOfRange(ScoalgError):
    pass


class DuplicateVertexInFacet(ScoalgError):
    pass


class DimensionZero(ScoalgError):
    pass


class NotAFace(ScoalgError):
    pass


class NotOrderPreserving(ScoalgError):
    pass


class NotInjective(ScoalgError):
    pass


class SimplexNotInComplex(ScoalgError):
    pass


class TablesIncomplete(ScoalgError):
    pass


class NotVertexDetermined(ScoalgError):
    pass


class TruncationTooShort(ScoalgError):
    pass


class NotConnected(ScoalgError):
    pass


class BasepointMissing(ScoalgError):
    pass


class PartialRelabeling(ScoalgError):
    pass
