class KhrotException(ValueError):
    pass


# Smoothings
class SmoothingException(KhrotException):
    pass


class CrossingMatchingException(SmoothingException):
    pass


class NotPerfectMatchingException(SmoothingException):
    pass


class BadOrientationException(SmoothingException):
    pass


class StrandNotFoundException(SmoothingException):
    pass


# Cobordisms
class CobordismException(KhrotException):
    pass


class ShapeMismatchException(CobordismException):
    pass


class BoundaryMismatchException(CobordismException):
    pass


class NonHomogeneousException(CobordismException):
    pass


# Complexes
class ComplexException(KhrotException):
    pass


class NoLoopAtPositionException(ComplexException):
    pass


class NotInvertibleException(ComplexException):
    pass


class NotClosedException(ComplexException):
    pass


class InvalidComplexException(ComplexException):
    pass


# Planar diagrams
class DiagramException(KhrotException):
    pass


class NotTypeAException(DiagramException):
    pass


class OrientationClashException(DiagramException):
    pass


class CrossingArcsException(DiagramException):
    pass


class IncompatibleException(DiagramException):
    pass


# PD codes and the pipeline
class PDException(KhrotException):
    pass


class PDSyntaxException(PDException):

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PDLabelException(PDException):
    pass


class UnplannableException(PDException):
    pass


class NotAlternatingException(PDException):
    pass


class ConfigException(KhrotException):
    pass
