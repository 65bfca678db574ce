"""Exception hierarchy.  Every error raised by the library derives from
:class:`SkewCharError`, and the CLI reports ``type(err).__name__``."""


class SkewCharError(ValueError):
    pass


class ParseError(SkewCharError):
    pass


class ShapeDoesNotFit(SkewCharError):
    pass


class InnerNotContained(SkewCharError):
    pass


class FactorOutsideRectangle(SkewCharError):
    pass


class OverlappingBlocks(SkewCharError):
    pass


class EmptyShape(SkewCharError):
    pass


class EmptyDecomposition(SkewCharError):
    pass


class ConstraintViolated(SkewCharError):
    pass


class InstanceTooLarge(SkewCharError):
    pass
