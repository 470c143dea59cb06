"""Exception hierarchy shared by all modules."""


class ToricStabError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(ToricStabError, ValueError):
    pass


class InvalidRay(InvalidInput):
    pass


class ShapeError(InvalidInput):
    pass


class UnsupportedCone(ToricStabError):
    pass


class Undefined(ToricStabError):
    pass


class TooLarge(ToricStabError):
    pass


class NotSplittable(ToricStabError):
    pass


class NotSpanning(ToricStabError):
    pass


class RangeError(ToricStabError, ValueError):
    pass
