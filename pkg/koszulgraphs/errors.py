class KoszulGraphsError(ValueError):
    """Base class for every error raised by the library."""


class InvalidVertex(KoszulGraphsError):
    pass


class SelfLoop(KoszulGraphsError):
    pass


class EmptySubset(KoszulGraphsError):
    pass


class TooLarge(KoszulGraphsError):
    pass


class ParseError(KoszulGraphsError):
    pass


class NotAntisymmetric(KoszulGraphsError):
    pass


class InvalidElement(KoszulGraphsError):
    pass


class EmptyGenerators(KoszulGraphsError):
    pass


class InvalidGenerator(KoszulGraphsError):
    pass


class InvalidDegree(KoszulGraphsError):
    pass


class PatternPrecondition(KoszulGraphsError):
    pass


def check_bound(value: int, bound: int, what: str) -> None:
    """Raise TooLarge when an exhaustive search would exceed its bound."""
    if value > bound:
        raise TooLarge(f"{what} is {value}, above the supported bound {bound}.")
