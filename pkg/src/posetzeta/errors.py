"""Exception hierarchy shared by all posetzeta modules.

ResourceCapExceeded subclasses map to CLI exit code 4, InvalidConfig to 2,
everything else under PosetZetaError to 3.
"""


class PosetZetaError(Exception):
    pass


class InvalidConfig(PosetZetaError):
    pass


class ResourceCapExceeded(PosetZetaError):
    pass


class DuplicateLabel(PosetZetaError):
    pass


class UnknownLabel(PosetZetaError):
    pass


class CycleDetected(PosetZetaError):
    pass


class EmptyPoset(PosetZetaError):
    pass


class SubdivisionTooLarge(ResourceCapExceeded):
    pass


class PoleAtOrigin(PosetZetaError):
    pass


class DivergentAtInfinity(PosetZetaError):
    pass


class IndexOutOfRange(PosetZetaError):
    pass


class BruteForceTooLarge(ResourceCapExceeded):
    pass


class DimensionZero(PosetZetaError):
    pass


class DegreeZero(PosetZetaError):
    pass


class NoConvergence(PosetZetaError):
    pass


class ZeroEulerCharacteristic(PosetZetaError):
    pass


class RangeTooLarge(ResourceCapExceeded):
    pass


class ChiZero(PosetZetaError):
    pass
