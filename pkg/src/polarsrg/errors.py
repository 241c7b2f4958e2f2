"""Exception types raised across the package."""


class PolarSRGError(Exception):
    """Base class for all errors raised by polarsrg."""


class UnsupportedFieldOrder(PolarSRGError, ValueError):
    pass


class ZeroVector(PolarSRGError, ValueError):
    pass


class AmbientMismatch(PolarSRGError, ValueError):
    pass


class OutOfSupportedRange(PolarSRGError, ValueError):
    pass


class EqualPoints(PolarSRGError, ValueError):
    pass


class EmptySubspace(PolarSRGError, ValueError):
    pass


class PointNotOnQuadric(PolarSRGError, ValueError):
    pass


class NotPartialOvoid(PolarSRGError, ValueError):
    pass


class NotRegular(PolarSRGError):
    """Raised by verify_srg; ``pair`` holds two vertices of different degree."""

    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class NotStronglyRegular(PolarSRGError):
    """Raised by verify_srg; ``pair`` witnesses a second common-neighbour count."""

    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class InfeasibleParameters(PolarSRGError, ValueError):
    pass


class NotAClique(PolarSRGError, ValueError):
    pass


class NotMaximal(PolarSRGError, ValueError):
    pass


class UnclassifiedCliqueFound(PolarSRGError):
    def __init__(self, record):
        super().__init__(f"clique {record.vertex_set} matches no known class")
        self.record = record
