"""Exception hierarchy shared by all topofilt modules."""


class TopofiltError(Exception):
    """Base class for every error raised by this package."""


class NotATopology(TopofiltError):
    pass


class MaskOutOfRange(TopofiltError):
    pass


class MixedGroundSizes(TopofiltError):
    pass


class NotAPreorder(TopofiltError):
    pass


class NotSubtopology(TopofiltError):
    pass


class AlphaOutOfRange(TopofiltError):
    pass


class GroundSizeTooLarge(TopofiltError):
    pass


class EmptyList(TopofiltError):
    pass


class CacheCorrupt(TopofiltError):
    pass


class IoFailure(TopofiltError):
    pass


class UnknownProperty(TopofiltError):
    pass


class UnknownQuery(TopofiltError):
    pass
