"""Exception hierarchy shared by every module."""


class RevdomError(Exception):
    """Base class; the CLI maps it to exit status 2."""

    def __str__(self):
        # KeyError subclasses would otherwise repr() their message
        return str(self.args[0]) if self.args else self.__class__.__name__


class MalformedLine(RevdomError, ValueError):
    pass


class SelfLoop(RevdomError, ValueError):
    pass


class EmptyGraph(RevdomError, ValueError):
    pass


class UnknownName(RevdomError, KeyError):
    pass


class VertexOutOfRange(RevdomError, IndexError):
    pass


class IndexOutOfRange(RevdomError, IndexError):
    pass


class WidthMismatch(RevdomError, ValueError):
    pass


class WidthTooLarge(RevdomError, ValueError):
    """Exhaustive work refused because 2**n states would not fit the cap.

    The CLI maps this one to exit status 3.
    """


class UnknownGenerator(RevdomError, KeyError):
    pass


class NotReversible(RevdomError, ValueError):
    pass


class Disconnected(RevdomError, ValueError):
    pass


class UnknownPredicate(RevdomError, KeyError):
    pass


class UnknownClaim(RevdomError, KeyError):
    pass


class UnknownCondition(RevdomError, KeyError):
    pass
