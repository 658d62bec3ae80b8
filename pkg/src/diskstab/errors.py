"""Exception types raised across the package."""


class StabError(Exception):
    """Base class for all package errors."""


class IdenticalCircles(StabError):
    pass


class NoLens(StabError):
    pass


class NotHelly(StabError):
    pass


class HellyTriple(StabError):
    pass


class DegenerateIntersection(StabError):
    pass


class InvalidInstance(StabError):
    pass


class Degenerate(StabError):
    pass


class PreconditionViolated(StabError):
    pass


class InternalVerificationFailed(StabError):
    def __init__(self, message, disk_id=None):
        super().__init__(message)
        self.disk_id = disk_id


class BadEpsilons(StabError):
    pass


class TooLarge(StabError):
    pass
