"""Error taxonomy shared across the package.

Exit-code mapping used by the CLI:
  ParseError              -> 1 (malformed input)
  PreconditionError       -> 2 (mathematically invalid request, e.g. constant f)
  InternalInvariantError  -> 3 (a bug: an internal consistency check failed)

WitnessUnavailable is *not* a failure of the decision procedure: the verdict
stands, but no exact witness exists over Q(i) (e.g. the required preimage
root is irrational).
"""


class MatrangeError(Exception):
    pass


class ParseError(MatrangeError):
    pass


class PreconditionError(MatrangeError):
    pass


class InternalInvariantError(MatrangeError):
    pass


class WitnessUnavailable(MatrangeError):
    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail or {}
