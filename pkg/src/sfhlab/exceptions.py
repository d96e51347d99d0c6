# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#


class GridFormatError(ValueError):
    pass


class NotAKnotError(ValueError):
    pass


class SlopeOutOfRangeError(ValueError):
    pass


class InsufficientDepthError(ValueError):
    pass


class NonHomogeneousClassError(ValueError):
    pass


class KnotMismatchError(ValueError):
    pass


class InconsistentPairError(ValueError):
    pass


class InvariantError(RuntimeError):
    """An internal consistency check failed; this is a bug, not bad input."""


class VerificationFailure(Exception):
    def __init__(self, check, message=""):
        super().__init__(f"{check}: {message}" if message else check)
        self.check = check
