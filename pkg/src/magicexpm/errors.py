"""Exception hierarchy shared by all modules."""


class MagicExpmError(ValueError):
    """Base class for every error raised by this package."""


class NonSpecialUnitaryInput(MagicExpmError):
    pass


class NotSymmetricTraceless(MagicExpmError):
    pass


class NotCrossClass(MagicExpmError):
    pass


class NotCheckerboardClass(MagicExpmError):
    pass


class NotHermitian(MagicExpmError):
    pass


class NotUnitary(MagicExpmError):
    pass


class BranchCut(MagicExpmError):
    pass


class UnsupportedOrder(MagicExpmError):
    pass


class OutOfDomain(MagicExpmError):
    """The composed SU(2) element has no usable closed-form logarithm.

    ``pair`` is set by the SU(4) composition to say which of the two SU(2)
    sub-problems failed (1 or 2); it is ``None`` for a bare SU(2) call.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair
