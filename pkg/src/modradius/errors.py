"""Exception types raised by the numerical kernels."""


class ModRadiusError(ValueError):
    pass


class NotSquare(ModRadiusError):
    pass


class NotHermitian(ModRadiusError):
    pass


class NegativeEntry(ModRadiusError):
    pass


class ZeroDimension(ModRadiusError):
    pass


class ShapeMismatch(ModRadiusError):
    pass


class NotUnitModulus(ModRadiusError):
    pass
