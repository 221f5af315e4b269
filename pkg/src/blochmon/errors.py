"""Exception types shared across the package."""


class BlochmonError(ValueError):
    """Base class for all validation failures raised by this package."""


class DimensionError(BlochmonError):
    """Dimension out of range or shapes inconsistent with the declared dimension."""


class NotHermitianError(BlochmonError):
    """Matrix expected to be Hermitian deviates beyond tolerance."""


class NotAStateError(BlochmonError):
    """Matrix or Bloch vector does not describe a physical density operator."""


class ObservableError(BlochmonError):
    """Spectral data does not form a valid nondegenerate observable."""
