class ShapeMismatchError(ValueError):
    pass


class InfeasibleSeparationError(ValueError):
    pass


class DegenerateMeasurementError(ValueError):
    pass


class EstimatorError(ValueError):
    pass


class FormatError(ValueError):
    pass
