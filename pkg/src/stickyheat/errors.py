"""Exception types shared across the solver stack."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class ConfigError(ValueError):
    """Invalid run configuration or preset."""


class ToleranceNotMetError(RuntimeError):
    """A truncation or quadrature loop hit its cap before reaching tolerance.

    `achieved` carries the best bound reached when the loop gave up.
    """

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class InstabilityError(RuntimeError):
    """A solver produced values outside the admissible window.

    `node` identifies the first offending grid node / time step.
    """

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node
