"""Exception hierarchy. Every error the CLI reports by name lives here."""


class NilcoverError(Exception):
    """Base class for all validation and hypothesis errors."""


class InvalidPartition(NilcoverError):
    pass


class InvalidOrbit(NilcoverError):
    pass


class InvalidCoverDegree(NilcoverError):
    pass


class InvalidCover(NilcoverError):
    pass


class InvalidPivot(NilcoverError):
    pass


class InvalidStrategy(NilcoverError):
    """An explicit step sequence that does not produce a terminalization."""


class UnsupportedHypotheses(NilcoverError):
    """The input lies outside the hypothesis sets the rules are stated for."""


class StrategyStuck(NilcoverError):
    """No admissible induction step exists while the stage target is unmet.

    ``steps`` holds the partial chain built before getting stuck.
    """

    def __init__(self, message, steps=()):
        super().__init__(message)
        self.steps = tuple(steps)
