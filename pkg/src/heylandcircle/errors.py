"""Exception types raised by the circle-diagram library.

Every failure mode carries enough context to name the offending input
key or to report the feasible bound that was exceeded.
"""


class DiagramError(Exception):
    """Base class for all library-specific errors."""


class MissingKey(DiagramError):
    """A mandatory key is absent from an input document."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"missing mandatory key: {key}")


class MalformedValue(DiagramError):
    """A key is present but its value cannot be interpreted."""

    def __init__(self, key: str, detail: str):
        self.key = key
        self.detail = detail
        super().__init__(f"malformed value for key {key}: {detail}")


class InvariantViolation(DiagramError):
    """Parsed values violate a documented domain invariant."""

    def __init__(self, description: str):
        self.description = description
        super().__init__(f"invariant violation: {description}")


class DegenerateInput(DiagramError):
    """Geometric inputs coincide or are otherwise unusable."""


class DegenerateConstruction(DiagramError):
    """The diagram cannot be constructed from these anchors."""


class ParallelLines(DiagramError):
    """Two lines requested to intersect are parallel."""


class VerticalLine(DiagramError):
    """A vertical intercept was requested on a vertical line."""


class OffLocus(DiagramError):
    """A point handed to an analysis routine does not lie on the circle."""


class ZeroAirgap(DiagramError):
    """Air-gap power vanishes at this point, so slip is undefined."""


class NoIntersection(DiagramError):
    """A query line misses the circle."""


class InfeasibleOutput(DiagramError):
    """Requested output power is outside the feasible range."""

    def __init__(self, requested_w: float, max_output_w: float):
        self.requested_w = requested_w
        self.max_output_w = max_output_w
        super().__init__(
            f"requested output {requested_w} W is infeasible; "
            f"feasible maximum is {max_output_w} W"
        )


class InvalidSlip(DiagramError):
    """Slip value outside the domain of the requested operation."""

    def __init__(self, slip: float, detail: str = "slip is invalid here"):
        self.slip = slip
        super().__init__(f"{detail}: s = {slip}")


class UndefinedRegime(DiagramError):
    """Exactly zero slip sits on the motoring/generating boundary."""


class NonPhysicalFit(DiagramError):
    """Equivalent-circuit fit produced a non-positive resistance or reactance."""
