"""Exception hierarchy shared by every module of the package."""


class FullereneError(Exception):
    """Base class for all errors raised by fullerene5."""


class NonCubic(FullereneError):
    pass


class TraversalDiverged(FullereneError):
    """A dart was reached twice while tracing a single face."""


class Acyclic(FullereneError):
    pass


class UnknownEdge(FullereneError):
    pass


class SearchExhausted(FullereneError):
    pass


class BadCycle(FullereneError):
    pass


class DichotomyViolated(FullereneError):
    """A ring of five faces fits none of the three admissible shapes."""


class InconsistentStructure(FullereneError):
    pass


class NoRings(FullereneError):
    pass


class NotSingleCycle(FullereneError):
    pass


class NotSpanning(FullereneError):
    pass


class PatternMismatch(FullereneError):
    pass


class BudgetExceeded(FullereneError):
    pass


class OddCycle(FullereneError):
    pass


class ParseError(FullereneError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class RotationInconsistent(FullereneError):
    pass


class BadHeader(FullereneError):
    pass


class TruncatedRecord(FullereneError):
    pass
