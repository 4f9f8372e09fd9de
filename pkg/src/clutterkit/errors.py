"""Exception hierarchy shared by every clutterkit module."""


class ClutterError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class DuplicateLabel(ClutterError):
    pass


class UnknownLabel(ClutterError):
    pass


class EmptyEdge(ClutterError):
    pass


class AntichainViolation(ClutterError):
    def __init__(self, i, j):
        super().__init__(f"edge {i} and edge {j} violate the antichain property")
        self.i = i
        self.j = j


class NoEdges(ClutterError):
    pass


class NotAPermutation(ClutterError):
    pass


class IndexOutOfRange(ClutterError, IndexError):
    pass


class EmptyTarget(ClutterError):
    pass


class EdgeTooLarge(ClutterError):
    pass


class OutputCapExceeded(ClutterError):
    pass


class NoGraphEdges(ClutterError):
    pass


class SizeTooSmall(ClutterError, ValueError):
    """Generator parameter below its minimum (n, k, or part sizes)."""


NTooSmall = SizeTooSmall
KTooSmall = SizeTooSmall


class RetriesExhausted(ClutterError):
    pass


class PreconditionFailed(ClutterError):
    pass


class ParseError(ClutterError):
    pass


class Falsification(Exception):
    """A checked mathematical claim did not hold (CLI exit code 3)."""


class TheoremViolated(Falsification):
    def __init__(self, clutter, report):
        super().__init__(
            f"hardness {report.hardness} is below the bound for n={clutter.n}"
        )
        self.clutter = clutter
        self.report = report


class TraceAssertionFailed(Falsification):
    def __init__(self, trace, failed):
        super().__init__("proof trace step(s) failed: " + ", ".join(failed))
        self.trace = trace
        self.failed = failed
