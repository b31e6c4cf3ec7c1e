"""Exception hierarchy.

Every error raised on purpose by the library derives from ``GenusOneError``.
The ``kind`` attribute groups them for the command line front end:
"degenerate" inputs, "bad_input" and "internal" failures.
"""


class GenusOneError(Exception):
    kind = "bad_input"


class InconsistentSamples(GenusOneError):
    kind = "internal"


class PointNotOnCurve(GenusOneError):
    pass


class IndexOutOfRange(GenusOneError):
    pass


class ShapeMismatch(GenusOneError):
    pass


class Degenerate(GenusOneError):
    kind = "degenerate"


class CalibrationMissing(GenusOneError):
    kind = "internal"


class TooLarge(GenusOneError):
    pass


class InconsistentAnchors(GenusOneError):
    kind = "internal"


class AllSlicesSingular(GenusOneError):
    kind = "degenerate"


class RootTrackingFailed(GenusOneError):
    kind = "internal"


class SingularTarget(GenusOneError):
    kind = "degenerate"


class NotOnCurve(GenusOneError):
    pass


class KernelRankUnexpected(GenusOneError):
    kind = "degenerate"


class BadMarkedPoints(GenusOneError):
    pass


class InterpolationFailed(GenusOneError):
    kind = "internal"


class DegenerateTransform(GenusOneError):
    kind = "degenerate"


class AlgebraMismatch(GenusOneError):
    pass
