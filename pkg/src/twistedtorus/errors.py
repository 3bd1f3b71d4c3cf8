"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Input outside the parameter domain (bad p, q, s, generator index, ...)."""


class CrossingCapExceeded(RuntimeError):
    """State sum refused: the diagram has more crossings than the configured cap."""

    def __init__(self, crossings: int, cap: int):
        super().__init__(
            f"diagram has {crossings} crossings, cap is {cap} "
            f"(state sum would visit 2^{crossings} states)"
        )
        self.crossings = crossings
        self.cap = cap


class InexactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class TheoremViolation(RuntimeError):
    """Neither endpoint walk reached label 1 first.

    Carries the full walk transcripts so the offending pair can be inspected.
    """

    def __init__(self, p: int, q: int, transcripts: dict):
        self.p = p
        self.q = q
        self.transcripts = transcripts
        super().__init__(f"no tunnel certificate for (p, q) = ({p}, {q}): {transcripts}")
