"""Exception types shared across the toolkit."""


class CapabilityError(Exception):
    """A size cap or enumeration guard was exceeded; the answer is unknown.

    Raised instead of returning a possibly wrong verdict. Callers that
    surface verdicts (CLI, reports) map this to an "unknown" outcome.
    """
