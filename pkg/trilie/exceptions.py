class TrilieError(Exception):
    """Base error for every failure the command line reports with an exit code.

    Mirrors an HTTP error: a short ``detail`` for the user and a numeric
    code for scripts.
    """

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class AlgebraFormatError(TrilieError):
    """The algebra document could not be parsed."""

    exit_code = 2


class InvalidAlgebraError(TrilieError):
    """The structure constants violate the fundamental identity."""

    exit_code = 3


class InvalidTorusError(TrilieError):
    """The torus does not satisfy the standing hypotheses."""

    exit_code = 4
