"""Exception types raised across the pipeline.

Everything derives from PipelineError so callers (notably the CLI) can map
any domain failure to a single exit path.
"""


class PipelineError(Exception):
    """Base class for all domain errors in this package."""


# --- scan log ---

class MalformedLine(PipelineError):
    def __init__(self, line_no: int, detail: str = ""):
        self.line_no = line_no
        msg = f"malformed line {line_no}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class EmptyField(PipelineError):
    def __init__(self, line_no: int):
        self.line_no = line_no
        super().__init__(f"empty field on line {line_no}")


class EmptySalt(PipelineError):
    pass


# --- sessionizer ---

class InvalidConfig(PipelineError):
    pass


# --- graph ---

class LocationMismatch(PipelineError):
    pass


class DegenerateGraph(PipelineError):
    pass


# --- metrics ---

class DisconnectedInput(PipelineError):
    pass


class UnknownKind(PipelineError):
    pass


class TooSmall(PipelineError):
    pass


# --- distributions ---

class TooFewPoints(PipelineError):
    pass


class InvalidDistribution(PipelineError):
    pass


# --- genmodel ---

class InvalidSpec(PipelineError):
    pass


# --- simulator ---

class InvalidProfile(PipelineError):
    pass


# --- query ---

class UnknownDevice(PipelineError):
    pass


class InvalidPair(PipelineError):
    pass
