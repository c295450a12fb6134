"""Exception hierarchy shared by all modules."""


class GraphError(ValueError):
    """Invalid input: bad vertex, malformed partition, out-of-range parameter."""


class DisconnectedError(GraphError):
    """An operation that needs a connected graph was given a disconnected one."""


class ParseError(GraphError):
    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


class ScaleError(GraphError):
    """Refusal: the graph exceeds the documented size bound of a search."""


class ConstructionError(RuntimeError):
    """An internal verification step of a construction failed (a bug signal)."""


class ConsistencyError(AssertionError):
    """Computed verdicts contradict a proven implication."""
