"""Exception types raised across the package.

Every error carries a short machine-readable ``code`` so the CLI can map it to
an exit status and a JSON error object without string matching.
"""


class DMCSError(Exception):
    code = "error"


class EdgeListParseError(DMCSError, ValueError):
    code = "parse-error"

    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class SelfLoopError(DMCSError, ValueError):
    code = "self-loop"

    def __init__(self, node, lineno=None):
        self.node = node
        where = f" (line {lineno})" if lineno is not None else ""
        super().__init__(f"self-loop on node {node}{where}")


class UnknownNodeError(DMCSError, KeyError):
    code = "unknown-node"

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown node"


class QueriesDisconnectedError(DMCSError):
    code = "queries-disconnected"


class DisconnectedInputError(DMCSError, ValueError):
    code = "disconnected-input"


class EmptyGraphError(DMCSError, ValueError):
    code = "empty-graph"


class DanglingNodeError(DMCSError, ValueError):
    code = "dangling-node"


class ProtectedNodeError(DMCSError):
    code = "protected-node"


class NoKCoreCommunityError(DMCSError):
    code = "no-k-core-community"


class OracleSizeError(DMCSError):
    code = "oracle-size-refusal"

    def __init__(self, size, limit):
        self.size = size
        self.limit = limit
        super().__init__(f"component has {size} nodes; exact search is limited to {limit}")


class NotApplicableError(DMCSError):
    code = "not-applicable"
