"""Exception types raised by graph construction, checks and solvers."""


class DominationError(Exception):
    pass


class GraphError(DominationError, ValueError):
    """Invalid graph, family parameters or vertex reference."""


class EdgeListError(GraphError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class IsolatedVertexError(GraphError):
    def __init__(self, vertices: list[int]) -> None:
        shown = ", ".join(map(str, vertices[:10]))
        more = "" if len(vertices) <= 10 else f" (+{len(vertices) - 10} more)"
        super().__init__(
            f"graph has isolated vertices {shown}{more}; "
            "domination parameters are defined for isolate-free graphs only"
        )
        self.vertices = vertices


class OracleCapError(DominationError):
    pass
