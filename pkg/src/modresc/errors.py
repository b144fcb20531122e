class InputError(ValueError):
    """Malformed or dimensionally inconsistent user input."""

    def __init__(self, message: str, source: str | None = None,
                 line: int | None = None, column: int | None = None):
        self.source = source
        self.line = line
        self.column = column
        where = ""
        if source is not None:
            where = source
            if line is not None:
                where += f":{line}"
                if column is not None:
                    where += f":{column}"
            where += ": "
        super().__init__(where + message)


class ContractError(RuntimeError):
    """An operation was handed an argument that violates its precondition."""


class BudgetExhausted(RuntimeError):
    """No cover exists within the requested ``max_k``."""

    def __init__(self, max_k: int, lower_bound: int, stats: dict | None = None):
        self.max_k = max_k
        self.lower_bound = lower_bound
        self.stats = stats or {}
        super().__init__(f"no biclique cover of size <= {max_k} (lower bound {lower_bound})")
