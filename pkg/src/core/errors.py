class ChrdcError(Exception):
    """Base class of every error raised by the analyzer."""


class ParseError(ChrdcError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class ConfigError(ChrdcError):
    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ReplayError(ChrdcError):
    def __init__(self, message: str, step_index: int):
        self.step_index = step_index
        super().__init__(f"step {step_index}: {message}")


class ContractError(ChrdcError):
    """A caller broke a documented precondition."""
