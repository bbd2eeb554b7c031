class WorldViewError(Exception):
    """Base class for all errors raised by the solver."""


class ElpSyntaxError(WorldViewError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line else ""
        super().__init__(f"{where}{message}")


class UnsafeRuleError(WorldViewError):
    def __init__(self, rule, variable: str):
        self.rule = rule
        self.variable = variable
        super().__init__(f"unsafe variable {variable} in rule: {rule}")


class NameCollisionError(WorldViewError):
    pass


class ResourceLimitError(WorldViewError):
    pass


class OracleMismatchError(WorldViewError):
    pass
