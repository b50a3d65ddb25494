"""
Exception types for document parsing and CLI dispatch.

All of them map to exit status 2.
"""


class DocumentSyntaxError(ValueError):
    """Raised when a document is not well-formed JSON."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"Syntax error at line {line}, column {column}: {message}")


class DocumentSemanticError(ValueError):
    """Raised when a well-formed document is inconsistent; field_path names the offending field."""

    def __init__(self, field_path: str, message: str):
        self.field_path = field_path
        super().__init__(f"{field_path}: {message}")


class InapplicableOperationError(ValueError):
    """Raised when a construction does not apply to the document kind."""


class UnknownFamilyError(ValueError):
    """Raised for a generation family name that does not exist."""
