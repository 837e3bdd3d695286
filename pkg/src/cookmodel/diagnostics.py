from __future__ import annotations

from dataclasses import dataclass

ERROR = "error"
WARNING = "warning"

# parse-time
UNTERMINATED_STRING = "E001"
MALFORMED_NUMBER = "E002"
UNKNOWN_SECTION = "E003"
DUPLICATE_KEY = "E004"
SYNTAX = "E005"
DUPLICATE_SECTION = "E006"
SECTION_KIND = "E007"
# build-time
EXPECTED_NUMBER = "E101"
EXPECTED_STRING = "E102"
MISSING_KEY = "E103"
INVALID_VALUE = "E104"
PARTITION = "E105"
UNKNOWN_FUEL = "E106"
TARIFF_BLOCKS = "E107"
MISSING_SECTION = "E108"
UNKNOWN_KEY = "W001"


@dataclass(frozen=True, order=True)
class Position:
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    code: str
    message: str
    position: Position
    hint: str | None = None

    @property
    def is_error(self) -> bool:
        return self.severity == ERROR

    def format(self, source: str = "<input>") -> str:
        text = f"{source}:{self.position}: {self.severity}[{self.code}]: {self.message}"
        if self.hint:
            text += f" (hint: {self.hint})"
        return text


def error(code: str, message: str, position: Position, hint: str | None = None) -> Diagnostic:
    return Diagnostic(ERROR, code, message, position, hint)


def warning(code: str, message: str, position: Position, hint: str | None = None) -> Diagnostic:
    return Diagnostic(WARNING, code, message, position, hint)


class DiagnosticError(Exception):
    """Raised when input has at least one error-severity diagnostic.

    ``diagnostics`` holds every diagnostic collected, warnings included,
    sorted by position.
    """

    def __init__(self, diagnostics: list[Diagnostic]) -> None:
        self.diagnostics = sorted(diagnostics, key=lambda d: d.position)
        errors = [d for d in self.diagnostics if d.is_error]
        super().__init__(errors[0].format() if errors else "invalid input")

    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.is_error]
