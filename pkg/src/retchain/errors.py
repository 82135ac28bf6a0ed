"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes, so new failure modes should
reuse an existing class where one fits.
"""


class RetchainError(Exception):
    """Base class for all package errors."""


class ShapeError(RetchainError):
    """Array dimensions do not satisfy an operation's contract."""


class ContractError(RetchainError):
    """A precondition unrelated to shapes was violated (role, tape, id range)."""


class DegenerateInputError(RetchainError):
    """Numerically degenerate input, e.g. a zero-norm vector fed to cosine."""


class TrainingError(RetchainError):
    """Non-finite loss or gradient during an optimization run."""


class ValidationError(RetchainError):
    """Domain data violates its invariants (biomarkers, pixels, schema)."""


class ParseError(RetchainError):
    """Report text rejected by the DSL grammar."""

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"line {line}, column {column}: {message}"
        if expected:
            detail += f" (expected one of: {', '.join(expected)})"
        super().__init__(detail)


class TokenizationError(RetchainError):
    """Text contains symbols outside the report vocabulary."""


class TransportError(RetchainError):
    """External HTTP endpoint unreachable, timed out, or replied malformed."""


class JudgeError(RetchainError):
    """External judge reply failed schema validation."""


class EvaluationError(RetchainError):
    """Evaluation invoked on an empty or inconsistent input set."""


class ConfigError(RetchainError):
    """Run configuration unreadable or self-inconsistent."""


class MissingArtifactError(RetchainError):
    """A required upstream artifact does not exist."""

    def __init__(self, path: str, producing_command: str):
        self.path = path
        self.producing_command = producing_command
        super().__init__(f"missing artifact {path!r}: produce it with `retchain {producing_command}`")
