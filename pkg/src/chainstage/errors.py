"""Shared exception types. Every error carries a machine-readable code that
survives the trip through the HTTP layer and the CLI unchanged."""

from __future__ import annotations


class ChainstageError(Exception):
    """Base class for all domain errors."""

    code = "INTERNAL"

    def __init__(self, message: str, *, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code

    @property
    def message(self) -> str:
        return str(self)


class ParseError(ChainstageError):
    """A document could not be parsed at all (malformed JSON)."""

    code = "PARSE_ERROR"

    def __init__(self, message: str, *, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(ChainstageError):
    """A document parsed but does not fit the closed schema."""

    code = "SCHEMA_ERROR"

    def __init__(self, message: str, *, field: str):
        super().__init__(message)
        self.field = field


class PromptInputError(ChainstageError):
    """A prompt renderer was handed inputs that violate its preconditions.

    The code names the violated precondition (EMPTY_CANDIDATES, EMPTY_MESSAGE,
    EMPTY_EXAMPLES, EMPTY_CONTEXT, MISSING_CONTEXT).
    """


class InvalidScenarioError(ChainstageError):
    code = "INVALID_SCENARIO"


class InvalidDesignError(ChainstageError):
    code = "INVALID_DESIGN"


class NotFoundError(ChainstageError):
    """A referenced design or session does not exist; code says which."""


class VersionConflictError(ChainstageError):
    code = "VERSION_CONFLICT"


class ProviderError(ChainstageError):
    """Base class for completion-backend failures."""

    code = "PROVIDER_UNAVAILABLE"


class ProviderUnavailableError(ProviderError):
    code = "PROVIDER_UNAVAILABLE"


class AuthError(ProviderError):
    code = "AUTH_ERROR"


class RateLimitedError(ProviderError):
    code = "RATE_LIMITED"

    def __init__(self, message: str, *, retry_after: float | None = None):
        super().__init__(message)
        self.retry_after = retry_after


class PromptTooLargeError(ProviderError):
    code = "PROMPT_TOO_LARGE"
