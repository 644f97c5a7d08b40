from typing import Any, Dict, Mapping, Optional


def format_params(params: Mapping[str, Any]) -> str:
    """Render a parameter point as `k=1, d=9`."""
    return ", ".join(f"{key}={value}" for key, value in params.items())


class PolyLBError(Exception):
    """Base class for all polylb errors; carries the offending parameter point."""

    def __init__(
        self, message: str, params: Optional[Mapping[str, Any]] = None
    ) -> None:
        self.params: Dict[str, Any] = dict(params or {})
        self.reason = message
        if self.params:
            message = f"{message} (at {format_params(self.params)})"
        super().__init__(message)


class DomainError(PolyLBError, ValueError):
    """A formula parameter lies outside the formula's domain."""


class PolytopeError(PolyLBError):
    """Invalid geometric input or an impossible construction request."""


class FamilySpecError(PolyLBError, ValueError):
    """A family description is malformed or violates its parameter ranges."""
