"""Check registry, runner and the ``verify`` command."""

from .registry import REGISTRY, CheckSpec, list_checks
from .runner import Report, RunConfig, UsageError, run, to_structured, to_text

__all__ = ["REGISTRY", "CheckSpec", "Report", "RunConfig", "UsageError", "list_checks", "run",
           "to_structured", "to_text"]
