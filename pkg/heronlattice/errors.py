"""Shared exception root for mathematical failures."""

from __future__ import annotations


class DomainError(Exception):
    """Raised when an input has no answer in the requested domain.

    Subclasses live next to the code that raises them; the CLI maps every
    ``DomainError`` to exit status 1.
    """
