"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GraphKitError(Exception):
    """Base class for all errors raised by graphkit."""


class UsageError(GraphKitError):
    """A caller broke a precondition: stepping an invalid iterator, a stale handle, and so on."""


class CapabilityError(UsageError):
    """The object does not support the requested operation (mutation of a read-only graph, set on a read-only accessor)."""


class InputError(GraphKitError, ValueError):
    """Malformed or unsuitable input data."""


class CyclicInputError(InputError):
    """A topological order was requested for a graph containing a cycle."""


class InvariantError(GraphKitError, AssertionError):
    """An internal consistency check failed."""
