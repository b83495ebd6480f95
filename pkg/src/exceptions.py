#!/usr/bin/env python3
"""
Exceptions

Error hierarchy shared by the library and the command-line front end.
"""

from typing import Optional


class HopfAlgebroidError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 1


class InputError(HopfAlgebroidError):
    """Malformed instance, operand or configuration data."""

    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None, path: Optional[str] = None):
        self.line = line
        self.column = column
        self.path = path
        location = []
        if path:
            location.append(path)
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)


class StructureError(InputError):
    """Input data violates the axioms of the structure it declares."""

    def __init__(self, message: str, witness: Optional[str] = None):
        self.witness = witness
        if witness:
            message = f"{message} [witness: {witness}]"
        super().__init__(message)


class PreconditionError(HopfAlgebroidError):
    """An operation was called outside the configuration it supports."""

    exit_code = 2


class ResourceGuardError(HopfAlgebroidError):
    """A per-degree basis exceeds the configured size bound."""

    exit_code = 3
