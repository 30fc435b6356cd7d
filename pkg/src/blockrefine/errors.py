"""Exception hierarchy.

Every error carries a short ``kind`` used by the CLI for its
``error:<kind>:`` prefix and an ``exit_code``.
"""

from __future__ import annotations


class BlockRefineError(Exception):
    kind = "internal"
    exit_code = 1


class InputError(BlockRefineError):
    kind = "input"
    exit_code = 2


class ParseError(InputError):
    kind = "parse"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(ParseError):
    kind = "self-loop"


class BoundExceeded(BlockRefineError):
    kind = "bound-exceeded"
    exit_code = 3


class PreconditionViolation(BlockRefineError):
    kind = "precondition"


class IncompleteSystem(BlockRefineError):
    kind = "incomplete-system"


class BlockCollision(PreconditionViolation):
    kind = "block-collision"


class NoGluingLeaf(BlockRefineError):
    kind = "no-gluing-leaf"


class InvariantViolation(BlockRefineError):
    """A post-condition that the construction guarantees did not hold."""

    kind = "invariant"
