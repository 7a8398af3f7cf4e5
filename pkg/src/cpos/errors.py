"""Structured geometric errors shared by every module.

Each error carries a machine-readable ``kind`` (and optionally a cyclic
index) so the CLI and service can emit ``{"error": {"kind": ..., "index": k}}``
diagnostics without string parsing.
"""

from __future__ import annotations


class CposError(Exception):
    """A geometric refusal: the input is outside an operation's domain."""

    def __init__(self, kind: str, message: str = "", index: int | None = None):
        self.kind = kind
        self.index = index
        self.message = message or kind
        super().__init__(self.message)

    def to_json(self) -> dict:
        err: dict = {"kind": self.kind}
        if self.index is not None:
            err["index"] = self.index
        if self.message and self.message != self.kind:
            err["message"] = self.message
        return {"error": err}


class ValidationError(CposError):
    """Polygon rejected; ``kind`` names the first violated invariant."""
