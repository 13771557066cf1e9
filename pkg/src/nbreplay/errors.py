"""Exception hierarchy. Every error raised by the package derives from NbReplayError."""

from __future__ import annotations


class NbReplayError(Exception):
    pass


class NotebookFormatError(NbReplayError):
    """Malformed notebook document; message names the offending field."""


class CellSyntaxError(NbReplayError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, col {col})")
        self.line = line
        self.col = col


class CellRuntimeError(NbReplayError):
    """Raised while evaluating a cell: unbound names, type mismatches, division by zero."""

    def __init__(self, message: str, cell_id: str | None = None, stmt_index: int | None = None):
        super().__init__(message)
        self.cell_id = cell_id
        self.stmt_index = stmt_index


class SerializationError(NbReplayError):
    """Value cannot be canonically encoded (cyclic heap reference)."""


class CheckpointError(NbReplayError):
    pass


class StoreError(NbReplayError):
    pass


class CorruptionError(NbReplayError):
    """A bundle reference does not resolve or a blob fails re-hashing."""


class InputMissingError(NbReplayError):
    """A declared task input file is absent or unreadable."""

    def __init__(self, path: str):
        super().__init__(f"declared input does not exist: {path}")
        self.path = path


class TaskSpecError(NbReplayError):
    pass


class DagError(NbReplayError):
    pass


class TaskFailure(NbReplayError):
    def __init__(self, task_id: str, message: str, stderr: str = "", exit_status: int | None = None):
        super().__init__(f"task {task_id} failed: {message}")
        self.task_id = task_id
        self.stderr = stderr
        self.exit_status = exit_status


class RepeatError(NbReplayError):
    pass


class BundleLockedError(NbReplayError):
    pass
