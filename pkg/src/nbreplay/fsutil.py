"""Path and file helpers shared by the evaluator, stores, and executor."""

from __future__ import annotations

import os
import posixpath
from pathlib import Path

from .errors import TaskSpecError


def check_rel_path(rel: str) -> str:
    """Validate a workspace-relative POSIX path; returns the normalized form."""
    if not isinstance(rel, str) or not rel:
        raise TaskSpecError(f"invalid workspace path: {rel!r}")
    if rel.startswith(("/", "\\")) or (len(rel) > 1 and rel[1] == ":"):
        raise TaskSpecError(f"path escapes the workspace (absolute): {rel!r}")
    norm = posixpath.normpath(rel)
    if norm.startswith("..") or norm == ".":
        raise TaskSpecError(f"path escapes the workspace: {rel!r}")
    return norm


def workspace_path(root: Path, rel: str) -> Path:
    return root / check_rel_path(rel)


def atomic_write_bytes(path: Path, data: bytes) -> None:
    """Write via temp-then-rename so concurrent writers of equal content are safe."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + f".tmp{os.getpid()}.{id(data) & 0xFFFF:x}")
    tmp.write_bytes(data)
    os.replace(tmp, path)


def copy_file(src: Path, dst: Path) -> None:
    dst.parent.mkdir(parents=True, exist_ok=True)
    dst.write_bytes(src.read_bytes())
