"""Notebook document: ordered cells of cell-language source with stable ids.

On disk a notebook is UTF-8 JSON:
    {"version": 1, "cells": [{"id": "c1", "code": "x = 1"}, ...]}
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import NotebookFormatError

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Cell:
    id: str
    code: str


@dataclass(frozen=True)
class Notebook:
    version: int
    cells: tuple[Cell, ...]

    def cell_ids(self) -> list[str]:
        return [c.id for c in self.cells]

    def to_json_obj(self) -> dict:
        return {"version": self.version, "cells": [{"id": c.id, "code": c.code} for c in self.cells]}


def normalize_code(code: str) -> str:
    """Right-trim every line, join with single newlines, drop trailing blank lines."""
    lines = [line.rstrip() for line in code.split("\n")]
    while lines and lines[-1] == "":
        lines.pop()
    return "\n".join(lines)


def cell_code_hash(code: str) -> str:
    """SHA-256 hex of the normalized source; the cell-change comparison key."""
    return hashlib.sha256(normalize_code(code).encode("utf-8")).hexdigest()


def parse_notebook(data: bytes) -> Notebook:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise NotebookFormatError(f"notebook is not valid UTF-8: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NotebookFormatError(f"notebook is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise NotebookFormatError("notebook: top-level value must be an object")
    version = obj.get("version")
    if not isinstance(version, int) or isinstance(version, bool):
        raise NotebookFormatError("notebook field 'version': must be an integer")
    if version != FORMAT_VERSION:
        raise NotebookFormatError(f"notebook field 'version': unsupported version {version}")
    cells_obj = obj.get("cells")
    if not isinstance(cells_obj, list):
        raise NotebookFormatError("notebook field 'cells': must be a list")
    cells: list[Cell] = []
    seen: set[str] = set()
    for i, entry in enumerate(cells_obj):
        if not isinstance(entry, dict):
            raise NotebookFormatError(f"notebook field 'cells[{i}]': must be an object")
        cid = entry.get("id")
        if not isinstance(cid, str) or not cid:
            raise NotebookFormatError(f"notebook field 'cells[{i}].id': must be a non-empty string")
        code = entry.get("code")
        if not isinstance(code, str):
            raise NotebookFormatError(f"notebook field 'cells[{i}].code': must be a string")
        if cid in seen:
            raise NotebookFormatError(f"notebook field 'cells[{i}].id': duplicate cell id {cid!r}")
        seen.add(cid)
        cells.append(Cell(cid, code))
    return Notebook(version, tuple(cells))


def load_notebook(path: str | Path) -> Notebook:
    return parse_notebook(Path(path).read_bytes())


def save_notebook(nb: Notebook, path: str | Path) -> None:
    Path(path).write_text(json.dumps(nb.to_json_obj(), indent=1), encoding="utf-8")
