"""Runtime value representations.

Scalars are plain Python int/float/bool/str (immutable, never aliased).
Lists and maps live on the interpreter heap and are referenced through
ListRef/MapRef, which carry object identity. Handle/TaskRef/FutureVal are
non-serializable resources.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class StmtRef:
    """Pointer to the statement that produced a value: (cell, statement index, source)."""

    cell_id: str
    cell_seq: int
    stmt_index: int
    source: str

    def to_json_obj(self) -> dict:
        return {
            "cell_id": self.cell_id,
            "cell_seq": self.cell_seq,
            "stmt_index": self.stmt_index,
            "source": self.source,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "StmtRef":
        return cls(obj["cell_id"], obj["cell_seq"], obj["stmt_index"], obj["source"])


@dataclass(frozen=True)
class ListRef:
    heap_id: int


@dataclass(frozen=True)
class MapRef:
    heap_id: int


@dataclass(frozen=True)
class Handle:
    uri: str
    origin: StmtRef | None = None


@dataclass(frozen=True)
class FnVal:
    name: str
    source: str


@dataclass(frozen=True)
class TaskRef:
    task_id: str


@dataclass(frozen=True)
class FutureVal:
    task_id: str


Value = int | float | bool | str | ListRef | MapRef | Handle | FnVal | TaskRef | FutureVal

HEAP_REF_TYPES = (ListRef, MapRef)


def is_heap_ref(v: object) -> bool:
    return isinstance(v, HEAP_REF_TYPES)


def kind_of(v: Value) -> str:
    if isinstance(v, bool):
        return "bool"
    if isinstance(v, int):
        return "int"
    if isinstance(v, float):
        return "float"
    if isinstance(v, str):
        return "str"
    if isinstance(v, ListRef):
        return "list"
    if isinstance(v, MapRef):
        return "map"
    if isinstance(v, Handle):
        return "handle"
    if isinstance(v, FnVal):
        return "fn"
    if isinstance(v, TaskRef):
        return "taskref"
    if isinstance(v, FutureVal):
        return "future"
    raise TypeError(f"not a value: {v!r}")
