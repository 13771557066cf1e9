"""Canonical value encoding: tag byte + big-endian length-prefixed payloads.

Bit-exact across platforms so blob hashes are stable: map keys sorted
bytewise, lists in order, floats as IEEE-754 binary64 bits, strings UTF-8.

Three task-reference modes cover the encoder's uses:
  * "reject"      — checkpointing; a TaskRef (like any Handle/FutureVal) makes
                    the value non-serializable
  * "id"          — task specs held in the session registry
  * "fingerprint" — fingerprinting, where a TaskRef hashes as its parent
                    task's fingerprint
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Callable

from .state import KernelState
from .values import FnVal, FutureVal, Handle, ListRef, MapRef, StmtRef, TaskRef, Value
from ..errors import SerializationError

TAG_INT = b"I"
TAG_FLOAT = b"F"
TAG_BOOL = b"B"
TAG_STR = b"S"
TAG_LIST = b"L"
TAG_MAP = b"M"
TAG_FN = b"U"
TAG_TASKREF = b"T"


@dataclass(frozen=True)
class NonSerializable:
    """Marker result: the value holds a live resource and cannot be encoded."""

    reason: str
    origin: StmtRef | None = None


class _NotEncodable(Exception):
    def __init__(self, marker: NonSerializable):
        self.marker = marker


def _u32(n: int) -> bytes:
    return struct.pack(">I", n)


def encode_value(
    state: KernelState,
    value: Value,
    *,
    taskref_mode: str = "reject",
    taskref_resolver: Callable[[str], str] | None = None,
    string_transform: Callable[[str], str] | None = None,
) -> bytes:
    """Deep canonical encoding; raises SerializationError on heap cycles.

    In "reject" mode a Handle/TaskRef/FutureVal anywhere in the structure makes
    the whole value non-serializable (signalled via _NotEncodable to callers of
    serialize_value). taskref_resolver maps a task id to its wire form in the
    "fingerprint" mode.
    """
    on_path: set[int] = set()

    def xform(s: str) -> str:
        return string_transform(s) if string_transform is not None else s

    def go(v: Value) -> bytes:
        if isinstance(v, bool):
            return TAG_BOOL + (b"\x01" if v else b"\x00")
        if isinstance(v, int):
            if not -(2**63) <= v < 2**63:
                raise SerializationError(f"integer out of 64-bit range: {v}")
            return TAG_INT + struct.pack(">q", v)
        if isinstance(v, float):
            return TAG_FLOAT + struct.pack(">d", v)
        if isinstance(v, str):
            raw = xform(v).encode("utf-8")
            return TAG_STR + _u32(len(raw)) + raw
        if isinstance(v, ListRef):
            if v.heap_id in on_path:
                raise SerializationError("cyclic heap reference")
            on_path.add(v.heap_id)
            items = state.heap[v.heap_id]
            body = b"".join(go(item) for item in items)
            on_path.discard(v.heap_id)
            return TAG_LIST + _u32(len(items)) + body
        if isinstance(v, MapRef):
            if v.heap_id in on_path:
                raise SerializationError("cyclic heap reference")
            on_path.add(v.heap_id)
            pairs = state.heap[v.heap_id]
            encoded = sorted(
                (xform(k).encode("utf-8"), go(val)) for k, val in pairs.items()
            )
            body = b"".join(_u32(len(k)) + k + val for k, val in encoded)
            on_path.discard(v.heap_id)
            return TAG_MAP + _u32(len(encoded)) + body
        if isinstance(v, FnVal):
            name = v.name.encode("utf-8")
            src = v.source.encode("utf-8")
            return TAG_FN + _u32(len(name)) + name + _u32(len(src)) + src
        if isinstance(v, TaskRef):
            if taskref_mode == "id":
                raw = v.task_id.encode("utf-8")
            elif taskref_mode == "fingerprint":
                if taskref_resolver is None:
                    raise SerializationError("taskref_resolver required in fingerprint mode")
                raw = taskref_resolver(v.task_id).encode("utf-8")
            else:
                raise _NotEncodable(NonSerializable("task reference", None))
            return TAG_TASKREF + _u32(len(raw)) + raw
        if isinstance(v, Handle):
            raise _NotEncodable(NonSerializable(f"live resource handle {v.uri!r}", v.origin))
        if isinstance(v, FutureVal):
            raise _NotEncodable(NonSerializable("unresolved task future", None))
        raise SerializationError(f"cannot encode {v!r}")

    return go(value)


def serialize_value(state: KernelState, value: Value) -> bytes | NonSerializable:
    """Checkpoint-facing entry point: bytes, or a NonSerializable marker."""
    try:
        return encode_value(state, value, taskref_mode="reject")
    except _NotEncodable as exc:
        return exc.marker


def decode_value(state: KernelState, data: bytes) -> Value:
    """Decode canonical bytes into a value, allocating containers on state's heap."""
    value, offset = _decode(state, data, 0)
    if offset != len(data):
        raise SerializationError("trailing bytes after encoded value")
    return value


def _decode(state: KernelState, data: bytes, offset: int) -> tuple[Value, int]:
    if offset >= len(data):
        raise SerializationError("truncated value encoding")
    tag = data[offset : offset + 1]
    offset += 1
    if tag == TAG_BOOL:
        return data[offset] != 0, offset + 1
    if tag == TAG_INT:
        return struct.unpack_from(">q", data, offset)[0], offset + 8
    if tag == TAG_FLOAT:
        return struct.unpack_from(">d", data, offset)[0], offset + 8
    if tag == TAG_STR:
        (n,) = struct.unpack_from(">I", data, offset)
        offset += 4
        return data[offset : offset + n].decode("utf-8"), offset + n
    if tag == TAG_LIST:
        (n,) = struct.unpack_from(">I", data, offset)
        offset += 4
        items: list[Value] = []
        for _ in range(n):
            item, offset = _decode(state, data, offset)
            items.append(item)
        return state.alloc_list(items), offset
    if tag == TAG_MAP:
        (n,) = struct.unpack_from(">I", data, offset)
        offset += 4
        pairs: dict[str, Value] = {}
        for _ in range(n):
            (klen,) = struct.unpack_from(">I", data, offset)
            offset += 4
            key = data[offset : offset + klen].decode("utf-8")
            offset += klen
            val, offset = _decode(state, data, offset)
            pairs[key] = val
        return state.alloc_map(pairs), offset
    if tag == TAG_FN:
        (nlen,) = struct.unpack_from(">I", data, offset)
        offset += 4
        name = data[offset : offset + nlen].decode("utf-8")
        offset += nlen
        (slen,) = struct.unpack_from(">I", data, offset)
        offset += 4
        source = data[offset : offset + slen].decode("utf-8")
        return FnVal(name, source), offset + slen
    if tag == TAG_TASKREF:
        (n,) = struct.unpack_from(">I", data, offset)
        offset += 4
        return TaskRef(data[offset : offset + n].decode("utf-8")), offset + n
    raise SerializationError(f"unknown value tag {tag!r}")
