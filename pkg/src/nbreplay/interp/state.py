"""Kernel state: environment, heap, function table, and the reverse memory index.

The reverse index maps every heap id to the set of top-level names currently
bound to it; it is maintained on each bind/rebind so shared (aliased)
variables can be found without scanning the environment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .values import FnVal, Handle, ListRef, MapRef, StmtRef, TaskRef, Value, is_heap_ref


@dataclass
class KernelState:
    env: dict[str, Value] = field(default_factory=dict)
    heap: dict[int, list | dict] = field(default_factory=dict)
    fns: dict[str, str] = field(default_factory=dict)
    rev: dict[int, set[str]] = field(default_factory=dict)
    provenance: dict[str, StmtRef] = field(default_factory=dict)
    stdout_buffer: str = ""
    _next_heap_id: int = 0

    # --- heap ---

    def alloc_list(self, items: list[Value]) -> ListRef:
        hid = self._next_heap_id
        self._next_heap_id += 1
        self.heap[hid] = items
        return ListRef(hid)

    def alloc_map(self, pairs: dict[str, Value]) -> MapRef:
        hid = self._next_heap_id
        self._next_heap_id += 1
        self.heap[hid] = pairs
        return MapRef(hid)

    def contents(self, ref: ListRef | MapRef) -> list | dict:
        return self.heap[ref.heap_id]

    # --- bindings ---

    def _unbind_env(self, name: str) -> None:
        old = self.env.pop(name, None)
        if is_heap_ref(old):
            holders = self.rev.get(old.heap_id)
            if holders is not None:
                holders.discard(name)
                if not holders:
                    del self.rev[old.heap_id]

    def bind(self, name: str, value: Value, origin: StmtRef | None = None) -> None:
        self._unbind_env(name)
        self.fns.pop(name, None)  # variables and functions share one namespace
        self.env[name] = value
        if is_heap_ref(value):
            self.rev.setdefault(value.heap_id, set()).add(name)
        if origin is not None:
            self.provenance[name] = origin

    def bind_fn(self, name: str, source: str, origin: StmtRef | None = None) -> None:
        self._unbind_env(name)
        self.fns[name] = source
        if origin is not None:
            self.provenance[name] = origin

    def lookup(self, name: str) -> Value | None:
        return self.env.get(name)

    def bound_names(self) -> set[str]:
        return set(self.env) | set(self.fns)

    def recompute_reverse_index(self) -> dict[int, set[str]]:
        """Rebuild the index from env; used to check index exactness."""
        rebuilt: dict[int, set[str]] = {}
        for name, value in self.env.items():
            if is_heap_ref(value):
                rebuilt.setdefault(value.heap_id, set()).add(name)
        return rebuilt

    # --- aliasing ---

    def reachable_heap_ids(self, value: Value) -> set[int]:
        out: set[int] = set()
        stack = [value]
        while stack:
            v = stack.pop()
            if is_heap_ref(v) and v.heap_id not in out:
                out.add(v.heap_id)
                obj = self.heap[v.heap_id]
                stack.extend(obj.values() if isinstance(obj, dict) else obj)
        return out

    def alias_names_of_heap_ids(self, heap_ids: set[int]) -> set[str]:
        """Top-level names whose value reaches any of the given heap ids."""
        out: set[str] = set()
        for name, value in self.env.items():
            if is_heap_ref(value) and self.reachable_heap_ids(value) & heap_ids:
                out.add(name)
        return out

    def alias_groups(self, names: set[str] | None = None) -> list[frozenset[str]]:
        """Groups of names directly bound to the same heap object (size >= 2)."""
        pool = self.env.keys() if names is None else names
        by_id: dict[int, set[str]] = {}
        for name in pool:
            v = self.env.get(name)
            if is_heap_ref(v):
                by_id.setdefault(v.heap_id, set()).add(name)
        return sorted((frozenset(g) for g in by_id.values() if len(g) > 1), key=sorted)

    # --- deep materialization (tests, rendering, equivalence checks) ---

    def deep_value(self, value: Value) -> object:
        seen: set[int] = set()

        def go(v: Value) -> object:
            if isinstance(v, ListRef):
                if v.heap_id in seen:
                    return "<cycle>"
                seen.add(v.heap_id)
                out = [go(item) for item in self.heap[v.heap_id]]
                seen.discard(v.heap_id)
                return out
            if isinstance(v, MapRef):
                if v.heap_id in seen:
                    return "<cycle>"
                seen.add(v.heap_id)
                out = {k: go(item) for k, item in self.heap[v.heap_id].items()}
                seen.discard(v.heap_id)
                return out
            if isinstance(v, Handle):
                return ("handle", v.uri)
            if isinstance(v, TaskRef):
                return ("taskref",)
            if isinstance(v, FnVal):
                return ("fn", v.name, v.source)
            return v

        return go(value)


def shared_closure(state: KernelState, names: set[str]) -> set[str]:
    """Close a name set under heap sharing.

    Two names are linked when their values reach a common heap object, at any
    nesting depth; a list containing an aliased map links the map's other
    holders too. Unbound names are dropped; scalar-valued names only contribute
    themselves.
    """
    result = {n for n in names if n in state.env or n in state.fns}
    target_ids: set[int] = set()
    for n in result:
        v = state.env.get(n)
        if v is not None:
            target_ids |= state.reachable_heap_ids(v)
    if not target_ids:
        return result
    changed = True
    while changed:
        changed = False
        for name, value in state.env.items():
            if name in result or not is_heap_ref(value):
                continue
            reach = state.reachable_heap_ids(value)
            if reach & target_ids:
                result.add(name)
                if not reach <= target_ids:
                    target_ids |= reach
                    changed = True
    return result
