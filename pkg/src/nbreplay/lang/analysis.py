"""Static read/write analysis over a CellAST.

Purely syntactic and conservative: a name is a read if it is referenced in
expression position anywhere in the cell (mutation targets count as read and
written), so a name both read and written lands in both sets. Builtins are
never reported. Function bodies contribute their free names (parameters are
local), and a call to a user-defined function reads that function's name.
A `task_fn("f", ...)` submission reads `f`: the task references that
function's code, so edits to it must invalidate the submitting cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ast import (
    Assign,
    BinOp,
    Call,
    CellAST,
    Expr,
    ExprStmt,
    FnDef,
    IndexSet,
    ListLit,
    MapLit,
    Name,
    Push,
    Statement,
    StrLit,
)
from .parser import BUILTINS


@dataclass(frozen=True)
class RWInfo:
    reads: frozenset[str] = field(default_factory=frozenset)
    writes: frozenset[str] = field(default_factory=frozenset)
    defs: frozenset[str] = field(default_factory=frozenset)


def _expr_reads(expr: Expr, locals_: frozenset[str], out: set[str]) -> None:
    if isinstance(expr, Name):
        if expr.ident not in BUILTINS and expr.ident not in locals_:
            out.add(expr.ident)
    elif isinstance(expr, BinOp):
        _expr_reads(expr.left, locals_, out)
        _expr_reads(expr.right, locals_, out)
    elif isinstance(expr, ListLit):
        for item in expr.items:
            _expr_reads(item, locals_, out)
    elif isinstance(expr, MapLit):
        for _, value in expr.pairs:
            _expr_reads(value, locals_, out)
    elif isinstance(expr, Call):
        if expr.func not in BUILTINS:
            out.add(expr.func)
        if expr.func == "task_fn" and expr.args and isinstance(expr.args[0], StrLit):
            out.add(expr.args[0].value)
        for arg in expr.args:
            _expr_reads(arg, locals_, out)
    # literals contribute nothing


def statement_reads(stmt: Statement) -> set[str]:
    """Names the statement reads, including mutation targets."""
    reads: set[str] = set()
    no_locals: frozenset[str] = frozenset()
    if isinstance(stmt, Assign):
        _expr_reads(stmt.value, no_locals, reads)
    elif isinstance(stmt, IndexSet):
        reads.add(stmt.target)
        _expr_reads(stmt.index, no_locals, reads)
        _expr_reads(stmt.value, no_locals, reads)
    elif isinstance(stmt, Push):
        reads.add(stmt.target)
        _expr_reads(stmt.value, no_locals, reads)
    elif isinstance(stmt, FnDef):
        _expr_reads(stmt.body, frozenset(stmt.params), reads)
    elif isinstance(stmt, ExprStmt):
        _expr_reads(stmt.value, no_locals, reads)
    return reads


def statement_writes(stmt: Statement) -> set[str]:
    if isinstance(stmt, (Assign, IndexSet, Push)):
        return {stmt.target}
    return set()


def rebind_targets(ast: CellAST) -> set[str]:
    """Names the cell rebinds unconditionally (plain assignments and fn definitions).

    Mutation targets are excluded: a push or index-set folds the prior value in,
    so it does not make the name's value independent of its history.
    """
    out: set[str] = set()
    for stmt in ast.statements:
        if isinstance(stmt, Assign):
            out.add(stmt.target)
        elif isinstance(stmt, FnDef):
            out.add(stmt.name)
    return out


def analyze_rw(ast: CellAST) -> RWInfo:
    reads: set[str] = set()
    writes: set[str] = set()
    defs: set[str] = set()
    for stmt in ast.statements:
        reads |= statement_reads(stmt)
        writes |= statement_writes(stmt)
        if isinstance(stmt, FnDef):
            defs.add(stmt.name)
    return RWInfo(frozenset(reads), frozenset(writes), frozenset(defs))
