from .analysis import RWInfo, analyze_rw, rebind_targets, statement_reads, statement_writes
from .ast import (
    Assign,
    BinOp,
    BoolLit,
    Call,
    CellAST,
    Expr,
    ExprStmt,
    FloatLit,
    FnDef,
    IndexSet,
    IntLit,
    ListLit,
    MapLit,
    Name,
    Push,
    Span,
    Statement,
    StrLit,
)
from .parser import BUILTINS, parse_cell

__all__ = [
    "Assign",
    "BinOp",
    "BoolLit",
    "BUILTINS",
    "Call",
    "CellAST",
    "Expr",
    "ExprStmt",
    "FloatLit",
    "FnDef",
    "IndexSet",
    "IntLit",
    "ListLit",
    "MapLit",
    "Name",
    "Push",
    "RWInfo",
    "Span",
    "Statement",
    "StrLit",
    "analyze_rw",
    "parse_cell",
    "rebind_targets",
    "statement_reads",
    "statement_writes",
]
