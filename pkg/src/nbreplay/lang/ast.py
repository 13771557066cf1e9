"""AST node types for the cell language."""

from __future__ import annotations

from dataclasses import dataclass, field


# --- expressions ---


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class FloatLit:
    value: float


@dataclass(frozen=True)
class StrLit:
    value: str


@dataclass(frozen=True)
class BoolLit:
    value: bool


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class ListLit:
    items: tuple[Expr, ...]


@dataclass(frozen=True)
class MapLit:
    pairs: tuple[tuple[str, Expr], ...]


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple[Expr, ...]


Expr = IntLit | FloatLit | StrLit | BoolLit | Name | ListLit | MapLit | BinOp | Call


# --- statements; each carries its source span and the exact source slice ---


@dataclass(frozen=True)
class Span:
    start_line: int
    end_line: int
    source: str


@dataclass(frozen=True)
class Assign:
    target: str
    value: Expr
    span: Span


@dataclass(frozen=True)
class IndexSet:
    target: str
    index: Expr
    value: Expr
    span: Span


@dataclass(frozen=True)
class Push:
    target: str
    value: Expr
    span: Span


@dataclass(frozen=True)
class FnDef:
    name: str
    params: tuple[str, ...]
    body: Expr
    span: Span


@dataclass(frozen=True)
class ExprStmt:
    value: Expr
    span: Span


Statement = Assign | IndexSet | Push | FnDef | ExprStmt


@dataclass(frozen=True)
class CellAST:
    statements: tuple[Statement, ...] = field(default_factory=tuple)
