"""Recursive-descent parser producing a CellAST.

Grammar (one statement per line; brackets allow continuation):

    stmt  := NAME "=" expr
           | NAME "[" expr "]" "=" expr
           | "push" "(" NAME "," expr ")"
           | "fn" NAME "(" params ")" "=" expr
           | expr
    expr  := cmp ; cmp := add (CMPOP add)* ; add := mul (ADDOP mul)*
    atom  := INT | FLOAT | STRING | true | false | NAME | NAME "(" args ")"
           | "[" exprlist "]" | "{" pairs "}" | "(" expr ")"
"""

from __future__ import annotations

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
    StrLit,
    Statement,
)
from .lexer import Token, tokenize
from ..errors import CellSyntaxError

BUILTINS = frozenset(
    {
        "read_text",
        "write_text",
        "lines",
        "split",
        "len",
        "sum",
        "upper",
        "show",
        "connect",
        "task_cmd",
        "task_fn",
        "compute",
    }
)

_CMP_OPS = frozenset({"==", "!=", "<", ">", "<=", ">="})
_ADD_OPS = frozenset({"+", "-", "++"})
_MUL_OPS = frozenset({"*", "/", "%"})


class _Parser:
    def __init__(self, tokens: list[Token], source_lines: list[str]):
        self.tokens = tokens
        self.pos = 0
        self.source_lines = source_lines

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise CellSyntaxError(f"expected {what}, found {tok.text or 'end of input'!r}", tok.line, tok.col)
        return self.advance()

    def span_from(self, start_line: int, end_line: int) -> Span:
        text = "\n".join(line.rstrip() for line in self.source_lines[start_line - 1 : end_line])
        return Span(start_line, end_line, text)

    # --- statements ---

    def parse_cell(self) -> CellAST:
        stmts: list[Statement] = []
        while self.peek().kind != "EOF":
            if self.peek().kind == "NEWLINE":
                self.advance()
                continue
            stmts.append(self.statement())
        return CellAST(tuple(stmts))

    def statement(self) -> Statement:
        tok = self.peek()
        start_line = tok.line
        if tok.kind == "FN":
            stmt = self.fn_def(start_line)
        elif tok.kind == "PUSH":
            stmt = self.push_stmt(start_line)
        elif tok.kind == "NAME" and self.peek(1).kind == "ASSIGN":
            stmt = self.assign_stmt(start_line)
        elif tok.kind == "NAME" and self.peek(1).kind == "LBRACK":
            stmt = self.index_set_stmt(start_line)
        else:
            expr = self.expression()
            end = self.end_of_statement()
            stmt = ExprStmt(expr, self.span_from(start_line, end))
        return stmt

    def end_of_statement(self) -> int:
        tok = self.peek()
        if tok.kind == "NEWLINE":
            self.advance()
            # token line is where the newline sits; the statement ends there
            return tok.line
        if tok.kind == "EOF":
            return tok.line
        raise CellSyntaxError(f"unexpected {tok.text!r} after statement", tok.line, tok.col)

    def target_name(self) -> str:
        tok = self.expect("NAME", "a variable name")
        if tok.text in BUILTINS:
            raise CellSyntaxError(f"cannot assign to builtin {tok.text!r}", tok.line, tok.col)
        return tok.text

    def assign_stmt(self, start_line: int) -> Assign:
        target = self.target_name()
        self.expect("ASSIGN", "'='")
        value = self.expression()
        end = self.end_of_statement()
        return Assign(target, value, self.span_from(start_line, end))

    def index_set_stmt(self, start_line: int) -> IndexSet:
        target = self.target_name()
        self.expect("LBRACK", "'['")
        index = self.expression()
        self.expect("RBRACK", "']'")
        self.expect("ASSIGN", "'='")
        value = self.expression()
        end = self.end_of_statement()
        return IndexSet(target, index, value, self.span_from(start_line, end))

    def push_stmt(self, start_line: int) -> Push:
        self.expect("PUSH", "'push'")
        self.expect("LPAREN", "'('")
        target = self.target_name()
        self.expect("COMMA", "','")
        value = self.expression()
        self.expect("RPAREN", "')'")
        end = self.end_of_statement()
        return Push(target, value, self.span_from(start_line, end))

    def fn_def(self, start_line: int) -> FnDef:
        self.expect("FN", "'fn'")
        name = self.target_name()
        self.expect("LPAREN", "'('")
        params: list[str] = []
        if self.peek().kind != "RPAREN":
            while True:
                p = self.expect("NAME", "a parameter name")
                if p.text in BUILTINS:
                    raise CellSyntaxError(f"parameter shadows builtin {p.text!r}", p.line, p.col)
                if p.text in params:
                    raise CellSyntaxError(f"duplicate parameter {p.text!r}", p.line, p.col)
                params.append(p.text)
                if self.peek().kind == "COMMA":
                    self.advance()
                    continue
                break
        self.expect("RPAREN", "')'")
        self.expect("ASSIGN", "'='")
        body = self.expression()
        end = self.end_of_statement()
        return FnDef(name, tuple(params), body, self.span_from(start_line, end))

    # --- expressions ---

    def expression(self) -> Expr:
        return self.comparison()

    def comparison(self) -> Expr:
        left = self.additive()
        while self.peek().kind == "OP" and self.peek().text in _CMP_OPS:
            op = self.advance().text
            left = BinOp(op, left, self.additive())
        return left

    def additive(self) -> Expr:
        left = self.multiplicative()
        while self.peek().kind == "OP" and self.peek().text in _ADD_OPS:
            op = self.advance().text
            left = BinOp(op, left, self.multiplicative())
        return left

    def multiplicative(self) -> Expr:
        left = self.atom()
        while self.peek().kind == "OP" and self.peek().text in _MUL_OPS:
            op = self.advance().text
            left = BinOp(op, left, self.atom())
        return left

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return IntLit(tok.value)  # type: ignore[arg-type]
        if tok.kind == "FLOAT":
            self.advance()
            return FloatLit(tok.value)  # type: ignore[arg-type]
        if tok.kind == "STRING":
            self.advance()
            return StrLit(tok.value)  # type: ignore[arg-type]
        if tok.kind in ("TRUE", "FALSE"):
            self.advance()
            return BoolLit(tok.kind == "TRUE")
        if tok.kind == "NAME":
            self.advance()
            if self.peek().kind == "LPAREN":
                self.advance()
                args = self.expr_list("RPAREN")
                self.expect("RPAREN", "')'")
                return Call(tok.text, tuple(args))
            return Name(tok.text)
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.expression()
            self.expect("RPAREN", "')'")
            return inner
        if tok.kind == "LBRACK":
            self.advance()
            items = self.expr_list("RBRACK")
            self.expect("RBRACK", "']'")
            return ListLit(tuple(items))
        if tok.kind == "LBRACE":
            self.advance()
            pairs: list[tuple[str, Expr]] = []
            if self.peek().kind != "RBRACE":
                while True:
                    key = self.expect("STRING", "a string key")
                    self.expect("COLON", "':'")
                    pairs.append((key.value, self.expression()))  # type: ignore[arg-type]
                    if self.peek().kind == "COMMA":
                        self.advance()
                        continue
                    break
            self.expect("RBRACE", "'}'")
            return MapLit(tuple(pairs))
        raise CellSyntaxError(f"unexpected {tok.text or 'end of input'!r} in expression", tok.line, tok.col)

    def expr_list(self, closing: str) -> list[Expr]:
        items: list[Expr] = []
        if self.peek().kind == closing:
            return items
        while True:
            items.append(self.expression())
            if self.peek().kind == "COMMA":
                self.advance()
                continue
            break
        return items


def parse_cell(code: str) -> CellAST:
    """Parse cell source into a CellAST; raises CellSyntaxError with line/col on bad input."""
    tokens = tokenize(code)
    return _Parser(tokens, code.split("\n")).parse_cell()
