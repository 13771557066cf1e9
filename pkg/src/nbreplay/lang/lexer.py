"""Tokenizer for the cell language.

Line-oriented: a NEWLINE token marks a statement boundary, but newlines inside
open brackets are suppressed so calls and literals may span lines. `#` starts
a comment running to end of line.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CellSyntaxError

KEYWORDS = frozenset({"fn", "push", "true", "false"})

_TWO_CHAR_OPS = ("==", "!=", "<=", ">=", "++")
_ONE_CHAR_OPS = "+-*/%<>="
_PUNCT = {
    "(": "LPAREN",
    ")": "RPAREN",
    "[": "LBRACK",
    "]": "RBRACK",
    "{": "LBRACE",
    "}": "RBRACE",
    ",": "COMMA",
    ":": "COLON",
}
_OPENERS = "([{"
_CLOSERS = ")]}"

# Token kinds that may legally end a value; a `-` after one of these is a
# binary operator, otherwise it may begin a negative numeric literal.
_VALUE_ENDERS = frozenset({"NAME", "INT", "FLOAT", "STRING", "RPAREN", "RBRACK", "RBRACE", "TRUE", "FALSE"})


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int
    value: object = None


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    depth = 0
    line = 1
    col = 1
    i = 0
    n = len(source)

    def err(msg: str) -> CellSyntaxError:
        return CellSyntaxError(msg, line, col)

    def prev_kind() -> str | None:
        return tokens[-1].kind if tokens else None

    while i < n:
        ch = source[i]
        if ch == "\n":
            if depth == 0 and prev_kind() not in (None, "NEWLINE"):
                tokens.append(Token("NEWLINE", "\n", line, col))
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch == '"':
            start_line, start_col = line, col
            i += 1
            col += 1
            chars: list[str] = []
            while True:
                if i >= n or source[i] == "\n":
                    raise CellSyntaxError("unterminated string literal", start_line, start_col)
                c = source[i]
                if c == '"':
                    i += 1
                    col += 1
                    break
                if c == "\\":
                    if i + 1 >= n:
                        raise CellSyntaxError("unterminated escape", line, col)
                    esc = source[i + 1]
                    if esc == '"':
                        chars.append('"')
                    elif esc == "\\":
                        chars.append("\\")
                    elif esc == "n":
                        chars.append("\n")
                    else:
                        raise CellSyntaxError(f"unsupported escape \\{esc}", line, col)
                    i += 2
                    col += 2
                    continue
                chars.append(c)
                i += 1
                col += 1
            text = "".join(chars)
            tokens.append(Token("STRING", text, start_line, start_col, text))
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < n and source[i + 1].isdigit() and prev_kind() not in _VALUE_ENDERS):
            start_line, start_col = line, col
            j = i + 1 if ch == "-" else i
            while j < n and source[j].isdigit():
                j += 1
            is_float = False
            if j < n and source[j] == "." and j + 1 < n and source[j + 1].isdigit():
                is_float = True
                j += 1
                while j < n and source[j].isdigit():
                    j += 1
            text = source[i:j]
            col += j - i
            i = j
            if is_float:
                tokens.append(Token("FLOAT", text, start_line, start_col, float(text)))
            else:
                v = int(text)
                if not -(2**63) <= v < 2**63:
                    raise CellSyntaxError("integer literal out of 64-bit range", start_line, start_col)
                tokens.append(Token("INT", text, start_line, start_col, v))
            continue
        if ch.isalpha() or ch == "_":
            start_line, start_col = line, col
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            text = source[i:j]
            col += j - i
            i = j
            if text == "true":
                tokens.append(Token("TRUE", text, start_line, start_col, True))
            elif text == "false":
                tokens.append(Token("FALSE", text, start_line, start_col, False))
            elif text in KEYWORDS:
                tokens.append(Token(text.upper(), text, start_line, start_col))
            else:
                tokens.append(Token("NAME", text, start_line, start_col, text))
            continue
        two = source[i : i + 2]
        if two in _TWO_CHAR_OPS:
            tokens.append(Token("OP", two, line, col))
            i += 2
            col += 2
            continue
        if ch in _PUNCT:
            if ch in _OPENERS:
                depth += 1
            elif ch in _CLOSERS:
                if depth == 0:
                    raise err(f"unbalanced '{ch}'")
                depth -= 1
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            i += 1
            col += 1
            continue
        if ch == "=":
            tokens.append(Token("ASSIGN", "=", line, col))
            i += 1
            col += 1
            continue
        if ch in _ONE_CHAR_OPS:
            tokens.append(Token("OP", ch, line, col))
            i += 1
            col += 1
            continue
        raise err(f"unexpected character {ch!r}")

    if depth != 0:
        raise CellSyntaxError("unclosed bracket at end of cell", line, col)
    if tokens and tokens[-1].kind != "NEWLINE":
        tokens.append(Token("NEWLINE", "\n", line, col))
    tokens.append(Token("EOF", "", line, col))
    return tokens
