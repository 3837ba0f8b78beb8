"""Set expressions: parse, print, evaluate.

Grammar (left-associative binary operators):

    expr   := term ("\\/" term)*
    term   := factor ("/\\" factor)*
    factor := "~" factor | IDENT | "(" expr ")"

so complement binds tightest, then intersection, then union. The Unicode
spellings of the three operators are accepted as aliases on input; output
always uses the ASCII forms. Identifiers are C-style names bound to sets at
evaluation time. Syntax errors carry a 1-based column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Union as TypeUnion

from .errors import EvalError, ExpressionSyntaxError
from .sets import ModernSet, complement as set_complement, intersection, union


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class Complement:
    operand: "Expression"


@dataclass(frozen=True)
class Intersection:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Union:
    left: "Expression"
    right: "Expression"


Expression = TypeUnion[Ident, Complement, Intersection, Union]


class _Token(NamedTuple):
    kind: str
    text: str
    column: int


_SINGLE = {"(": "LPAREN", ")": "RPAREN", "~": "NOT", "¬": "NOT"}
_UNICODE_BINARY = {"∨": "VEE", "∧": "WEDGE"}


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(src):
        ch = src[i]
        column = i + 1
        if ch.isspace():
            i += 1
            continue
        if src.startswith("\\/", i):
            tokens.append(_Token("VEE", "\\/", column))
            i += 2
            continue
        if src.startswith("/\\", i):
            tokens.append(_Token("WEDGE", "/\\", column))
            i += 2
            continue
        if ch in _UNICODE_BINARY:
            tokens.append(_Token(_UNICODE_BINARY[ch], ch, column))
            i += 1
            continue
        if ch in _SINGLE:
            tokens.append(_Token(_SINGLE[ch], ch, column))
            i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", src[i:j], column))
            i = j
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", column)
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.pos = 0

    def _eof_column(self) -> int:
        return max(len(self.src), 1)

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expression(self) -> Expression:
        node = self.term()
        while (t := self.peek()) and t.kind == "VEE":
            self.advance()
            node = Union(node, self.term())
        return node

    def term(self) -> Expression:
        node = self.factor()
        while (t := self.peek()) and t.kind == "WEDGE":
            self.advance()
            node = Intersection(node, self.factor())
        return node

    def factor(self) -> Expression:
        token = self.peek()
        if token is None:
            raise ExpressionSyntaxError(
                "expected an identifier, '~', or '('", self._eof_column()
            )
        if token.kind == "NOT":
            self.advance()
            return Complement(self.factor())
        if token.kind == "IDENT":
            self.advance()
            return Ident(token.text)
        if token.kind == "LPAREN":
            self.advance()
            node = self.expression()
            closing = self.peek()
            if closing is None:
                raise ExpressionSyntaxError("expected ')'", self._eof_column())
            if closing.kind != "RPAREN":
                raise ExpressionSyntaxError("expected ')'", closing.column)
            self.advance()
            return node
        raise ExpressionSyntaxError(
            f"unexpected token {token.text!r}", token.column
        )


def parse_expression(src: str) -> Expression:
    """Parse source text to an expression tree."""
    parser = _Parser(src)
    node = parser.expression()
    trailing = parser.peek()
    if trailing is not None:
        raise ExpressionSyntaxError(
            f"unexpected token {trailing.text!r}", trailing.column
        )
    return node


def _precedence(expr: Expression) -> int:
    if isinstance(expr, Union):
        return 1
    if isinstance(expr, Intersection):
        return 2
    if isinstance(expr, Complement):
        return 3
    return 4


def format_expression(expr: Expression) -> str:
    """Render with the minimal parentheses that preserve the tree.

    Binary operators print left-associatively, so only a right child at
    equal precedence needs parentheses.
    """
    if isinstance(expr, Ident):
        return expr.name
    if isinstance(expr, Complement):
        inner = format_expression(expr.operand)
        if _precedence(expr.operand) < 3:
            inner = f"({inner})"
        return f"~{inner}"
    symbol = "\\/" if isinstance(expr, Union) else "/\\"
    p = _precedence(expr)
    left = format_expression(expr.left)
    if _precedence(expr.left) < p:
        left = f"({left})"
    right = format_expression(expr.right)
    if _precedence(expr.right) <= p:
        right = f"({right})"
    return f"{left} {symbol} {right}"


def eval_expression(bindings, expr: Expression) -> ModernSet:
    """Evaluate against identifier bindings.

    ``bindings`` is a mapping from names to sets, or any object with a
    ``sets`` mapping attribute (a loaded workspace). Unbound identifiers
    raise EvalError; family mismatches and missing complements surface as
    their usual errors.
    """
    table: Mapping[str, ModernSet]
    if isinstance(bindings, Mapping):
        table = bindings
    else:
        table = bindings.sets

    def walk(node: Expression) -> ModernSet:
        if isinstance(node, Ident):
            if node.name not in table:
                raise EvalError(f"identifier {node.name!r} is not bound to a set")
            return table[node.name]
        if isinstance(node, Complement):
            return set_complement(walk(node.operand))
        if isinstance(node, Intersection):
            return intersection(walk(node.left), walk(node.right))
        return union(walk(node.left), walk(node.right))

    return walk(expr)
