"""A small query language for tame sets and their measures.

Grammar (``&`` binds tightest, then ``|``, then ``\\``; all left-assoc)::

    query   := setexpr [("==" | "<=") setexpr]
    setexpr := union ("\\" union)*
    union   := inter ("|" inter)*
    inter   := atom ("&" atom)*
    atom    := "(" setexpr ")" | interval | "{" [number ("," number)*] "}"
             | "empty" | "diag" | NAME "(" args ")"
    interval:= ("[" | "(") endpoint "," endpoint ("]" | ")")
    number  := ["-"] DIGITS ["/" DIGITS]

Function signatures live in ``SIGNATURES``.  An opening parenthesis starts
an interval when it is followed by a number, ``-`` or ``inf``; otherwise it
groups.

>>> str(evaluate("eta(vshift(diag, 1))").value)
'0'
>>> evaluate("pi(diag) == rho(diag)").value
False
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

from ._rational import Rational
from .errors import DomainError
from .extreal import ExtReal, format_rational
from .measures import eta, eta_family, pi_outer, rho_cld, xi
from .set1d import NEG_INF, POS_INF, Set1D, format_endpoint
from .set2d import Set2D, diagonal, diagonal_approx, graph, rect

# kinds
SET1, SET2, MEASURE, BOOL, NUM, INT = "set1", "set2", "measure", "bool", "num", "int"

SIGNATURES = {
    "rect": ((SET1, SET1), SET2),
    "graph": ((NUM, SET1), SET2),
    "diag_approx": ((INT,), SET2),
    "vshift": ((SET2, NUM), SET2),
    "shift1": ((SET1, NUM), SET1),
    "mu": ((SET1,), MEASURE),
    "nu": ((SET1,), MEASURE),
    "pi": ((SET2,), MEASURE),
    "rho": ((SET2,), MEASURE),
    "xi": ((SET2,), MEASURE),
    "eta": ((SET2,), MEASURE),
    "eta_t": ((NUM, SET2), MEASURE),
}

PRECEDENCE = {"\\": 1, "|": 2, "&": 3}


class DslError(Exception):
    exit_code = 2
    kind = "error"

    def __init__(self, message: str, source: str = "", pos: int = 0):
        self.message = message
        self.source = source
        self.pos = pos
        self.line = source.count("\n", 0, pos) + 1
        self.column = pos - (source.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{self.kind} at line {self.line}, column {self.column}: {message}")


class ParseError(DslError):
    kind = "syntax error"


class TypeCheckError(DslError):
    kind = "type error"


class EvalDomainError(DslError):
    exit_code = 3
    kind = "domain error"


# -- AST -------------------------------------------------------------------

def _span():
    return field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: Any
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class IntervalLit:
    lo: Any
    hi: Any
    lo_closed: bool
    hi_closed: bool
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class Points:
    values: Tuple
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class Empty:
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class Diag:
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class Call:
    func: str
    args: Tuple
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class SetOp:
    op: str
    left: Any
    right: Any
    span: Tuple[int, int] = _span()


@dataclass(frozen=True)
class Compare:
    op: str
    left: Any
    right: Any
    span: Tuple[int, int] = _span()


# -- lexer -----------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>==|<=|[()\[\]{},|&\\-])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str  # "num", "name", "op" or "eof"
    text: str
    pos: int


def tokenize(source: str) -> List[Token]:
    out = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", source, pos)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(Token("eof", "", len(source)))
    return out


# -- parser ----------------------------------------------------------------

class Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.i = 0

    def peek(self, k: int = 0) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"{message}, found {found}", self.source, tok.pos)

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.text != text or tok.kind == "eof":
            if text == ")" and tok.kind == "eof":
                raise self.error("unbalanced parenthesis: expected ')'")
            raise self.error(f"expected {text!r}")
        return self.next()

    def parse_query(self):
        start = self.peek().pos
        left = self.parse_setexpr()
        if self.peek().text in ("==", "<="):
            op = self.next().text
            right = self.parse_setexpr()
            left = Compare(op, left, right, (start, self.peek().pos))
        if self.peek().kind != "eof":
            raise self.error("unexpected trailing input")
        return left

    def _binary(self, op: str, sub):
        start = self.peek().pos
        left = sub()
        while self.peek().kind == "op" and self.peek().text == op:
            self.next()
            right = sub()
            left = SetOp(op, left, right, (start, self.peek().pos))
        return left

    def parse_setexpr(self):
        return self._binary("\\", self.parse_union)

    def parse_union(self):
        return self._binary("|", self.parse_inter)

    def parse_inter(self):
        return self._binary("&", self.parse_atom)

    def parse_number(self) -> Num:
        start = self.peek().pos
        neg = False
        if self.peek().text == "-":
            self.next()
            neg = True
        tok = self.peek()
        if tok.kind != "num":
            raise self.error("expected a rational number")
        self.next()
        num, _, den = tok.text.partition("/")
        if den and int(den) == 0:
            raise ParseError("zero denominator", self.source, tok.pos)
        value = Rational(int(num), int(den) if den else 1)
        return Num(-value if neg else value, (start, tok.pos + len(tok.text)))

    def parse_endpoint(self):
        tok = self.peek()
        if tok.text == "inf":
            self.next()
            return POS_INF
        if tok.text == "-" and self.peek(1).text == "inf":
            self.next()
            self.next()
            return NEG_INF
        return self.parse_number().value

    def parse_atom(self):
        tok = self.peek()
        start = tok.pos
        if tok.text == "(":
            nxt = self.peek(1)
            if nxt.kind == "num" or nxt.text in ("-", "inf"):
                return self.parse_interval()
            self.next()
            inner = self.parse_setexpr()
            self.expect(")")
            return inner
        if tok.text == "[":
            return self.parse_interval()
        if tok.text == "{":
            self.next()
            values = []
            if self.peek().text != "}":
                values.append(self.parse_number().value)
                while self.peek().text == ",":
                    self.next()
                    values.append(self.parse_number().value)
            end = self.expect("}")
            return Points(tuple(values), (start, end.pos + 1))
        if tok.kind == "name":
            self.next()
            if tok.text == "empty":
                return Empty((start, start + 5))
            if tok.text == "diag":
                return Diag((start, start + 4))
            if tok.text not in SIGNATURES:
                raise ParseError(f"unknown name {tok.text!r}", self.source, start)
            params, _ = SIGNATURES[tok.text]
            self.expect("(")
            args = []
            for k, kind in enumerate(params):
                if k:
                    self.expect(",")
                if kind in (NUM, INT):
                    args.append(self.parse_number())
                else:
                    args.append(self.parse_setexpr())
            end = self.expect(")")
            return Call(tok.text, tuple(args), (start, end.pos + 1))
        raise self.error("expected a set expression")

    def parse_interval(self) -> IntervalLit:
        open_tok = self.next()
        lo = self.parse_endpoint()
        self.expect(",")
        hi = self.parse_endpoint()
        close = self.peek()
        if close.text not in ("]", ")"):
            raise self.error("expected ']' or ')'")
        self.next()
        lo_closed, hi_closed = open_tok.text == "[", close.text == "]"
        if (lo_closed and lo == NEG_INF) or (hi_closed and hi == POS_INF):
            raise ParseError("an infinite endpoint cannot be closed", self.source, open_tok.pos)
        if not (lo < hi or (lo == hi and lo_closed and hi_closed)):
            raise ParseError("interval needs lo < hi (or [a,a] for a point)",
                             self.source, open_tok.pos)
        return IntervalLit(lo, hi, lo_closed, hi_closed, (open_tok.pos, close.pos + 1))


def parse(source: str):
    """Parse and type-check a query."""
    ast = Parser(source).parse_query()
    typecheck(ast, source)
    return ast


# -- printing --------------------------------------------------------------

def to_source(node) -> str:
    """Canonical text for ``node``; ``parse(to_source(n)) == n``."""
    if isinstance(node, Num):
        return format_rational(node.value)
    if isinstance(node, IntervalLit):
        return "%s%s,%s%s" % ("[" if node.lo_closed else "(", format_endpoint(node.lo),
                              format_endpoint(node.hi), "]" if node.hi_closed else ")")
    if isinstance(node, Points):
        return "{" + ",".join(format_rational(v) for v in node.values) + "}"
    if isinstance(node, Empty):
        return "empty"
    if isinstance(node, Diag):
        return "diag"
    if isinstance(node, Call):
        return f"{node.func}({', '.join(to_source(a) for a in node.args)})"
    if isinstance(node, SetOp):
        prec = PRECEDENCE[node.op]
        left, right = to_source(node.left), to_source(node.right)
        if isinstance(node.left, SetOp) and PRECEDENCE[node.left.op] < prec:
            left = f"({left})"
        if isinstance(node.right, SetOp) and PRECEDENCE[node.right.op] <= prec:
            right = f"({right})"
        return f"{left} {node.op} {right}"
    if isinstance(node, Compare):
        return f"{to_source(node.left)} {node.op} {to_source(node.right)}"
    raise TypeError(f"not an AST node: {node!r}")


# -- type checking ---------------------------------------------------------

def typecheck(node, source: str = "") -> str:
    def fail(msg):
        return TypeCheckError(f"{msg} in `{to_source(node)}`", source, node.span[0])

    if isinstance(node, Num):
        return NUM
    if isinstance(node, (IntervalLit, Points, Empty)):
        return SET1
    if isinstance(node, Diag):
        return SET2
    if isinstance(node, SetOp):
        left, right = typecheck(node.left, source), typecheck(node.right, source)
        if left not in (SET1, SET2) or right not in (SET1, SET2):
            raise fail(f"operator {node.op!r} needs sets, got {left} and {right}")
        if left != right:
            raise fail(f"operator {node.op!r} mixes a 1-D and a 2-D set")
        return left
    if isinstance(node, Compare):
        left, right = typecheck(node.left, source), typecheck(node.right, source)
        if left != MEASURE or right != MEASURE:
            raise fail(f"comparison needs two measure values, got {left} and {right}")
        return BOOL
    if isinstance(node, Call):
        params, result = SIGNATURES[node.func]
        for kind, arg in zip(params, node.args):
            got = typecheck(arg, source)
            if kind == INT:
                if got != NUM or arg.value.denominator != 1:
                    raise fail(f"{node.func} needs an integer argument")
            elif got != kind:
                want = {SET1: "a 1-D set", SET2: "a 2-D set", NUM: "a number"}[kind]
                raise TypeCheckError(
                    f"{node.func} needs {want}, got {got} `{to_source(arg)}`",
                    source, arg.span[0])
        return result
    raise TypeError(f"not an AST node: {node!r}")


# -- evaluation ------------------------------------------------------------

@dataclass
class EvalOutcome:
    value: Any  # ExtReal, bool, or a set for bare set expressions
    echo: str
    diagnostics: List[str] = field(default_factory=list)

    def value_text(self) -> str:
        if isinstance(self.value, bool):
            return "true" if self.value else "false"
        return str(self.value)


_MEASURES = {"pi": pi_outer, "rho": rho_cld, "xi": xi, "eta": eta}


class _Evaluator:
    def __init__(self, source: str):
        self.source = source
        self.diagnostics: List[str] = []

    def domain_error(self, node, exc) -> EvalDomainError:
        return EvalDomainError(f"{exc} in `{to_source(node)}`", self.source, node.span[0])

    def run(self, node):
        try:
            return self._eval(node)
        except DomainError as exc:
            raise self.domain_error(node, exc) from None

    def _eval(self, node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, IntervalLit):
            return Set1D.interval(node.lo, node.hi, node.lo_closed, node.hi_closed)
        if isinstance(node, Points):
            return Set1D.of_points(*node.values)
        if isinstance(node, Empty):
            return Set1D.empty()
        if isinstance(node, Diag):
            return diagonal()
        if isinstance(node, SetOp):
            left, right = self.run(node.left), self.run(node.right)
            if node.op == "|":
                return left | right
            if node.op == "&":
                return left & right
            return left - right
        if isinstance(node, Compare):
            left, right = self.run(node.left), self.run(node.right)
            return left == right if node.op == "==" else left <= right
        if isinstance(node, Call):
            args = [self.run(a) for a in node.args]
            try:
                return self._call(node.func, args)
            except DomainError as exc:
                raise self.domain_error(node, exc) from None
        raise TypeError(f"not an AST node: {node!r}")

    def _call(self, func: str, args):
        if func == "rect":
            return rect(*args)
        if func == "graph":
            return graph(*args)
        if func == "diag_approx":
            if args[0] < 1:
                raise DomainError("diag_approx needs N >= 1")
            return diagonal_approx(int(args[0]))
        if func == "vshift":
            return args[0].vshift(args[1])
        if func == "shift1":
            return args[0].shift(args[1])
        if func == "mu":
            return args[0].counting()
        if func == "nu":
            return args[0].lebesgue()
        if func == "eta_t":
            return eta_family(args[0], args[1])
        e = args[0]
        if func == "pi" and e.graphs:
            self.diagnostics.append("pi: positive-length slope-1 graph part forces inf")
        return _MEASURES[func](e)


def evaluate(query) -> EvalOutcome:
    """Evaluate query text (or a parsed AST) exactly."""
    if isinstance(query, str):
        source = query
        ast = parse(query)
    else:
        ast = query
        source = to_source(ast)
        typecheck(ast, source)
    ev = _Evaluator(source)
    value = ev.run(ast)
    return EvalOutcome(value, to_source(ast), ev.diagnostics)
