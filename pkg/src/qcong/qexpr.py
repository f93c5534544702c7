"""A small expression language over the series primitives.

Grammar (whitespace insignificant, `^` binds tightest, then `*` `/`, then
`+` `-`, all left associative)::

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom ("^" ["-"] INT)*
    atom   := INT | "q" | "C" | "Ck" "[" INT "]" | "f" "[" INT "]"
            | "omega" "(" qarg ")" | "B" "(" qarg ")" | "f3" "(" qarg ")"
            | "pochinf" "[" SINT "," INT "," INT "]"
            | "pochfin" "[" SINT "," INT "," INT "," INT "]"
            | "D" "[" INT "," INT "]" "(" expr ")"
            | "(" expr ")"
    qarg   := ["-"] "q" ["^" INT]

`f[m]` is the product of (1 - q^(m*j)) over j >= 1, `C` and `Ck[k]` are the
two-color counting series, `omega`/`B`/`f3` accept an argument of the form
sign * q^power, and `D[m,r](...)` extracts the coefficients at exponents
m*n + r.  Division is literal series division: the denominator must have a
unit constant term.  Only integer literals exist; there are no rationals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

from .engine import series_c, series_ck
from .mock_theta import b_eulerian, f3_series, omega_series
from .products import euler_fm, pochhammer_fin, pochhammer_inf
from .series import (
    EXACT,
    CoefficientRing,
    Series,
    constant_series,
    dissect,
    invert,
    monomial,
    mul,
    power,
    substitute_power,
    truncate,
)


class ParseError(ValueError):
    """Syntax or bounds error, carrying the byte offset into the source."""

    def __init__(self, offset: int, message: str, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = expected
        if expected:
            message = f"{message}; expected one of: {', '.join(expected)}"
        super().__init__(f"offset {offset}: {message}")


# ----------------------------------------------------------------- nodes


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Q:
    pass


@dataclass(frozen=True)
class EtaF:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("f[m] needs m >= 1")


@dataclass(frozen=True)
class PochInf:
    sign: int
    s: int
    m: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("pochhammer sign must be 1 or -1")
        if self.s < 1 or self.m < 1:
            raise ValueError("pochhammer needs s >= 1 and m >= 1")


@dataclass(frozen=True)
class PochFin:
    sign: int
    s: int
    m: int
    n: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("pochhammer sign must be 1 or -1")
        if self.s < 1 or self.m < 1 or self.n < 0:
            raise ValueError("pochhammer needs s >= 1, m >= 1, n >= 0")


def _check_qarg(sign: int, qpow: int) -> None:
    if sign not in (1, -1):
        raise ValueError("argument sign must be 1 or -1")
    if qpow < 1:
        raise ValueError("argument power must be >= 1")


@dataclass(frozen=True)
class Omega:
    sign: int
    qpow: int

    def __post_init__(self):
        _check_qarg(self.sign, self.qpow)


@dataclass(frozen=True)
class BFun:
    sign: int
    qpow: int

    def __post_init__(self):
        _check_qarg(self.sign, self.qpow)


@dataclass(frozen=True)
class F3:
    sign: int
    qpow: int

    def __post_init__(self):
        _check_qarg(self.sign, self.qpow)


@dataclass(frozen=True)
class CSeries:
    pass


@dataclass(frozen=True)
class CkSeries:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("Ck[k] needs k >= 1")


@dataclass(frozen=True)
class Add:
    left: "QExpr"
    right: "QExpr"


@dataclass(frozen=True)
class Sub:
    left: "QExpr"
    right: "QExpr"


@dataclass(frozen=True)
class Mul:
    left: "QExpr"
    right: "QExpr"


@dataclass(frozen=True)
class Div:
    left: "QExpr"
    right: "QExpr"


@dataclass(frozen=True)
class Pow:
    base: "QExpr"
    exponent: int


@dataclass(frozen=True)
class Dissect:
    m: int
    r: int
    child: "QExpr"

    def __post_init__(self):
        if self.m < 1 or not 0 <= self.r < self.m:
            raise ValueError(
                f"dissection needs 0 <= r < m, got m={self.m}, r={self.r}")


QExpr = Union[Num, Q, EtaF, PochInf, PochFin, Omega, BFun, F3, CSeries,
              CkSeries, Add, Sub, Mul, Div, Pow, Dissect]


# ------------------------------------------------------------- tokenizer


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([+\-*/^()\[\],]))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            stripped = src[pos:].lstrip()
            if not stripped:
                break
            offset = len(src) - len(stripped)
            raise ParseError(offset, f"unexpected character {stripped[0]!r}")
        offset = match.start(match.lastindex)
        kind = ("int", "name", "sym")[match.lastindex - 1]
        tokens.append((kind, match.group(match.lastindex), offset))
        pos = match.end()
    tokens.append(("end", "", len(src)))
    return tokens


_ATOM_EXPECTED = ("integer", "q", "C", "Ck", "f", "f3", "omega", "B",
                  "pochinf", "pochfin", "D", "(", "-")


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def match_sym(self, *symbols: str) -> str | None:
        kind, text, _ = self.peek()
        if kind == "sym" and text in symbols:
            self.pos += 1
            return text
        return None

    def expect_sym(self, symbol: str) -> None:
        kind, text, offset = self.peek()
        if kind != "sym" or text != symbol:
            raise ParseError(offset, f"got {text!r}" if text else "got end of input",
                             expected=(symbol,))
        self.pos += 1

    def expect_int(self) -> int:
        kind, text, offset = self.peek()
        if kind != "int":
            raise ParseError(offset, f"got {text!r}" if text else "got end of input",
                             expected=("integer",))
        self.pos += 1
        return int(text)

    def signed_int(self) -> int:
        negative = self.match_sym("-") is not None
        value = self.expect_int()
        return -value if negative else value

    def node(self, offset: int, ctor: Callable, *args) -> QExpr:
        # semantic bounds (dissection residue, argument signs, ...) live on
        # the node constructors; surface them with the source position
        try:
            return ctor(*args)
        except ValueError as exc:
            raise ParseError(offset, str(exc)) from None

    # precedence ladder

    def expr(self) -> QExpr:
        node = self.term()
        while True:
            op = self.match_sym("+", "-")
            if op is None:
                return node
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)

    def term(self) -> QExpr:
        node = self.factor()
        while True:
            op = self.match_sym("*", "/")
            if op is None:
                return node
            right = self.factor()
            node = Mul(node, right) if op == "*" else Div(node, right)

    def factor(self) -> QExpr:
        node = self.atom()
        while self.match_sym("^"):
            node = Pow(node, self.signed_int())
        return node

    def atom(self) -> QExpr:
        kind, text, offset = self.peek()
        if kind == "int":
            self.pos += 1
            return Num(int(text))
        if kind == "sym" and text == "-":
            self.pos += 1
            inner = self.factor()
            if isinstance(inner, Num):
                return Num(-inner.value)
            return Sub(Num(0), inner)
        if kind == "sym" and text == "(":
            self.pos += 1
            node = self.expr()
            self.expect_sym(")")
            return node
        if kind == "name":
            self.pos += 1
            return self.named_atom(text, offset)
        raise ParseError(offset, f"got {text!r}" if text else "got end of input",
                         expected=_ATOM_EXPECTED)

    def named_atom(self, name: str, offset: int) -> QExpr:
        if name == "q":
            return Q()
        if name == "C":
            return CSeries()
        if name == "Ck":
            self.expect_sym("[")
            k = self.expect_int()
            self.expect_sym("]")
            return self.node(offset, CkSeries, k)
        if name == "f":
            self.expect_sym("[")
            m = self.expect_int()
            self.expect_sym("]")
            return self.node(offset, EtaF, m)
        if name in ("omega", "B", "f3"):
            ctor = {"omega": Omega, "B": BFun, "f3": F3}[name]
            self.expect_sym("(")
            sign, qpow = self.qarg()
            self.expect_sym(")")
            return self.node(offset, ctor, sign, qpow)
        if name == "pochinf":
            self.expect_sym("[")
            sign = self.signed_int()
            self.expect_sym(",")
            s = self.expect_int()
            self.expect_sym(",")
            m = self.expect_int()
            self.expect_sym("]")
            return self.node(offset, PochInf, sign, s, m)
        if name == "pochfin":
            self.expect_sym("[")
            sign = self.signed_int()
            self.expect_sym(",")
            s = self.expect_int()
            self.expect_sym(",")
            m = self.expect_int()
            self.expect_sym(",")
            n = self.expect_int()
            self.expect_sym("]")
            return self.node(offset, PochFin, sign, s, m, n)
        if name == "D":
            self.expect_sym("[")
            m = self.expect_int()
            self.expect_sym(",")
            r = self.expect_int()
            self.expect_sym("]")
            self.expect_sym("(")
            child = self.expr()
            self.expect_sym(")")
            return self.node(offset, Dissect, m, r, child)
        raise ParseError(offset, f"unknown name {name!r}", expected=_ATOM_EXPECTED)

    def qarg(self) -> tuple[int, int]:
        sign = -1 if self.match_sym("-") else 1
        kind, text, offset = self.peek()
        if kind != "name" or text != "q":
            raise ParseError(offset, f"got {text!r}" if text else "got end of input",
                             expected=("q",))
        self.pos += 1
        qpow = self.expect_int() if self.match_sym("^") else 1
        return sign, qpow


def parse(src: str) -> QExpr:
    parser = _Parser(src)
    node = parser.expr()
    kind, text, offset = parser.peek()
    if kind != "end":
        raise ParseError(offset, f"trailing input starting at {text!r}",
                         expected=("end of input",))
    return node


# --------------------------------------------------------------- printer


_PREC_ADD, _PREC_MUL, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4


def _qarg_source(sign: int, qpow: int) -> str:
    text = "-q" if sign < 0 else "q"
    return text if qpow == 1 else f"{text}^{qpow}"


def _source(e: QExpr, context: int) -> str:
    if isinstance(e, Num):
        mine, text = _PREC_ATOM, str(e.value)
    elif isinstance(e, Q):
        mine, text = _PREC_ATOM, "q"
    elif isinstance(e, CSeries):
        mine, text = _PREC_ATOM, "C"
    elif isinstance(e, CkSeries):
        mine, text = _PREC_ATOM, f"Ck[{e.k}]"
    elif isinstance(e, EtaF):
        mine, text = _PREC_ATOM, f"f[{e.m}]"
    elif isinstance(e, PochInf):
        mine, text = _PREC_ATOM, f"pochinf[{e.sign},{e.s},{e.m}]"
    elif isinstance(e, PochFin):
        mine, text = _PREC_ATOM, f"pochfin[{e.sign},{e.s},{e.m},{e.n}]"
    elif isinstance(e, Omega):
        mine, text = _PREC_ATOM, f"omega({_qarg_source(e.sign, e.qpow)})"
    elif isinstance(e, BFun):
        mine, text = _PREC_ATOM, f"B({_qarg_source(e.sign, e.qpow)})"
    elif isinstance(e, F3):
        mine, text = _PREC_ATOM, f"f3({_qarg_source(e.sign, e.qpow)})"
    elif isinstance(e, Dissect):
        mine, text = _PREC_ATOM, f"D[{e.m},{e.r}]({_source(e.child, 0)})"
    elif isinstance(e, Pow):
        base = _source(e.base, _PREC_POW)
        if isinstance(e.base, Num) and e.base.value < 0:
            base = f"({base})"
        mine, text = _PREC_POW, f"{base}^{e.exponent}"
    elif isinstance(e, (Mul, Div)):
        op = "*" if isinstance(e, Mul) else "/"
        mine = _PREC_MUL
        text = f"{_source(e.left, _PREC_MUL)}{op}{_source(e.right, _PREC_POW)}"
    elif isinstance(e, (Add, Sub)):
        op = "+" if isinstance(e, Add) else "-"
        mine = _PREC_ADD
        text = f"{_source(e.left, _PREC_ADD)} {op} {_source(e.right, _PREC_MUL)}"
    else:
        raise TypeError(f"not a QExpr node: {e!r}")
    return f"({text})" if mine < context else text


def to_source(e: QExpr) -> str:
    """Canonical text form; parse(to_source(e)) reproduces e exactly."""
    return _source(e, 0)


# ------------------------------------------------------------- evaluator


def _composed(series_fn: Callable[[int, CoefficientRing], Series], sign: int,
              qpow: int, order: int, ring: CoefficientRing) -> Series:
    # inner order chosen so the substituted series still covers `order`
    inner = (order + qpow - 2) // qpow + 1
    outer = substitute_power(series_fn(inner, ring), qpow, sign)
    return truncate(outer, order)


def evaluate(e: QExpr, order: int, ring: CoefficientRing = EXACT) -> Series:
    """Evaluate bottom-up with every node truncated to `order`.

    Dissection children are computed at order m*(order-1)+r+1 so the result
    keeps full length; division and negative powers require the denominator
    to be a unit and raise NonUnitError otherwise.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if isinstance(e, Num):
        return constant_series(ring, order, e.value)
    if isinstance(e, Q):
        return monomial(ring, order, 1)
    if isinstance(e, EtaF):
        return euler_fm(e.m, order, ring)
    if isinstance(e, PochInf):
        return pochhammer_inf(e.sign, e.s, e.m, order, ring)
    if isinstance(e, PochFin):
        return pochhammer_fin(e.sign, e.s, e.m, e.n, order, ring)
    if isinstance(e, Omega):
        return _composed(omega_series, e.sign, e.qpow, order, ring)
    if isinstance(e, BFun):
        return _composed(b_eulerian, e.sign, e.qpow, order, ring)
    if isinstance(e, F3):
        return _composed(f3_series, e.sign, e.qpow, order, ring)
    if isinstance(e, CSeries):
        return series_c(order, ring)
    if isinstance(e, CkSeries):
        return series_ck(e.k, order, ring)
    if isinstance(e, Add):
        return evaluate(e.left, order, ring) + evaluate(e.right, order, ring)
    if isinstance(e, Sub):
        return evaluate(e.left, order, ring) - evaluate(e.right, order, ring)
    if isinstance(e, Mul):
        return mul(evaluate(e.left, order, ring), evaluate(e.right, order, ring))
    if isinstance(e, Div):
        return mul(evaluate(e.left, order, ring),
                   invert(evaluate(e.right, order, ring)))
    if isinstance(e, Pow):
        return power(evaluate(e.base, order, ring), e.exponent)
    if isinstance(e, Dissect):
        child = evaluate(e.child, e.m * (order - 1) + e.r + 1, ring)
        return dissect(child, e.m, e.r)
    raise TypeError(f"not a QExpr node: {e!r}")
