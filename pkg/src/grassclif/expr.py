"""Expression language for the command line: parser, formatter, evaluator.

The grammar mirrors the session notation of the library: blades ``Id``,
``e2``, ``e1we2we3`` (compact alias ``e123``, dotted ``e1We2`` in dotted
mode), exact rational literals (decimals become fractions), free symbols,
form entries ``B[1,2]``, the infix products ``&w``, ``&c``, ``&c[K]``,
``&dw[F]``, and the calls ``LC``, ``RC``, ``reversion``, ``gradeinv``,
``w2d``, ``d2w`` plus n-ary ``wedge``, ``cmul[K]``, ``dwedge[F]``.

Precedence, loosest to tightest: binary ``+``/``-``; the product tier
``&w``/``&c``/``&dw`` (left associative); ``*``; unary minus; ``^``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .bform import BilinearForm, split
from .dotted import DottedContext, dwedge_n, dwedge_to_wedge, wedge_to_dwedge
from .multivector import Blade, Multivector, reorder, wedge_n
from .product import Algorithm, cmul_n, left_contract, reversion, right_contract
from .scalar import Scalar


class ParseError(ValueError):
    def __init__(self, message: str, source: str, pos: int):
        line = source.count("\n", 0, pos) + 1
        col = pos - (source.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at {line}:{col}")
        self.pos = pos
        self.line = line
        self.col = col


class EvalError(ValueError):
    pass


# ---------------------------------------------------------------------------
# tokens
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:\.\d+)?)
  | (?P<amp>&[A-Za-z]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[+\-*/^(),\[\]])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def _tokenize(src: str) -> list:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", src, pos)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(src)))
    return out


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class SymAtom:
    name: str


@dataclass(frozen=True)
class EntryAtom:
    form: str
    row: int
    col: int


@dataclass(frozen=True)
class BladeLit:
    indices: tuple
    dotted: bool = False


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class WedgeOp:
    left: object
    right: object


@dataclass(frozen=True)
class CmulOp:
    left: object
    right: object
    form: str | None = None


@dataclass(frozen=True)
class DwedgeOp:
    left: object
    right: object
    form: str | None = None


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple
    form: str | None = None


_UNARY_FNS = {"reversion": (1, True), "gradeinv": (1, False)}
_BINARY_FNS = {"LC": (2, True), "RC": (2, True)}
_CONVERT_FNS = {"w2d", "d2w"}
_NARY_FNS = {"cmul", "wedge", "dwedge"}
_BLADE_RE = re.compile(r"^e\d+(?:[wW]e\d+)*$")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, src: str, dim: int):
        self.src = src
        self.dim = dim
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.next()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text!r}", self.src, t.pos)
        return t

    def error(self, message: str, tok: Token):
        raise ParseError(message, self.src, tok.pos)

    # grammar levels --------------------------------------------------

    def parse(self):
        node = self.additive()
        t = self.peek()
        if t.kind != "end":
            self.error(f"unexpected trailing input {t.text!r}", t)
        return node

    def additive(self):
        node = self.product_tier()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            rhs = self.product_tier()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def product_tier(self):
        node = self.multiplicative()
        while self.peek().kind == "amp":
            t = self.next()
            form = self.opt_form_index()
            rhs = self.multiplicative()
            if t.text == "&w":
                if form is not None:
                    self.error("&w takes no form index", t)
                node = WedgeOp(node, rhs)
            elif t.text == "&c":
                node = CmulOp(node, rhs, form)
            elif t.text == "&dw":
                node = DwedgeOp(node, rhs, form)
            else:
                self.error(f"unknown operator {t.text!r}", t)
        return node

    def multiplicative(self):
        node = self.unary()
        while self.peek().text in ("*", "/"):
            op = self.next()
            rhs = self.unary()
            if op.text == "*":
                node = Mul(node, rhs)
            elif isinstance(node, Num) and isinstance(rhs, Num):
                if not rhs.value:
                    self.error("division by zero", op)
                node = Num(node.value / rhs.value)
            else:
                node = Div(node, rhs)
        return node

    def unary(self):
        if self.peek().text == "-":
            self.next()
            arg = self.unary()
            return arg.arg if isinstance(arg, Neg) else Neg(arg)
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek().text == "^":
            self.next()
            t = self.next()
            if t.kind != "number" or "." in t.text:
                self.error("exponent must be a nonnegative integer", t)
            node = Pow(node, int(t.text))
        return node

    def opt_form_index(self) -> str | None:
        if self.peek().text != "[":
            return None
        self.next()
        t = self.next()
        if t.kind != "ident":
            self.error("expected a form name", t)
        self.expect("]")
        return t.text

    def call_args(self) -> list:
        self.expect("(")
        args = [self.additive()]
        while self.peek().text == ",":
            self.next()
            args.append(self.additive())
        self.expect(")")
        return args

    def atom(self):
        t = self.next()
        if t.text == "(":
            node = self.additive()
            self.expect(")")
            return node
        if t.kind == "number":
            return Num(Fraction(t.text))
        if t.kind == "ident":
            return self.ident_atom(t)
        self.error(f"unexpected token {t.text!r}", t)

    def ident_atom(self, t: Token):
        name = t.text
        if name == "Id":
            return BladeLit(())
        if _BLADE_RE.match(name):
            return self.blade_atom(t)
        if re.match(r"^e[A-Za-z]", name):
            self.error(f"symbolic basis-vector index in {name!r} is not supported", t)
        if name in _NARY_FNS:
            form = self.opt_form_index()
            args = self.call_args()
            return self.fold_nary(name, args, form, t)
        if name in _UNARY_FNS:
            nargs, takes_form = _UNARY_FNS[name]
            return self.named_call(name, nargs, takes_form, t)
        if name in _BINARY_FNS:
            nargs, takes_form = _BINARY_FNS[name]
            return self.named_call(name, nargs, takes_form, t)
        if name in _CONVERT_FNS:
            args = self.call_args()
            if len(args) != 2 or not isinstance(args[-1], SymAtom):
                self.error(f"{name} takes an expression and a form name", t)
            return Call(name, (args[0],), args[1].name)
        if self.peek().text == "[":
            return self.entry_atom(name, t)
        if self.peek().text == "(":
            self.error(f"unknown function {name!r}", t)
        return SymAtom(name)

    def named_call(self, name: str, nargs: int, takes_form: bool, t: Token):
        args = self.call_args()
        form = None
        if takes_form and len(args) == nargs + 1:
            if not isinstance(args[-1], SymAtom):
                self.error(f"the final argument of {name} must be a form name", t)
            form = args[-1].name
            args = args[:-1]
        if len(args) != nargs:
            self.error(f"{name} takes {nargs} expression argument(s)", t)
        return Call(name, tuple(args), form)

    def fold_nary(self, name: str, args: list, form: str | None, t: Token):
        if not args:
            self.error(f"{name} needs at least one argument", t)
        node = args[0]
        for rhs in args[1:]:
            if name == "cmul":
                node = CmulOp(node, rhs, form)
            elif name == "wedge":
                if form is not None:
                    self.error("wedge takes no form index", t)
                node = WedgeOp(node, rhs)
            else:
                node = DwedgeOp(node, rhs, form)
        return node

    def blade_atom(self, t: Token):
        name = t.text
        seps = set(re.findall(r"[wW](?=e\d)", name))
        if len(seps) > 1:
            self.error(f"mixed blade separators in {name!r}", t)
        dotted = seps == {"W"}
        if seps:
            parts = re.split(r"[wW]", name)
            indices = [int(p[1:]) for p in parts]
        else:
            digits = name[1:]
            indices = [int(d) for d in digits] if len(digits) > 1 else [int(digits)]
        for i in indices:
            if not (1 <= i <= self.dim):
                self.error(f"blade index {i} out of range 1..{self.dim}", t)
        sign, blade = reorder(self.dim, indices)
        if sign == 0:
            return Num(Fraction(0))
        lit = BladeLit(blade.indices, dotted)
        return Neg(lit) if sign < 0 else lit

    def entry_atom(self, name: str, t: Token):
        self.expect("[")
        row = self.next()
        self.expect(",")
        col = self.next()
        self.expect("]")
        if row.kind != "number" or col.kind != "number" or "." in row.text + col.text:
            self.error("form entry indices must be integers", t)
        return EntryAtom(name, int(row.text), int(col.text))


def parse(src: str, dim: int):
    """Parse a session expression; raises :class:`ParseError` with position."""
    return _Parser(src, dim).parse()


def parse_scalar(src: str, dim: int, session: "Session | None" = None) -> Scalar:
    """Parse and evaluate a scalar-valued expression (used by form files)."""
    session = session or Session(dim=dim, default_form=BilinearForm.named("B", dim))
    value = evaluate(parse(src, dim), session)
    if not value.is_scalar():
        raise EvalError(f"expected a scalar expression, got {value}")
    return value.scalar_part()


# ---------------------------------------------------------------------------
# formatter
# ---------------------------------------------------------------------------

_PREC = {Add: 1, Sub: 1, WedgeOp: 2, CmulOp: 2, DwedgeOp: 2, Mul: 3, Div: 3, Neg: 4, Pow: 5}

_BINARY_TEXT = {Add: " + ", Sub: " - ", WedgeOp: " &w ", Mul: "*", Div: "/"}


def _prec(node) -> int:
    return _PREC.get(type(node), 6)


def _fmt(node, min_prec: int) -> str:
    # binary operators are left associative: right operands climb one level
    p = _prec(node)
    if isinstance(node, Num):
        s = str(node.value)
        return f"({s})" if "/" in s and min_prec >= 4 else s
    if isinstance(node, SymAtom):
        text = node.name
    elif isinstance(node, EntryAtom):
        text = f"{node.form}[{node.row},{node.col}]"
    elif isinstance(node, BladeLit):
        if not node.indices:
            text = "Id"
        else:
            sep = "W" if node.dotted else "w"
            text = sep.join(f"e{i}" for i in node.indices)
    elif isinstance(node, Neg):
        text = "-" + _fmt(node.arg, p)
    elif isinstance(node, (Add, Sub, WedgeOp, Mul, Div)):
        text = f"{_fmt(node.left, p)}{_BINARY_TEXT[type(node)]}{_fmt(node.right, p + 1)}"
    elif isinstance(node, (CmulOp, DwedgeOp)):
        base = "&c" if isinstance(node, CmulOp) else "&dw"
        op = f"{base}[{node.form}]" if node.form else base
        text = f"{_fmt(node.left, p)} {op} {_fmt(node.right, p + 1)}"
    elif isinstance(node, Pow):
        text = f"{_fmt(node.base, p + 1)}^{node.exponent}"
    elif isinstance(node, Call):
        args = [_fmt(a, 0) for a in node.args]
        if node.form:
            args.append(node.form)
        text = f"{node.fn}({', '.join(args)})"
    else:
        raise TypeError(f"cannot format {node!r}")
    return f"({text})" if p < min_prec else text


def format_expr(node) -> str:
    """Canonical text of an AST; reparses to an equal AST."""
    return _fmt(node, 0)


# ---------------------------------------------------------------------------
# evaluator
# ---------------------------------------------------------------------------

@dataclass
class Session:
    """Evaluation context: dimension, forms, product algorithm, basis mode.

    Form names resolve against the declared ``forms`` first.  Undeclared
    names materialize on first use as fully symbolic named forms, with two
    notational conventions: ``g`` is created symmetric and ``F``
    antisymmetric, matching their roles in the split ``B = g + F``.
    """

    dim: int
    default_form: BilinearForm
    algorithm: Algorithm = Algorithm.ROTA_STEIN
    basis: str = "undotted"
    forms: dict = field(default_factory=dict)
    _contexts: dict = field(default_factory=dict)

    def _auto_form(self, name: str) -> BilinearForm:
        if name == "g":
            return BilinearForm.symmetric_named(name, self.dim)
        if name == "F":
            return BilinearForm.antisymmetric_named(name, self.dim)
        return BilinearForm.named(name, self.dim)

    def resolve_form(self, name: str | None) -> BilinearForm:
        if name is None:
            return self.default_form
        form = self.forms.get(name)
        if form is None:
            form = self._auto_form(name)
            self.forms[name] = form
        return form

    def dotted_context(self, name: str | None) -> DottedContext:
        key = name or "F"
        ctx = self._contexts.get(key)
        if ctx is not None:
            return ctx
        form = self.forms.get(key)
        if form is None:
            form = BilinearForm.antisymmetric_named(key, self.dim)
            self.forms[key] = form
        if not form.is_antisymmetric():
            raise EvalError(f"form {key!r} is not antisymmetric")
        ctx = DottedContext(form, self.algorithm)
        self._contexts[key] = ctx
        return ctx

    def default_dotted_context(self) -> DottedContext:
        return self.dotted_context(None)


def evaluate(node, session: Session) -> Multivector:
    """Evaluate an AST to a multivector (scalars land on Id)."""
    dim = session.dim
    if isinstance(node, Num):
        return Multivector.unit(dim, node.value)
    if isinstance(node, SymAtom):
        return Multivector.unit(dim, Scalar.sym(node.name))
    if isinstance(node, EntryAtom):
        return Multivector.unit(dim, Scalar.form_entry(node.form, node.row, node.col))
    if isinstance(node, BladeLit):
        blade = Blade.from_indices(dim, node.indices)
        if node.dotted:
            if session.basis != "dotted":
                raise EvalError(f"dotted blade {format_expr(node)} outside dotted mode")
            return wedge_to_dwedge(blade.as_multivector(), session.default_dotted_context())
        return blade.as_multivector()
    if isinstance(node, Neg):
        return -evaluate(node.arg, session)
    if isinstance(node, Add):
        return evaluate(node.left, session) + evaluate(node.right, session)
    if isinstance(node, Sub):
        return evaluate(node.left, session) - evaluate(node.right, session)
    if isinstance(node, Mul):
        left = evaluate(node.left, session)
        right = evaluate(node.right, session)
        if left.is_scalar():
            return right.scale(left.scalar_part())
        if right.is_scalar():
            return left.scale(right.scalar_part())
        raise EvalError("'*' scales by scalars; use &w or &c for multivector products")
    if isinstance(node, Div):
        left = evaluate(node.left, session)
        right = evaluate(node.right, session)
        if not right.is_scalar() or not right.scalar_part().is_rational():
            raise EvalError("'/' divides by nonzero rational constants only")
        d = right.scalar_part().as_rational()
        if not d:
            raise EvalError("division by zero")
        return left.scale(Fraction(1) / d)
    if isinstance(node, Pow):
        base = evaluate(node.base, session)
        if not base.is_scalar():
            raise EvalError("'^' applies to scalar expressions only")
        return Multivector.unit(dim, base.scalar_part() ** node.exponent)
    if isinstance(node, WedgeOp):
        return wedge_n(evaluate(node.left, session), evaluate(node.right, session))
    if isinstance(node, CmulOp):
        B = session.resolve_form(node.form)
        return cmul_n(
            [evaluate(node.left, session), evaluate(node.right, session)],
            B,
            session.algorithm,
        )
    if isinstance(node, DwedgeOp):
        ctx = session.dotted_context(node.form)
        return dwedge_n([evaluate(node.left, session), evaluate(node.right, session)], ctx)
    if isinstance(node, Call):
        return _eval_call(node, session)
    raise TypeError(f"cannot evaluate {node!r}")


def _eval_call(node: Call, session: Session) -> Multivector:
    args = [evaluate(a, session) for a in node.args]
    if node.fn == "LC":
        return left_contract(args[0], args[1], session.resolve_form(node.form))
    if node.fn == "RC":
        return right_contract(args[0], args[1], session.resolve_form(node.form))
    if node.fn == "reversion":
        return reversion(args[0], session.resolve_form(node.form), session.algorithm)
    if node.fn == "gradeinv":
        return args[0].gradeinv()
    if node.fn == "w2d":
        return wedge_to_dwedge(args[0], session.dotted_context(node.form))
    if node.fn == "d2w":
        return dwedge_to_wedge(args[0], session.dotted_context(node.form))
    raise EvalError(f"unknown function {node.fn!r}")
