"""A small expression language for composites in the strict symmetric
monoidal calculus.

Grammar::

    expr   := comp
    comp   := tens ( ("." | ";") tens )*      -- "." is classical ∘ (right
    tens   := atom ( "#" atom )*                 operand applied first);
    atom   := prim | NAME | "(" expr ")"         "a ; b" is sugar for "b . a"
    prim   := ("id"|"eta"|"mu"|"eps"|"delta"|"lam") "[" objexpr "]"
            | "c" "[" objexpr "," objexpr "]"
    objexpr:= "I" | NAME ( "#" NAME )*
    NAME   := [A-Za-z_][A-Za-z0-9_]*

Whitespace is insignificant; "--" starts a line comment.  "#" binds tighter
than "." and ";"; both levels associate to the left.  Structure maps of a
tensor object expression (e.g. ``delta[H#A]``) elaborate to the canonical
tensor-product structure; ``lam`` requires a single structure name.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .category import braiding, unit_map
from .linmap import LinMap, identity, lin_compose, lin_tensor
from .reports import AxiomEntry, compare_maps
from .structures import (
    HopfQuasigroupData,
    tensor_delta,
    tensor_eps,
    tensor_eta,
    tensor_mu,
)


class DslSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int) -> None:
        self.line = line
        self.col = col
        super().__init__(f"{message} at line {line}, column {col}")


class UnboundNameError(KeyError):
    def __init__(self, name: str, pos: tuple[int, int]) -> None:
        self.name = name
        self.pos = pos
        super().__init__(f"unbound name {name!r} at line {pos[0]}, column {pos[1]}")

    def __str__(self) -> str:  # KeyError quotes its payload otherwise
        return self.args[0]


class TypeMismatchError(ValueError):
    pass


Pos = tuple[int, int]


@dataclass(frozen=True)
class ObjExpr:
    names: tuple[str, ...]  # empty tuple is the unit object I

    def __str__(self) -> str:
        return "#".join(self.names) if self.names else "I"


@dataclass(frozen=True)
class MorExpr:
    pos: Pos = field(compare=False, repr=False, kw_only=True, default=(0, 0))


@dataclass(frozen=True)
class Id(MorExpr):
    obj: ObjExpr


@dataclass(frozen=True)
class Eta(MorExpr):
    obj: ObjExpr


@dataclass(frozen=True)
class Mu(MorExpr):
    obj: ObjExpr


@dataclass(frozen=True)
class Eps(MorExpr):
    obj: ObjExpr


@dataclass(frozen=True)
class Delta(MorExpr):
    obj: ObjExpr


@dataclass(frozen=True)
class Lam(MorExpr):
    obj: ObjExpr


@dataclass(frozen=True)
class Braid(MorExpr):
    left: ObjExpr
    right: ObjExpr


@dataclass(frozen=True)
class Named(MorExpr):
    name: str


@dataclass(frozen=True)
class Compose(MorExpr):
    f: MorExpr
    g: MorExpr  # g applied first


@dataclass(frozen=True)
class Tensor(MorExpr):
    f: MorExpr
    g: MorExpr


_PRIMS = ("id", "eta", "mu", "eps", "delta", "lam")

_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[.;#,()\[\]]")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def _tokenize(text: str) -> list[tuple[str, Pos]]:
    tokens: list[tuple[str, Pos]] = []
    for ln, line in enumerate(text.splitlines() or [""], start=1):
        comment = line.find("--")
        if comment >= 0:
            line = line[:comment]
        col = 0
        while col < len(line):
            ch = line[col]
            if ch.isspace():
                col += 1
                continue
            m = _TOKEN_RE.match(line, col)
            if not m:
                raise DslSyntaxError(f"unexpected character {ch!r}", ln, col + 1)
            tokens.append((m.group(0), (ln, col + 1)))
            col = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, Pos]]) -> None:
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> Pos:
        if self.i < len(self.tokens):
            return self.tokens[self.i][1]
        return self.tokens[-1][1] if self.tokens else (1, 1)

    def take(self, expected: Optional[str] = None) -> tuple[str, Pos]:
        if self.i >= len(self.tokens):
            raise DslSyntaxError(
                f"unexpected end of input (expected {expected!r})" if expected else "unexpected end of input",
                *self.pos(),
            )
        tok, pos = self.tokens[self.i]
        if expected is not None and tok != expected:
            raise DslSyntaxError(f"expected {expected!r}, found {tok!r}", *pos)
        self.i += 1
        return tok, pos

    def parse_expr(self) -> MorExpr:
        node = self.parse_tens()
        while self.peek() in (".", ";"):
            op, pos = self.take()
            rhs = self.parse_tens()
            node = Compose(node, rhs, pos=pos) if op == "." else Compose(rhs, node, pos=pos)
        return node

    def parse_tens(self) -> MorExpr:
        node = self.parse_atom()
        while self.peek() == "#":
            _, pos = self.take("#")
            rhs = self.parse_atom()
            node = Tensor(node, rhs, pos=pos)
        return node

    def parse_atom(self) -> MorExpr:
        tok = self.peek()
        if tok == "(":
            self.take("(")
            node = self.parse_expr()
            self.take(")")
            return node
        if tok is None:
            raise DslSyntaxError("unexpected end of input", *self.pos())
        name, pos = self.take()
        if not _NAME_RE.match(name):
            raise DslSyntaxError(f"expected a name, found {name!r}", *pos)
        if name in _PRIMS and self.peek() == "[":
            self.take("[")
            obj = self.parse_objexpr()
            self.take("]")
            cls = {"id": Id, "eta": Eta, "mu": Mu, "eps": Eps, "delta": Delta, "lam": Lam}[name]
            return cls(obj, pos=pos)
        if name == "c" and self.peek() == "[":
            self.take("[")
            left = self.parse_objexpr()
            self.take(",")
            right = self.parse_objexpr()
            self.take("]")
            return Braid(left, right, pos=pos)
        return Named(name, pos=pos)

    def parse_objexpr(self) -> ObjExpr:
        name, pos = self.take()
        if not _NAME_RE.match(name):
            raise DslSyntaxError(f"expected an object name, found {name!r}", *pos)
        if name == "I":
            return ObjExpr(())
        names = [name]
        while self.peek() == "#":
            self.take("#")
            nxt, npos = self.take()
            if not _NAME_RE.match(nxt) or nxt == "I":
                raise DslSyntaxError(f"expected an object name, found {nxt!r}", *npos)
            names.append(nxt)
        return ObjExpr(tuple(names))


def parse(text: str) -> MorExpr:
    """Parse a morphism expression; raises DslSyntaxError with line/column."""
    tokens = _tokenize(text)
    if not tokens:
        raise DslSyntaxError("empty expression", 1, 1)
    parser = _Parser(tokens)
    node = parser.parse_expr()
    if parser.i != len(tokens):
        tok, pos = parser.tokens[parser.i]
        raise DslSyntaxError(f"unexpected token {tok!r}", *pos)
    return node


Context = dict[str, Union[HopfQuasigroupData, LinMap]]


def _context_field(ctx: Context):
    for v in ctx.values():
        return v.field
    raise TypeMismatchError("empty context: bind at least one structure or morphism")


def _structures(obj: ObjExpr, ctx: Context, pos: Pos) -> list[HopfQuasigroupData]:
    structs = []
    for name in obj.names:
        bound = ctx.get(name)
        if bound is None:
            raise UnboundNameError(name, pos)
        if not isinstance(bound, HopfQuasigroupData):
            raise TypeMismatchError(
                f"{name!r} is bound to a morphism, but an object expression needs a structure "
                f"(line {pos[0]}, column {pos[1]})"
            )
        structs.append(bound)
    return structs


def eval_expr(e: MorExpr, ctx: Context) -> LinMap:
    """Evaluate an expression to an exact LinMap against a context of bindings."""
    f = _context_field(ctx)
    if isinstance(e, Named):
        bound = ctx.get(e.name)
        if bound is None:
            raise UnboundNameError(e.name, e.pos)
        if isinstance(bound, HopfQuasigroupData):
            raise TypeMismatchError(
                f"{e.name!r} is bound to a structure, not a morphism "
                f"(line {e.pos[0]}, column {e.pos[1]})"
            )
        return bound
    if isinstance(e, Id):
        structs = _structures(e.obj, ctx, e.pos)
        return identity(f, tuple(s.obj for s in structs))
    if isinstance(e, Braid):
        left = _structures(e.left, ctx, e.pos)
        right = _structures(e.right, ctx, e.pos)
        return braiding(f, tuple(s.obj for s in left), tuple(s.obj for s in right))
    if isinstance(e, (Eta, Mu, Eps, Delta, Lam)):
        structs = _structures(e.obj, ctx, e.pos)
        if not structs:
            return unit_map(f)
        if isinstance(e, Lam):
            if len(structs) != 1:
                raise TypeMismatchError(
                    f"lam needs a single structure name, got {e.obj} "
                    f"(line {e.pos[0]}, column {e.pos[1]})"
                )
            return structs[0].lam
        if len(structs) == 1:
            s = structs[0]
            return {Eta: s.eta, Mu: s.mu, Eps: s.eps, Delta: s.delta}[type(e)]
        builder = {Eta: tensor_eta, Mu: tensor_mu, Eps: tensor_eps, Delta: tensor_delta}[type(e)]
        return builder(structs)
    if isinstance(e, Compose):
        left = eval_expr(e.f, ctx)
        right = eval_expr(e.g, ctx)
        try:
            return lin_compose(left, right)
        except ValueError as exc:
            raise TypeMismatchError(
                f"{exc} (composition at line {e.pos[0]}, column {e.pos[1]})"
            ) from exc
    if isinstance(e, Tensor):
        return lin_tensor(eval_expr(e.f, ctx), eval_expr(e.g, ctx))
    raise TypeError(f"not a morphism expression: {e!r}")


def _print_objexpr(obj: ObjExpr) -> str:
    return str(obj)


def _needs_parens(child: MorExpr, parent: str, side: str) -> bool:
    if isinstance(child, Compose):
        return parent == "tensor" or (parent == "compose" and side == "right")
    if isinstance(child, Tensor):
        return parent == "tensor" and side == "right"
    return False


def print_expr(e: MorExpr) -> str:
    """Render an AST back to source; parse(print_expr(ast)) == ast."""
    if isinstance(e, Id):
        return f"id[{_print_objexpr(e.obj)}]"
    if isinstance(e, Eta):
        return f"eta[{_print_objexpr(e.obj)}]"
    if isinstance(e, Mu):
        return f"mu[{_print_objexpr(e.obj)}]"
    if isinstance(e, Eps):
        return f"eps[{_print_objexpr(e.obj)}]"
    if isinstance(e, Delta):
        return f"delta[{_print_objexpr(e.obj)}]"
    if isinstance(e, Lam):
        return f"lam[{_print_objexpr(e.obj)}]"
    if isinstance(e, Braid):
        return f"c[{_print_objexpr(e.left)},{_print_objexpr(e.right)}]"
    if isinstance(e, Named):
        return e.name
    if isinstance(e, Compose):
        lhs = print_expr(e.f)
        rhs = print_expr(e.g)
        if _needs_parens(e.f, "compose", "left"):
            lhs = f"({lhs})"
        if _needs_parens(e.g, "compose", "right"):
            rhs = f"({rhs})"
        return f"{lhs} . {rhs}"
    if isinstance(e, Tensor):
        lhs = print_expr(e.f)
        rhs = print_expr(e.g)
        if _needs_parens(e.f, "tensor", "left"):
            lhs = f"({lhs})"
        if _needs_parens(e.g, "tensor", "right"):
            rhs = f"({rhs})"
        return f"{lhs} # {rhs}"
    raise TypeError(f"not a morphism expression: {e!r}")


def check_equal(lhs: Union[str, MorExpr], rhs: Union[str, MorExpr], ctx: Context) -> AxiomEntry:
    """Evaluate both sides and compare exactly; the entry carries a witness on failure."""
    if isinstance(lhs, str):
        lhs = parse(lhs)
    if isinstance(rhs, str):
        rhs = parse(rhs)
    lmap = eval_expr(lhs, ctx)
    rmap = eval_expr(rhs, ctx)
    return compare_maps("check-equal", lmap, rmap)
