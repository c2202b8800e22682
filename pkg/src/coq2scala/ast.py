"""Source-language AST, source spans, and diagnostics shared by all phases.

All nodes are frozen dataclasses; child collections are tuples, so values
are immutable after construction and safe to share between threads.
Spans never participate in equality: two trees parsed from differently
laid-out sources compare equal when they have the same structure.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Iterator, Union


@dataclass(frozen=True)
class Span:
    """1-based line/column range; the end column is exclusive."""

    start_line: int
    start_col: int
    end_line: int
    end_col: int

    @property
    def start(self) -> tuple[int, int]:
        return (self.start_line, self.start_col)

    @property
    def end(self) -> tuple[int, int]:
        return (self.end_line, self.end_col)

    def __str__(self) -> str:
        return f"{self.start_line}:{self.start_col}-{self.end_line}:{self.end_col}"


#placeholder for programmatically built nodes; real spans come from tokens
NO_SPAN = Span(1, 1, 1, 1)


def span_merge(a: Span, b: Span) -> Span:
    """Minimal span covering both inputs (assumes one source document)."""
    start = min(a.start, b.start)
    end = max(a.end, b.end)
    return Span(start[0], start[1], end[0], end[1])


ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    """Positioned error or warning produced by one compiler phase."""

    severity: str  # "error" | "warning"
    message: str
    span: Span
    phase: str  # "lex" | "parse" | "analyze" | "codegen"


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.severity == ERROR for d in diagnostics)


# --- types ---------------------------------------------------------------


@dataclass(frozen=True)
class NamedType:
    name: str
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class ArrowType:
    """Function type; arrows associate to the right."""

    arg: TypeExpr
    result: TypeExpr
    span: Span = field(default=NO_SPAN, compare=False)


TypeExpr = Union[NamedType, ArrowType]


@dataclass(frozen=True)
class Binder:
    name: str
    type: TypeExpr
    span: Span = field(default=NO_SPAN, compare=False)


# --- terms ---------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class NatLit:
    value: int  # >= 0
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class App:
    fn: Term
    args: tuple[Term, ...]  # nonempty
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str  # "add" | "sub" | "mul"
    left: Term
    right: Term
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class Match:
    scrutinee: Term
    arms: tuple[MatchArm, ...]  # nonempty
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class Paren:
    """Explicit source parenthesization, kept so output can reproduce it."""

    inner: Term
    span: Span = field(default=NO_SPAN, compare=False)


Term = Union[Var, NatLit, App, BinOp, Match, Paren]


@dataclass(frozen=True)
class CtorPattern:
    ctor_name: str
    binders: tuple[str, ...]  # "_" allowed; other names pairwise distinct
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class WildcardPattern:
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class NatLitPattern:
    value: int
    span: Span = field(default=NO_SPAN, compare=False)


Pattern = Union[CtorPattern, WildcardPattern, NatLitPattern]


@dataclass(frozen=True)
class MatchArm:
    pattern: Pattern
    body: Term
    span: Span = field(default=NO_SPAN, compare=False)


# --- top-level declarations ----------------------------------------------


@dataclass(frozen=True)
class ConstructorDecl:
    name: str
    params: tuple[Binder, ...]
    result_type: TypeExpr | None
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class InductiveDecl:
    name: str
    constructors: tuple[ConstructorDecl, ...]  # nonempty
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class FixpointDecl:
    name: str
    params: tuple[Binder, ...]  # nonempty
    return_type: TypeExpr
    body: Term
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class DefinitionDecl:
    name: str
    params: tuple[Binder, ...]
    return_type: TypeExpr | None
    body: Term
    span: Span = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class LemmaDecl:
    """Statement kept verbatim; propositions are never interpreted here."""

    name: str
    statement_text: str
    span: Span = field(default=NO_SPAN, compare=False)


Vernacular = Union[InductiveDecl, FixpointDecl, DefinitionDecl, LemmaDecl]


@dataclass(frozen=True)
class Program:
    declarations: tuple[Vernacular, ...]  # source order


def program_constructors(
    p: Program,
) -> tuple[dict[str, tuple[ConstructorDecl, ...]], list[Diagnostic]]:
    """Map each inductive name to its constructors, in declaration order.

    A repeated inductive name yields an error diagnostic; the first
    occurrence wins.
    """
    out: dict[str, tuple[ConstructorDecl, ...]] = {}
    diagnostics: list[Diagnostic] = []
    for decl in p.declarations:
        if not isinstance(decl, InductiveDecl):
            continue
        if decl.name in out:
            diagnostics.append(
                Diagnostic(ERROR, f"duplicate inductive name '{decl.name}'", decl.span, "analyze")
            )
            continue
        out[decl.name] = decl.constructors
    return out, diagnostics


def child_nodes(node: object) -> Iterator[object]:
    """Direct AST children of a node (anything that itself carries a span)."""
    for f in fields(node):  # type: ignore[arg-type]
        value = getattr(node, f.name)
        if isinstance(value, tuple):
            for item in value:
                if _is_node(item):
                    yield item
        elif _is_node(value):
            yield value


def _is_node(value: object) -> bool:
    return hasattr(value, "__dataclass_fields__") and not isinstance(value, (Span, Diagnostic))


def without_parens(p: Program) -> Program:
    """Copy of a program with every Paren node replaced by its inner term."""
    return Program(tuple(_decl_without_parens(d) for d in p.declarations))


def _decl_without_parens(d: Vernacular) -> Vernacular:
    if isinstance(d, FixpointDecl):
        return FixpointDecl(d.name, d.params, d.return_type, _term_without_parens(d.body), d.span)
    if isinstance(d, DefinitionDecl):
        return DefinitionDecl(d.name, d.params, d.return_type, _term_without_parens(d.body), d.span)
    return d


def _term_without_parens(t: Term) -> Term:
    if isinstance(t, Paren):
        return _term_without_parens(t.inner)
    if isinstance(t, App):
        return App(_term_without_parens(t.fn), tuple(_term_without_parens(a) for a in t.args), t.span)
    if isinstance(t, BinOp):
        return BinOp(t.op, _term_without_parens(t.left), _term_without_parens(t.right), t.span)
    if isinstance(t, Match):
        arms = tuple(
            MatchArm(a.pattern, _term_without_parens(a.body), a.span) for a in t.arms
        )
        return Match(_term_without_parens(t.scrutinee), arms, t.span)
    return t
