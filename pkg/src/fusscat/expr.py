"""Concrete syntax for parenthesized operand runs.

An expression is a run of operands joined by optional '*' (whitespace
alone also separates); an operand is a variable name or a parenthesized
run of at least two operands.  Every run folds by the left-associative
convention, so its operand count must be 1 or m + g(m-1).

unparse() names the leaves x1..xN from the left.  The "full" style
parenthesizes every internal node below the root; the "minimal" style
additionally inlines a first child whose subtree is a plain chain of
leaves, which is exactly the paren omission the left-associative
reading recovers without consulting the rest of the run.
"""

from __future__ import annotations

import re

from .errors import ArityError, ParseError
from .params import Params
from .tree import Tree, leaf, left_assoc_meet

_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[*()]|\S")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    for match in _TOKEN.finditer(text):
        piece = match.group()
        if piece not in ("*", "(", ")") and not piece[0].isalpha() and piece[0] != "_":
            raise ParseError("unexpected character %r" % piece, match.start())
        tokens.append((piece, match.start()))
    return tokens


def parse(text: str, params: Params) -> Tree:
    """Parse an expression into its tree; variable names are discarded
    (only the shape matters)."""
    tokens = _tokenize(text)
    pos = 0

    def peek() -> str | None:
        return tokens[pos][0] if pos < len(tokens) else None

    def offset() -> int:
        return tokens[pos][1] if pos < len(tokens) else len(text)

    def operand() -> Tree:
        nonlocal pos
        tok = peek()
        if tok == "(":
            start = tokens[pos][1]
            pos += 1
            inner = run(start, top=False)
            if peek() != ")":
                raise ParseError("unbalanced '('", start)
            pos += 1
            return inner
        if tok is None or tok in ("*", ")"):
            raise ParseError("expected an operand", offset())
        pos += 1
        return leaf()

    def run(start: int, top: bool) -> Tree:
        nonlocal pos
        operands = [operand()]
        while True:
            tok = peek()
            if tok == "*":
                pos += 1
                operands.append(operand())
            elif tok is not None and tok != ")":
                operands.append(operand())
            else:
                break
        p = len(operands)
        if not top and p == 1:
            raise ArityError("parenthesized group needs at least two operands",
                             start)
        if p > 1 and (p < params.m or (p - 1) % (params.m - 1) != 0):
            raise ArityError(
                "run of %d operands cannot fold at arity %d" % (p, params.m),
                start)
        return left_assoc_meet(operands, params)

    tree = run(0, top=True)
    if pos < len(tokens):
        tok, at = tokens[pos]
        raise ParseError("unexpected %r" % tok, at)
    return tree


def _is_leaf_chain(t: Tree) -> bool:
    """True when flattening every first-child link of t yields only
    leaves (so its text needs no parentheses at all)."""
    while not t.is_leaf:
        if any(not c.is_leaf for c in t.children[1:]):
            return False
        t = t.children[0]
    return True


def unparse(t: Tree, style: str = "minimal") -> str:
    """Render a tree with leaves named x1..xN left to right.

    Both styles parse back to the same tree; the minimal style is
    injective on trees of a fixed leaf count."""
    if style not in ("minimal", "full"):
        raise ValueError("style must be 'minimal' or 'full', got %r" % (style,))
    counter = iter(range(1, t.leaf_count + 1))

    def chain(node: Tree) -> str:
        parts = []
        for i, child in enumerate(node.children):
            if child.is_leaf:
                parts.append("x%d" % next(counter))
            elif i == 0 and style == "minimal" and _is_leaf_chain(child):
                parts.append(chain(child))
            else:
                parts.append("(" + chain(child) + ")")
        return "*".join(parts)

    if t.is_leaf:
        return "x1"
    return chain(t)
