"""Exponent-vector evaluation of parenthesizations.

Interpret the m-ary operation on formal symbols as

    a1 o .. o am  =  w^(m-1) a1 + w^(m-2) a2 + .. + w a_{m-1} + am

where w is an abstract unit whose K-th power is 1, K = k(m-1).  Any
parenthesization then evaluates to a sum with one w-power per leaf, so
its value is the vector of exponents mod K.  Equal vectors characterize
k-equivalence of trees.  Only residue arithmetic is performed; w is
never given a numeric value.
"""

from __future__ import annotations

import dataclasses as dc

from .errors import ArityError, FormatError, SizeError
from .params import Params
from .tree import DepthMatrix, Tree


@dc.dataclass(frozen=True)
class ExponentVector:
    """Per-leaf exponents of w, each reduced mod the modulus."""

    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise FormatError("modulus must be positive, got %r" % (self.modulus,))
        if any(not isinstance(e, int) or not 0 <= e < self.modulus
               for e in self.entries):
            raise FormatError("entries must be residues in [0, %d)"
                              % self.modulus)


def eval_recursive(t: Tree, params: Params) -> ExponentVector:
    """Evaluate bottom-up: the child in position i contributes its
    leaves' exponents shifted by m - i."""
    m, modulus = params.m, params.modulus

    def walk(node: Tree) -> list[int]:
        if node.is_leaf:
            return [0]
        if len(node.children) != m:
            raise ArityError("tree contains a node with %d children, expected %d"
                             % (len(node.children), m))
        out: list[int] = []
        for i, child in enumerate(node.children, start=1):
            shift = (m - i) % modulus
            out.extend((e + shift) % modulus for e in walk(child))
        return out

    return ExponentVector(modulus, tuple(walk(t)))


def eval_by_depth(dm: DepthMatrix, params: Params) -> ExponentVector:
    """Evaluate from the depth matrix alone: the exponent of leaf j is
    the (m-i)-weighted sum of its label depths."""
    if dm.arity != params.m:
        raise FormatError("depth matrix has %d rows but arity is %d"
                          % (dm.arity, params.m))
    m, modulus = params.m, params.modulus
    entries = tuple(
        sum((m - i) * dm.rows[i - 1][j] for i in range(1, m + 1)) % modulus
        for j in range(dm.leaf_count))
    return ExponentVector(modulus, entries)


def equivalent_by_eval(a: Tree, b: Tree, params: Params) -> bool:
    """Whether two trees evaluate identically, i.e. are k-equivalent."""
    if a.leaf_count != b.leaf_count:
        raise SizeError("cannot compare trees with %d and %d leaves"
                        % (a.leaf_count, b.leaf_count))
    return eval_recursive(a, params) == eval_recursive(b, params)
