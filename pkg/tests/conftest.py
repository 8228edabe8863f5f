"""Shared helpers and hypothesis strategies for the test suite."""

from __future__ import annotations

import hypothesis.strategies as st

import fusscat as fc

GRID_PARAMS = [fc.Params(m, k) for m in (2, 3, 4) for k in (1, 2, 3)]


def comb(params: fc.Params, leaves: int) -> fc.Tree:
    """The left comb: the fully left-associated tree on `leaves` operands."""
    return fc.left_assoc_meet([fc.leaf()] * leaves, params)


def valid_leaf_counts(params: fc.Params, top: int) -> list[int]:
    return list(range(1, top + 1, params.step))


def tree_strategy(params: fc.Params, max_leaves: int = 40):
    return st.recursive(
        st.just(fc.leaf()),
        lambda sub: st.tuples(*([sub] * params.m)).map(
            lambda cs: fc.meet(cs, params)),
        max_leaves=max_leaves)


def params_strategy():
    return st.builds(fc.Params, st.integers(2, 4), st.integers(1, 3))


def params_and_tree(max_leaves: int = 40):
    return params_strategy().flatmap(
        lambda p: st.tuples(st.just(p), tree_strategy(p, max_leaves)))
