"""Exact counting of k-equivalence classes, with brute-force cross-checks.

The number of classes of parenthesizations with L = N-1 down-steps is

    sum over runs l in {m-1, 2(m-1), .., L} of  (l / L) * S_l

where S_l is the number of words made of an up-run of l followed by L
single down-steps each carrying a trailing up-run that is a multiple of
m-1 smaller than K = k(m-1), the runs summing to L.  S_l is a sum of
multinomials; the l/L factor is the cycle-counting fraction, and each
l * S_l is exactly divisible by L.

Everything here is exact integer arithmetic; the brute-force routines
exist so the formula is never the only route to a number.
"""

from __future__ import annotations

import dataclasses as dc
import os
from math import comb, factorial, prod
from typing import Iterator, Optional

from .dyck import (DyckTuple, canonicalize, enumerate_tuples, from_dyck,
                   is_minimal, signature, to_dyck)
from .errors import (ArityError, BudgetError, DomainError, FormatError,
                     InternalInvariantError)
from .params import Params
from .tree import (Address, Tree, enumerate_trees, rotate_left, rotate_right,
                   rotation_sites)

RotationStep = tuple[str, Address, int]  # (direction, address, position)

DEFAULT_BUDGET = 1_000_000
BUDGET_ENV_VAR = "FUSSCAT_BUDGET"


def _resolve_budget(budget: Optional[int]) -> int:
    if budget is not None:
        return budget
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise DomainError("%s must be an integer, got %r"
                          % (BUDGET_ENV_VAR, raw)) from None


def multinomial(n: int, parts) -> int:
    """n! / (p1! .. pr!) for a composition p of n."""
    parts = tuple(parts)
    if n < 0 or any(not isinstance(p, int) or p < 0 for p in parts):
        raise DomainError("multinomial needs non-negative integers")
    if sum(parts) != n:
        raise DomainError("parts %r do not sum to %d" % (parts, n))
    return factorial(n) // prod(factorial(p) for p in parts)


def fuss_catalan(m: int, leaves: int) -> int:
    """Number of m-ary trees with the given leaf count."""
    if not (isinstance(m, int) and m >= 2):
        raise DomainError("arity m must be an integer >= 2, got %r" % (m,))
    if leaves < 1 or (leaves - 1) % (m - 1) != 0:
        raise ArityError("no %d-ary tree has %d leaves" % (m, leaves))
    n = (leaves - 1) // (m - 1)  # internal nodes
    q, r = divmod(comb(m * n, n), (m - 1) * n + 1)
    if r:
        raise InternalInvariantError("binom(%d,%d) not divisible by %d"
                                     % (m * n, n, (m - 1) * n + 1))
    return q


def _weighted_compositions(parts: int, total: int, weight: int) -> Iterator[tuple[int, ...]]:
    """Tuples (m1..m_parts) of non-negative integers with sum `total`
    and sum of (j-1)*m_j equal to `weight`."""
    if parts == 1:
        if weight == 0 and total >= 0:
            yield (total,)
        return
    unit = parts - 1  # weight carried by each m_parts
    for last in range(0, min(total, weight // unit) + 1):
        for rest in _weighted_compositions(parts - 1, total - last,
                                           weight - unit * last):
            yield rest + (last,)


def modular_fuss_catalan(params: Params, length: int) -> int:
    """Number of k-equivalence classes of tuples of the given length."""
    s, k = params.step, params.k
    if length < 1 or length % s != 0:
        raise ArityError("length must be a positive multiple of %d, got %d"
                         % (s, length))
    total = 0
    for run in range(s, length + 1, s):
        weight = (length - run) // s
        inner = sum(multinomial(length, parts)
                    for parts in _weighted_compositions(k, length, weight))
        q, r = divmod(run * inner, length)
        if r:
            raise InternalInvariantError(
                "cycle fraction %d * %d / %d is not integral"
                % (run, inner, length))
        total += q
    return total


def count_minimal_brute(params: Params, length: int) -> int:
    """Count the minimal tuples directly, one class each: enumerate all
    valid tuples and keep those whose tail entries are < K."""
    if length < 0 or length % params.step != 0:
        raise ArityError("length must be a non-negative multiple of %d, got %d"
                         % (params.step, length))
    return sum(1 for d in enumerate_tuples(params, length)
               if is_minimal(d, params))


@dc.dataclass(frozen=True)
class ClassReport:
    """One k-equivalence class: its minimal tuple, the member trees in
    enumeration order, and (optionally) a rotation sequence taking each
    member to the tree of the minimal tuple."""

    representative: DyckTuple
    size: int
    members: tuple[Tree, ...]
    traces: Optional[tuple[tuple[RotationStep, ...], ...]] = None


def _closure_parents(seed: Tree, params: Params):
    """Breadth-first closure of {seed} under both rotation directions;
    maps each reached tree to (previous tree, step that produced it)."""
    parents: dict[Tree, Optional[tuple[Tree, RotationStep]]] = {seed: None}
    frontier = [seed]
    while frontier:
        nxt = []
        for t in frontier:
            for direction, rotate in (("right", rotate_right),
                                      ("left", rotate_left)):
                for address, position in rotation_sites(t, params, direction):
                    u = rotate(t, address, position, params)
                    if u not in parents:
                        parents[u] = (t, (direction, address, position))
                        nxt.append(u)
        frontier = nxt
    return parents


def _traces_to_seed(members, seed: Tree, params: Params):
    parents = _closure_parents(seed, params)
    if set(parents) != set(members):
        raise InternalInvariantError(
            "rotation closure of the representative disagrees with the "
            "signature class (%d reached, %d expected)"
            % (len(parents), len(members)))
    inverse = {"right": "left", "left": "right"}
    traces = []
    for t in members:
        steps = []
        node = t
        while parents[node] is not None:
            prev, (direction, address, position) = parents[node]
            steps.append((inverse[direction], address, position))
            node = prev
        traces.append(tuple(steps))
    return tuple(traces)


def enumerate_classes(params: Params, leaves: int, with_traces: bool = False,
                      budget: Optional[int] = None) -> list[ClassReport]:
    """Group every tree with the given leaf count into k-equivalence
    classes, reported in ascending order of minimal tuple.

    Refuses to start when the tree count exceeds the budget (argument,
    else the FUSSCAT_BUDGET environment variable, else one million).
    """
    if leaves < 1 or (leaves - 1) % params.step != 0:
        raise ArityError("no %d-ary tree has %d leaves" % (params.m, leaves))
    limit = _resolve_budget(budget)
    total = fuss_catalan(params.m, leaves)
    if total > limit:
        raise BudgetError("%d trees exceed the budget of %d" % (total, limit))

    groups: dict[tuple[int, ...], list[Tree]] = {}
    for t in enumerate_trees(params, leaves):
        groups.setdefault(signature(to_dyck(t, params), params), []).append(t)

    reports = []
    for members in groups.values():
        rep = canonicalize(to_dyck(members[0], params), params)
        traces = None
        if with_traces:
            traces = _traces_to_seed(members, from_dyck(rep, params), params)
        reports.append(ClassReport(rep, len(members), tuple(members), traces))
    reports.sort(key=lambda r: r.representative.entries)
    return reports


@dc.dataclass(frozen=True)
class PrefixedWord:
    """A word of one leading up-run and trailing down-steps: reading is
    N^first S N^tail[0] S N^tail[1] .. S N^tail[-1]."""

    first: int
    tail: tuple[int, ...]

    def is_dyck_path(self) -> bool:
        """Whether the word, read as a lattice path, stays on or above
        the axis."""
        runs = (self.first, *self.tail)
        partial = 0
        for q in range(1, len(runs)):
            partial += runs[q - 1]
            if partial < q:
                return False
        return True

    def to_dyck_tuple(self, params: Params) -> DyckTuple:
        """The word as a path tuple; only Dyck words convert (the last
        tail run must be empty)."""
        if not self.tail or self.tail[-1] != 0:
            raise FormatError("word ends with unmatched up-steps")
        return DyckTuple((self.first, *self.tail[:-1]), params.step)


def cyclic_shift(word: PrefixedWord, j: int) -> PrefixedWord:
    """Rotate the tail runs left by j places, keeping the leading run;
    j may be anything from 0 to the tail length (a full cycle)."""
    n = len(word.tail)
    if not 0 <= j <= n:
        raise DomainError("shift must be in [0, %d], got %d" % (n, j))
    return PrefixedWord(word.first, word.tail[j:] + word.tail[:j])


def enumerate_prefixed_words(params: Params, length: int,
                             first_run: int) -> Iterator[PrefixedWord]:
    """All words with the given leading run, `length` down-steps, and
    tail runs that are multiples of m-1 below K, in ascending
    lexicographic order of tail."""
    s, top = params.step, params.modulus - params.step
    if length < 1 or length % s != 0:
        raise ArityError("length must be a positive multiple of %d, got %d"
                         % (s, length))
    if not s <= first_run <= length or first_run % s != 0:
        raise ArityError("leading run must be a multiple of %d in [%d, %d], "
                         "got %d" % (s, s, length, first_run))
    tail: list[int] = []

    def extend(remaining: int) -> Iterator[PrefixedWord]:
        slots = length - len(tail)
        if slots == 0:
            if remaining == 0:
                yield PrefixedWord(first_run, tuple(tail))
            return
        for value in range(0, min(top, remaining) + 1, s):
            if remaining - value <= (slots - 1) * top:
                tail.append(value)
                yield from extend(remaining - value)
                tail.pop()

    return extend(length - first_run)
