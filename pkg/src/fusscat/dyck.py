"""Dyck-path encodings of trees and the linear-time equivalence test.

A tree with N leaves corresponds to a lattice path of N-1 up-runs and
N-1 down-steps, recorded as the tuple (d1, .., d_{N-1}) where d_i is the
length of the up-run immediately before the i-th down-step.  Every d_i
is a multiple of the step s = m-1, the entries sum to the length, and
the first i entries sum to at least i (the path never dips below the
axis; the trailing down-run brings it back exactly to the axis).

The encoding sends a node to s up-steps followed by the child paths
separated by single down-steps.  Under it a right k-rotation becomes a
two-entry rewrite: one entry drops by K = k(m-1) and a later one grows
by K.  Hence the residues mod K of d2..d_L classify trees up to
k-rotations, and each class has exactly one tuple whose entries after
the first are all < K.
"""

from __future__ import annotations

import dataclasses as dc
from typing import Iterator, Union

from .errors import (ArityError, FormatError, InternalInvariantError,
                     SizeError)
from .params import Params
from .tree import Site, Tree, leaf, rotate_left, rotate_right


@dc.dataclass(frozen=True)
class DyckTuple:
    """A valid path tuple; step is the up-run granularity m-1."""

    entries: tuple[int, ...]
    step: int

    def __post_init__(self):
        if not (isinstance(self.step, int) and self.step >= 1):
            raise FormatError("step must be a positive integer, got %r"
                              % (self.step,))
        length = len(self.entries)
        partial = 0
        for i, e in enumerate(self.entries, start=1):
            if not isinstance(e, int) or e < 0:
                raise FormatError("entry %d is %r, need a non-negative integer"
                                  % (i, e))
            if e % self.step != 0:
                raise FormatError("entry %d is %d, not a multiple of %d"
                                  % (i, e, self.step))
            partial += e
            if partial < i:
                raise FormatError("path dips below the axis after %d down-steps"
                                  % i)
        if partial != length:
            raise FormatError("path ends %d above the axis"
                              % (partial - length))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _check_step(d: DyckTuple, params: Params) -> None:
    if d.step != params.step:
        raise FormatError("tuple has step %d but params require %d"
                          % (d.step, params.step))


def enumerate_tuples(params: Params, length: int) -> Iterator[DyckTuple]:
    """Yield every valid tuple of the given length in ascending
    lexicographic order."""
    s = params.step
    if length < 0 or length % s != 0:
        raise ArityError("length %d is not a multiple of the step %d"
                         % (length, s))
    prefix: list[int] = []

    def extend(sofar: int) -> Iterator[DyckTuple]:
        i = len(prefix)
        if i == length:
            yield DyckTuple(tuple(prefix), s)
            return
        low = max(0, i + 1 - sofar)
        low = -(-low // s) * s  # round up to a multiple of the step
        for d in range(low, length - sofar + 1, s):
            prefix.append(d)
            yield from extend(sofar + d)
            prefix.pop()

    return extend(0)


def to_dyck(t: Tree, params: Params) -> DyckTuple:
    """Encode a tree as its path tuple."""
    s = params.step

    def runs(node: Tree) -> list[int]:
        if node.is_leaf:
            return []
        if len(node.children) != params.m:
            raise ArityError("tree contains a node with %d children, expected %d"
                             % (len(node.children), params.m))
        parts: list[int] = []
        for child in node.children[:-1]:
            parts.extend(runs(child))
            parts.append(0)  # separating down-step
        parts.extend(runs(node.children[-1]))
        parts[0] += s  # the node's own up-run
        return parts

    return DyckTuple(tuple(runs(t)), s)


def from_dyck(d: DyckTuple, params: Params) -> Tree:
    """Rebuild the tree encoded by a valid tuple; inverse of to_dyck."""
    _check_step(d, params)
    m = params.m
    entries = d.entries
    length = len(entries)
    pos = 0
    carry = entries[0] if length else 0

    def subtree() -> Tree:
        nonlocal pos, carry
        if carry == 0:
            return leaf()
        carry -= m - 1
        children = []
        for i in range(m):
            children.append(subtree())
            if i < m - 1:
                down()
        return Tree(tuple(children))

    def down() -> None:
        nonlocal pos, carry
        assert carry == 0, "up-run not exhausted before a down-step"
        pos += 1
        carry = entries[pos] if pos < length else 0

    root = subtree()
    assert pos == length and carry == 0, "path not fully consumed"
    return root


def depth_to_tuple(dm, params: Params) -> DyckTuple:
    """Recover the path tuple straight from a depth matrix.

    With w_j the (m-i)-weighted sum of column j over labels i, the first
    entry is (m-1) * rows[0][0] and entry j is w_j - w_{j-1} + 1.
    """
    if dm.arity != params.m:
        raise FormatError("depth matrix has %d rows but arity is %d"
                          % (dm.arity, params.m))
    m = params.m
    n = dm.leaf_count
    weights = [sum((m - i) * dm.rows[i - 1][j] for i in range(1, m + 1))
               for j in range(n)]
    if n == 1:
        if weights[0] != 0:
            raise FormatError("single-leaf depth matrix must be all zero")
        return DyckTuple((), params.step)
    entries = [(m - 1) * dm.rows[0][0]]
    entries.extend(weights[j] - weights[j - 1] + 1 for j in range(1, n - 1))
    try:
        return DyckTuple(tuple(entries), params.step)
    except FormatError as exc:
        raise FormatError("matrix is not the depth matrix of any tree: %s"
                          % exc) from exc


def parse_dyck(text: str, params: Params) -> DyckTuple:
    """Read a tuple from either textual form.

    Run form: a word over {N, S} such as "NNSSNNSS".  Numeric form:
    comma-separated entries, optionally parenthesized, such as
    "(2,0,2,0)".  Whitespace is ignored.
    """
    stripped = "".join(text.split())
    if stripped in ("", "()"):
        return DyckTuple((), params.step)
    if set(stripped) <= {"N", "S"}:
        entries = []
        run = 0
        for ch in stripped:
            if ch == "N":
                run += 1
            else:
                entries.append(run)
                run = 0
        if run:
            raise FormatError("path ends with %d unmatched up-steps" % run)
        return DyckTuple(tuple(entries), params.step)
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    try:
        entries = tuple(int(piece) for piece in stripped.split(","))
    except ValueError:
        raise FormatError("cannot read %r as N/S runs or as comma-separated "
                          "entries" % (text,)) from None
    return DyckTuple(entries, params.step)


def print_dyck(d: DyckTuple, fmt: str = "tuple") -> str:
    """Render a tuple in "tuple" or "ns" form; inverse of parse_dyck."""
    if fmt == "ns":
        return "".join("N" * e + "S" for e in d.entries)
    if fmt == "tuple":
        return "(" + ",".join(str(e) for e in d.entries) + ")"
    raise ValueError("fmt must be 'tuple' or 'ns', got %r" % (fmt,))


def compress(d: DyckTuple, site: Site, params: Params,
             direction: str = "right") -> DyckTuple:
    """Image of a k-rotation under the path encoding.

    Conjugates through the tree: decode, rotate at (address, position),
    re-encode.  The result differs from d in exactly two entries, by
    -K at the earlier one and +K at the later one for direction
    "right" (the reverse for "left").
    """
    if direction not in ("right", "left"):
        raise ValueError("direction must be 'right' or 'left', got %r"
                         % (direction,))
    address, position = site
    t = from_dyck(d, params)
    rotate = rotate_right if direction == "right" else rotate_left
    return to_dyck(rotate(t, address, position, params), params)


def is_minimal(d: DyckTuple, params: Params) -> bool:
    """True when every entry after the first is < K; each class holds
    exactly one such tuple and it serves as the representative."""
    _check_step(d, params)
    modulus = params.modulus
    return all(e < modulus for e in d.entries[1:])


def signature(d: DyckTuple, params: Params) -> tuple[int, ...]:
    """Residues mod K of the entries after the first; a complete
    invariant of the k-equivalence class."""
    _check_step(d, params)
    modulus = params.modulus
    return tuple(e % modulus for e in d.entries[1:])


def canonicalize(d: DyckTuple, params: Params) -> DyckTuple:
    """The unique minimal tuple equivalent to d, in closed form: reduce
    every entry after the first mod K and give the first entry whatever
    is left of the total."""
    _check_step(d, params)
    length = len(d.entries)
    if length == 0:
        return d
    tail = [e % params.modulus for e in d.entries[1:]]
    first = length - sum(tail)
    try:
        return DyckTuple((first, *tail), d.step)
    except FormatError as exc:
        raise InternalInvariantError(
            "canonical form of %r is not a valid tuple: %s"
            % (d.entries, exc)) from exc


def equivalent(a: Union[DyckTuple, Tree], b: Union[DyckTuple, Tree],
               params: Params) -> bool:
    """Whether two tuples or trees lie in the same k-equivalence class.

    Accepts any mix of trees and tuples; sizes must match."""
    da = a if isinstance(a, DyckTuple) else to_dyck(a, params)
    db = b if isinstance(b, DyckTuple) else to_dyck(b, params)
    if len(da) != len(db):
        raise SizeError("cannot compare sizes %d and %d (leaf counts %d and %d)"
                        % (len(da), len(db), len(da) + 1, len(db) + 1))
    return signature(da, params) == signature(db, params)
