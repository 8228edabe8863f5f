"""The (m, k) parameter pair governing every operation in the package.

m is the arity of the operation being modelled (each internal tree node
has exactly m children) and k is the associativity degree: the rewrite
moves shift a window of operands by k(m-1) positions, so all modular
arithmetic happens mod k(m-1).
"""

from __future__ import annotations

import dataclasses as dc

from .errors import DomainError


@dc.dataclass(frozen=True)
class Params:
    m: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and self.m >= 2):
            raise DomainError("arity m must be an integer >= 2, got %r" % (self.m,))
        if not (isinstance(self.k, int) and self.k >= 1):
            raise DomainError("degree k must be an integer >= 1, got %r" % (self.k,))

    @property
    def step(self) -> int:
        """Up-run granularity of the associated Dyck paths: m - 1."""
        return self.m - 1

    @property
    def modulus(self) -> int:
        """Window shift K = k(m-1); entries of minimal tuples and all
        exponent arithmetic are reduced mod this value."""
        return self.k * (self.m - 1)
