"""Finite modules over Z/nZ with componentwise scalar action.

Just enough module theory for the essential-submodule checks: a module
is Z/nZ acting coordinatewise on a subgroup of (Z/n)^k.  A carrier of
None means the full space.
"""

from __future__ import annotations

from itertools import product

from .rings import CapExceeded, RingError

MODULE_CAP = 1 << 16


class ZnModule:
    def __init__(self, modulus: int, dim: int, carrier=None, name: str | None = None):
        if modulus < 2 or dim < 1:
            raise RingError("module needs modulus >= 2 and dim >= 1")
        self.modulus = modulus
        self.dim = dim
        if carrier is None:
            if modulus ** dim > MODULE_CAP:
                raise CapExceeded(f"full module of size {modulus ** dim} exceeds cap")
            carrier = [tuple(v) for v in product(range(modulus), repeat=dim)]
        self.carrier = tuple(sorted(set(tuple(int(c) % modulus for c in v) for v in carrier)))
        self.carrier_set = frozenset(self.carrier)
        self.zero = (0,) * dim
        self.name = name or f"module[{modulus}^{dim}]"
        if self.zero not in self.carrier_set:
            raise RingError("module carrier must contain zero")

    def act(self, t: int, v: tuple) -> tuple:
        n = self.modulus
        return tuple((t * c) % n for c in v)

    def add(self, u: tuple, v: tuple) -> tuple:
        n = self.modulus
        return tuple((a + b) % n for a, b in zip(u, v))

    def cyclic_submodule(self, v: tuple) -> set:
        """Z/nZ-orbit of v; integer multiples coincide with scalar action."""
        return {self.act(t, v) for t in range(self.modulus)}

    def is_submodule(self, subset) -> bool:
        s = set(subset)
        if self.zero not in s or not s <= self.carrier_set:
            return False
        return all(self.add(u, v) in s for u in s for v in s) \
            and all(self.act(t, v) in s for v in s for t in range(self.modulus))

    def __repr__(self):
        return f"<ZnModule {self.name}: {len(self.carrier)} elements>"


def direct_sum_submodule(modulus: int, parts: list) -> set:
    """Cartesian product of per-coordinate subsets as a subset of (Z/n)^k."""
    vectors = [()]
    for part in parts:
        vectors = [v + (int(c) % modulus,) for v in vectors for c in part]
    return set(vectors)
