"""Finite semirings by Cayley tables.

A semiring here has associative, commutative addition with a neutral
zero that is multiplicatively absorbing, an associative multiplication,
and two-sided distributivity.  Addition need not be invertible, which is
the whole point.  Predicates reuse the Certificate machinery so the same
re-verification path covers rings and semirings.
"""

from __future__ import annotations

import numpy as np

from .predicates import Certificate
from .rings import AxiomError, Ring, RingError


class Semiring:
    def __init__(self, add, mul, zero: int = 0, one: int | None = None,
                 names=None, name: str | None = None):
        add = np.asarray(add, dtype=np.int64)
        mul = np.asarray(mul, dtype=np.int64)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or mul.shape != add.shape:
            raise RingError("semiring tables must be square and of equal order")
        self.order = add.shape[0]
        self.add_table = add
        self.mul_table = mul
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        self.zero = int(zero)
        self.names = list(names) if names else [str(i) for i in range(self.order)]
        self.name = name or f"semiring[{self.order}]"
        self._validate()
        if one is None:
            one = self._find_one()
        else:
            one = int(one)
            if not self._is_one(one):
                raise AxiomError("one_identity", (one,))
        self.one = one
        self.unital = one is not None
        self._cache: dict = {}

    def _validate(self):
        add, mul, z, m = self.add_table, self.mul_table, self.zero, self.order
        for tbl, label in ((add, "add"), (mul, "mul")):
            if tbl.min() < 0 or tbl.max() >= m:
                bad = np.argwhere((tbl < 0) | (tbl >= m))[0]
                raise AxiomError(f"{label}_closed", (int(bad[0]), int(bad[1])))
        bad = np.argwhere(add != add.T)
        if len(bad):
            i, j = bad[0]
            raise AxiomError("add_commutative", (int(i), int(j)))
        if not np.array_equal(add[z], np.arange(m)):
            j = int(np.argwhere(add[z] != np.arange(m))[0][0])
            raise AxiomError("add_identity", (z, j))
        bad = np.argwhere(add[add] != add[:, add])
        if len(bad):
            i, j, k = bad[0]
            raise AxiomError("add_associative", (int(i), int(j), int(k)))
        bad = np.argwhere(mul[mul] != mul[:, mul])
        if len(bad):
            i, j, k = bad[0]
            raise AxiomError("mul_associative", (int(i), int(j), int(k)))
        lhs = mul[:, add]
        rhs = add[mul[:, :, None], mul[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            raise AxiomError("left_distributive", (int(i), int(j), int(k)))
        lhs = mul[add]
        rhs = add[mul[:, None, :], mul[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            raise AxiomError("right_distributive", (int(i), int(j), int(k)))
        if not (np.all(mul[z] == z) and np.all(mul[:, z] == z)):
            j = int(np.argwhere((mul[z] != z) | (mul[:, z] != z))[0][0])
            raise AxiomError("zero_absorbing", (z, j))

    def _is_one(self, e: int) -> bool:
        m = self.order
        return bool(np.array_equal(self.mul_table[e], np.arange(m))
                    and np.array_equal(self.mul_table[:, e], np.arange(m)))

    def _find_one(self):
        for e in range(self.order):
            if self._is_one(e):
                return e
        return None

    def elements(self):
        return iter(range(self.order))

    def add(self, x, y):
        return int(self.add_table[x, y])

    def mul(self, x, y):
        return int(self.mul_table[x, y])

    def label(self, x) -> str:
        return self.names[x]

    def __repr__(self):
        return f"<Semiring {self.name}: order {self.order}>"


def make_semiring(add, mul, zero: int = 0, one: int | None = None,
                  names=None, name: str | None = None) -> Semiring:
    """Build and fully validate a semiring from explicit tables."""
    return Semiring(add, mul, zero=zero, one=one, names=names, name=name)


def semiring_center(s: Semiring) -> list[int]:
    cached = s._cache.get("center")
    if cached is None:
        cached = [c for c in s.elements()
                  if all(s.mul(c, x) == s.mul(x, c) for x in s.elements())]
        s._cache["center"] = cached
    return cached


def is_commutative_semiring(s: Semiring) -> Certificate:
    examined = 0
    for a in s.elements():
        for b in s.elements():
            examined += 1
            if s.mul(a, b) != s.mul(b, a):
                return Certificate("commutative", False, "refutation",
                                   witness={"a": a, "b": b}, examined=examined)
    return Certificate("commutative", True, "exhaustive", examined=examined)


def is_ce_semiring(s: Semiring) -> Certificate:
    """Central essentiality, transplanted verbatim from the ring setting."""
    comm = is_commutative_semiring(s)
    if comm.verdict:
        return Certificate("centrally_essential", True, "exhaustive",
                           examined=0, bounds={"commutative": True})
    cset = set(semiring_center(s))
    examined = 0
    for a in s.elements():
        if a == s.zero or a in cset:
            continue
        examined += 1
        hit = False
        for c in cset:
            if c == s.zero:
                continue
            y = s.mul(a, c)
            if y != s.zero and y in cset:
                hit = True
                break
        if not hit:
            return Certificate("centrally_essential", False, "exhaustive",
                               witness={"element": a}, examined=examined,
                               bounds={"center_order": len(cset)})
    return Certificate("centrally_essential", True, "exhaustive", examined=examined,
                       bounds={"center_order": len(cset)})


def is_semisubtractive(s: Semiring) -> Certificate:
    """For distinct a, b some x solves a + x = b or b + x = a."""
    examined = 0
    for a in s.elements():
        for b in range(a + 1, s.order):
            examined += 1
            if not any(s.add(a, x) == b or s.add(b, x) == a for x in s.elements()):
                return Certificate("semisubtractive", False, "refutation",
                                   witness={"a": a, "b": b}, examined=examined)
    return Certificate("semisubtractive", True, "exhaustive", examined=examined)


def example_order5() -> Semiring:
    """The order-5 semiring S = {0, 1, a, b, c} with its fixed tables."""
    names = ["0", "1", "a", "b", "c"]
    z, e, a, b, c = range(5)
    add = [
        [z, e, a, b, c],
        [e, e, e, b, e],
        [a, e, a, b, a],
        [b, b, b, b, b],
        [c, e, a, b, c],
    ]
    mul = [
        [z, z, z, z, z],
        [z, e, a, b, c],
        [z, a, a, a, c],
        [z, b, b, b, c],
        [z, c, c, c, c],
    ]
    return Semiring(add, mul, zero=z, one=e, names=names, name="semiring_order5")


def ring_as_semiring(ring: Ring, cap: int = 512) -> Semiring:
    """View a finite ring as a semiring by materializing its tables."""
    if ring.order > cap:
        raise RingError(f"{ring.name} is too large to materialize as tables")
    elems = list(ring.elements())
    pos = {e: i for i, e in enumerate(elems)}
    m = len(elems)
    add = [[pos[ring.add(x, y)] for y in elems] for x in elems]
    mul = [[pos[ring.mul(x, y)] for y in elems] for x in elems]
    one = pos[ring.one] if ring.unital else None
    return Semiring(add, mul, zero=pos[ring.zero], one=one,
                    name=f"{ring.name} as semiring")
