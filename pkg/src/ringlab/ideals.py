"""Additive subgroups, ideal closures, annihilators, and idempotents.

An :class:`AdditiveSubgroup` stores its full element set in canonical
sorted order plus the generating set it was built from.  Ideal flags are
only ever set after verification.  Generated ideals follow the
non-unital convention: the right ideal generated by ``a`` is
``Za + aR``, so integer multiples of the generators are always included.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .linalg import kernel_mod
from .rings import CapExceeded, DEFAULT_ELEMENT_CAP, Ring, RingError, StructureRing

DEFAULT_TWO_SIDED_CAP = 64
DEFAULT_ONE_SIDED_CAP = 32
IDEAL_COUNT_CAP = 4096


class AdditiveSubgroup:
    """A finite additive subgroup of a ring, stored explicitly."""

    def __init__(self, ring: Ring, elements, generators=(), is_right_ideal=None,
                 is_left_ideal=None, is_two_sided=None, name: str | None = None):
        self.ring = ring
        self.elements = tuple(sorted(set(elements)))
        self.generators = tuple(generators)
        self.element_set = frozenset(self.elements)
        self.is_right_ideal = is_right_ideal
        self.is_left_ideal = is_left_ideal
        self.is_two_sided = is_two_sided
        self.name = name or f"subgroup[{len(self.elements)}]"
        if ring.zero not in self.element_set:
            raise RingError("additive subgroup must contain zero")

    def __contains__(self, x):
        return x in self.element_set

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, AdditiveSubgroup) and self.ring is other.ring \
            and self.element_set == other.element_set

    def __hash__(self):
        return hash((id(self.ring), self.element_set))

    def __repr__(self):
        return f"<AdditiveSubgroup {self.name}: order {len(self)} in {self.ring.name}>"

    @property
    def order(self):
        return len(self.elements)

    def is_zero(self):
        return len(self.elements) == 1

    def nonzero_elements(self):
        z = self.ring.zero
        return [e for e in self.elements if e != z]

    def vectors(self) -> np.ndarray:
        """Element matrix in canonical order (structure rings only)."""
        return np.array(self.elements, dtype=np.int64)


def _close_under_addition(ring: Ring, base: set, gens) -> set:
    """Close ``base`` (already a subgroup, or {0}) under adding ``gens``."""
    gens = [g for g in gens if g not in base]
    if not gens:
        return base
    if isinstance(ring, StructureRing):
        return _close_vectors(ring, base, gens)
    elems = set(base)
    queue = list(elems)
    while queue:
        x = queue.pop()
        for g in gens:
            y = ring.add(x, g)
            if y not in elems:
                elems.add(y)
                queue.append(y)
    return elems


def _close_vectors(ring: StructureRing, base: set, gens) -> set:
    """Vectorized subgroup closure: extend a subgroup by one generator at a
    time via the coset union over the generator's additive order."""
    n = ring.modulus
    arr = np.array(sorted(base), dtype=np.int64).reshape(len(base), ring.rank)
    members = set(base)
    for g in gens:
        if g in members:
            continue
        order = n // gcd(n, *[int(c) for c in g])
        garr = np.asarray(g, dtype=np.int64)
        stacked = (arr[None, :, :] + np.arange(order, dtype=np.int64)[:, None, None]
                   * garr[None, None, :]) % n
        arr = np.unique(stacked.reshape(-1, ring.rank), axis=0)
        members = {tuple(int(c) for c in row) for row in arr}
    return members


def additive_closure(ring: Ring, seed, name: str | None = None) -> AdditiveSubgroup:
    """Smallest additive subgroup containing the seed elements."""
    seed = [ring.element(s) if not isinstance(s, (tuple, int)) else s for s in seed]
    elems = _close_under_addition(ring, {ring.zero}, seed)
    return AdditiveSubgroup(ring, elems, generators=seed, name=name)


def _expand_products(ring: Ring, batch: list, side: str) -> list:
    if isinstance(ring, StructureRing):
        rows = np.array(batch, dtype=np.int64)
        prods = ring.basis_products(rows, side)
        return [tuple(int(c) for c in row) for row in prods]
    out = []
    for x in batch:
        if side in ("right", "two"):
            out.extend(ring.mul(x, y) for y in ring.elements())
        if side in ("left", "two"):
            out.extend(ring.mul(y, x) for y in ring.elements())
    return out


def _ideal_close(ring: Ring, seed, side: str, cap: int | None = None) -> set:
    """Closure of seed under addition, negation, and one/two-sided products.

    For structure rings products with basis elements suffice: the additive
    closure supplies all coefficient combinations.
    """
    cap = cap or DEFAULT_ELEMENT_CAP
    elems = _close_under_addition(ring, {ring.zero}, list(seed))
    expanded: set = set()
    while True:
        todo = [e for e in elems if e not in expanded]
        if not todo:
            return elems
        expanded.update(todo)
        prods = _expand_products(ring, todo, side)
        new = [p for p in prods if p not in elems]
        if new:
            elems = _close_under_addition(ring, elems, new)
            if len(elems) > cap:
                raise CapExceeded(f"ideal closure in {ring.name} exceeded cap {cap}")


def _principal_cache(ring: Ring, side: str) -> dict:
    return ring._cache.setdefault(("principal", side), {})


def generated_ideal(ring: Ring, seed, side: str, cap: int | None = None,
                    name: str | None = None) -> AdditiveSubgroup:
    """Ideal generated by the seed: Z-multiples plus ring products per side."""
    if side not in ("right", "left", "two"):
        raise ValueError(f"unknown side {side!r}")
    seed = tuple(sorted(set(seed)))
    if len(seed) == 1:
        cache = _principal_cache(ring, side)
        if seed[0] in cache:
            return cache[seed[0]]
    elems = _ideal_close(ring, seed, side, cap=cap)
    sub = AdditiveSubgroup(
        ring, elems, generators=seed,
        is_right_ideal=side in ("right", "two"),
        is_left_ideal=side in ("left", "two"),
        is_two_sided=side == "two",
        name=name,
    )
    if side == "two":
        sub.is_right_ideal = sub.is_left_ideal = True
    if len(seed) == 1:
        _principal_cache(ring, side)[seed[0]] = sub
    return sub


def right_ideal_generated(ring: Ring, seed, cap=None) -> AdditiveSubgroup:
    return generated_ideal(ring, seed, "right", cap=cap)


def left_ideal_generated(ring: Ring, seed, cap=None) -> AdditiveSubgroup:
    return generated_ideal(ring, seed, "left", cap=cap)


def two_sided_ideal_generated(ring: Ring, seed, cap=None) -> AdditiveSubgroup:
    return generated_ideal(ring, seed, "two", cap=cap)


def verify_ideal_flag(ring: Ring, subgroup: AdditiveSubgroup, side: str) -> bool:
    """Exhaustively check closure of the subgroup under ring multiplication."""
    members = subgroup.element_set
    batch = list(subgroup.elements)
    for p in _expand_products(ring, batch, side):
        if p not in members:
            return False
    return True


def left_annihilator(ring: Ring, targets, name: str | None = None) -> AdditiveSubgroup:
    """{r in R : r*s = 0 for every s in targets}, flagged as a left ideal."""
    return _annihilator(ring, targets, "left", name)


def right_annihilator(ring: Ring, targets, name: str | None = None) -> AdditiveSubgroup:
    """{r in R : s*r = 0 for every s in targets}, flagged as a right ideal."""
    return _annihilator(ring, targets, "right", name)


def two_sided_annihilator(ring: Ring, targets, name: str | None = None) -> AdditiveSubgroup:
    left = _annihilator(ring, targets, "left", None)
    right = _annihilator(ring, targets, "right", None)
    elems = left.element_set & right.element_set
    return AdditiveSubgroup(ring, elems, generators=(), name=name)


def _annihilator(ring: Ring, targets, which: str, name):
    targets = list(targets)
    if isinstance(ring, StructureRing):
        rows = []
        for s in targets:
            # constraint per output coordinate k: sum_i x_i * M[i, k] = 0
            mat = ring.right_mul_matrix(s) if which == "left" else ring.left_mul_matrix(s)
            for k in range(ring.rank):
                rows.append([int(mat[i, k]) for i in range(ring.rank)])
        gens, size = kernel_mod(rows, ring.rank, ring.modulus)
        elems = _close_under_addition(ring, {ring.zero}, [tuple(g) for g in gens])
        if len(elems) != size:
            raise RingError("kernel enumeration mismatch")  # pragma: no cover
    else:
        elems = set()
        for r in ring.elements():
            if which == "left" and all(ring.mul(r, s) == ring.zero for s in targets):
                elems.add(r)
            elif which == "right" and all(ring.mul(s, r) == ring.zero for s in targets):
                elems.add(r)
        gens = sorted(elems)
    sub = AdditiveSubgroup(ring, elems, generators=[tuple(g) for g in gens] if isinstance(ring, StructureRing) else sorted(elems), name=name)
    side = "left" if which == "left" else "right"
    ok = verify_ideal_flag(ring, sub, side)
    if side == "left":
        sub.is_left_ideal = ok
    else:
        sub.is_right_ideal = ok
    return sub


def nilpotency_index(ring: Ring, a) -> int | None:
    """Least k with a^k = 0, or None when the powers cycle away from zero."""
    seen = set()
    p = a
    k = 1
    while True:
        if p == ring.zero:
            return k
        if p in seen:
            return None
        seen.add(p)
        p = ring.mul(p, a)
        k += 1


def is_nilpotent_subgroup(ring: Ring, subgroup: AdditiveSubgroup) -> bool:
    """Whether I^k = 0 for some k, by iterating the product closure I*I."""
    if not (subgroup.is_right_ideal or subgroup.is_left_ideal or subgroup.is_two_sided):
        raise RingError("nilpotency check expects a verified one-sided ideal")
    base = list(subgroup.elements)
    current = subgroup.element_set
    seen = {frozenset(current)}
    while True:
        prods = {ring.mul(x, y) for x in current for y in base}
        nxt = _close_under_addition(ring, {ring.zero}, prods)
        if nxt == {ring.zero}:
            return True
        key = frozenset(nxt)
        if key in seen:
            return False
        seen.add(key)
        current = nxt


def idempotents(ring: Ring, cap: int = DEFAULT_ELEMENT_CAP) -> list:
    """All e with e*e = e, in canonical order."""
    if isinstance(ring, StructureRing):
        vecs = ring.all_vectors(cap=cap)
        sq = np.einsum("bi,bj,ijk->bk", vecs, vecs, ring.tensor) % ring.modulus
        hits = np.all(sq == vecs, axis=1)
        return [tuple(int(c) for c in row) for row in vecs[hits]]
    if ring.order > cap:
        raise CapExceeded(f"{ring.name} exceeds idempotent scan cap")
    return [x for x in ring.elements() if ring.mul(x, x) == x]


def commutator(ring: Ring, a, b):
    """ab - ba."""
    return ring.sub(ring.mul(a, b), ring.mul(b, a))


def all_ideals(ring: Ring, side: str = "two", cap: int | None = None,
               count_cap: int = IDEAL_COUNT_CAP) -> list[AdditiveSubgroup]:
    """Every ideal of the requested kind, via generated ideals plus sums.

    Principal ideals are closed under pairwise lattice joins until a
    fixpoint; this is complete because any ideal is the join of the
    principal ideals of its members.  Raises CapExceeded instead of
    attempting an unbounded enumeration.
    """
    if cap is None:
        cap = DEFAULT_TWO_SIDED_CAP if side == "two" else DEFAULT_ONE_SIDED_CAP
    if ring.order > cap:
        raise CapExceeded(f"{ring.name} has order {ring.order}, ideal cap is {cap}")
    zero = ring.zero
    found: dict[frozenset, AdditiveSubgroup] = {}
    zero_sub = AdditiveSubgroup(ring, [zero], generators=(),
                                is_right_ideal=True, is_left_ideal=True, is_two_sided=True)
    found[zero_sub.element_set] = zero_sub
    for a in ring.elements():
        if a == zero:
            continue
        sub = generated_ideal(ring, [a], side)
        found.setdefault(sub.element_set, sub)
    worklist = list(found.values())
    while worklist:
        nxt = []
        current = list(found.values())
        for s1 in worklist:
            for s2 in current:
                union = s1.element_set | s2.element_set
                if union in found:
                    continue
                joined = _close_under_addition(ring, set(s1.element_set), list(s2.elements))
                key = frozenset(joined)
                if key not in found:
                    sub = AdditiveSubgroup(ring, joined,
                                           generators=tuple(s1.generators) + tuple(s2.generators),
                                           is_right_ideal=side in ("right", "two"),
                                           is_left_ideal=side in ("left", "two"),
                                           is_two_sided=side == "two")
                    found[key] = sub
                    nxt.append(sub)
                    if len(found) > count_cap:
                        raise CapExceeded(f"ideal lattice of {ring.name} exceeds {count_cap} members")
        worklist = nxt
    return sorted(found.values(), key=lambda s: (len(s), s.elements))


def additive_generators(ring: Ring, elements) -> list:
    """A small generating set for an additive subgroup given its elements."""
    gens = []
    span = {ring.zero}
    for e in elements:
        if e not in span:
            gens.append(e)
            span = _close_under_addition(ring, span, [e])
    return gens


def additive_order(ring: Ring, x) -> int:
    if isinstance(ring, StructureRing):
        n = ring.modulus
        return n // gcd(n, *[int(c) for c in x]) if any(x) else 1
    k = 1
    acc = x
    while acc != ring.zero:
        acc = ring.add(acc, x)
        k += 1
    return k
