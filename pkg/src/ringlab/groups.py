"""Finite groups as Cayley tables, with conjugacy data precomputed.

Group elements are indices into the table.  Construction validates the
group axioms and computes the identity, inverses, conjugacy classes,
center, and derived subgroup by exhaustion; all of these are cheap at
the orders used here (at most a few dozen).
"""

from __future__ import annotations

import numpy as np


class GroupError(Exception):
    """A group axiom failed or an input is not a subgroup."""


class GroupTable:
    def __init__(self, table, names=None, name: str = "G", validate: bool = True):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise GroupError("Cayley table must be square")
        self.order = t.shape[0]
        self.table = t
        self.table.setflags(write=False)
        self.name = name
        self.names = list(names) if names else [f"g{i}" for i in range(self.order)]
        if validate:
            self._validate()
        self.identity = self._find_identity()
        self.inverses = self._find_inverses()
        self.conjugacy_classes = self._conjugacy_classes()
        self.center = tuple(sorted(
            g for g in range(self.order)
            if np.array_equal(self.table[g], self.table[:, g])))
        self.derived = self._derived_subgroup()

    def _validate(self):
        t, m = self.table, self.order
        if t.min() < 0 or t.max() >= m:
            raise GroupError("table entry out of range")
        lhs = t[t]       # (gh)k
        rhs = t[:, t]    # g(hk)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            raise GroupError(f"multiplication not associative at {(int(i), int(j), int(k))}")
        ident = [e for e in range(m)
                 if np.array_equal(t[e], np.arange(m)) and np.array_equal(t[:, e], np.arange(m))]
        if not ident:
            raise GroupError("no identity element")
        e = ident[0]
        for g in range(m):
            if e not in t[g]:
                raise GroupError(f"element {g} has no inverse")

    def _find_identity(self) -> int:
        m = self.order
        for e in range(m):
            if np.array_equal(self.table[e], np.arange(m)):
                return e
        raise GroupError("no identity element")

    def _find_inverses(self) -> np.ndarray:
        inv = np.full(self.order, -1, dtype=np.int64)
        rows, cols = np.nonzero(self.table == self.identity)
        inv[rows] = cols
        return inv

    def _conjugacy_classes(self):
        seen = set()
        classes = []
        for g in range(self.order):
            if g in seen:
                continue
            orbit = {int(self.table[self.table[self.inverses[h], g], h]) for h in range(self.order)}
            seen |= orbit
            classes.append(tuple(sorted(orbit)))
        return tuple(sorted(classes))

    def _derived_subgroup(self):
        comms = set()
        for g in range(self.order):
            for h in range(self.order):
                gh = self.table[g, h]
                hg = self.table[h, g]
                comms.add(int(self.table[self.inverses[hg], gh]))  # (hg)^-1 (gh)
        return self.subgroup_closure(comms)

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverses[g])

    def subgroup_closure(self, gens) -> tuple:
        elems = {self.identity}
        queue = [self.identity]
        gens = sorted(set(gens))
        while queue:
            x = queue.pop()
            for g in gens:
                y = int(self.table[x, g])
                if y not in elems:
                    elems.add(y)
                    queue.append(y)
        return tuple(sorted(elems))

    def is_subgroup(self, subset) -> bool:
        s = set(subset)
        if self.identity not in s:
            return False
        return all(int(self.table[a, b]) in s for a in s for b in s) \
            and all(int(self.inverses[a]) in s for a in s)

    def is_normal(self, subset) -> bool:
        s = set(subset)
        return self.is_subgroup(s) and all(
            int(self.table[self.table[self.inverses[g], h], g]) in s
            for g in range(self.order) for h in s)

    def quotient(self, normal_subset) -> tuple["GroupTable", dict]:
        """Quotient by a normal subgroup; returns (group, element -> coset index)."""
        if not self.is_normal(normal_subset):
            raise GroupError("subset is not a normal subgroup")
        n = sorted(set(normal_subset))
        coset_of = {}
        reps = []
        for g in range(self.order):
            if g in coset_of:
                continue
            coset = sorted(int(self.table[g, h]) for h in n)
            for x in coset:
                coset_of[x] = len(reps)
            reps.append(coset[0])
        m = len(reps)
        table = np.zeros((m, m), dtype=np.int64)
        for i, a in enumerate(reps):
            for j, b in enumerate(reps):
                table[i, j] = coset_of[int(self.table[a, b])]
        names = [self.names[r] + "N" for r in reps]
        return GroupTable(table, names=names, name=f"{self.name}/N"), coset_of

    def __repr__(self):
        return f"<GroupTable {self.name}: order {self.order}>"


def group_q8() -> GroupTable:
    """Quaternion group of order 8 in the normal form a^s b^t.

    Relations: a^4 = 1, a^2 = b^2, a b a^-1 = b^-1.  Basis order is
    (s, t) lexicographic: e, a, a2, a3, b, ab, a2b, a3b.
    """
    def idx(s, t):
        return s + 4 * t

    table = np.zeros((8, 8), dtype=np.int64)
    for s in range(4):
        for t in range(2):
            for u in range(4):
                for v in range(2):
                    s2 = (s + (u if t == 0 else -u) + (2 if t + v == 2 else 0)) % 4
                    t2 = (t + v) % 2
                    table[idx(s, t), idx(u, v)] = idx(s2, t2)
    names = ["e", "a", "a2", "a3", "b", "ab", "a2b", "a3b"]
    return GroupTable(table, names=names, name="Q8")


def group_cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return GroupTable(table, names=[f"t{i}" for i in range(n)], name=f"C{n}")


def group_product(g1: GroupTable, g2: GroupTable) -> GroupTable:
    """Direct product; element (x, y) gets index x*|G2| + y."""
    m1, m2 = g1.order, g2.order
    t = (g1.table[:, None, :, None] * m2 + g2.table[None, :, None, :])
    table = t.reshape(m1 * m2, m1 * m2)
    names = [f"{a}.{b}" for a in g1.names for b in g2.names]
    return GroupTable(table, names=names, name=f"{g1.name}x{g2.name}")


def group_elementary_abelian_2(rank: int) -> GroupTable:
    if rank < 1:
        raise GroupError("rank must be positive")
    g = group_cyclic(2)
    for _ in range(rank - 1):
        g = group_product(g, group_cyclic(2))
    g.name = f"E{2 ** rank}"
    return g


def group_from_table(table, names=None, name: str = "G") -> GroupTable:
    """Validate an arbitrary Cayley table as a group."""
    return GroupTable(table, names=names, name=name, validate=True)
