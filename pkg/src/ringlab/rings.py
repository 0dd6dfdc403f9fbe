"""Finite rings, possibly without a unit.

Two concrete representations share one element-arithmetic interface:

* :class:`StructureRing` holds elements as coefficient vectors over
  Z/nZ on a free basis, with multiplication given by structure constants
  ``c[i][j][k]`` (so ``e_i * e_j = sum_k c[i][j][k] e_k``).  Elements are
  plain tuples of ints reduced to ``[0, n)``.
* :class:`TableRing` holds an explicit addition and multiplication table;
  elements are row indices.

Every constructor validates the ring axioms and reports the violated
axiom together with a witness on failure.  Rings are immutable after
construction; all operations are pure queries, so concurrent read-only
use is safe.
"""

from __future__ import annotations

from math import lcm

import numpy as np

DEFAULT_ELEMENT_CAP = 1 << 20
TABLE_ORDER_CAP = 512


class RingError(Exception):
    """Base class for construction and usage errors."""


class AxiomError(RingError):
    """A ring axiom failed; carries the axiom name and a witness."""

    def __init__(self, axiom: str, witness: tuple, detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        msg = f"axiom '{axiom}' fails at witness {witness}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class CapExceeded(RingError):
    """An enumeration would exceed the configured cap."""


class Ring:
    """Common interface; use StructureRing or TableRing."""

    kind = "abstract"
    name = "R"
    order: int
    characteristic: int
    unital: bool
    one = None
    meta: dict

    def __init__(self):
        self._cache: dict = {}

    # subclasses implement: zero, elements(), add, neg, mul
    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scalar_mul(self, k: int, x):
        k %= self.characteristic
        acc = self.zero
        step = x
        while k:
            if k & 1:
                acc = self.add(acc, step)
            k >>= 1
            if k:
                step = self.add(step, step)
        return acc

    def power(self, x, k: int):
        if k < 1:
            raise ValueError("power expects k >= 1")
        acc = x
        for _ in range(k - 1):
            acc = self.mul(acc, x)
        return acc

    def is_zero(self, x) -> bool:
        return x == self.zero

    def __repr__(self):
        tag = "unital" if self.unital else "non-unital"
        return f"<{type(self).__name__} {self.name}: order {self.order}, char {self.characteristic}, {tag}>"


class StructureRing(Ring):
    """Ring of coefficient vectors over Z/nZ with structure constants."""

    kind = "structure"

    def __init__(self, modulus: int, tensor, one=None, name: str | None = None,
                 meta: dict | None = None, validate: bool = True):
        super().__init__()
        if modulus < 2:
            raise RingError("modulus must be at least 2")
        t = np.asarray(tensor, dtype=np.int64) % modulus
        if t.ndim != 3 or len({t.shape[0], t.shape[1], t.shape[2]}) != 1:
            raise RingError("structure tensor must have shape (r, r, r)")
        self.modulus = modulus
        self.rank = t.shape[0]
        self.tensor = t
        self.tensor.setflags(write=False)
        self.order = modulus ** self.rank
        self.characteristic = modulus
        self.zero = (0,) * self.rank
        self.name = name or f"structure[{modulus}^{self.rank}]"
        self.meta = meta or {}
        if self.order > 2 ** 62:
            raise CapExceeded(f"order {modulus}^{self.rank} overflows the index space")
        if validate:
            self._check_associative()
        if one is not None:
            one = self.element(one)
            self._check_one(one)
        self.one = one
        self.unital = one is not None
        self._powers = (modulus ** np.arange(self.rank - 1, -1, -1)).astype(np.int64)

    def _check_associative(self):
        t = self.tensor
        n = self.modulus
        left = np.einsum("ijm,mkl->ijkl", t, t) % n
        right = np.einsum("jkm,iml->ijkl", t, t) % n
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k, _ = bad[0]
            witness = (self.basis_element(i), self.basis_element(j), self.basis_element(k))
            raise AxiomError("mul_associative", witness, "structure constants are not associative")

    def _check_one(self, one):
        for j in range(self.rank):
            e = self.basis_element(j)
            if self.mul(one, e) != e or self.mul(e, one) != e:
                raise AxiomError("one_identity", (one, e), "claimed identity is not an identity")

    # -- element handling ------------------------------------------------
    def element(self, coeffs) -> tuple:
        vec = tuple(int(c) % self.modulus for c in coeffs)
        if len(vec) != self.rank:
            raise RingError(f"expected {self.rank} coefficients, got {len(vec)}")
        return vec

    def basis_element(self, i: int) -> tuple:
        return tuple(int(j == i) for j in range(self.rank))

    def basis(self) -> list[tuple]:
        return [self.basis_element(i) for i in range(self.rank)]

    def elements(self):
        idx = 0
        while idx < self.order:
            yield self.decode(idx)
            idx += 1

    def add(self, x, y):
        n = self.modulus
        return tuple((a + b) % n for a, b in zip(x, y))

    def neg(self, x):
        n = self.modulus
        return tuple((-a) % n for a in x)

    def mul(self, x, y):
        z = np.einsum("i,j,ijk->k", np.asarray(x, dtype=np.int64),
                      np.asarray(y, dtype=np.int64), self.tensor) % self.modulus
        return tuple(int(c) for c in z)

    def scalar_mul(self, k: int, x):
        n = self.modulus
        k %= n
        return tuple((k * a) % n for a in x)

    # -- bulk numpy helpers ------------------------------------------------
    def encode(self, vecs: np.ndarray) -> np.ndarray:
        """Map coefficient rows to canonical integer indices (lex order)."""
        return np.asarray(vecs, dtype=np.int64) @ self._powers

    def decode(self, idx) -> tuple:
        n = self.modulus
        out = []
        for p in self._powers:
            out.append(int((idx // p) % n))
        return tuple(out)

    def decode_block(self, idx: np.ndarray, dtype=None) -> np.ndarray:
        if dtype is None:
            dtype = np.int32 if self.order < 2 ** 31 else np.int64
        idx = np.asarray(idx, dtype=dtype)
        n = self.modulus
        if n & (n - 1) == 0:
            bits = n.bit_length() - 1
            shifts = np.arange(self.rank - 1, -1, -1, dtype=dtype) * dtype(bits)
            return (idx[:, None] >> shifts[None, :]) & dtype(n - 1)
        powers = self._powers.astype(dtype)
        return (idx[:, None] // powers[None, :]) % dtype(n)

    def all_vectors(self, cap: int = DEFAULT_ELEMENT_CAP) -> np.ndarray:
        if self.order > cap:
            raise CapExceeded(f"{self.name} has {self.order} elements (cap {cap})")
        return self.decode_block(np.arange(self.order, dtype=np.int64))

    def right_mul_matrix(self, y) -> np.ndarray:
        """Matrix R with (x @ R) % n == x * y for row vectors x."""
        return np.einsum("j,ijk->ik", np.asarray(y, dtype=np.int64), self.tensor) % self.modulus

    def left_mul_matrix(self, x) -> np.ndarray:
        """Matrix L with (y @ L) % n == x * y for row vectors y."""
        return np.einsum("i,ijk->jk", np.asarray(x, dtype=np.int64), self.tensor) % self.modulus

    def mul_rows(self, rows: np.ndarray, y) -> np.ndarray:
        return (np.asarray(rows, dtype=np.int64) @ self.right_mul_matrix(y)) % self.modulus

    def basis_products(self, rows: np.ndarray, side: str) -> np.ndarray:
        """All products of the given rows with every basis element.

        Returns an array of shape (len(rows) * rank, rank): right products
        x*e_j, left products e_j*x, or both stacked for side == "two".
        """
        rows = np.asarray(rows, dtype=np.int64)
        out = []
        if side in ("right", "two"):
            out.append((np.einsum("bi,ijk->bjk", rows, self.tensor) % self.modulus).reshape(-1, self.rank))
        if side in ("left", "two"):
            out.append((np.einsum("bj,ijk->bik", rows, self.tensor) % self.modulus).reshape(-1, self.rank))
        if not out:
            raise ValueError(f"unknown side {side!r}")
        return np.concatenate(out, axis=0)


class TableRing(Ring):
    """Ring given by explicit Cayley tables; elements are indices."""

    kind = "table"

    def __init__(self, add, mul, zero: int = 0, one: int | None = None,
                 name: str | None = None, meta: dict | None = None, validate: bool = True):
        super().__init__()
        add = np.asarray(add, dtype=np.int64)
        mul = np.asarray(mul, dtype=np.int64)
        if add.ndim != 2 or add.shape[0] != add.shape[1]:
            raise RingError("addition table must be square")
        if mul.shape != add.shape:
            raise RingError("tables must have equal order")
        m = add.shape[0]
        self.order = m
        self.add_table = add
        self.mul_table = mul
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        self.zero = int(zero)
        self.name = name or f"table[{m}]"
        self.meta = meta or {}
        if validate:
            self._validate(one)
        self._neg = self._inverse_map()
        self.characteristic = self._characteristic()
        if one is None:
            one = self._find_one()
        else:
            one = int(one)
            if not self._is_one(one):
                raise AxiomError("one_identity", (one,), "claimed identity is not an identity")
        self.one = one
        self.unital = one is not None

    def _validate(self, one):
        add, mul, z, m = self.add_table, self.mul_table, self.zero, self.order
        if not (0 <= z < m):
            raise RingError("zero index out of range")
        for tbl, label in ((add, "add"), (mul, "mul")):
            if tbl.min() < 0 or tbl.max() >= m:
                bad = np.argwhere((tbl < 0) | (tbl >= m))[0]
                raise AxiomError(f"{label}_closed", (int(bad[0]), int(bad[1])), "table entry out of range")
        bad = np.argwhere(add != add.T)
        if len(bad):
            i, j = bad[0]
            raise AxiomError("add_commutative", (int(i), int(j)))
        if not np.array_equal(add[z], np.arange(m)):
            j = int(np.argwhere(add[z] != np.arange(m))[0][0])
            raise AxiomError("add_identity", (z, j))
        lhs = add[add]      # lhs[i,j,k] = add[add[i,j], k]
        rhs = add[:, add]   # rhs[i,j,k] = add[i, add[j,k]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            raise AxiomError("add_associative", (int(i), int(j), int(k)))
        for i in range(m):
            if z not in add[i]:
                raise AxiomError("add_inverses", (i,), "no additive inverse")
        lhs = mul[mul]
        rhs = mul[:, mul]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            raise AxiomError("mul_associative", (int(i), int(j), int(k)))
        # i*(j+k) == i*j + i*k
        lhs = mul[:, add]
        rhs = add[mul[:, :, None], mul[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            raise AxiomError("left_distributive", (int(i), int(j), int(k)))
        # (i+j)*k == i*k + j*k
        lhs = mul[add]
        rhs = add[mul[:, None, :], mul[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            raise AxiomError("right_distributive", (int(i), int(j), int(k)))
        if not (np.all(mul[z] == z) and np.all(mul[:, z] == z)):
            j = int(np.argwhere((mul[z] != z) | (mul[:, z] != z))[0][0])
            raise AxiomError("zero_absorbing", (z, j))

    def _inverse_map(self):
        m = self.order
        neg = np.full(m, -1, dtype=np.int64)
        rows, cols = np.nonzero(self.add_table == self.zero)
        neg[rows] = cols
        return neg

    def _characteristic(self):
        ch = 1
        for x in range(self.order):
            acc = x
            k = 1
            while acc != self.zero:
                acc = int(self.add_table[acc, x])
                k += 1
            ch = lcm(ch, k)
        return ch

    def _is_one(self, e: int) -> bool:
        m = self.order
        return bool(np.array_equal(self.mul_table[e], np.arange(m))
                    and np.array_equal(self.mul_table[:, e], np.arange(m)))

    def _find_one(self):
        for e in range(self.order):
            if self._is_one(e):
                return e
        return None

    def element(self, idx) -> int:
        i = int(idx)
        if not (0 <= i < self.order):
            raise RingError(f"element index {i} out of range")
        return i

    def elements(self):
        return iter(range(self.order))

    def add(self, x, y):
        return int(self.add_table[x, y])

    def neg(self, x):
        return int(self._neg[x])

    def mul(self, x, y):
        return int(self.mul_table[x, y])


def make_zn(n: int) -> StructureRing:
    """The ring Z/nZ as a rank-1 structure ring."""
    if n < 2:
        raise RingError("n must be at least 2")
    return StructureRing(n, [[[1]]], one=(1,), name=f"Z{n}")


def make_table_ring(add, mul, zero: int = 0, one: int | None = None,
                    name: str | None = None) -> TableRing:
    """Build and fully validate a ring from explicit Cayley tables."""
    return TableRing(add, mul, zero=zero, one=one, name=name)


def zero_mult_ring(m: int, name: str | None = None) -> TableRing:
    """Additive group Z/mZ with all products zero (non-unital for m >= 2)."""
    idx = np.arange(m)
    add = (idx[:, None] + idx[None, :]) % m
    mul = np.zeros((m, m), dtype=np.int64)
    return TableRing(add, mul, zero=0, name=name or f"zero_mult[{m}]")


def zero_ring() -> TableRing:
    """The one-element ring {0}."""
    return TableRing([[0]], [[0]], zero=0, name="zero_ring")


def direct_sum(r1: Ring, r2: Ring, name: str | None = None) -> Ring:
    """Componentwise direct sum.

    Structure rings over the same modulus combine into a block structure
    ring; any other combination is materialized as a table ring, which
    caps the order.
    """
    label = name or f"({r1.name})+({r2.name})"
    if (isinstance(r1, StructureRing) and isinstance(r2, StructureRing)
            and r1.modulus == r2.modulus):
        n = r1.modulus
        ra, rb = r1.rank, r2.rank
        t = np.zeros((ra + rb, ra + rb, ra + rb), dtype=np.int64)
        t[:ra, :ra, :ra] = r1.tensor
        t[ra:, ra:, ra:] = r2.tensor
        one = None
        if r1.unital and r2.unital:
            one = tuple(r1.one) + tuple(r2.one)
        return StructureRing(n, t, one=one, name=label, validate=False,
                             meta={"construction": "direct_sum", "summands": (r1, r2)})
    order = r1.order * r2.order
    if order > TABLE_ORDER_CAP:
        raise CapExceeded(f"direct sum of order {order} exceeds the table cap {TABLE_ORDER_CAP}")
    e1 = list(r1.elements())
    e2 = list(r2.elements())
    pos = {(x, y): i for i, (x, y) in enumerate((x, y) for x in e1 for y in e2)}
    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    pairs = [(x, y) for x in e1 for y in e2]
    for i, (x1, y1) in enumerate(pairs):
        for j, (x2, y2) in enumerate(pairs):
            add[i, j] = pos[(r1.add(x1, x2), r2.add(y1, y2))]
            mul[i, j] = pos[(r1.mul(x1, x2), r2.mul(y1, y2))]
    one = None
    if r1.unital and r2.unital:
        one = pos[(r1.one, r2.one)]
    ring = TableRing(add, mul, zero=pos[(r1.zero, r2.zero)], one=one, name=label,
                     meta={"construction": "direct_sum", "summands": (r1, r2),
                           "pairs": tuple(pairs)})
    return ring


def reify_subring(ring: Ring, elements, name: str | None = None) -> TableRing:
    """View a multiplicatively closed additive subgroup as a ring of its own.

    Ideals of a ring are rings without a unit; this adapter lets the
    predicates run on them directly.  The subgroup must be closed under
    addition and multiplication (verified).
    """
    elems = sorted(set(elements))
    m = len(elems)
    if m > TABLE_ORDER_CAP:
        raise CapExceeded(f"cannot reify subgroup of order {m} (cap {TABLE_ORDER_CAP})")
    pos = {e: i for i, e in enumerate(elems)}
    if ring.zero not in pos:
        raise RingError("subgroup must contain zero")
    add = np.zeros((m, m), dtype=np.int64)
    mul = np.zeros((m, m), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            s = ring.add(x, y)
            p = ring.mul(x, y)
            if s not in pos:
                raise RingError(f"subgroup not closed under addition at {(x, y)}")
            if p not in pos:
                raise RingError(f"subgroup not closed under multiplication at {(x, y)}")
            add[i, j] = pos[s]
            mul[i, j] = pos[p]
    # axioms are inherited from the ambient ring
    return TableRing(add, mul, zero=pos[ring.zero], name=name or f"sub[{m}] of {ring.name}",
                     meta={"construction": "subring", "ambient": ring, "elements": tuple(elems)},
                     validate=False)
