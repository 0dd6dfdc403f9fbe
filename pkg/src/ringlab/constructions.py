"""Builders for the concrete algebras under study.

Group rings RG over Z/nZ coefficients, fundamental ideals, the
idempotent splitting of RQ8 when 2 is invertible, quaternion algebras
(a, b, A) over a commutative base, 2x2 matrix presets, and the rank-4
matrix ring defined by a fixed sign pattern.  Everything lands in the
uniform ring interface so the predicates apply unchanged.
"""

from __future__ import annotations

from collections import namedtuple
from math import gcd

import numpy as np

from . import linalg
from .groups import GroupError, GroupTable, group_cyclic, group_elementary_abelian_2, group_product, group_q8
from .ideals import AdditiveSubgroup, additive_closure, generated_ideal, left_annihilator
from .rings import (AxiomError, CapExceeded, Ring, RingError, StructureRing,
                    direct_sum, make_zn, reify_subring, zero_mult_ring, zero_ring)

GROUP_RING_RANK_CAP = 64


def group_ring(coeff: StructureRing, group: GroupTable, name: str | None = None) -> StructureRing:
    """Group ring RG with basis indexed by (group element, coefficient basis)."""
    if not isinstance(coeff, StructureRing):
        raise RingError("group ring coefficients must be a structure ring")
    m, r = group.order, coeff.rank
    rank = m * r
    if rank > GROUP_RING_RANK_CAP:
        raise CapExceeded(f"group ring rank {rank} exceeds cap {GROUP_RING_RANK_CAP}")
    t = np.zeros((rank, rank, rank), dtype=np.int64)
    for g in range(m):
        for h in range(m):
            gh = group.mul(g, h)
            t[g * r:(g + 1) * r, h * r:(h + 1) * r, gh * r:(gh + 1) * r] = coeff.tensor
    one = None
    if coeff.unital:
        vec = [0] * rank
        e = group.identity
        vec[e * r:(e + 1) * r] = list(coeff.one)
        one = tuple(vec)
    label = name or f"{coeff.name}[{group.name}]"
    return StructureRing(coeff.modulus, t, one=one, name=label, validate=False,
                         meta={"construction": "group_ring", "coeff": coeff, "group": group})


def group_element_vector(rg: StructureRing, g: int) -> tuple:
    """The group element g embedded in the group ring (coefficient one)."""
    group, coeff = rg.meta["group"], rg.meta["coeff"]
    if not coeff.unital:
        raise RingError("embedding needs a unital coefficient ring")
    r = coeff.rank
    vec = [0] * rg.rank
    vec[g * r:(g + 1) * r] = list(coeff.one)
    return tuple(vec)


def group_sum_vector(rg: StructureRing, subset) -> tuple:
    """Sum of the given group elements inside the group ring."""
    acc = rg.zero
    for g in subset:
        acc = rg.add(acc, group_element_vector(rg, g))
    return acc


def class_sum_center(coeff: StructureRing, group: GroupTable,
                     rg: StructureRing | None = None) -> AdditiveSubgroup:
    """Coefficient span of the conjugacy-class sums inside RG.

    For a commutative coefficient ring this equals the center of the
    group ring; the predicates module computes the center independently,
    and the two are cross-checked in the test suite.
    """
    if not np.array_equal(coeff.tensor, coeff.tensor.transpose(1, 0, 2)):
        raise RingError("class-sum span needs a commutative coefficient ring")
    if rg is None:
        rg = group_ring(coeff, group)
    r = coeff.rank
    gens = []
    for cls in group.conjugacy_classes:
        for j in range(r):
            vec = [0] * rg.rank
            for g in cls:
                vec[g * r + j] = 1
            gens.append(tuple(vec))
    return additive_closure(rg, gens, name=f"class_sums[{rg.name}]")


def delta_ideal(rg: StructureRing, subgroup, cap: int | None = None) -> AdditiveSubgroup:
    """Fundamental ideal of a subgroup H: generated by {h - 1 : h in H}."""
    group = rg.meta.get("group")
    if group is None:
        raise RingError("delta ideal requires a ring built by group_ring")
    subset = tuple(sorted(set(int(h) for h in subgroup)))
    if not group.is_subgroup(subset):
        raise GroupError(f"{subset} is not a subgroup of {group.name}")
    e = group.identity
    seeds = [rg.sub(group_element_vector(rg, h), group_element_vector(rg, e))
             for h in subset if h != e]
    sub = generated_ideal(rg, seeds or [rg.zero], "two", cap=cap,
                          name=f"delta({group.name},{len(subset)})")
    return sub


def _looks_like_q8(group: GroupTable) -> bool:
    if group.order != 8 or len(group.center) != 2 or group.derived != group.center:
        return False
    involutions = [g for g in range(8) if g != group.identity and group.mul(g, g) == group.identity]
    return len(involutions) == 1


DeltaDecomposition = namedtuple(
    "DeltaDecomposition",
    ["quotient_ring", "delta_ring", "sum_ring", "basis_map", "delta_basis"])


def delta_decomposition(rg: StructureRing) -> DeltaDecomposition:
    """Split RQ8 as R(Q8/Q8') + delta component when 2 is invertible.

    The delta component is returned as a rank-4 structure ring on the
    basis {f, af, bf, abf} with f = (1 - a^2)/2, and the splitting map is
    verified to be a ring isomorphism at the structure-constant level.
    """
    group = rg.meta.get("group")
    coeff = rg.meta.get("coeff")
    if group is None or not _looks_like_q8(group):
        raise RingError("delta decomposition expects a group ring over Q8")
    if coeff.rank != 1:
        raise RingError("delta decomposition implemented for Z_n coefficients")
    n = rg.modulus
    inv2 = linalg.inverse_mod(2, n)
    if inv2 is None:
        raise RingError(f"2 is not invertible modulo {n}")
    e = group.identity
    z = next(g for g in group.center if g != e)
    f = rg.sub(rg.scalar_mul(inv2, group_element_vector(rg, e)),
               rg.scalar_mul(inv2, group_element_vector(rg, z)))
    quotient, coset_of = group.quotient([e, z])
    comp1 = group_ring(coeff, quotient, name=f"{coeff.name}[{group.name}/Z]")

    reps = []
    seen = set()
    for g in range(group.order):
        if coset_of[g] not in seen:
            seen.add(coset_of[g])
            reps.append(g)
    basis = [rg.mul(group_element_vector(rg, g), f) for g in reps]

    def coords(vec):
        lam = tuple((2 * vec[g]) % n for g in reps)
        rebuilt = rg.zero
        for lam_i, b in zip(lam, basis):
            rebuilt = rg.add(rebuilt, rg.scalar_mul(lam_i, b))
        if rebuilt != vec:
            raise RingError("element is outside the delta component")
        return lam

    tensor = np.zeros((4, 4, 4), dtype=np.int64)
    for i in range(4):
        for j in range(4):
            tensor[i, j, :] = coords(rg.mul(basis[i], basis[j]))
    delta_ring = StructureRing(n, tensor, one=coords(f),
                               name=f"delta[{rg.name}]",
                               meta={"construction": "delta_component", "ambient": rg,
                                     "basis": tuple(basis), "reps": tuple(reps)})

    sum_ring = direct_sum(comp1, delta_ring, name=f"{comp1.name}+{delta_ring.name}")
    phi = []
    for g in range(group.order):
        q_part = [0] * quotient.order
        q_part[coset_of[g]] = 1
        d_part = coords(rg.mul(group_element_vector(rg, g), f))
        phi.append(tuple(q_part) + tuple(d_part))
    for g in range(group.order):
        for h in range(group.order):
            lhs = sum_ring.mul(phi[g], phi[h])
            rhs = phi[group.mul(g, h)]
            if lhs != rhs:
                raise RingError("splitting map is not multiplicative")
    if not linalg.invertible_mod([list(row) for row in phi], n):
        raise RingError("splitting map is not bijective")
    return DeltaDecomposition(comp1, delta_ring, sum_ring, tuple(phi), tuple(basis))


# -- quaternion algebras -------------------------------------------------

_QUAT_TABLE = {
    (1, 1): (0, 1, "a"), (1, 2): (3, 1, "1"), (1, 3): (2, 1, "a"),
    (2, 1): (3, -1, "1"), (2, 2): (0, 1, "b"), (2, 3): (1, -1, "b"),
    (3, 1): (2, -1, "a"), (3, 2): (1, 1, "b"), (3, 3): (0, -1, "ab"),
}


def _find_inverse(base: StructureRing, x):
    if base.rank == 1:
        inv = linalg.inverse_mod(int(x[0]), base.modulus)
        return None if inv is None else (inv,)
    for y in base.elements():
        if base.mul(x, y) == base.one:
            return y
    return None


def quaternion_algebra(base: StructureRing, a, b, name: str | None = None) -> StructureRing:
    """The algebra over A with basis {1, i, j, k} and i^2 = a, j^2 = b.

    Remaining relations: ij = -ji = k, ik = -ki = aj, kj = -jk = bi.
    Both a and b must be invertible in the commutative unital base.
    """
    if not isinstance(base, StructureRing) or not base.unital:
        raise RingError("quaternion base must be a unital structure ring")
    if not np.array_equal(base.tensor, base.tensor.transpose(1, 0, 2)):
        raise RingError("quaternion base must be commutative")
    a = base.element(a)
    b = base.element(b)
    if _find_inverse(base, a) is None or _find_inverse(base, b) is None:
        raise RingError("quaternion parameters must be invertible in the base ring")
    n = base.modulus
    r = base.rank
    coeffs = {"1": base.one, "a": a, "b": b, "ab": base.mul(a, b)}
    tensor = np.zeros((4 * r, 4 * r, 4 * r), dtype=np.int64)
    for u in range(4):
        for v in range(4):
            if u == 0 or v == 0:
                w, sign, tag = (v if u == 0 else u), 1, "1"
            else:
                w, sign, tag = _QUAT_TABLE[(u, v)]
            c = coeffs[tag]
            for alpha in range(r):
                for beta in range(r):
                    prod = base.mul(c, tuple(int(x) for x in base.tensor[alpha, beta]))
                    block = [(sign * x) % n for x in prod]
                    tensor[u * r + alpha, v * r + beta, w * r:(w + 1) * r] = block
    one = tuple(base.one) + (0,) * (3 * r)
    label = name or f"quat({base.name};{_short(a)},{_short(b)})"
    return StructureRing(n, tensor, one=one, name=label,
                         meta={"construction": "quaternion", "base": base, "a": a, "b": b})


def _short(vec):
    return vec[0] if len(vec) == 1 else tuple(vec)


def quaternion_center_formula(ring: StructureRing) -> AdditiveSubgroup:
    """The subgroup A*1 + I*i + I*j + I*k with I the annihilator of 2 in A."""
    base = ring.meta.get("base")
    if base is None:
        raise RingError("center formula needs a ring built by quaternion_algebra")
    two = base.scalar_mul(2, base.one)
    ann2 = left_annihilator(base, [two], name=f"Ann({base.name},2)")
    elems = set()
    for alpha in base.elements():
        for i1 in ann2.elements:
            for i2 in ann2.elements:
                for i3 in ann2.elements:
                    elems.add(tuple(alpha) + tuple(i1) + tuple(i2) + tuple(i3))
    gens = [tuple(base.basis_element(i)) + (0,) * (3 * base.rank) for i in range(base.rank)]
    for pos in range(3):
        for g in ann2.generators:
            vec = [0] * (4 * base.rank)
            vec[(pos + 1) * base.rank:(pos + 2) * base.rank] = list(g)
            gens.append(tuple(vec))
    return AdditiveSubgroup(ring, elems, generators=gens, name=f"center_formula[{ring.name}]")


# -- matrix presets ------------------------------------------------------

def matrix_ring2(base: StructureRing, name: str | None = None) -> StructureRing:
    """Full 2x2 matrix ring over Z_n, basis (e11, e12, e21, e22)."""
    if base.rank != 1:
        raise RingError("matrix preset expects a Z_n base")
    n = base.modulus
    pos = {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}
    tensor = np.zeros((4, 4, 4), dtype=np.int64)
    for (p, q), i in pos.items():
        for (r_, s), j in pos.items():
            if q == r_:
                tensor[i, j, pos[(p, s)]] = 1
    return StructureRing(n, tensor, one=(1, 0, 0, 1), name=name or f"M2(Z{n})",
                         meta={"construction": "matrix_ring", "base": base})


def upper_triangular2(base: StructureRing, name: str | None = None) -> StructureRing:
    """Upper triangular 2x2 matrices over Z_n, basis (e11, e12, e22)."""
    if base.rank != 1:
        raise RingError("matrix preset expects a Z_n base")
    n = base.modulus
    tensor = np.zeros((3, 3, 3), dtype=np.int64)
    tensor[0, 0, 0] = 1  # e11 e11
    tensor[0, 1, 1] = 1  # e11 e12
    tensor[1, 2, 1] = 1  # e12 e22
    tensor[2, 2, 2] = 1  # e22 e22
    return StructureRing(n, tensor, one=(1, 0, 1), name=name or f"UT2(Z{n})",
                         meta={"construction": "upper_triangular", "base": base})


# -- the sign-pattern matrix ring ---------------------------------------

_PATTERN_SIGNS = np.array([
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, -1), (0, 1), (3, 1), (2, -1)],
    [(2, -1), (3, -1), (0, 1), (1, 1)],
    [(3, -1), (2, 1), (1, -1), (0, 1)],
], dtype=object)


def pattern_matrix(q, n: int) -> np.ndarray:
    """The 4x4 matrix whose first row is q, filled per the fixed sign pattern."""
    out = np.zeros((4, 4), dtype=np.int64)
    for r in range(4):
        for c in range(4):
            idx, sign = _PATTERN_SIGNS[r][c]
            out[r, c] = (sign * q[idx]) % n
    return out


def matrix_delta(n: int, name: str | None = None) -> StructureRing:
    """Rank-4 ring of pattern matrices over Z_n (n odd).

    Construction multiplies the four pattern generators, checks that each
    product is again a pattern matrix, and reads the structure constants
    off the first rows.
    """
    if gcd(2, n) != 1:
        raise RingError(f"2 is not invertible modulo {n}")
    units = [pattern_matrix([int(i == t) for i in range(4)], n) for t in range(4)]
    tensor = np.zeros((4, 4, 4), dtype=np.int64)
    for i in range(4):
        for j in range(4):
            prod = (units[i] @ units[j]) % n
            if not np.array_equal(pattern_matrix(prod[0], n), prod):
                raise AxiomError("pattern_closure", (i, j), "product leaves the pattern")
            tensor[i, j, :] = prod[0]
    return StructureRing(n, tensor, one=(1, 0, 0, 0), name=name or f"matrix_delta(Z{n})",
                         meta={"construction": "matrix_delta", "modulus": n})


# -- presets and the built-in corpus -------------------------------------

def preset_builders() -> dict:
    """Named zero-argument ring builders used by the CLI and the suite."""
    return {
        "z2q8": lambda: group_ring(make_zn(2), group_q8()),
        "z3q8": lambda: group_ring(make_zn(3), group_q8()),
        "z4q8": lambda: group_ring(make_zn(4), group_q8()),
        "z9q8": lambda: group_ring(make_zn(9), group_q8()),
        "z2_q8xc2": lambda: group_ring(make_zn(2), group_product(group_q8(), group_cyclic(2))),
        "matrix_delta_z9": lambda: matrix_delta(9),
        "m2_z2": lambda: matrix_ring2(make_zn(2)),
        "m2_z3": lambda: matrix_ring2(make_zn(3)),
        "ut2_z2": lambda: upper_triangular2(make_zn(2)),
        "zero_mult_2": lambda: zero_mult_ring(2),
        "zero_mult_3": lambda: zero_mult_ring(3),
        "zero_ring": zero_ring,
    }


def build_preset(name: str) -> Ring:
    builders = preset_builders()
    if name not in builders:
        raise RingError(f"unknown preset {name!r} (known: {', '.join(sorted(builders))})")
    return builders[name]()


def corpus() -> list[tuple[str, Ring]]:
    """The built-in test corpus: positive and negative instances together."""
    out = []
    for n in range(2, 13):
        out.append((f"Z{n}", make_zn(n)))
    out.append(("zero_mult_2", zero_mult_ring(2)))
    out.append(("zero_mult_3", zero_mult_ring(3)))
    out.append(("M2(Z2)", matrix_ring2(make_zn(2))))
    out.append(("M2(Z3)", matrix_ring2(make_zn(3))))
    out.append(("UT2(Z2)", upper_triangular2(make_zn(2))))
    q8 = group_q8()
    for n in (2, 3, 4):
        out.append((f"Z{n}Q8", group_ring(make_zn(n), q8)))
    for n in range(2, 10):
        out.append((f"quat(Z{n};-1,-1)", quaternion_algebra(make_zn(n), (n - 1,), (n - 1,))))
    out.append(("matrix_delta_z9", matrix_delta(9)))
    z2q8 = group_ring(make_zn(2), q8)
    aug = delta_ideal(z2q8, range(8))
    out.append(("delta(Z2Q8,Q8)", reify_subring(z2q8, aug.elements, name="delta(Z2Q8,Q8)")))
    zsub = delta_ideal(z2q8, q8.center)
    out.append(("delta(Z2Q8,Z(Q8))", reify_subring(z2q8, zsub.elements, name="delta(Z2Q8,Z(Q8))")))
    out.append(("Z2+M2(Z2)", direct_sum(make_zn(2), matrix_ring2(make_zn(2)))))
    out.append(("Z2+Z3", direct_sum(make_zn(2), make_zn(3))))
    out.append(("Z6+Z4", direct_sum(make_zn(6), make_zn(4))))
    return out
