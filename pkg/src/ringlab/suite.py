"""The named verification suite and the counterexample search harness.

Every check is keyed by the anchor of the theorem or example it
exercises (Thm3.6/..., Ex4.4/...), runs at a fixed cap, and reports a
pass/fail verdict plus re-verifiable certificates.  ``verify_paper``
runs the whole battery; ``--filter`` narrows it by substring.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from math import gcd

import numpy as np

from . import semirings
from .constructions import (corpus, delta_decomposition, delta_ideal, group_element_vector,
                            group_ring, group_sum_vector, matrix_delta, pattern_matrix,
                            quaternion_algebra, quaternion_center_formula)
from .groups import group_cyclic, group_product, group_q8
from .ideals import (AdditiveSubgroup, all_ideals, generated_ideal, is_nilpotent_subgroup,
                     two_sided_annihilator)
from .modules import ZnModule, direct_sum_submodule
from .predicates import (Certificate, center, center_exhaustive, find_central_multiplier,
                         is_centrally_essential, is_centrally_rational, is_commutative,
                         is_essential_right_ideal, is_essential_submodule, is_reduced,
                         is_semiprime, is_strongly_bounded, minimal_right_ideals)
from .reports import CheckResult, Report
from .rings import CapExceeded, Ring, StructureRing, direct_sum, make_zn, reify_subring
from .semirings import example_order5

SECTION2_IDEAL_CAP = 256
SECTION2_RIGHT_FULL_CAP = 32


def _zn_doc(n):
    return {"kind": "zn", "n": n}


def _znq8_doc(n):
    return {"kind": "group_ring", "coeff": _zn_doc(n), "group": {"kind": "q8"}}


def _quat_doc(n, a, b):
    return {"kind": "quaternion", "base": _zn_doc(n), "a": a, "b": b}


def _corpus_docs() -> dict:
    docs = {}
    for n in range(2, 13):
        docs[f"Z{n}"] = _zn_doc(n)
    for m in (2, 3):
        docs[f"zero_mult_{m}"] = {"kind": "preset", "name": f"zero_mult_{m}"}
    docs["M2(Z2)"] = {"kind": "preset", "name": "m2_z2"}
    docs["M2(Z3)"] = {"kind": "preset", "name": "m2_z3"}
    docs["UT2(Z2)"] = {"kind": "preset", "name": "ut2_z2"}
    for n in (2, 3, 4):
        docs[f"Z{n}Q8"] = _znq8_doc(n)
    for n in range(2, 10):
        docs[f"quat(Z{n};-1,-1)"] = _quat_doc(n, n - 1, n - 1)
    docs["matrix_delta_z9"] = {"kind": "matrix_delta", "n": 9}
    docs["delta(Z2Q8,Q8)"] = {"kind": "delta_ideal", "coeff": _zn_doc(2),
                              "group": {"kind": "q8"}, "subgroup": list(range(8))}
    docs["delta(Z2Q8,Z(Q8))"] = {"kind": "delta_ideal", "coeff": _zn_doc(2),
                                 "group": {"kind": "q8"}, "subgroup": [0, 2]}
    docs["Z2+M2(Z2)"] = {"kind": "direct_sum",
                         "summands": [_zn_doc(2), {"kind": "preset", "name": "m2_z2"}]}
    docs["Z2+Z3"] = {"kind": "direct_sum", "summands": [_zn_doc(2), _zn_doc(3)]}
    docs["Z6+Z4"] = {"kind": "direct_sum", "summands": [_zn_doc(6), _zn_doc(4)]}
    return docs


_CORPUS: list | None = None


def corpus_entries():
    """(name, ring, spec-doc) triples, built once so predicate caches persist."""
    global _CORPUS
    if _CORPUS is None:
        docs = _corpus_docs()
        _CORPUS = [(name, ring, docs[name]) for name, ring in corpus()]
    return _CORPUS


_CE_CACHE: dict = {}


def _ce(name, ring):
    if name not in _CE_CACHE:
        _CE_CACHE[name] = is_centrally_essential(ring)
    return _CE_CACHE[name]


def _cert_item(doc, cert: Certificate) -> dict:
    return {"target": doc, "certificate": cert.to_dict()}


def _q8_vec(rg, label_index):
    return group_element_vector(rg, label_index)


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def check_z2q8_centrally_essential() -> CheckResult:
    rg = group_ring(make_zn(2), group_q8())
    cert = is_centrally_essential(rg, variant="unital")
    ok = cert.verdict and cert.examined == 255 and cert.bounds["center_order"] == 32
    return CheckResult("Thm3.6/Z2Q8-centrally-essential", ok, verdict=cert.verdict,
                       certificates=[_cert_item(_znq8_doc(2), cert)],
                       examined=cert.examined,
                       detail=f"255 non-zero elements x 32 central elements")


def check_z2q8_constructive_multipliers() -> CheckResult:
    rg = group_ring(make_zn(2), group_q8())
    cset = center(rg).element_set
    ok = True
    examined = 0
    for idx in range(1, rg.order):
        x = rg.decode(idx)
        got = find_central_multiplier(rg, x)
        examined += 1
        if got is None:
            ok = False
            break
        c, y = got
        if y != rg.mul(x, c) or y == rg.zero or y not in cset or c not in cset:
            ok = False
            break
    return CheckResult("Thm3.6/Z2Q8-constructive-multipliers", ok,
                       examined=examined,
                       detail="multiplier procedure succeeds for every non-zero element")


def check_z2q8_center_class_sums() -> CheckResult:
    from .constructions import class_sum_center
    rg = group_ring(make_zn(2), group_q8())
    c = center(rg)
    sums = class_sum_center(make_zn(2), group_q8(), rg=rg)
    brute = set(center_exhaustive(rg, cap=4096))
    ok = len(c) == 32 and c.element_set == sums.element_set == brute
    return CheckResult("Ex4.3/Z2Q8-center-class-sums", ok, examined=rg.order,
                       detail=f"|C| = {len(c)}, class-sum span and brute force agree")


def check_z3q8_not_centrally_essential() -> CheckResult:
    cert = _ce("Z3Q8", group_ring(make_zn(3), group_q8()))
    ok = not cert.verdict
    return CheckResult("Thm3.6/Z3Q8-not-centrally-essential", ok, verdict=cert.verdict,
                       certificates=[_cert_item(_znq8_doc(3), cert)],
                       examined=cert.examined,
                       detail=f"witness {cert.witness.get('element')}")


def check_z4q8_not_centrally_essential() -> CheckResult:
    cert = _ce("Z4Q8", group_ring(make_zn(4), group_q8()))
    ok = not cert.verdict
    detail = "expected non-essential for characteristic 4"
    if cert.verdict:
        detail = ("exhaustive scan finds a central multiplier for every element; "
                  "the characteristic-4 case contradicts the expected verdict")
    return CheckResult("Thm3.6/Z4Q8-not-centrally-essential", ok, verdict=cert.verdict,
                       certificates=[_cert_item(_znq8_doc(4), cert)],
                       examined=cert.examined, detail=detail)


def check_z9q8_refuted_via_delta() -> CheckResult:
    rg = group_ring(make_zn(9), group_q8())
    f = rg.element([5, 0, 4, 0, 0, 0, 0, 0])  # (1 - a^2)/2 mod 9
    af = rg.mul(_q8_vec(rg, 1), f)
    cert = is_centrally_essential(rg, candidates=[af])
    ok = not cert.verdict and tuple(cert.witness["element"]) == af
    return CheckResult("Thm3.6/Z9Q8-refuted-via-delta-candidate", ok, verdict=cert.verdict,
                       certificates=[_cert_item(_znq8_doc(9), cert)],
                       examined=cert.examined,
                       detail="candidate a*f of the delta component has no multiplier")


def check_delta_splitting() -> CheckResult:
    q8 = group_q8()
    ok = True
    notes = []
    for n in (3, 9):
        dec = delta_decomposition(group_ring(make_zn(n), q8))  # verifies the iso internally
        ok &= dec.delta_ring.order == n ** 4 and dec.quotient_ring.order == n ** 4
        notes.append(f"Z{n}: 4+4 split")
    rg9 = group_ring(make_zn(9), q8)
    sub = delta_ideal(rg9, [0, 2], cap=1 << 14)
    ok &= len(sub) == 9 ** 4  # free of rank 4 on {f, af, bf, abf}
    rg2 = group_ring(make_zn(2), q8)
    aug = delta_ideal(rg2, range(8))
    ok &= len(aug) == 128 and is_nilpotent_subgroup(rg2, aug)
    try:
        delta_decomposition(rg2)
        ok = False
    except Exception:
        notes.append("Z2: split rejected (2 not invertible)")
    return CheckResult("Thm3.6/RQ8-splitting", ok,
                       detail="; ".join(notes) + "; char-2 fundamental ideal nilpotent")


def check_hamiltonian_order16() -> CheckResult:
    g = group_product(group_q8(), group_cyclic(2))
    rg = group_ring(make_zn(2), g)
    cert = is_centrally_essential(rg)
    doc = {"kind": "group_ring", "coeff": _zn_doc(2),
           "group": {"kind": "product", "factors": [{"kind": "q8"}, {"kind": "cyclic", "n": 2}]}}
    return CheckResult("Thm3.6/Hamiltonian-order16-char2", cert.verdict, verdict=cert.verdict,
                       certificates=[_cert_item(doc, cert)], examined=cert.examined,
                       detail="group ring of Q8 x C2 over Z2 is centrally essential")


def check_matrix_delta() -> CheckResult:
    md = matrix_delta(9)
    e = md.element((5, 1, 1, 0))
    cset = center(md).element_set
    ok = md.mul(e, e) == e and e not in cset
    mat = pattern_matrix(e, 9)
    ok &= np.array_equal((mat @ mat) % 9, mat)
    cert = _ce("matrix_delta_z9", md)
    ok &= not cert.verdict
    dec = delta_decomposition(group_ring(make_zn(9), group_q8()))
    signs = np.array([1, 1, 1, -1])
    twisted = (signs[:, None, None] * signs[None, :, None] * signs[None, None, :]
               * dec.delta_ring.tensor) % 9
    ok &= np.array_equal(md.tensor, twisted)
    return CheckResult("Ex3.7/matrix-delta", ok, verdict=cert.verdict,
                       certificates=[_cert_item({"kind": "matrix_delta", "n": 9}, cert)],
                       examined=cert.examined,
                       detail="idempotent (5,1,1,0) non-central; isomorphic to the "
                              "delta component via f, af, bf, -abf")


def check_quaternion_equivalence() -> CheckResult:
    mismatches = 0
    count = 0
    certs = []
    for n in range(2, 33):
        zn = make_zn(n)
        ann_gen = (n // 2,) if n % 2 == 0 else (0,)
        ess = is_essential_right_ideal(zn, generated_ideal(zn, [ann_gen], "right"))
        # oracle: essentiality read off the full ideal lattice of Z_n
        lattice = all_ideals(zn, "right", cap=64)
        ann_set = {(0,), ann_gen}
        oracle = all(len(ann_set & set(i.elements)) > 1 or len(i) == 1 for i in lattice)
        pow2 = n & (n - 1) == 0
        if ess.verdict != oracle or oracle != pow2:
            mismatches += 1
        certs.append({"target": {"kind": "ring_ideal", "ring": _zn_doc(n),
                                 "generators": [[(n // 2) % n if n % 2 == 0 else 0]],
                                 "side": "right"},
                      "certificate": ess.to_dict()})
        units = [a for a in range(1, n) if gcd(a, n) == 1]
        for a in units:
            for b in units:
                ring = quaternion_algebra(zn, (a,), (b,))
                cert = is_centrally_essential(ring, cap=1 << 21)
                count += 1
                if cert.verdict != pow2:
                    mismatches += 1
                if a == units[-1] and b == units[-1]:
                    certs.append(_cert_item(_quat_doc(n, a, b), cert))
    ok = mismatches == 0
    return CheckResult("Thm3.2/quaternion-essential-equivalence", ok,
                       certificates=certs, examined=count,
                       detail=f"{count} rings over Z_2..Z_32, {mismatches} mismatches; "
                              "CE <=> Ann(2) essential <=> n a power of 2")


def check_quaternion_center_formula() -> CheckResult:
    mismatches = 0
    count = 0
    for n in range(2, 10):
        zn = make_zn(n)
        units = [a for a in range(1, n) if gcd(a, n) == 1]
        for a in units:
            for b in units:
                ring = quaternion_algebra(zn, (a,), (b,))
                formula = quaternion_center_formula(ring)
                brute = set(center_exhaustive(ring, cap=1 << 14))
                count += 1
                if formula.element_set != brute:
                    mismatches += 1
    return CheckResult("QuatCenter/formula-matches-brute-force", mismatches == 0,
                       examined=count,
                       detail=f"{count} algebras over Z_2..Z_9, {mismatches} mismatches")


# -- section 2 corpus machinery ----------------------------------------------

_S2_CACHE: dict = {}


def _reify(ring, sub: AdditiveSubgroup, name):
    return reify_subring(ring, sub.elements, name=name)


def _two_sided_ideals(name, ring):
    key = ("two", name)
    if key not in _S2_CACHE:
        try:
            _S2_CACHE[key] = all_ideals(ring, "two", cap=SECTION2_IDEAL_CAP, count_cap=2048)
        except CapExceeded:
            _S2_CACHE[key] = None
    return _S2_CACHE[key]


def _right_ideals(name, ring):
    """Full right-ideal lattice when small; distinct principal right ideals
    otherwise (bounded evidence, recorded in the check detail)."""
    key = ("right", name)
    if key not in _S2_CACHE:
        try:
            if ring.order <= SECTION2_RIGHT_FULL_CAP:
                _S2_CACHE[key] = (all_ideals(ring, "right"), "full lattice")
            elif ring.order <= SECTION2_IDEAL_CAP:
                seen = {}
                for a in ring.elements():
                    if a == ring.zero:
                        continue
                    sub = generated_ideal(ring, [a], "right")
                    seen.setdefault(sub.element_set, sub)
                _S2_CACHE[key] = (sorted(seen.values(), key=lambda s: (len(s), s.elements)),
                                  "principal right ideals")
            else:
                _S2_CACHE[key] = (None, "cap exceeded")
        except CapExceeded:
            _S2_CACHE[key] = (None, "cap exceeded")
    return _S2_CACHE[key]


def _semiprime_as_ring(ring, sub: AdditiveSubgroup, name) -> bool:
    key = ("sp", id(ring), sub.element_set)
    if key not in _S2_CACHE:
        if len(sub) == 1:
            _S2_CACHE[key] = False
        else:
            reified = _reify(ring, sub, name)
            _S2_CACHE[key] = is_semiprime(reified).verdict
    return _S2_CACHE[key]


def _ce_rings():
    out = []
    for name, ring, doc in corpus_entries():
        cert = _ce(name, ring)
        if cert.verdict:
            out.append((name, ring, doc))
    return out


def check_lemma21_and_prop24() -> CheckResult:
    """Semiprime-as-ring right ideals of centrally essential rings are
    reduced and commutative."""
    violations = []
    tested = 0
    skipped = []
    for name, ring, doc in _ce_rings():
        ideals, how = _right_ideals(name, ring)
        if ideals is None:
            skipped.append(name)
            continue
        cset = center(ring).element_set
        for sub in ideals:
            if len(sub) == 1:
                continue
            if not _semiprime_as_ring(ring, sub, f"J<{name}"):
                continue
            tested += 1
            reified = _reify(ring, sub, f"J<{name}")
            if not is_reduced(sub).verdict:
                violations.append((name, "not reduced"))
            if not is_commutative(reified).verdict:
                violations.append((name, "not commutative"))
            # Cor 2.5: zero two-sided annihilator forces centrality
            if len(two_sided_annihilator(ring, sub.elements)) == 1:
                if not all(e in cset for e in sub.elements):
                    violations.append((name, "Cor2.5 containment"))
    detail = f"{tested} semiprime right ideals across the corpus"
    if skipped:
        detail += f"; skipped (cap): {', '.join(skipped)}"
    return CheckResult("Prop2.4/semiprime-right-ideals", not violations,
                       examined=tested, detail=detail + (f"; violations: {violations}" if violations else ""))


def check_thm22() -> CheckResult:
    """Semiprime-as-ring two-sided ideals of centrally essential rings lie in
    the center and are centrally essential themselves."""
    violations = []
    tested = 0
    skipped = []
    for name, ring, doc in _ce_rings():
        ideals = _two_sided_ideals(name, ring)
        if ideals is None:
            skipped.append(name)
            continue
        cset = center(ring).element_set
        for sub in ideals:
            if len(sub) == 1:
                continue
            if not _semiprime_as_ring(ring, sub, f"I<{name}"):
                continue
            tested += 1
            if not all(e in cset for e in sub.elements):
                violations.append((name, len(sub)))
            reified = _reify(ring, sub, f"I<{name}")
            if not is_centrally_essential(reified).verdict:
                violations.append((name, "component not CE"))
    detail = f"{tested} semiprime ideals across the corpus"
    if skipped:
        detail += f"; skipped (cap): {', '.join(skipped)}"
    return CheckResult("Thm2.2/semiprime-ideals-central", not violations,
                       examined=tested, detail=detail + (f"; violations: {violations}" if violations else ""))


def check_cor23_minimal_ideals() -> CheckResult:
    violations = []
    tested = 0
    for name, ring, doc in _ce_rings():
        try:
            records = minimal_right_ideals(ring)
        except CapExceeded:
            continue
        for rec in records:
            if rec.nilpotent:
                continue
            tested += 1
            if not (rec.central and rec.two_sided):
                violations.append((name, rec.subgroup.elements))
    return CheckResult("Cor2.3/minimal-non-nilpotent-right-ideals", not violations,
                       examined=tested,
                       detail=f"{tested} minimal non-nilpotent right ideals, all central and two-sided"
                       if not violations else f"violations: {violations}")


def check_prop26_idempotent_splitting() -> CheckResult:
    violations = []
    tested = 0
    for name, ring, doc in _ce_rings():
        if not ring.unital:
            continue
        try:
            records = minimal_right_ideals(ring)
        except CapExceeded:
            continue
        for rec in records:
            if rec.nilpotent or rec.idempotent is None:
                continue
            e = rec.idempotent
            comp = generated_ideal(ring, [ring.sub(ring.one, e)], "right")
            tested += 1
            try:
                r1 = _reify(ring, rec.subgroup, f"eR<{name}")
                r2 = _reify(ring, comp, f"(1-e)R<{name}")
                total = direct_sum(r1, r2)
            except CapExceeded:
                continue
            lhs = is_centrally_essential(total).verdict
            rhs = is_centrally_essential(r1).verdict and is_centrally_essential(r2).verdict
            if lhs != rhs or lhs != _ce(name, ring).verdict:
                violations.append(name)
    return CheckResult("Prop2.6/idempotent-splitting", not violations, examined=tested,
                       detail=f"{tested} splittings eR + (1-e)R compared"
                       if not violations else f"violations: {violations}")


def check_cor27_central_idempotents() -> CheckResult:
    from .ideals import idempotents
    violations = []
    tested = 0
    for name, ring, doc in corpus_entries():
        if not ring.unital or ring.order > 512:
            continue
        cset = center(ring).element_set
        if not all(e in cset for e in idempotents(ring)):
            continue
        try:
            records = minimal_right_ideals(ring)
        except CapExceeded:
            continue
        for rec in records:
            if rec.nilpotent or rec.idempotent is None:
                continue
            e = rec.idempotent
            comp = generated_ideal(ring, [ring.sub(ring.one, e)], "right")
            tested += 1
            r1 = _reify(ring, rec.subgroup, f"eR<{name}")
            r2 = _reify(ring, comp, f"(1-e)R<{name}")
            split = is_centrally_essential(r1).verdict and is_centrally_essential(r2).verdict
            if split != _ce(name, ring).verdict:
                violations.append(name)
    return CheckResult("Cor2.7/rings-with-central-idempotents", not violations,
                       examined=tested,
                       detail=f"{tested} minimal non-nilpotent ideals in idempotent-central rings"
                       if not violations else f"violations: {violations}")


def _is_invariant(ring) -> bool:
    from .ideals import verify_ideal_flag
    for a in ring.elements():
        if a == ring.zero:
            continue
        for side in ("right", "left"):
            sub = generated_ideal(ring, [a], side)
            if not verify_ideal_flag(ring, sub, "two"):
                return False
    return True


def _is_field(ring) -> bool:
    if not ring.unital or not is_commutative(ring).verdict:
        return False
    for x in ring.elements():
        if x == ring.zero:
            continue
        if not any(ring.mul(x, y) == ring.one for y in ring.elements()):
            return False
    return ring.order > 1


def check_cor28_invariant_fields() -> CheckResult:
    violations = []
    tested = 0
    for name, ring, doc in _ce_rings():
        if ring.order > 64 or not _is_invariant(ring):
            continue
        try:
            records = minimal_right_ideals(ring)
        except CapExceeded:
            continue
        for rec in records:
            if rec.nilpotent:
                continue
            tested += 1
            if not _is_field(_reify(ring, rec.subgroup, f"I<{name}")):
                violations.append((name, rec.subgroup.elements))
    return CheckResult("Cor2.8/invariant-minimal-ideals-are-fields", not violations,
                       examined=tested,
                       detail=f"{tested} minimal non-nilpotent ideals of invariant rings"
                       if not violations else f"violations: {violations}")


def check_ce_direct_sums() -> CheckResult:
    pairs = [("Z2", "Z3"), ("Z4", "Z6"), ("Z2", "M2(Z2)"), ("M2(Z2)", "Z3"),
             ("zero_mult_2", "Z3"), ("Z6", "zero_mult_3"), ("Z4", "M2(Z3)")]
    by_name = {name: (ring, doc) for name, ring, doc in corpus_entries()}
    violations = []
    certs = []
    for left, right_ in pairs:
        r1, d1 = by_name[left]
        r2, d2 = by_name[right_]
        total = direct_sum(r1, r2)
        cert = is_centrally_essential(total)
        expected = _ce(left, r1).verdict and _ce(right_, r2).verdict
        if cert.verdict != expected:
            violations.append((left, right_))
        certs.append({"target": {"kind": "direct_sum", "summands": [d1, d2]},
                      "certificate": cert.to_dict()})
    return CheckResult("Prop2.6/direct-sum-equivalence", not violations,
                       certificates=certs, examined=len(pairs),
                       detail=f"{len(pairs)} direct sums: CE(R+S) <=> CE(R) and CE(S)"
                       if not violations else f"violations: {violations}")


def check_strongly_bounded() -> CheckResult:
    violations = []
    certs = []
    tested = 0
    for name, ring, doc in _ce_rings():
        if ring.order > 512:
            continue
        cert = is_strongly_bounded(ring)
        tested += 1
        if not cert.verdict:
            violations.append(name)
        if name in ("Z2Q8", "Z6", "quat(Z4;-1,-1)"):
            certs.append(_cert_item(doc, cert))
    m2 = next(r for n_, r, _d in corpus_entries() if n_ == "M2(Z2)")
    neg = is_strongly_bounded(m2)
    if neg.verdict:
        violations.append("M2(Z2) should not be strongly bounded")
    certs.append(_cert_item({"kind": "preset", "name": "m2_z2"}, neg))
    return CheckResult("StrongBound/centrally-essential-rings", not violations,
                       certificates=certs, examined=tested,
                       detail=f"{tested} centrally essential rings strongly bounded; "
                              "matrix-ring negative control refuted"
                       if not violations else f"violations: {violations}")


def check_lemma31_essential_sums() -> CheckResult:
    violations = []
    tested = 0
    for n in (4, 8):
        zn = make_zn(n)
        lattice = all_ideals(zn, "right")
        essentials = []
        for sub in lattice:
            if len(sub) == 1:
                continue
            if is_essential_right_ideal(zn, sub).verdict:
                essentials.append([v[0] for v in sub.elements])
        module = ZnModule(n, 4)
        for combo in product(essentials, repeat=4):
            sub = direct_sum_submodule(n, combo)
            cert = is_essential_submodule(module, sub)
            tested += 1
            if not cert.verdict:
                violations.append((n, combo))
    return CheckResult("Lemma3.1/essential-direct-sums", not violations, examined=tested,
                       detail=f"{tested} combinations over Z4 and Z8 checked exhaustively"
                       if not violations else f"violations: {violations}")


def check_prop42_rational_iff_commutative() -> CheckResult:
    violations = []
    certs = []
    tested = 0
    for name, ring, doc in corpus_entries():
        comm = is_commutative(ring).verdict
        try:
            cr = is_centrally_rational(ring)
        except CapExceeded:
            continue
        tested += 1
        if cr.verdict != comm:
            violations.append(name)
        if name in ("Z6", "Z2Q8", "M2(Z2)", "quat(Z8;-1,-1)", "zero_mult_2"):
            certs.append(_cert_item(doc, cr))
    return CheckResult("Prop4.2/centrally-rational-iff-commutative", not violations,
                       certificates=certs, examined=tested,
                       detail=f"{tested} corpus rings, zero mismatches"
                       if not violations else f"violations: {violations}")


def check_rem41_rational_implies_essential() -> CheckResult:
    violations = []
    tested = 0
    for name, ring, doc in corpus_entries():
        try:
            cr = is_centrally_rational(ring)
        except CapExceeded:
            continue
        if not cr.verdict:
            continue
        tested += 1
        if not _ce(name, ring).verdict:
            violations.append(name)
    return CheckResult("Rem4.1/rational-implies-essential", not violations, examined=tested,
                       detail=f"{tested} centrally rational rings are all centrally essential"
                       if not violations else f"violations: {violations}")


def check_ex43_not_centrally_rational() -> CheckResult:
    rg = group_ring(make_zn(2), group_q8())
    cr = is_centrally_rational(rg)
    csub = center(rg)
    cset = csub.element_set
    ok = not cr.verdict
    # the core H = {0, Q8-hat} and the nilpotent central annihilator d = 1 + a^2
    qhat = group_sum_vector(rg, range(8))
    h_sub = generated_ideal(rg, [qhat], "two")
    ok &= set(h_sub.elements) == {rg.zero, qhat}
    d = rg.add(rg.one, _q8_vec(rg, 2))
    from .ideals import nilpotency_index, right_annihilator
    ok &= d in cset and nilpotency_index(rg, d) is not None
    ok &= rg.mul(d, qhat) == rg.zero
    ann = right_annihilator(rg, [d])
    ok &= qhat in ann.element_set
    # 16 invertible central elements, none of which moves b into the center
    invertible = [c for c in csub.elements
                  if any(rg.mul(c, y) == rg.one for y in (rg.decode(i) for i in range(rg.order)))]
    b = _q8_vec(rg, 4)
    ok &= len(invertible) == 16
    ok &= all(rg.mul(b, c) not in cset for c in invertible)
    return CheckResult("Ex4.3/Z2Q8-not-centrally-rational", ok, verdict=cr.verdict,
                       certificates=[_cert_item(_znq8_doc(2), cr)], examined=cr.examined,
                       detail="not centrally rational; least ideal {0, Q8-hat}; "
                              "d = 1 + a^2 is central, nilpotent, annihilates the core")


def check_ex44_semiring() -> CheckResult:
    s = example_order5()
    centre = semirings.semiring_center(s)
    comm = semirings.is_commutative_semiring(s)
    ce = semirings.is_ce_semiring(s)
    semi = semirings.is_semisubtractive(s)
    ok = (centre == [0, 1, 4] and not comm.verdict and ce.verdict and semi.verdict
          and comm.witness == {"a": 2, "b": 3})
    doc = {"kind": "semiring", "add": [[int(v) for v in row] for row in s.add_table],
           "mul": [[int(v) for v in row] for row in s.mul_table], "zero": 0, "one": 1}
    certs = [_cert_item(doc, c) for c in (comm, ce, semi)]
    return CheckResult("Ex4.4/semiring-order5", ok,
                       certificates=certs, examined=s.order ** 2,
                       detail="center {0, 1, c}; non-commutative witness (a, b); "
                              "centrally essential; semisubtractive")


CHECKS = [
    ("Thm3.6/Z2Q8-centrally-essential", check_z2q8_centrally_essential),
    ("Thm3.6/Z2Q8-constructive-multipliers", check_z2q8_constructive_multipliers),
    ("Ex4.3/Z2Q8-center-class-sums", check_z2q8_center_class_sums),
    ("Thm3.6/Z3Q8-not-centrally-essential", check_z3q8_not_centrally_essential),
    ("Thm3.6/Z4Q8-not-centrally-essential", check_z4q8_not_centrally_essential),
    ("Thm3.6/Z9Q8-refuted-via-delta-candidate", check_z9q8_refuted_via_delta),
    ("Thm3.6/RQ8-splitting", check_delta_splitting),
    ("Thm3.6/Hamiltonian-order16-char2", check_hamiltonian_order16),
    ("Ex3.7/matrix-delta", check_matrix_delta),
    ("Thm3.2/quaternion-essential-equivalence", check_quaternion_equivalence),
    ("QuatCenter/formula-matches-brute-force", check_quaternion_center_formula),
    ("Prop2.4/semiprime-right-ideals", check_lemma21_and_prop24),
    ("Thm2.2/semiprime-ideals-central", check_thm22),
    ("Cor2.3/minimal-non-nilpotent-right-ideals", check_cor23_minimal_ideals),
    ("Prop2.6/idempotent-splitting", check_prop26_idempotent_splitting),
    ("Cor2.7/rings-with-central-idempotents", check_cor27_central_idempotents),
    ("Cor2.8/invariant-minimal-ideals-are-fields", check_cor28_invariant_fields),
    ("Prop2.6/direct-sum-equivalence", check_ce_direct_sums),
    ("StrongBound/centrally-essential-rings", check_strongly_bounded),
    ("Lemma3.1/essential-direct-sums", check_lemma31_essential_sums),
    ("Prop4.2/centrally-rational-iff-commutative", check_prop42_rational_iff_commutative),
    ("Rem4.1/rational-implies-essential", check_rem41_rational_implies_essential),
    ("Ex4.3/Z2Q8-not-centrally-rational", check_ex43_not_centrally_rational),
    ("Ex4.4/semiring-order5", check_ex44_semiring),
]


def _run_one(item):
    name, fn = item
    t0 = time.perf_counter()
    try:
        result = fn()
    except Exception as exc:
        result = CheckResult(name, False, detail=f"crashed: {type(exc).__name__}: {exc}")
    result.duration_ms = (time.perf_counter() - t0) * 1000.0
    return result


def verify_paper(filter_substring: str | None = None, parallel: int = 1) -> Report:
    """Run the named suite.  Parallelism never changes verdicts or witnesses:
    checks are pure and results are reported in registry order."""
    selected = [(n, f) for n, f in CHECKS
                if not filter_substring or filter_substring in n]
    if parallel > 1 and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_run_one, selected))
    else:
        results = [_run_one(item) for item in selected]
    return Report("verify-paper", results)


# ---------------------------------------------------------------------------
# counterexample search (nilpotent minimal ideals vs the center)
# ---------------------------------------------------------------------------

def _search_family(family: str, max_order: int):
    if family == "zn":
        for n in range(2, 33):
            ring = make_zn(n)
            if ring.order <= max_order:
                yield f"Z{n}", ring
    elif family == "znq8":
        for n in range(2, 10):
            ring = group_ring(make_zn(n), group_q8())
            if ring.order <= max_order:
                yield f"Z{n}Q8", ring
    elif family == "quaternion":
        for n in range(2, 17):
            ring = quaternion_algebra(make_zn(n), (n - 1,), (n - 1,))
            if ring.order <= max_order:
                yield f"quat(Z{n};-1,-1)", ring
    elif family == "corpus":
        for name, ring, _doc in corpus_entries():
            if ring.order <= max_order:
                yield name, ring
    else:
        raise ValueError(f"unknown family {family!r} "
                         "(known: zn, znq8, quaternion, corpus)")


def search_nilpotent_minimal_ideals(family: str, max_order: int = 4096) -> Report:
    """Hunt for a centrally essential ring with a nilpotent minimal ideal not
    contained in the center.  Finding nothing is a bounds report, not a proof."""
    results = []
    for name, ring in _search_family(family, max_order):
        t0 = time.perf_counter()
        try:
            ce = is_centrally_essential(ring)
        except CapExceeded:
            results.append(CheckResult(f"search/{name}", True,
                                       detail="skipped: central essentiality above cap"))
            continue
        if not ce.verdict:
            results.append(CheckResult(f"search/{name}", True,
                                       detail="not centrally essential; out of scope"))
            continue
        try:
            records = minimal_right_ideals(ring)
        except CapExceeded:
            results.append(CheckResult(f"search/{name}", True,
                                       detail="centrally essential; ideal enumeration above cap"))
            continue
        cset = center(ring).element_set
        bad = []
        nilpotent_count = 0
        for rec in records:
            if not rec.nilpotent or not rec.two_sided:
                continue
            nilpotent_count += 1
            if not all(e in cset for e in rec.subgroup.elements):
                bad.append([list(e) if isinstance(e, tuple) else e
                            for e in rec.subgroup.elements])
        res = CheckResult(
            f"search/{name}", not bad,
            examined=len(records),
            detail=(f"{nilpotent_count} nilpotent minimal ideals, all central"
                    if not bad else f"counterexample: {bad}"))
        res.duration_ms = (time.perf_counter() - t0) * 1000.0
        results.append(res)
    return Report(f"search nilpotent minimal ideals [{family}]", results)
