"""Ring-spec documents: a small JSON vocabulary for building rings.

A document is a JSON object with a ``kind`` field.  Tables are row-major
integer lists, so serialization is bit-exact.  Unknown fields are
rejected and every accepted document round-trips parse -> serialize ->
parse to an identical structure.
"""

from __future__ import annotations

import json

from .constructions import (build_preset, delta_ideal, group_ring, matrix_delta,
                            preset_builders, quaternion_algebra)
from .groups import (GroupTable, group_cyclic, group_elementary_abelian_2,
                     group_from_table, group_product, group_q8)
from .rings import Ring, RingError, direct_sum, make_table_ring, make_zn, reify_subring
from .semirings import Semiring, make_semiring


class SpecError(RingError):
    """Malformed ring-spec document."""


_GROUP_FIELDS = {
    "q8": set(),
    "cyclic": {"n"},
    "elementary_abelian_2": {"rank"},
    "product": {"factors"},
    "table": {"table"},
}

_RING_FIELDS = {
    "zn": {"n"},
    "table": {"add", "mul", "zero", "one"},
    "group_ring": {"coeff", "group"},
    "quaternion": {"base", "a", "b"},
    "matrix_delta": {"n"},
    "delta_ideal": {"coeff", "group", "subgroup"},
    "direct_sum": {"summands"},
    "semiring": {"add", "mul", "zero", "one"},
    "preset": {"name"},
}


def _check_fields(doc: dict, kind: str, allowed: set, where: str):
    extra = set(doc) - allowed - {"kind"}
    if extra:
        raise SpecError(f"unknown fields {sorted(extra)} for {where} kind {kind!r}")


def parse_group_spec(doc: dict) -> GroupTable:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SpecError("group spec must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind not in _GROUP_FIELDS:
        raise SpecError(f"unknown group kind {kind!r}")
    _check_fields(doc, kind, _GROUP_FIELDS[kind], "group")
    if kind == "q8":
        return group_q8()
    if kind == "cyclic":
        return group_cyclic(int(doc["n"]))
    if kind == "elementary_abelian_2":
        return group_elementary_abelian_2(int(doc["rank"]))
    if kind == "product":
        factors = [parse_group_spec(f) for f in doc["factors"]]
        if len(factors) < 2:
            raise SpecError("group product needs at least two factors")
        g = factors[0]
        for h in factors[1:]:
            g = group_product(g, h)
        return g
    return group_from_table(doc["table"])


def parse_ring_spec(doc) -> Ring | Semiring:
    """Build and validate the object a document describes."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SpecError(f"parse error at position {exc.pos}: {exc.msg}") from None
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SpecError("ring spec must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind not in _RING_FIELDS:
        raise SpecError(f"unknown ring kind {kind!r}")
    _check_fields(doc, kind, _RING_FIELDS[kind], "ring")
    if kind == "zn":
        return make_zn(int(doc["n"]))
    if kind == "table":
        return make_table_ring(doc["add"], doc["mul"], zero=int(doc.get("zero", 0)),
                               one=doc.get("one"))
    if kind == "group_ring":
        coeff = parse_ring_spec(doc["coeff"])
        if isinstance(coeff, Semiring):
            raise SpecError("group ring coefficients must be a ring")
        return group_ring(coeff, parse_group_spec(doc["group"]))
    if kind == "quaternion":
        base = parse_ring_spec(doc["base"])
        a, b = doc["a"], doc["b"]
        a = (a,) if isinstance(a, int) else tuple(a)
        b = (b,) if isinstance(b, int) else tuple(b)
        return quaternion_algebra(base, a, b)
    if kind == "matrix_delta":
        return matrix_delta(int(doc["n"]))
    if kind == "delta_ideal":
        coeff = parse_ring_spec(doc["coeff"])
        group = parse_group_spec(doc["group"])
        rg = group_ring(coeff, group)
        sub = delta_ideal(rg, [int(h) for h in doc["subgroup"]])
        return reify_subring(rg, sub.elements, name=f"delta ideal of {rg.name}")
    if kind == "direct_sum":
        summands = [parse_ring_spec(s) for s in doc["summands"]]
        if len(summands) < 2:
            raise SpecError("direct sum needs at least two summands")
        acc = summands[0]
        for s in summands[1:]:
            if isinstance(acc, Semiring) or isinstance(s, Semiring):
                raise SpecError("direct sums of semirings are not supported")
            acc = direct_sum(acc, s)
        return acc
    if kind == "semiring":
        return make_semiring(doc["add"], doc["mul"], zero=int(doc.get("zero", 0)),
                             one=doc.get("one"))
    name = doc["name"]
    if name == "semiring_order5":
        from .semirings import example_order5
        return example_order5()
    return build_preset(name)


def normalize(doc) -> dict:
    """Parse-validate a document and return its canonical dict form."""
    if isinstance(doc, str):
        try:
            parsed = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SpecError(f"parse error at position {exc.pos}: {exc.msg}") from None
    else:
        parsed = doc
    parse_ring_spec(parsed)  # validation side effect
    return parsed


def serialize_ring_spec(doc: dict) -> str:
    """Canonical text rendering: sorted keys, no float formatting concerns."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def preset_names() -> list[str]:
    names = sorted(preset_builders())
    names.append("semiring_order5")
    return sorted(names)
