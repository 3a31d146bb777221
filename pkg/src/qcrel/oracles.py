"""Unitary blackbox oracles built from classical relations.

An oracle embeds a classical relation f between the Z-bases of two systems
into a single bijective relation on the product system: split the first
wire with Z_A's comultiplication, push one leg through f, and merge it into
the second wire with X_B's multiplication.  For classical (hence
self-conjugate) f the result is always a bijection.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .groupoids import (
    ComplementaryPair,
    Groupoid,
    parse_groupoid_spec,
    parse_pair_spec,
)
from .hom_relations import StructuredRel, classical_equations
from .relations import FinRel


@dataclass(frozen=True)
class OracleSpec:
    """Blackbox data: the control system's Z-basis, the target system's
    complementary pair, and the classical relation connecting their Z-bases."""

    za: Groupoid
    pair_b: ComplementaryPair
    f: StructuredRel

    def __post_init__(self) -> None:
        if self.f.source != self.za:
            raise ValueError("oracle relation must start at the control Z-basis")
        if self.f.target != self.pair_b.z:
            raise ValueError("oracle relation must land in the target system's Z-basis")

    def to_json_dict(self) -> dict:
        return {
            "za": self.za.spec(),
            "pair_b": self.pair_b.spec(),
            "f": self.f.rel.to_json_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, payload: dict) -> "OracleSpec":
        if not isinstance(payload, dict) or set(payload) != {"za", "pair_b", "f"}:
            raise ValueError("schema violation: expected keys za, pair_b, f")
        za = parse_groupoid_spec(payload["za"])
        pair_b = parse_pair_spec(payload["pair_b"])
        f = StructuredRel(FinRel.from_json_dict(payload["f"]), za, pair_b.z)
        return cls(za, pair_b, f)

    @classmethod
    def from_json(cls, text: str) -> "OracleSpec":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"schema violation: not valid JSON ({exc})") from exc
        return cls.from_json_dict(payload)


def build_oracle(spec: OracleSpec, *, unchecked: bool = False) -> FinRel:
    """The endomorphism of A x B: ((x,y),(a, c*y)) whenever some b has
    a . b = x in Z_A, (b,c) in f, and c * y defined in X_B.

    Rejects non-classical f unless ``unchecked`` is set; unitarity is only
    guaranteed for classical relations, but the comprehension itself is total.
    """
    if not unchecked:
        eqs = classical_equations(spec.f)
        if not eqs.comult_ok or not eqs.counit_ok:
            failing = []
            if not eqs.comult_ok:
                failing.append("comultiplication")
            if not eqs.counit_ok:
                failing.append("counit")
            raise ValueError(
                "oracle input is not a classical relation: "
                + " and ".join(failing) + " equation fails "
                "(pass unchecked=True to build it anyway)"
            )
    za, pair_b = spec.za, spec.pair_b
    na, nb = za.size, pair_b.size
    pairs = set()
    n = za.base.order
    for (b, c) in spec.f.rel.pairs:
        block = (b // n) * n
        for a in range(block, block + n):
            x = za.mult(a, b)
            for y in range(nb):
                w = pair_b.x_mult(c, y)
                if w is not None:
                    pairs.add((x * nb + y, a * nb + w))
    return FinRel(na * nb, na * nb, pairs)


def oracle_query_count(report) -> int:
    """Number of oracle applications inside a run report's composite."""
    return int(report.queries)
