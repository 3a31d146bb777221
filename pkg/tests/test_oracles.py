import pytest

from qcrel.groupoids import cnot, parse_groupoid_spec, parse_pair_spec
from qcrel.hom_relations import StructuredRel, enumerate_classical_relations
from qcrel.oracles import OracleSpec, build_oracle, oracle_query_count
from qcrel.relations import FinRel, empty, full, identity, is_unitary, tensor, then


P21 = parse_pair_spec("pair(Z2,Z1)")
P22 = parse_pair_spec("pair(Z2,Z2)")
Z22 = parse_groupoid_spec("Z2^2")


def spec_for(pair, za, rel):
    return OracleSpec(za, pair, StructuredRel(rel, za, pair.z))


def oracle_by_pieces(spec):
    za, pb = spec.za, spec.pair_b
    na, nb = za.size, pb.size
    xmult = FinRel(nb * nb, nb,
                   ((c * nb + y, w) for c in range(nb) for y in range(nb)
                    for w in [pb.x_mult(c, y)] if w is not None))
    staged = tensor(za.comult_rel(), identity(nb))
    staged = then(staged, tensor(identity(na), tensor(spec.f.rel, identity(nb))))
    return then(staged, tensor(identity(na), xmult))


class TestBuildOracle:
    def test_identity_blackbox_gives_cnot(self):
        spec = spec_for(P21, P21.z, identity(2))
        oracle = build_oracle(spec)
        assert oracle == cnot(P21)
        assert is_unitary(oracle)

    def test_constant_blackbox_unitary(self):
        f = FinRel(4, 4, [(0, 0), (0, 1), (2, 0), (2, 1)])
        assert is_unitary(build_oracle(spec_for(P22, Z22, f)))

    def test_non_classical_rejected_with_equation_named(self):
        with pytest.raises(ValueError, match="counit"):
            build_oracle(spec_for(P22, Z22, full(4, 4)))

    def test_unchecked_builds_anyway(self):
        oracle = build_oracle(spec_for(P22, Z22, full(4, 4)), unchecked=True)
        assert oracle.dom_size == 16

    def test_unit_deleted_mutation_rejected_or_not_unitary(self):
        base = FinRel(4, 4, [(0, 0), (1, 1), (2, 2), (3, 3)])
        mutated = FinRel(4, 4, base.pairs - {(0, 0)})
        spec = spec_for(P22, Z22, mutated)
        try:
            oracle = build_oracle(spec)
        except ValueError:
            return
        assert not is_unitary(oracle)

    @pytest.mark.parametrize("srcspec,pairspec", [
        ("Z3", "pair(Z3,Z1)"),
        ("Z4", "pair(Z4,Z1)"),
        ("Z2^2", "pair(Z2,Z2)"),
    ])
    def test_all_enumerated_blackboxes_unitary(self, srcspec, pairspec):
        za = parse_groupoid_spec(srcspec)
        pair = parse_pair_spec(pairspec)
        for rel in enumerate_classical_relations(za, pair.z):
            assert is_unitary(build_oracle(spec_for(pair, za, rel)))

    @pytest.mark.parametrize("srcspec,pairspec", [
        ("Z3", "pair(Z3,Z1)"),
        ("Z2^2", "pair(Z2,Z2)"),
    ])
    def test_comprehension_matches_staged_composite(self, srcspec, pairspec):
        za = parse_groupoid_spec(srcspec)
        pair = parse_pair_spec(pairspec)
        for rel in enumerate_classical_relations(za, pair.z):
            spec = spec_for(pair, za, rel)
            assert build_oracle(spec) == oracle_by_pieces(spec)

    def test_empty_blackbox_unchecked_not_unitary(self):
        oracle = build_oracle(spec_for(P22, Z22, empty(4, 4)), unchecked=True)
        assert oracle.pairs == frozenset()
        assert not is_unitary(oracle)


class TestOracleSpecValidation:
    def test_wrong_source(self):
        z3 = parse_groupoid_spec("Z3")
        with pytest.raises(ValueError, match="control"):
            OracleSpec(z3, P22, StructuredRel(FinRel(4, 4, []), Z22, P22.z))

    def test_wrong_target(self):
        with pytest.raises(ValueError):
            OracleSpec(Z22, P22, StructuredRel(FinRel(4, 3, []), Z22, parse_groupoid_spec("Z3")))


class TestOracleSpecJson:
    def test_roundtrip(self):
        f = FinRel(4, 4, [(0, 0), (0, 1), (2, 0), (2, 1)])
        spec = spec_for(P22, Z22, f)
        again = OracleSpec.from_json(spec.to_json())
        assert again.za == spec.za
        assert again.pair_b.spec() == spec.pair_b.spec()
        assert again.f.rel == spec.f.rel

    def test_schema_violation(self):
        with pytest.raises(ValueError, match="schema violation"):
            OracleSpec.from_json('{"za": "Z2"}')


class TestQueryCount:
    def test_reports_count_one(self):
        from qcrel.algorithms import DJInstance, dj_run
        f = StructuredRel(FinRel(4, 4, [(0, 0), (0, 1), (2, 0), (2, 1)]), Z22, Z22)
        report = dj_run(DJInstance(P22, P22, f))
        assert oracle_query_count(report) == 1
