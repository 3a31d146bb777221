import pytest

from qcrel.algorithms import (
    BALANCED,
    CONSTANT,
    NEITHER,
    UNDETERMINED,
    DJInstance,
    GroverInstance,
    HomIDInstance,
    dj_classify,
    dj_run,
    grouphomid_necessary,
    grouphomid_run,
    grover_diffusion,
    grover_opposite_mapping,
    grover_run,
    grover_zero_condition,
)
from qcrel.groupoids import parse_groupoid_spec, parse_pair_spec
from qcrel.hom_relations import StructuredRel, enumerate_classical_relations
from qcrel.relations import FinRel, StateVec, is_unitary


P22 = parse_pair_spec("pair(Z2,Z2)")
P31 = parse_pair_spec("pair(Z3,Z1)")
Z22 = parse_groupoid_spec("Z2^2")
Z3 = parse_groupoid_spec("Z3")

CONSTANT_F = FinRel(4, 4, [(0, 0), (0, 1), (2, 0), (2, 1)])
BALANCED_FS = [
    FinRel(4, 4, [(0, 2), (2, 2), (1, 3), (3, 3)]),
    FinRel(4, 4, [(0, 0), (1, 1), (2, 2), (3, 3)]),
    FinRel(4, 4, [(2, 0), (3, 1), (0, 2), (1, 3)]),
    FinRel(4, 4, [(0, 0), (2, 0), (1, 1), (3, 1)]),
]


def dj_inst(rel):
    return DJInstance(P22, P22, StructuredRel(rel, Z22, Z22))


def outcome_sets(report):
    return [s.sorted_members() for s in report.possible_outcomes]


class TestDJClassify:
    def test_constant_examples(self):
        assert dj_classify(dj_inst(CONSTANT_F)) == CONSTANT
        assert dj_classify(dj_inst(FinRel(4, 4, [(0, 2), (0, 3), (2, 2), (2, 3)]))) == CONSTANT

    def test_balanced_examples(self):
        for f in BALANCED_FS:
            assert dj_classify(dj_inst(f)) == BALANCED

    def test_partially_flooding_blackbox_is_balanced(self):
        assert dj_classify(dj_inst(FinRel(4, 4, [(0, 0), (2, 0), (1, 1), (3, 1)]))) == BALANCED

    def test_census_over_all_enumerated(self):
        counts = {CONSTANT: 0, BALANCED: 0, NEITHER: 0}
        for rel in enumerate_classical_relations(Z22, Z22):
            counts[dj_classify(dj_inst(rel))] += 1
        assert counts == {CONSTANT: 2, BALANCED: 4, NEITHER: 10}


class TestDJRun:
    def test_constant_run(self):
        report = dj_run(dj_inst(CONSTANT_F))
        assert report.decision == CONSTANT
        assert report.scalars["composite"] is True
        assert report.diagnostics["formula_output"] == [1]
        assert 1 in report.possible_outcomes[0].members

    def test_balanced_run(self):
        report = dj_run(dj_inst(BALANCED_FS[0]))
        assert report.decision == BALANCED
        assert report.scalars["composite"] is False
        assert report.diagnostics["composite_output"] == []

    def test_runner_matches_classifier_on_promise(self):
        for rel in enumerate_classical_relations(Z22, Z22):
            verdict = dj_classify(dj_inst(rel))
            report = dj_run(dj_inst(rel))
            if verdict in (CONSTANT, BALANCED):
                assert report.decision == verdict
            else:
                assert report.decision == UNDETERMINED

    def test_formula_and_composite_agree_as_scalars(self):
        for rel in enumerate_classical_relations(Z22, Z22):
            report = dj_run(dj_inst(rel))
            assert report.diagnostics["formula_agrees_with_composite"]

    def test_unabsorbed_pipeline_checked_for_square_pairs(self):
        report = dj_run(dj_inst(CONSTANT_F))
        assert report.diagnostics["absorbed_equals_unabsorbed"] is True
        assert "unabsorbed" in report.composites

    def test_oracle_must_be_classical(self):
        with pytest.raises(ValueError, match="classical"):
            dj_inst(FinRel(4, 4, [(0, 0)]))

    def test_second_system_needs_two_x_states(self):
        p21 = parse_pair_spec("pair(Z1,Z2)")
        z2 = parse_groupoid_spec("Z2")
        with pytest.raises(ValueError, match="two classical states"):
            DJInstance(P22, p21, StructuredRel(FinRel(4, 2, []), Z22, p21.z))

    def test_query_count(self):
        assert dj_run(dj_inst(CONSTANT_F)).queries == 1


class TestGroverDiffusion:
    def test_two_copy_reflection_unitary(self):
        d, flag = grover_diffusion(P22)
        assert d == FinRel(4, 4, [(1, 1), (3, 3), (0, 2), (2, 0)])
        assert flag is True

    def test_three_copy_reflection_not_unitary(self):
        pair = parse_pair_spec("pair(Z3,Z3)")
        d, flag = grover_diffusion(pair)
        h0 = pair.x_classical_states()[0]
        assert h0.sorted_members() == [0, 3, 6]
        assert flag is False

    def test_degenerate_single_element(self):
        d, flag = grover_diffusion(parse_pair_spec("pair(Z1,Z1)"))
        assert d.pairs == frozenset()
        assert flag is False


def grover_inst(rel, sigma_index=1):
    sigma = P22.x_classical_states()[sigma_index]
    return GroverInstance(P22, P22, StructuredRel(rel, Z22, Z22), sigma)


class TestGroverRun:
    def test_marked_example(self):
        report = grover_run(grover_inst(BALANCED_FS[0]))
        assert outcome_sets(report) == [[1, 3]]
        assert report.diagnostics["composite_possible_outcomes"] == [[1, 3]]

    def test_inverted_example(self):
        rel = FinRel(4, 4, [(0, 0), (2, 0), (0, 1), (2, 1)])
        report = grover_run(grover_inst(rel))
        assert outcome_sets(report) == [[1, 3]]
        # the raw pipeline keeps the complementary state alive instead; the
        # divergence is reported, not hidden
        assert report.diagnostics["composite_possible_outcomes"] == [[0, 2]]
        assert report.diagnostics["composite_agrees_with_decision"] == [False, False]

    def test_zero_condition_values(self):
        inst = grover_inst(BALANCED_FS[0])
        rho0, rho1 = P22.x_classical_states()
        assert grover_zero_condition(inst, rho0) is True
        assert grover_zero_condition(inst, rho1) is False

    def test_zero_condition_rejects_non_classical_state(self):
        inst = grover_inst(BALANCED_FS[0])
        with pytest.raises(ValueError, match="classical state"):
            grover_zero_condition(inst, StateVec(4, [0, 1]))

    def test_outcomes_never_satisfy_zero_condition(self):
        for rel in enumerate_classical_relations(Z22, Z22):
            inst = grover_inst(rel)
            report = grover_run(inst)
            for rho in report.possible_outcomes:
                assert grover_zero_condition(inst, rho) is False

    def test_composite_decision_divergence_census(self):
        # the raw pipeline and the outcome law agree exactly on the four
        # blackboxes whose marked set misses the prepared state00
        disagreements = 0
        for rel in enumerate_classical_relations(Z22, Z22):
            report = grover_run(grover_inst(rel))
            disagreements += report.diagnostics["composite_agrees_with_decision"].count(False)
        assert disagreements == 24

    def test_opposite_mapping_report(self):
        exceptions = 0
        for rel in enumerate_classical_relations(Z22, Z22):
            inst = grover_inst(rel)
            report = grover_run(inst)
            for rho in report.possible_outcomes:
                if not grover_opposite_mapping(inst, rho):
                    exceptions += 1
        assert exceptions == 8

    def test_sigma_must_be_classical(self):
        with pytest.raises(ValueError, match="sigma"):
            GroverInstance(P22, P22, StructuredRel(BALANCED_FS[0], Z22, Z22),
                           StateVec(4, [0, 1]))

    def test_diagnostics_flags(self):
        report = grover_run(grover_inst(BALANCED_FS[0]))
        assert report.diagnostics["oracle_unitary"] is True
        assert report.diagnostics["diffusion_unitary"] is True
        assert report.diagnostics["physical_evolution"] is True
        assert report.queries == 1


def homid_inst(rel, sigma_index=0, pair=P22, unchecked=False):
    sigma = pair.x_classical_states()[sigma_index]
    return HomIDInstance(pair, pair, StructuredRel(rel, pair.z, pair.z), sigma,
                         unchecked=unchecked)


class TestHomID:
    def test_identity_isomorphism_all_outcomes(self):
        report = grouphomid_run(homid_inst(FinRel(4, 4, [(0, 0), (1, 1), (2, 2), (3, 3)])))
        assert outcome_sets(report) == [[0, 2], [1, 3]]

    def test_isomorphisms_always_return_everything(self):
        for rel in enumerate_classical_relations(Z22, Z22):
            if not is_unitary(rel):
                continue
            for sigma_index in (0, 1):
                report = grouphomid_run(homid_inst(rel, sigma_index))
                assert len(report.possible_outcomes) == 2

    def test_inversion_map_on_z3(self):
        rel = FinRel(3, 3, [(0, 0), (1, 2), (2, 1)])
        for sigma_index in range(3):
            inst = HomIDInstance(P31, P31, StructuredRel(rel, Z3, Z3),
                                 P31.x_classical_states()[sigma_index])
            report = grouphomid_run(inst)
            decided = {tuple(m) for m in outcome_sets(report)}
            composite = {tuple(m) for m in report.diagnostics["composite_possible_outcomes"]}
            verification = {tuple(m) for m in report.diagnostics["verification_possible_outcomes"]}
            assert composite <= decided
            assert verification <= decided

    def test_necessity_predicate(self):
        inst = homid_inst(FinRel(4, 4, [(0, 0), (1, 1), (2, 2), (3, 3)]))
        for rho in P22.x_classical_states():
            assert grouphomid_necessary(inst, rho)

    def test_empty_blackbox_nothing_possible(self):
        inst = homid_inst(FinRel(4, 4, []), unchecked=True)
        report = grouphomid_run(inst)
        assert report.possible_outcomes == ()
        for rho in P22.x_classical_states():
            assert not grouphomid_necessary(inst, rho)

    def test_blackbox_missing_a_candidate_stride(self):
        # every related element sits in the first X-classical state, so the
        # second candidate has no witness and is not reported
        rel = FinRel(4, 4, [(0, 2), (2, 2), (0, 3), (2, 3)])
        report = grouphomid_run(homid_inst(rel))
        assert outcome_sets(report) == [[0, 2]]

    def test_run_outcomes_satisfy_necessity(self):
        for src, pair in ((Z3, P31), (Z22, P22)):
            for rel in enumerate_classical_relations(src, src):
                for sigma in pair.x_classical_states():
                    inst = HomIDInstance(pair, pair, StructuredRel(rel, src, src), sigma)
                    report = grouphomid_run(inst)
                    for rho in report.possible_outcomes:
                        assert grouphomid_necessary(inst, rho)

    def test_necessity_rejects_non_classical_rho(self):
        inst = homid_inst(FinRel(4, 4, [(0, 0), (1, 1), (2, 2), (3, 3)]))
        with pytest.raises(ValueError, match="classical state"):
            grouphomid_necessary(inst, StateVec(4, [0]))

    def test_query_count(self):
        report = grouphomid_run(homid_inst(FinRel(4, 4, [(0, 0), (1, 1), (2, 2), (3, 3)])))
        assert report.queries == 1


class TestRunReportPayload:
    def test_json_shape(self):
        report = dj_run(dj_inst(CONSTANT_F))
        payload = report.to_json_dict()
        assert set(payload) == {"algorithm", "instance", "decision",
                                "possible_outcomes", "scalars", "diagnostics"}
        assert payload["diagnostics"]["queries"] == 1
        assert list(payload["diagnostics"])[:3] == ["diffusion_unitary", "oracle_unitary", "queries"]
