"""The three single-query blackbox algorithms, run possibilistically.

Each runner builds the full relational pipeline (preparation, oracle,
post-selection) exactly, evaluates every candidate measurement outcome, and
returns a report.  Because the model is possibilistic, a run does not sample:
the report carries the complete set of possible outcomes.

The raw pipeline composites are always computed and reported.  For the
search and homomorphism-identification runners the *decision-level* outcome
set follows the single-query outcome laws (the zero-possibility condition,
and the witness-pair condition); the reports flag any candidate outcome
where the raw composite disagrees with the law, since for some blackboxes
the two differ (see the diagnostics fields and README notes).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .groupoids import ComplementaryPair, fourier_rel
from .hom_relations import StructuredRel, is_classical_relation
from .oracles import OracleSpec, build_oracle
from .relations import (
    FinRel,
    Scalar,
    StateVec,
    born_scalar,
    identity,
    is_unitary,
    symmetric_difference,
    tensor,
    then,
)

CONSTANT = "constant"
BALANCED = "balanced"
NEITHER = "neither"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class RunReport:
    """Outcome of one algorithm run: decision, possible outcomes, diagnostics."""

    algorithm: str
    instance: dict
    decision: Optional[str]
    possible_outcomes: tuple[StateVec, ...]
    scalars: dict[str, bool]
    diagnostics: dict
    composites: dict[str, FinRel] = field(default_factory=dict)
    queries: int = 1

    def to_json_dict(self) -> dict:
        diagnostics = {
            "diffusion_unitary": self.diagnostics.get("diffusion_unitary"),
            "oracle_unitary": self.diagnostics.get("oracle_unitary"),
            "queries": self.queries,
        }
        for key in sorted(self.diagnostics):
            if key not in diagnostics:
                diagnostics[key] = self.diagnostics[key]
        return {
            "algorithm": self.algorithm,
            "instance": self.instance,
            "decision": self.decision,
            "possible_outcomes": [s.sorted_members() for s in self.possible_outcomes],
            "scalars": dict(sorted(self.scalars.items())),
            "diagnostics": diagnostics,
        }


def _require_classical(f: StructuredRel, role: str, unchecked: bool) -> None:
    if not unchecked and not is_classical_relation(f):
        raise ValueError(f"{role} must be a classical relation")


def _require_complementary(pair: ComplementaryPair, name: str) -> None:
    if not pair.is_complementary_pair():
        raise ValueError(f"{name} bases are not complementary under the supplied recoding")


@dataclass(frozen=True)
class DJInstance:
    """A promise-problem instance: complementary pairs on both systems and a
    classical blackbox relation between their Z-bases."""

    pair_a: ComplementaryPair
    pair_b: ComplementaryPair
    f: StructuredRel
    unchecked: bool = False

    def __post_init__(self) -> None:
        if self.f.source != self.pair_a.z:
            raise ValueError("blackbox must start at the first system's Z-basis")
        if self.f.target != self.pair_b.z:
            raise ValueError("blackbox must land in the second system's Z-basis")
        if self.pair_b.g.order < 2:
            raise ValueError("second system's X-basis needs at least two classical states")
        _require_complementary(self.pair_a, "first system's")
        _require_complementary(self.pair_b, "second system's")
        _require_classical(self.f, "blackbox relation", self.unchecked)


def dj_classify(inst: DJInstance) -> str:
    """Promise classification by the closed forms.

    Constant: f is exactly (first X_A-classical state) x (some Z_B-classical
    state).  Balanced: f relates nothing in the first X_A-classical state to
    the second X_B-classical state.  The two are mutually exclusive: a full
    Z_B-classical state meets every X_B-classical state.
    """
    h0a = inst.pair_a.x_classical_states()[0].members
    h1b = inst.pair_b.x_classical_states()[1].members
    for gk in inst.pair_b.z.classical_states():
        if inst.f.rel.pairs == frozenset((y, z) for y in h0a for z in gk.members):
            return CONSTANT
    if not (inst.f.rel.image(h0a) & h1b):
        return BALANCED
    return NEITHER


def dj_run(inst: DJInstance) -> RunReport:
    """Run the distinguishing pipeline and decide constant vs balanced.

    The composite is (first X_A-classical effect x id) after the oracle after
    the (first X_A-classical x second X_B-classical) preparation; the decision
    scalar tests the second system's output against the second X_B-classical
    state.  For square pairs the pre-basis-change pipeline is also built and
    must produce the identical relation.
    """
    pair_a, pair_b, f = inst.pair_a, inst.pair_b, inst.f
    na, nb = pair_a.size, pair_b.size
    oracle = build_oracle(OracleSpec(pair_a.z, pair_b, f), unchecked=inst.unchecked)
    h0a = pair_a.x_classical_states()[0]
    h1b = pair_b.x_classical_states()[1]

    prep = tensor(h0a.as_ket(), h1b.as_ket())
    post = tensor(h0a.as_bra(), identity(nb))
    composite = then(then(prep, oracle), post)
    b_out = StateVec(nb, composite.image({0}))
    composite_scalar = born_scalar(h1b, b_out)

    formula_members = frozenset(
        z for z in h1b.members if inst.f.rel.preimage({z}) & h0a.members
    )
    formula_scalar = Scalar(bool(formula_members))

    diagnostics = {
        "diffusion_unitary": None,
        "oracle_unitary": is_unitary(oracle),
        "formula_output": sorted(formula_members),
        "composite_output": b_out.sorted_members(),
        "formula_agrees_with_composite": bool(formula_scalar) == bool(composite_scalar),
        "physical_evolution": is_unitary(oracle),
    }
    composites = {"pipeline": composite}

    square = (pair_a.g.order == pair_a.h.order and pair_b.g.order == pair_b.h.order)
    if square:
        ft_a, ft_b = fourier_rel(pair_a), fourier_rel(pair_b)
        g0a = pair_a.z.classical_states()[0]
        g1b = pair_b.z.classical_states()[1]
        staged = then(tensor(g0a.as_ket(), g1b.as_ket()), tensor(ft_a, ft_b))
        staged = then(staged, oracle)
        staged = then(staged, tensor(ft_a, identity(nb)))
        staged = then(staged, tensor(g0a.as_bra(), identity(nb)))
        if staged != composite:
            raise AssertionError("basis-change pipeline disagrees with the absorbed composite")
        diagnostics["absorbed_equals_unabsorbed"] = True
        composites["unabsorbed"] = staged

    classification = dj_classify(inst)
    if classification == NEITHER:
        decision = UNDETERMINED
    else:
        decision = CONSTANT if composite_scalar else BALANCED

    return RunReport(
        algorithm="dj",
        instance={
            "pairA": pair_a.spec(),
            "pairB": pair_b.spec(),
            "f": f.rel.to_json_dict(),
        },
        decision=decision,
        possible_outcomes=(b_out,),
        scalars={"composite": bool(composite_scalar), "formula": bool(formula_scalar)},
        diagnostics=diagnostics,
        composites=composites,
    )


@dataclass(frozen=True)
class GroverInstance:
    """Single-step search instance: the indicator relation marks elements of
    the search system by where they land in the second system's Z-basis."""

    pair_s: ComplementaryPair
    pair_b: ComplementaryPair
    f: StructuredRel
    sigma: StateVec
    unchecked: bool = False

    def __post_init__(self) -> None:
        if self.f.source != self.pair_s.z:
            raise ValueError("indicator must start at the search system's Z-basis")
        if self.f.target != self.pair_b.z:
            raise ValueError("indicator must land in the second system's Z-basis")
        if self.sigma not in self.pair_b.x_classical_states():
            raise ValueError("sigma must be a classical state of the second system's X-basis")
        _require_complementary(self.pair_s, "search system's")
        _require_complementary(self.pair_b, "second system's")
        _require_classical(self.f, "indicator relation", self.unchecked)


def grover_diffusion(pair_s: ComplementaryPair) -> tuple[FinRel, bool]:
    """The reflection: identity minus (H0 x H0), as a symmetric difference.

    Returns the relation and its bijectivity flag.  The flag is genuinely
    informative: with more than two copies in the X-basis the reflection
    stops being a bijection, and a run using it is then not a physical
    evolution in the model.
    """
    h0 = pair_s.x_classical_states()[0].members
    n = pair_s.size
    block = FinRel(n, n, ((a, b) for a in h0 for b in h0))
    d = symmetric_difference(identity(n), block)
    return d, is_unitary(d)


def grover_zero_condition(inst: GroverInstance, rho: StateVec) -> bool:
    """Whether the output at ``rho`` must vanish: the sigma-overlap scalar of
    f applied to rho equals the one for the prepared state (the first
    X_S-classical state)."""
    if rho not in inst.pair_s.x_classical_states():
        raise ValueError("rho must be a classical state of the search system's X-basis")
    h0 = inst.pair_s.x_classical_states()[0]
    lhs = then(then(rho.as_ket(), inst.f.rel), inst.sigma.as_bra())
    rhs = then(then(h0.as_ket(), inst.f.rel), inst.sigma.as_bra())
    return bool(lhs.pairs) == bool(rhs.pairs)


def grover_opposite_mapping(inst: GroverInstance, rho: StateVec) -> bool:
    """The all-quantified opposite-mapping predicate: every rho element maps
    to sigma exactly where the prepared-state elements do not.  Vacuous or
    ill-fitting for sufficiently partial indicators."""
    h0 = inst.pair_s.x_classical_states()[0].members
    pairs = inst.f.rel.pairs
    for x in inst.sigma.members:
        for h in h0:
            for s in rho.members:
                if ((h, x) in pairs) == ((s, x) in pairs):
                    return False
    return True


def grover_run(inst: GroverInstance) -> RunReport:
    """Evaluate every candidate outcome of the single search step.

    Decision-level outcomes are the classical states whose zero-possibility
    condition fails (they are exactly the states the single-query law allows).
    The raw pipeline composite for each candidate is reported alongside, with
    a per-candidate agreement flag: for some indicators the raw composite
    keeps an outcome possible that the law rules out.
    """
    pair_s, pair_b, f, sigma = inst.pair_s, inst.pair_b, inst.f, inst.sigma
    ns, nb = pair_s.size, pair_b.size
    oracle = build_oracle(OracleSpec(pair_s.z, pair_b, f), unchecked=inst.unchecked)
    d, d_unitary = grover_diffusion(pair_s)
    h0 = pair_s.x_classical_states()[0]

    prep = tensor(h0.as_ket(), sigma.as_ket())
    evolved = then(then(prep, oracle), tensor(d, identity(nb)))

    candidates = pair_s.x_classical_states()
    scalars: dict[str, bool] = {}
    composites: dict[str, FinRel] = {}
    outcomes = []
    composite_outcomes = []
    agreement = []
    for i, rho in enumerate(candidates):
        pipeline = then(evolved, tensor(rho.as_bra(), identity(nb)))
        composites[f"rho{i}"] = pipeline
        pipeline_possible = bool(pipeline.pairs)
        zero = grover_zero_condition(inst, rho)
        scalars[f"rho{i}_composite"] = pipeline_possible
        scalars[f"rho{i}_zero_condition"] = zero
        if not zero:
            outcomes.append(rho)
        if pipeline_possible:
            composite_outcomes.append(rho.sorted_members())
        agreement.append(pipeline_possible == (not zero))

    oracle_unitary = is_unitary(oracle)
    diagnostics = {
        "diffusion_unitary": d_unitary,
        "oracle_unitary": oracle_unitary,
        "composite_possible_outcomes": composite_outcomes,
        "composite_agrees_with_decision": agreement,
        "physical_evolution": oracle_unitary and d_unitary,
    }
    return RunReport(
        algorithm="grover",
        instance={
            "pairS": pair_s.spec(),
            "pairB": pair_b.spec(),
            "f": f.rel.to_json_dict(),
            "sigma": sigma.sorted_members(),
        },
        decision=None,
        possible_outcomes=tuple(outcomes),
        scalars=scalars,
        diagnostics=diagnostics,
        composites=composites,
    )


@dataclass(frozen=True)
class HomIDInstance:
    """Homomorphism-identification instance: a classical relation between the
    Z-bases of the two systems (an isomorphism in the headline case, but any
    classical relation is allowed)."""

    pair_g: ComplementaryPair
    pair_a: ComplementaryPair
    f: StructuredRel
    sigma: StateVec
    unchecked: bool = False

    def __post_init__(self) -> None:
        if self.f.source != self.pair_g.z:
            raise ValueError("blackbox must start at the first system's Z-basis")
        if self.f.target != self.pair_a.z:
            raise ValueError("blackbox must land in the second system's Z-basis")
        if self.sigma not in self.pair_a.x_classical_states():
            raise ValueError("sigma must be a classical state of the second system's X-basis")
        _require_complementary(self.pair_g, "first system's")
        _require_complementary(self.pair_a, "second system's")
        _require_classical(self.f, "blackbox relation", self.unchecked)


def grouphomid_necessary(inst: HomIDInstance, rho: StateVec) -> bool:
    """Witness-pair condition for ``rho`` to be a reportable outcome: the
    blackbox must relate something in rho, and must relate something into
    sigma.  Runs report an outcome only when this holds."""
    if rho not in inst.pair_g.x_classical_states():
        raise ValueError("rho must be a classical state of the first system's X-basis")
    pairs = inst.f.rel.pairs
    rho_witness = any(a in rho.members for (a, _) in pairs)
    sigma_witness = any(b in inst.sigma.members for (_, b) in pairs)
    return rho_witness and sigma_witness


def grouphomid_run(inst: HomIDInstance) -> RunReport:
    """Evaluate every candidate outcome of the identification step.

    Decision-level outcomes are the candidates passing the witness-pair
    condition (for a groupoid isomorphism that is every classical state).
    Two element-level composites are reported per candidate: the raw
    pipeline, and the converse-based verification scalar (sigma pushed
    through the blackbox converse against rho); both can be strictly finer
    than the decision rule.
    """
    pair_g, pair_a, f, sigma = inst.pair_g, inst.pair_a, inst.f, inst.sigma
    ng, na = pair_g.size, pair_a.size
    oracle = build_oracle(OracleSpec(pair_g.z, pair_a, f), unchecked=inst.unchecked)
    h0 = pair_g.x_classical_states()[0]

    prep = tensor(h0.as_ket(), sigma.as_ket())
    evolved = then(prep, oracle)

    candidates = pair_g.x_classical_states()
    scalars: dict[str, bool] = {}
    composites: dict[str, FinRel] = {}
    outcomes = []
    composite_outcomes = []
    verification_outcomes = []
    agreement = []
    for i, rho in enumerate(candidates):
        pipeline = then(evolved, tensor(rho.as_bra(), identity(na)))
        composites[f"rho{i}"] = pipeline
        pipeline_possible = bool(pipeline.pairs)
        verification = then(then(sigma.as_ket(), f.rel.converse()), rho.as_bra())
        verification_possible = bool(verification.pairs)
        necessary = grouphomid_necessary(inst, rho)
        scalars[f"rho{i}_composite"] = pipeline_possible
        scalars[f"rho{i}_verification"] = verification_possible
        scalars[f"rho{i}_witness"] = necessary
        if necessary:
            outcomes.append(rho)
        if pipeline_possible:
            composite_outcomes.append(rho.sorted_members())
        if verification_possible:
            verification_outcomes.append(rho.sorted_members())
        agreement.append(pipeline_possible == necessary)

    oracle_unitary = is_unitary(oracle)
    diagnostics = {
        "diffusion_unitary": None,
        "oracle_unitary": oracle_unitary,
        "composite_possible_outcomes": composite_outcomes,
        "verification_possible_outcomes": verification_outcomes,
        "composite_agrees_with_decision": agreement,
        "physical_evolution": oracle_unitary,
    }
    return RunReport(
        algorithm="homid",
        instance={
            "pairS": pair_g.spec(),
            "pairB": pair_a.spec(),
            "f": f.rel.to_json_dict(),
            "sigma": sigma.sorted_members(),
        },
        decision=None,
        possible_outcomes=tuple(outcomes),
        scalars=scalars,
        diagnostics=diagnostics,
        composites=composites,
    )
