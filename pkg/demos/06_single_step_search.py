"""
Single-step search
==================

One oracle call, one reflection, one measurement.  The runner evaluates
every candidate outcome and reports the set the single-query outcome law
allows, alongside the raw pipeline composite for each candidate.  For
some indicator relations the two genuinely differ; the report shows both
rather than hiding the tension.
"""

from qcrel import (
    FinRel, GroverInstance, StructuredRel, grover_diffusion, grover_run,
    parse_groupoid_spec, parse_pair_spec,
)

pair = parse_pair_spec("pair(Z2,Z2)")
z = parse_groupoid_spec("Z2^2")

d, unitary = grover_diffusion(pair)
print("reflection:", d.sorted_pairs(), "| bijection?", unitary)

# Reflections over bigger bases stop being bijections: with three copies
# the construction is still a relation, just not a physical evolution.
d3, unitary3 = grover_diffusion(parse_pair_spec("pair(Z3,Z3)"))
print("three-copy reflection bijection?", unitary3)

sigma = pair.x_classical_states()[1]
print("marking state sigma:", sigma.sorted_members())


def search(pairs):
    f = StructuredRel(FinRel(4, 4, pairs), z, z)
    report = grover_run(GroverInstance(pair, pair, f, sigma))
    print(f"indicator {sorted(pairs)}")
    print("   outcomes:", [s.sorted_members() for s in report.possible_outcomes])
    print("   raw pipeline:", report.diagnostics["composite_possible_outcomes"],
          "| agreement per candidate:", report.diagnostics["composite_agrees_with_decision"])


# Nothing in the prepared set {0,2} is marked, so the search returns the
# states that are marked: {1,3}.  Pipeline and outcome law agree.
search([(0, 2), (2, 2), (1, 3), (3, 3)])

# Here the prepared set itself is marked; the outcome law returns the
# opposite states {1,3} while the raw pipeline keeps {0,2} alive -- the
# recorded disagreement for this indicator.
search([(0, 0), (2, 0), (0, 1), (2, 1)])
