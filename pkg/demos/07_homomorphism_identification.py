"""
Identifying a homomorphism in one query
=======================================

The identification pipeline is the distinguisher without the final basis
change: prepare, apply the oracle once, measure the first system.  For a
groupoid isomorphism every classical state remains possible; partial
blackboxes knock out the candidates they fail to witness.
"""

from qcrel import (
    FinRel, HomIDInstance, StructuredRel, grouphomid_necessary, grouphomid_run,
    parse_groupoid_spec, parse_pair_spec,
)

pair = parse_pair_spec("pair(Z2,Z2)")
z = parse_groupoid_spec("Z2^2")
sigma = pair.x_classical_states()[0]


def identify(pairs, note):
    f = StructuredRel(FinRel(4, 4, pairs), z, z)
    inst = HomIDInstance(pair, pair, f, sigma)
    report = grouphomid_run(inst)
    print(note)
    print("   outcomes:", [s.sorted_members() for s in report.possible_outcomes])
    print("   raw pipeline:", report.diagnostics["composite_possible_outcomes"],
          "| converse verification:", report.diagnostics["verification_possible_outcomes"])


# An isomorphism witnesses everything: both candidates stay possible.
identify([(0, 0), (1, 1), (2, 2), (3, 3)], "identity isomorphism:")

# A blackbox whose domain misses the {1,3} candidate entirely cannot
# report it.
identify([(0, 2), (2, 2), (0, 3), (2, 3)], "blackbox defined only on {0,2}:")

# The witness condition is checkable on its own.
f = StructuredRel(FinRel(4, 4, [(0, 2), (2, 2), (0, 3), (2, 3)]), z, z)
inst = HomIDInstance(pair, pair, f, sigma)
for rho in pair.x_classical_states():
    print(f"necessary({rho.sorted_members()}) =", grouphomid_necessary(inst, rho))
