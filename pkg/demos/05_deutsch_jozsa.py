"""
Constant versus balanced in one query
=====================================

The distinguishing pipeline prepares both systems in fixed basis states,
applies the blackbox oracle once, post-selects, and tests the second
system's output against one classical state.  Constant blackboxes make
the test fire; balanced ones cannot.
"""

from qcrel import (
    DJInstance, FinRel, StructuredRel, dj_classify, dj_run,
    enumerate_classical_relations, parse_groupoid_spec, parse_pair_spec,
)

pair = parse_pair_spec("pair(Z2,Z2)")
z = parse_groupoid_spec("Z2^2")


def show(rel):
    inst = DJInstance(pair, pair, StructuredRel(rel, z, z))
    report = dj_run(inst)
    print(f"f = {rel.sorted_pairs()}")
    print(f"   classified {dj_classify(inst)}, decided {report.decision}"
          f" (scalar {'possible' if report.scalars['composite'] else 'impossible'})")


# The two constant blackboxes: the prepared effect-state times one block.
show(FinRel(4, 4, [(0, 0), (0, 1), (2, 0), (2, 1)]))
show(FinRel(4, 4, [(0, 2), (0, 3), (2, 2), (2, 3)]))

# A balanced blackbox never connects the prepared set to the test state.
show(FinRel(4, 4, [(0, 2), (2, 2), (1, 3), (3, 3)]))
show(FinRel(4, 4, [(0, 0), (1, 1), (2, 2), (3, 3)]))

# Census over every classical relation on the four-element systems: the
# promise classes hold two constant and four balanced members, and the
# one-query decision agrees with the closed-form classification on all.
verdicts = {}
for rel in enumerate_classical_relations(z, z):
    v = dj_classify(DJInstance(pair, pair, StructuredRel(rel, z, z)))
    verdicts[v] = verdicts.get(v, 0) + 1
print("census:", verdicts)
