"""
Relations as processes
======================

Every process in this model is a relation between finite index sets:
states are relations out of the one-element set, effects are their
converses, and the two scalars are the identity and empty relation on
that set.  This walkthrough replays the basic moves.
"""

from qcrel import (
    FinRel, StateVec, as_bool_matrix, born_scalar, converse, identity,
    is_unitary, swap, symmetric_difference, tensor, then,
)

# A relation is a boolean matrix.  Applying it to a state is boolean
# matrix-vector multiplication: possibility in, possibility out.
r = FinRel(3, 3, [(0, 0), (0, 2), (1, 1)])
psi = StateVec(3, [0])
print("R as a matrix (rows = outputs):")
for row in as_bool_matrix(r):
    print("  ", row)
out = StateVec.from_ket(then(psi.as_ket(), r))
print("R applied to {0}:", out.sorted_members())

# The converse plays the role the adjoint plays for linear maps.
print("converse pairs:", converse(r).sorted_pairs())

# Evolutions must be bijections.  R relates 0 to two outputs, so it is
# not a legal evolution; a swap is.
print("R unitary?", is_unitary(r))
print("swap unitary?", is_unitary(swap(2, 1)))

# Measurement: an effect fires exactly when it shares an element with
# the prepared state.  Only two answers exist: possible or impossible.
effect = StateVec(3, [1])
print("<{1}|{0,2}> possible?", born_scalar(effect, StateVec(3, [0, 2])).possible)
print("<{0}|{0,2}> possible?", born_scalar(StateVec(3, [0]), StateVec(3, [0, 2])).possible)

# Product systems use one fixed row-major coding, so parallel wires are
# just the tensor of relations.
wire_pair = tensor(identity(2), identity(2))
print("two parallel wires =", wire_pair == identity(4))

# Subtracting processes is a symmetric difference of the pair sets; this
# is how the search reflection will be built later.
d = symmetric_difference(identity(4), FinRel(4, 4, [(a, b) for a in (0, 2) for b in (0, 2)]))
print("reflection:", d.sorted_pairs(), "bijection?", is_unitary(d))
