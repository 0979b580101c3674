"""A four-site state the walk never moves.

The Grover coin turns an equal superposition of two directions into the
equal superposition of the other two (R+U -> L+D and back).  On the 2x2
site block there is a configuration where this flip exactly undoes the
subsequent displacement, so the state is frozen: a stationary eigenstate
of the step with eigenvalue +1.  Its translated copies are stationary too,
and a blind null-space search over the block rediscovers it.
"""

import numpy as np

from qwalk2d import (
    builtin_coin,
    fidelity,
    find_local_stationary_states,
    grover_stationary_states,
    step,
    superpose,
)

grover = builtin_coin("grover")
plus, minus = grover_stationary_states()

print("the +1 eigenstate, by site (amplitudes x sqrt(8)):")
for point, vec in plus.items():
    labels = [f"{l}{'+' if a.real > 0 else '-'}" for l, a in zip("RLUD", vec) if a != 0]
    print(f"  {point}: {' '.join(labels)}")

after = step(plus, grover)
print(f"\n|step(state) - state|     = {superpose([(1, after), (-1, plus)]).norm():.3e}")

after = step(minus, grover)
print(f"|step(state') + state'|   = {superpose([(1, after), (1, minus)]).norm():.3e}")

moved = plus.translate((17, -4))
residual = superpose([(1, step(moved, grover)), (-1, moved)]).norm()
print(f"translated copy residual  = {residual:.3e}  (eigenvalues are infinitely degenerate)")

found = find_local_stationary_states(grover, 1.0, box_size=2)
print(f"\nnull-space search over the 2x2 block: {len(found.states)} state(s) found")
print(f"fidelity with the closed form: {fidelity(found.states[0], plus):.15f}")

empty = find_local_stationary_states(grover, 1.0, box_size=1)
print(f"single-site search: {len(empty.states)} state(s) -- a localized start must spread")
