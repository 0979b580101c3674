"""The walker that never quite leaves.

Start at the origin in the balanced direction state (R+L+U+D)/2 and watch
the probability of being found back at the start.  With the Grover coin
the walk has a point spectrum and part of the wave stays trapped: the
return probability settles around one half.  The hadamard4 coin has no
constant eigenvalues, so the same probability drains away ballistically.
(Odd steps are skipped: parity forbids returning in an odd number of
moves.)
"""

from qwalk2d import PositionState, builtin_coin, return_probability_series

T_MAX = 120
start = PositionState({(0, 0): (0.5, 0.5, 0.5, 0.5)})

grover_series = return_probability_series(start, builtin_coin("grover"), T_MAX)
hadamard_series = return_probability_series(start, builtin_coin("hadamard4"), T_MAX)

print("  t   p0 grover    p0 hadamard4")
for t in range(0, T_MAX + 1, 10):
    bar = "#" * round(40 * grover_series[t])
    print(f"{t:4d}   {grover_series[t]:.6f}     {hadamard_series[t]:.6f}   {bar}")

floor = min(grover_series[t] for t in range(60, T_MAX + 1, 2))
print(f"\ngrover return-probability floor over even t in [60, {T_MAX}]: {floor:.4f}")
print(f"hadamard4 return probability at t={T_MAX}: {hadamard_series[T_MAX]:.2e}")
