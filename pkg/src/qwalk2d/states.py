"""Sparse walker states on the 2-D integer lattice with a four-direction coin.

A state assigns a 4-component complex amplitude vector, ordered
(R, L, U, D), to each occupied lattice point (m, n).  Only points carrying
at least one nonzero component are stored; exact zeros are pruned.  States
are immutable: every operation returns a new state and the backing arrays
are flagged read-only, so instances can be shared freely across workers.

The on-disk format is a UTF-8 CSV with header
``m,n,re_R,im_R,re_L,im_L,re_U,im_U,re_D,im_D``, one row per occupied
point in lexicographic (m, n) order, floats written with 17 significant
digits so that load(save(state)) is exact.
"""

from enum import IntEnum

import numpy as np

__all__ = [
    "CoinComponent",
    "LatticePoint",
    "PositionState",
    "STATE_CSV_HEADER",
    "fidelity",
    "inner_product",
    "load_state",
    "make_basis_state",
    "save_state",
    "superpose",
]

LatticePoint = tuple[int, int]

NORMALIZATION_TOL = 1e-9

STATE_CSV_HEADER = "m,n,re_R,im_R,re_L,im_L,re_U,im_U,re_D,im_D"


class CoinComponent(IntEnum):
    """Direction basis of the coin space, in fixed storage order."""

    R = 0
    L = 1
    U = 2
    D = 3


# Occupied points are keyed by m * 2^32 + n, which orders exactly like the
# lexicographic order on (m, n) while |n| < 2^31.  Coordinates are capped
# at 2^30 to keep a wide safety margin for shifts.
_KEY_BASE = 1 << 32
_COORD_LIMIT = 1 << 30


def _encode(m, n):
    return m * _KEY_BASE + n


def _decode(keys):
    m = (keys + (_KEY_BASE >> 1)) >> 32
    return m, keys - m * _KEY_BASE


def _check_coords(m, n):
    m = np.asarray(m)
    n = np.asarray(n)
    if m.size and (
        np.abs(m).max() >= _COORD_LIMIT or np.abs(n).max() >= _COORD_LIMIT
    ):
        raise ValueError(f"lattice coordinates must satisfy |m|, |n| < {_COORD_LIMIT}")


def _freeze(arr):
    arr.flags.writeable = False
    return arr


class PositionState:
    """Sparse map from occupied lattice points to 4-vectors of amplitudes.

    Internally the map is a pair of parallel arrays (sorted integer point
    keys, (n, 4) complex amplitudes), which keeps whole-state operations
    vectorized.  Construct from a mapping::

        PositionState({(0, 0): (1, 0, 0, 0)})

    or through :func:`make_basis_state` / :func:`superpose`.
    """

    __slots__ = ("_keys", "_amps")

    def __init__(self, amplitudes=None):
        amplitudes = dict(amplitudes or {})
        if not amplitudes:
            self._keys = _freeze(np.empty(0, dtype=np.int64))
            self._amps = _freeze(np.empty((0, 4), dtype=complex))
            return
        points = np.array(sorted(amplitudes), dtype=np.int64)
        if points.ndim != 2 or points.shape[1] != 2:
            raise ValueError("lattice points must be (m, n) integer pairs")
        _check_coords(points[:, 0], points[:, 1])
        amps = np.array([amplitudes[m, n] for m, n in points], dtype=complex)
        if amps.shape != (len(points), 4):
            raise ValueError("each amplitude entry must have exactly 4 components")
        keys = _encode(points[:, 0], points[:, 1])
        keep = np.any(amps != 0, axis=1)
        self._keys = _freeze(keys[keep])
        self._amps = _freeze(amps[keep])

    @classmethod
    def _from_sorted(cls, keys, amps):
        """Trusted fast path: keys sorted unique, no all-zero rows."""
        state = cls.__new__(cls)
        state._keys = _freeze(keys)
        state._amps = _freeze(amps)
        return state

    @property
    def n_sites(self) -> int:
        return self._keys.size

    @property
    def points(self) -> list[LatticePoint]:
        """Occupied lattice points in lexicographic (m, n) order."""
        m, n = _decode(self._keys)
        return list(zip(m.tolist(), n.tolist()))

    def amplitude(self, point: LatticePoint) -> np.ndarray:
        """The 4-vector at ``point`` (zeros if the point is unoccupied)."""
        key = _encode(int(point[0]), int(point[1]))
        i = np.searchsorted(self._keys, key)
        if i < self._keys.size and self._keys[i] == key:
            return self._amps[i].copy()
        return np.zeros(4, dtype=complex)

    def items(self):
        """Iterate over (point, 4-vector) pairs in lexicographic order."""
        for point, row in zip(self.points, self._amps):
            yield point, row.copy()

    def to_dict(self) -> dict[LatticePoint, np.ndarray]:
        return dict(self.items())

    def norm(self) -> float:
        """Euclidean norm over all stored amplitudes (0 for the empty state)."""
        return float(np.linalg.norm(self._amps))

    def translate(self, offset: LatticePoint) -> "PositionState":
        """Move every occupied point by ``offset``, amplitudes untouched."""
        dm, dn = int(offset[0]), int(offset[1])
        if dm == 0 and dn == 0:
            return self
        m, n = _decode(self._keys)
        _check_coords(m + dm, n + dn)
        return PositionState._from_sorted(self._keys + _encode(dm, dn), self._amps)

    def distribution(self) -> dict[LatticePoint, float]:
        """Probability of each occupied point (coin components traced out).

        Requires a normalized state; the returned values sum to 1 up to
        rounding.
        """
        _require_normalized(self, "distribution")
        probs = np.einsum("ij,ij->i", self._amps.conj(), self._amps).real
        return dict(zip(self.points, probs.tolist()))

    def __eq__(self, other):
        if not isinstance(other, PositionState):
            return NotImplemented
        return np.array_equal(self._keys, other._keys) and np.array_equal(
            self._amps, other._amps
        )

    __hash__ = None

    def __repr__(self):
        return f"<PositionState sites={self.n_sites} norm={self.norm():.6g}>"


def _require_normalized(state, what):
    if abs(state.norm() - 1.0) > NORMALIZATION_TOL:
        raise ValueError(f"{what} requires a normalized state (norm={state.norm()!r})")


def make_basis_state(point: LatticePoint, component) -> PositionState:
    """Unit state with a single amplitude at (point, component)."""
    component = (
        CoinComponent[component] if isinstance(component, str) else CoinComponent(component)
    )
    vec = np.zeros(4, dtype=complex)
    vec[component] = 1.0
    return PositionState({(int(point[0]), int(point[1])): vec})


def superpose(terms) -> PositionState:
    """Pointwise linear combination ``sum_i coeff_i * state_i``.

    The result is not renormalized; points whose combined 4-vector is
    exactly zero are pruned.  ``terms`` is a non-empty sequence of
    (coefficient, state) pairs.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("superpose needs at least one (coefficient, state) term")
    keys = np.concatenate([state._keys for _, state in terms])
    amps = np.concatenate([complex(c) * state._amps for c, state in terms])
    out_keys, inverse = np.unique(keys, return_inverse=True)
    out = np.zeros((out_keys.size, 4), dtype=complex)
    np.add.at(out, inverse, amps)
    keep = np.any(out != 0, axis=1)
    return PositionState._from_sorted(out_keys[keep], out[keep])


def inner_product(a: PositionState, b: PositionState) -> complex:
    """Sesquilinear overlap <a|b>, conjugating the first argument."""
    common, ia, ib = np.intersect1d(
        a._keys, b._keys, assume_unique=True, return_indices=True
    )
    if common.size == 0:
        return 0j
    return complex(np.sum(a._amps[ia].conj() * b._amps[ib]))


def fidelity(a: PositionState, b: PositionState) -> float:
    """Squared-modulus overlap |<a|b>|^2 of two normalized states.

    Phase-insensitive, symmetric in its arguments, and clipped to [0, 1].
    Raises ValueError if either state's norm deviates from 1 by more than
    1e-9.
    """
    _require_normalized(a, "fidelity")
    _require_normalized(b, "fidelity")
    return min(1.0, abs(inner_product(a, b)) ** 2)


def save_state(state: PositionState, path) -> None:
    """Write a state to CSV (see the module docstring for the format)."""
    m, n = _decode(state._keys)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(STATE_CSV_HEADER + "\n")
        for i in range(state._keys.size):
            row = state._amps[i]
            fields = [str(int(m[i])), str(int(n[i]))]
            for c in range(4):
                fields.append(f"{row[c].real:.17g}")
                fields.append(f"{row[c].imag:.17g}")
            fh.write(",".join(fields) + "\n")


def load_state(path) -> PositionState:
    """Read a state written by :func:`save_state`."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if not lines or lines[0] != STATE_CSV_HEADER:
        raise ValueError(f"{path}: missing or malformed state CSV header")
    amplitudes = {}
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != 10:
            raise ValueError(f"{path}:{lineno}: expected 10 fields, got {len(fields)}")
        try:
            point = (int(fields[0]), int(fields[1]))
            values = [float(f) for f in fields[2:]]
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
        if point in amplitudes:
            raise ValueError(f"{path}:{lineno}: duplicate lattice point {point}")
        amplitudes[point] = [complex(values[2 * c], values[2 * c + 1]) for c in range(4)]
    return PositionState(amplitudes)
