"""Two independent circuit executors.

dense_unitary multiplies out the full 2^width unitary and is the ground
truth for small widths. exponent_simulate exploits the layered shape of all
generated circuits: control bits propagate classically through the Feynman
gates, and the gates on the target line only ever apply powers of one
kappa-th root of NOT, so it suffices to track the net power mod 2*kappa.
The root is the principal one (eigenvalues 1 and exp(i*pi/kappa)), whose
kappa-th power is NOT exactly, so both executors agree with no residual
phase.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bits import Bits, as_bits, bits_to_index, index_to_bits, pack_lsb
from .circuit import Circuit, Gate, GateKind

DENSE_WIDTH_LIMIT = 7

NOT_MATRIX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


class UnsupportedShapeError(ValueError):
    """Circuit is not layered: exponent tracking does not apply."""


class WidthLimitError(ValueError):
    """Circuit is too wide for the dense executor."""


def root_of_not(kappa: int) -> np.ndarray:
    """Principal kappa-th root of NOT as a 2x2 complex array.

    V = 1/2 [[1+w, 1-w], [1-w, 1+w]] with w = exp(i*pi/kappa); V has
    eigenvalues 1 and w, so V^kappa = NOT exactly. kappa = 1 gives NOT.
    """
    if kappa < 1 or kappa & (kappa - 1) != 0:
        raise ValueError(f"kappa must be a power of two >= 1, got {kappa}")
    if kappa == 1:
        return NOT_MATRIX.copy()
    w = np.exp(1j * np.pi / kappa)
    return 0.5 * np.array([[1 + w, 1 - w], [1 - w, 1 + w]])


def _gate_unitary(g: Gate, width: int) -> np.ndarray:
    dim = 1 << width
    u = np.zeros((dim, dim), dtype=complex)
    tmask = 1 << (width - g.target)
    if g.kind is GateKind.NOT:
        for x in range(dim):
            u[x ^ tmask, x] = 1.0
        return u
    cmask = 1 << (width - g.control)
    if g.kind is GateKind.FEYNMAN:
        for x in range(dim):
            u[x ^ tmask if x & cmask else x, x] = 1.0
        return u
    v = root_of_not(g.kappa)
    if g.direction == -1:
        v = v.conj().T
    for x in range(dim):
        if not x & cmask:
            u[x, x] = 1.0
        else:
            bt = 1 if x & tmask else 0
            u[x & ~tmask, x] = v[0, bt]
            u[x | tmask, x] = v[1, bt]
    return u


def dense_unitary(circuit: Circuit, max_width: int = DENSE_WIDTH_LIMIT) -> np.ndarray:
    """Product of the gate unitaries in circuit order.

    Basis states are indexed with line 1 as the most significant bit, so
    column bits_to_index((c1..cn,t)) holds the image of that input.
    """
    if circuit.width > max_width:
        raise WidthLimitError(
            f"width {circuit.width} exceeds the dense limit of {max_width} lines"
        )
    u = np.eye(1 << circuit.width, dtype=complex)
    for g in circuit.gates:
        u = _gate_unitary(g, circuit.width) @ u
    return u


def permutation_from_unitary(u: np.ndarray, tol: float = 1e-9) -> tuple[int, ...] | None:
    """Extract the permutation of a 0/1 permutation matrix, or None.

    Requires every column to be elementwise within tol of a basis vector
    with entry exactly 1 (a global phase would fail the check).
    """
    dim = u.shape[0]
    perm = []
    for x in range(dim):
        col = u[:, x]
        y = int(np.argmax(np.abs(col)))
        p = np.zeros(dim, dtype=complex)
        p[y] = 1.0
        if np.max(np.abs(col - p)) > tol:
            return None
        perm.append(y)
    if len(set(perm)) != dim:
        return None
    return tuple(perm)


@dataclass(frozen=True)
class SimState:
    """Classical control bits plus the net root power on the target line."""

    control_bits: Bits
    exponent: int
    target_flips: int
    kappa: int

    @property
    def is_classical(self) -> bool:
        return self.exponent % self.kappa == 0


@dataclass(frozen=True)
class NonClassical:
    """Marker value: the residual root power leaves the target in superposition."""

    exponent: int
    kappa: int


def _common_kappa(circuit: Circuit) -> int:
    kappas = {g.kappa for g in circuit.gates if g.kind is GateKind.ROOT}
    if len(kappas) > 1:
        raise UnsupportedShapeError(f"mixed root orders {sorted(kappas)} are not layered")
    return kappas.pop() if kappas else 1


def exponent_simulate(circuit: Circuit, input_bits: Sequence[int]) -> SimState:
    """Run a basis input through a layered circuit.

    Layered means: Feynman gates combine control lines (or drive the target
    line, which is exact because NOT is the kappa-th power of the root), all
    controlled roots share one kappa and target the target line, and NOT
    gates act on the target line only. Each active root adds its direction
    to the exponent, accumulated mod 2*kappa. The input target bit does not
    influence the result; see classical_output.
    """
    bits = as_bits(input_bits, length=circuit.width)
    w = circuit.target_line
    kappa = _common_kappa(circuit)
    modulus = 2 * kappa
    controls = list(bits[: circuit.n_controls])
    exponent = 0
    flips = 0
    for g in circuit.gates:
        if g.kind is GateKind.FEYNMAN:
            if g.control == w:
                raise UnsupportedShapeError("Feynman gate reads the target line")
            if g.target == w:
                exponent = (exponent + kappa * controls[g.control - 1]) % modulus
            else:
                controls[g.target - 1] ^= controls[g.control - 1]
        elif g.kind is GateKind.ROOT:
            if g.target != w or g.control == w:
                raise UnsupportedShapeError("controlled root must drive the target line")
            exponent = (exponent + g.direction * controls[g.control - 1]) % modulus
        else:
            if g.target != w:
                raise UnsupportedShapeError("NOT gate off the target line")
            flips ^= 1
    return SimState(tuple(controls), exponent, flips, kappa)


def classical_output(sim: SimState, t: int) -> Bits | NonClassical:
    """Full output vector for input target bit t, or a NonClassical marker.

    The net target operator is V^exponent (times NOT per target flip); it is
    classical exactly when the exponent is 0 or kappa mod 2*kappa, flipping
    the target in the latter case.
    """
    if t not in (0, 1):
        raise ValueError(f"target bit must be 0 or 1, got {t}")
    if not sim.is_classical:
        return NonClassical(sim.exponent, sim.kappa)
    flip = sim.target_flips ^ (1 if sim.exponent == sim.kappa else 0)
    return sim.control_bits + (t ^ flip,)


@dataclass(frozen=True)
class TruthTableResult:
    """Permutation over 2^width basis inputs, or the inputs left non-classical."""

    width: int
    permutation: tuple[int, ...] | None
    non_classical: tuple[Bits, ...] = ()

    @property
    def is_classical(self) -> bool:
        return self.permutation is not None


def truth_table(circuit: Circuit) -> TruthTableResult:
    """Exponent-simulate every basis input of a layered circuit."""
    n, w = circuit.n_controls, circuit.width
    perm: list[int] = [0] * (1 << w)
    bad: list[Bits] = []
    for cidx in range(1 << n):
        cbits = index_to_bits(cidx, n)
        sim = exponent_simulate(circuit, cbits + (0,))
        for t in (0, 1):
            out = classical_output(sim, t)
            if isinstance(out, NonClassical):
                bad.append(cbits + (t,))
            else:
                perm[(cidx << 1) | t] = bits_to_index(out)
    if bad:
        return TruthTableResult(w, None, tuple(bad))
    return TruthTableResult(w, tuple(perm))


def net_root_exponent(activation: Sequence[int], controls: Sequence[int]) -> int:
    """Signed root count over all nonzero driving functions, by enumeration.

    Sums gate_direction(alpha, activation) * <alpha, controls> mod 2 over
    every nonzero coefficient vector alpha. For nonzero activation a this
    equals 2^(n-1) when controls = a and 0 otherwise: the cascade of active
    roots and adjoints cancels except on the activation vector, where it
    amounts to the kappa-th power of the root, i.e. NOT.
    """
    act = as_bits(activation)
    ctl = as_bits(controls, length=len(act))
    a_int, c_int = pack_lsb(act), pack_lsb(ctl)
    total = 0
    for alpha in range(1, 1 << len(act)):
        direction = 1 if (alpha & a_int).bit_count() & 1 else -1
        total += direction * ((alpha & c_int).bit_count() & 1)
    return total


def net_all_root_exponent(controls: Sequence[int]) -> int:
    """Same sum with every direction +1: 2^(n-1) on any nonzero input, else 0."""
    ctl = as_bits(controls)
    c_int = pack_lsb(ctl)
    return sum((alpha & c_int).bit_count() & 1 for alpha in range(1, 1 << len(ctl)))
