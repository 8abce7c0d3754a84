import itertools

import numpy as np
import structlog

from circuits.gates import CNOT, H, S
from protocol.models import NOISELESS, MeasurementRecord
from tensors.utils import PAULIS, basis_state, dagger, embed, kron, pure_density

logger = structlog.getLogger(__name__)

BASIS_ROTATIONS = {
    "X": H,
    "Y": H @ dagger(S),
    "Z": np.eye(2, dtype=complex),
}


class DensityMatrixSimulator:
    """
    Mixed-state simulator for qubit layouts.

    Every gate is followed by a depolarizing channel on its support; readout
    errors flip each measured bit independently.
    """

    def __init__(self, layout, noise=NOISELESS):
        self.layout = layout
        self.noise = noise
        self.rho = pure_density(basis_state(layout, [0] * len(layout.labels)))

    def apply_unitary(self, matrix, support):
        full = embed(self.layout, matrix, support)
        self.rho = full @ self.rho @ dagger(full)
        self.depolarize(support, self.noise.gate_error(len(support)))

    def apply_gate(self, gate):
        # SWAP runs as three CNOTs so each picks up its own error
        if gate.name == "SWAP":
            a, b = gate.support
            for support in ((a, b), (b, a), (a, b)):
                self.apply_unitary(CNOT, support)
        else:
            self.apply_unitary(gate.matrix, gate.support)

    def run(self, circuit):
        for gate in circuit.gates:
            self.apply_gate(gate)
        logger.debug("Simulated circuit", circuit=str(circuit), noise=str(self.noise))
        return self

    def depolarize(self, support, p):
        """rho -> (1 - p) rho + p (1/d on support) (x) Tr_support(rho), as a Pauli twirl."""
        if p == 0:
            return
        twirled = np.zeros_like(self.rho)
        strings = list(itertools.product(PAULIS.values(), repeat=len(support)))
        for paulis in strings:
            full = embed(self.layout, kron(*paulis), support)
            twirled += full @ self.rho @ full
        self.rho = (1 - p) * self.rho + p * twirled / len(strings)

    def probabilities(self, basis):
        """Outcome distribution of measuring every qubit in the Pauli `basis` (one letter per label)."""
        rotation = kron(*[BASIS_ROTATIONS[letter] for letter in basis])
        rotated = rotation @ self.rho @ dagger(rotation)
        probs = np.clip(np.diag(rotated).real, 0.0, None)
        probs = probs / probs.sum()
        if self.noise.ro > 0:
            flip = np.array([[1 - self.noise.ro, self.noise.ro], [self.noise.ro, 1 - self.noise.ro]])
            probs = kron(*[flip] * len(basis)).real @ probs
        return probs

    def measure(self, basis, shots, rng):
        """Sample `shots` outcomes; `shots == 0` returns the exact distribution instead."""
        n = len(basis)
        outcomes = [format(index, f"0{n}b") for index in range(2 ** n)]
        probs = self.probabilities(basis)
        if shots == 0:
            return MeasurementRecord(basis, {}, 0, probabilities=dict(zip(outcomes, probs)))
        samples = rng.multinomial(shots, probs)
        counts = {outcome: int(count) for outcome, count in zip(outcomes, samples) if count}
        return MeasurementRecord(basis, counts, shots)
