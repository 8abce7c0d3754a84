import numpy as np
from scipy.stats import unitary_group

from circuits.gates import builtin_gate, rx, rz
from circuits.models import Circuit, Gate
from tensors.models import SystemLayout

ONE_QUBIT_POOL = ("H", "X", "Y", "Z", "S", "T", "RX", "RZ", "U2")
TWO_QUBIT_POOL = ("CNOT", "CZ", "SWAP", "U4")


def builtin(name, support):
    name, matrix = builtin_gate(name)
    return Gate(name, tuple(support), matrix)


def bell_circuit():
    """H on A then CNOT A->B, expressed in frame C."""
    layout = SystemLayout.uniform(("A", "B", "C"), 2)
    return Circuit(layout, (builtin("H", ["A"]), builtin("CNOT", ["A", "B"])), "C")


def random_gate(rng, labels):
    if len(labels) >= 2 and rng.random() < 0.4:
        kind = TWO_QUBIT_POOL[rng.integers(len(TWO_QUBIT_POOL))]
        support = [str(label) for label in rng.choice(labels, size=2, replace=False)]
        if kind == "U4":
            return Gate(kind, tuple(support), unitary_group.rvs(4, random_state=rng))
        return builtin(kind, support)

    kind = ONE_QUBIT_POOL[rng.integers(len(ONE_QUBIT_POOL))]
    support = (str(labels[rng.integers(len(labels))]),)
    if kind == "U2":
        return Gate(kind, support, unitary_group.rvs(2, random_state=rng))
    if kind in ("RX", "RZ"):
        theta = float(rng.uniform(0, 2 * np.pi))
        return Gate(f"{kind}({theta:.4f})", support, rx(theta) if kind == "RX" else rz(theta))
    return builtin(kind, support)


def random_circuit(rng, registers=("A", "B", "C"), frame="F", max_gates=6):
    """Random qubit circuit over `registers`; the frame label stays idle."""
    layout = SystemLayout.uniform((frame,) + tuple(registers), 2)
    count = int(rng.integers(1, max_gates + 1))
    gates = tuple(random_gate(rng, list(registers)) for _ in range(count))
    return Circuit(layout, gates, frame)
