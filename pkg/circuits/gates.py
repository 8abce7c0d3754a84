import re

import numpy as np

from circuits.exceptions import UnknownGateError
from tensors.utils import I2, X, Y, Z

H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S = np.diag([1, 1j]).astype(complex)
T = np.diag([1, np.exp(1j * np.pi / 4)]).astype(complex)
CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
CZ = np.diag([1, 1, 1, -1]).astype(complex)
SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)


def rx(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def ry(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz(theta):
    return np.diag([np.exp(-1j * theta / 2), np.exp(1j * theta / 2)]).astype(complex)


FIXED_GATES = {
    "I": I2,
    "H": H,
    "X": X,
    "Y": Y,
    "Z": Z,
    "S": S,
    "T": T,
    "CNOT": CNOT,
    "CX": CNOT,
    "CZ": CZ,
    "SWAP": SWAP,
}

ROTATIONS = {
    "RX": rx,
    "RY": ry,
    "RZ": rz,
}

ROTATION_PATTERN = re.compile(r"^\s*(?P<name>[A-Za-z]+)\s*\(\s*(?P<angle>[^)]+)\)\s*$")


def parse_angle(text):
    """Accept plain floats and multiples of pi such as 'pi/2', '-3*pi/4' or '0.5pi'."""
    text = text.strip().lower().replace(" ", "")
    match = re.fullmatch(r"(?P<sign>[-+]?)(?P<num>\d*\.?\d*(e[-+]?\d+)?)\*?(?P<pi>pi)?(/(?P<den>\d+\.?\d*))?", text)
    if match is None or (match.group("num") == "" and match.group("pi") is None):
        raise ValueError(f"Cannot parse angle {text!r}")
    value = float(match.group("num")) if match.group("num") not in ("", ".") else 1.0
    if match.group("pi"):
        value *= np.pi
    if match.group("den"):
        value /= float(match.group("den"))
    return -value if match.group("sign") == "-" else value


def builtin_gate(spec):
    """Resolve a builtin gate name such as 'H', 'CNOT' or 'RX(0.7)' to (name, matrix)."""
    text = str(spec).strip()
    if text.upper() in FIXED_GATES:
        return text.upper(), FIXED_GATES[text.upper()].copy()
    match = ROTATION_PATTERN.match(text)
    if match and match.group("name").upper() in ROTATIONS:
        try:
            theta = parse_angle(match.group("angle"))
        except ValueError:
            raise UnknownGateError(text)
        name = match.group("name").upper()
        return f"{name}({match.group('angle').strip()})", ROTATIONS[name](theta)
    raise UnknownGateError(text)
