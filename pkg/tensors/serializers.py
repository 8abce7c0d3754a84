import numpy as np
from rest_framework import serializers


class MatrixField(serializers.Field):
    """
    Dense complex matrix as {rows, cols, re: [...], im: [...]} in row-major order.

    Input may also be a list of rows whose entries are numbers or [re, im] pairs.
    """

    default_error_messages = {
        "invalid": "A matrix must be an object with rows, cols, re and im.",
        "shape": "Expected {expected} entries for a {rows}x{cols} matrix, got {actual}.",
        "number": "Matrix entries must be real numbers.",
    }

    def to_representation(self, value):
        matrix = np.atleast_2d(np.asarray(value, dtype=complex))
        rows, cols = matrix.shape
        flat = matrix.reshape(-1)
        return {
            "rows": rows,
            "cols": cols,
            "re": [float(x) for x in flat.real],
            "im": [float(x) for x in flat.imag],
        }

    def _from_rows(self, data):
        try:
            matrix = np.asarray(data, dtype=float)
        except (TypeError, ValueError):
            self.fail("number")
        if matrix.ndim == 3 and matrix.shape[-1] == 2:
            matrix = matrix[..., 0] + 1j * matrix[..., 1]
        if matrix.ndim != 2 or 0 in matrix.shape:
            self.fail("invalid")
        return matrix.astype(complex)

    def to_internal_value(self, data):
        if isinstance(data, list):
            return self._from_rows(data)
        if not isinstance(data, dict) or not {"rows", "cols", "re"}.issubset(data.keys()):
            self.fail("invalid")
        try:
            rows = int(data["rows"])
            cols = int(data["cols"])
            re = np.asarray(data["re"], dtype=float)
            im = np.asarray(data.get("im", [0.0] * len(data["re"])), dtype=float)
        except (TypeError, ValueError):
            self.fail("number")
        expected = rows * cols
        if rows < 1 or cols < 1 or re.shape != (expected,) or im.shape != (expected,):
            self.fail("shape", expected=expected, rows=rows, cols=cols, actual=re.size)
        return (re + 1j * im).reshape(rows, cols)
