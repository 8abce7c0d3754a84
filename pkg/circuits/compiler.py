import numpy as np
import structlog

from circuits.exceptions import FrameMismatchError, GateOnFrameError, OverheadBoundViolation
from circuits.models import COMPILED, Circuit, ComplexityReport, Gate, GateOrigin
from frames.classification import classify_gate
from frames.transform import transform_operator
from tensors.utils import check_dimension, dagger, embed, is_product_operator, reduce_support

logger = structlog.getLogger(__name__)


def circuit_global_unitary(circuit):
    """V = U_L ... U_1 for gates applied in list order."""
    layout = circuit.layout
    check_dimension(layout.dim)
    unitary = np.eye(layout.dim, dtype=complex)
    for gate in circuit.gates:
        unitary = embed(layout, gate.matrix, gate.support) @ unitary
    return unitary


def is_entangling_primitive(layout, gate):
    if len(gate.support) < 2:
        return False
    return not is_product_operator(layout.sublayout(gate.support), gate.matrix)


def entangling_count(circuit):
    return sum(1 for gate in circuit.gates if is_entangling_primitive(circuit.layout, gate))


def _origin(fc, gate, index):
    return GateOrigin(kind=COMPILED, frame=fc.old_frame, source=gate.name, source_index=index)


def _compile_register_gate(fc, gate, index, gate_class):
    origin = _origin(fc, gate, index)
    if gate_class.is_robust:
        return [Gate(gate.name, gate.support, gate.matrix, origin)]

    if gate_class.is_phase_sector:
        chi = gate_class.character
        phases = np.diag([chi(g) for g in fc.group.elements]).astype(complex)
        return [
            Gate(f"V({chi})", (fc.old_frame,), phases, origin),
            Gate(gate.name, gate.support, gate.matrix, origin),
        ]

    controlled = transform_operator(fc, gate.matrix, gate.support)
    return [Gate(f"C-{gate.name}", controlled.support, controlled.local_dense(), origin)]


def _compile_dense(fc, gate, index):
    """Gates touching the new frame: conjugate densely, then drop identity factors."""
    layout = fc.layout
    image = fc.dense @ embed(layout, gate.matrix, gate.support) @ dagger(fc.dense)
    support, reduced = reduce_support(layout, image)
    return [Gate(f"{gate.name}^({fc.new_frame})", support, reduced, _origin(fc, gate, index))]


def compile_circuit(circuit, fc):
    """
    Rewrite a circuit expressed in fc.old_frame into fc.new_frame, gate by gate.

    The old frame itself never carries a gate. Gates on registers follow
    their class; gates touching the new frame are conjugated densely.
    """
    if circuit.frame != fc.old_frame:
        raise FrameMismatchError(circuit.frame, fc.old_frame)
    if circuit.layout.labels != fc.layout.labels or circuit.layout.local_dims != fc.layout.local_dims:
        raise FrameMismatchError(str(circuit.layout), str(fc.layout))

    compiled = []
    for index, gate in enumerate(circuit.gates):
        if fc.old_frame in gate.support:
            raise GateOnFrameError(index, gate.name, fc.old_frame)
        if fc.new_frame in gate.support:
            compiled.extend(_compile_dense(fc, gate, index))
        else:
            gate_class = classify_gate(fc.group, gate.matrix)
            compiled.extend(_compile_register_gate(fc, gate, index, gate_class))

    result = Circuit(fc.layout, tuple(compiled), fc.new_frame)
    logger.info("Compiled circuit", old=fc.old_frame, new=fc.new_frame, gates_in=len(circuit), gates_out=len(result))
    return result


def generic_gates(circuit, fc):
    """
    Gates that are not entangling primitives in the old frame but whose
    image is: register gates classified Entangling, and gates on the new
    frame whose dense image entangles.

    Gates already entangling in the old frame are counted once, in n_ent_old.
    """
    layout = circuit.layout
    generic = []
    for index, gate in enumerate(circuit.gates):
        if is_entangling_primitive(layout, gate):
            continue
        if fc.new_frame in gate.support:
            image = _compile_dense(fc, gate, index)[0]
            if is_entangling_primitive(layout, image):
                generic.append((index, gate))
        elif classify_gate(fc.group, gate.matrix).is_entangling:
            generic.append((index, gate))
    return generic


def overhead_report(circuit, group, fc, compiled=None):
    if circuit.frame != fc.old_frame:
        raise FrameMismatchError(circuit.frame, fc.old_frame)
    if group != fc.group:
        raise FrameMismatchError(str(group), str(fc.group))
    compiled = compile_circuit(circuit, fc) if compiled is None else compiled
    generic = generic_gates(circuit, fc)
    report = ComplexityReport(
        old_frame=fc.old_frame,
        new_frame=fc.new_frame,
        n_ent_old=entangling_count(circuit),
        n_ent_new=entangling_count(compiled),
        n_generic_locals=len(generic),
        generic_sources=tuple(f"#{index} {gate}" for index, gate in generic),
    )
    if report.n_ent_new > report.bound:
        logger.error("Relational overhead bound violated", n_new=report.n_ent_new, bound=report.bound,
                     circuit=str(circuit))
        raise OverheadBoundViolation(report.n_ent_new, report.bound)
    return report
