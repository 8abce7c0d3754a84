import numpy as np
import structlog
from django.conf import settings

from core.commands import QrfCommand, parse_gate
from core.models import CommandOutput
from frames.classification import classify_gate, orbit
from frames.serializers import GateClassSerializer
from groups.utils import parse_group

logger = structlog.get_logger(__name__)


def distinct_orbit_size(group, op, tol):
    distinct = []
    for _, image in orbit(group, op):
        if not any(np.linalg.norm(image - other) <= tol for other in distinct):
            distinct.append(image)
    return len(distinct)


class Command(QrfCommand):
    help = "Classify a register gate as FrameRobust, PhaseSector or Entangling under the regular representation"

    def add_command_arguments(self, parser):
        parser.add_argument("--group", default="2", help="Group factors, e.g. 2 or 2,2")
        parser.add_argument("--gate", required=True, help="Builtin gate (H, Z, RX(1.0), ...) or matrix JSON")
        parser.add_argument("--tol", type=float, default=None, help="Classification tolerance")

    def run(self, config):
        group = parse_group(config.get("group"))
        name, op = parse_gate(config.get("gate"))
        tol = config.get("tol", settings.QRF_CLASSIFY_TOL)
        gate_class = classify_gate(group, op, tol=tol)
        logger.info("Classified gate", group=str(group), gate=name, kind=gate_class.kind.value)

        data = {
            "group": str(group),
            "gate": name,
            "class": gate_class.kind.value,
            "character": GateClassSerializer(gate_class).data["character"],
            "orbit_size": distinct_orbit_size(group, op, max(tol, 1e-10) * np.linalg.norm(op)),
        }
        return CommandOutput(
            data,
            csv_header=["group", "gate", "class", "character", "orbit_size"],
            csv_rows=[[data["group"], name, data["class"], str(gate_class.character or ""), data["orbit_size"]]],
        )
