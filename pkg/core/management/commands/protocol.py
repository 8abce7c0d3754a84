from circuits.gates import parse_angle
from core.commands import QrfCommand
from core.exceptions import InvalidConfigError
from core.models import CommandOutput
from protocol.experiment import run_protocol
from protocol.models import NoiseModel
from protocol.serializers import ProtocolResultSerializer
from resources.models import ResourceReport


class Command(QrfCommand):
    help = "Run the three-qubit protocol and compare the resource totals seen from frames A and B"

    def add_command_arguments(self, parser):
        parser.add_argument("--shots", type=int, default=None, help="Shots per Pauli basis; 0 selects exact mode")
        parser.add_argument("--noise", default="none", help="e.g. p2q=0.02,p1q=0.001,ro=0.01")
        parser.add_argument("--theta", default=None, help="Lab-state angle on B (default pi/2)")
        parser.add_argument("--strict", action="store_true", help="Fail when tomography needed projection")

    def run(self, config):
        shots = config.get("shots")
        if shots is not None and shots < 0:
            raise InvalidConfigError("shots", shots, "must not be negative")
        theta = config.get("theta")
        if theta is not None:
            try:
                theta = parse_angle(theta)
            except ValueError as ex:
                raise InvalidConfigError("theta", theta, str(ex))

        result = run_protocol(
            shots=shots,
            noise=NoiseModel.parse(config.get("noise")),
            seed=config.seed,
            theta=theta,
            strict=bool(config.get("strict")),
        )
        return CommandOutput(
            ProtocolResultSerializer(result).data,
            csv_header=ResourceReport.CSV_HEADER,
            csv_rows=[report.as_csv_row() for report in result.reports],
        )
