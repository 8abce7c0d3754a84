from core.commands import QrfCommand
from core.models import CommandOutput
from protocol.models import SweepResult
from protocol.serializers import SweepResultSerializer
from protocol.sweep import FAMILIES, lambda_sweep


class Command(QrfCommand):
    help = "Sweep a family of physical states and report C2 + D2 in every frame"

    def add_command_arguments(self, parser):
        parser.add_argument("--family", default="default", help=f"One of {', '.join(FAMILIES)}")
        parser.add_argument("--grid", default="0:pi/2:33", help="start:stop:count, or a single angle")

    def run(self, config):
        result = lambda_sweep(config.get("family"), config.get("grid"))
        return CommandOutput(
            SweepResultSerializer(result).data,
            csv_header=SweepResult.CSV_HEADER,
            csv_rows=list(result.csv_rows()),
        )
