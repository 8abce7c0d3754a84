
from circuits.compiler import compile_circuit, overhead_report
from circuits.serializers import CircuitSerializer, ComplexityReportSerializer
from core.commands import QrfCommand, read_json, to_json
from core.exceptions import InvalidConfigError
from core.models import CommandOutput
from frames.transform import build_frame_change
from groups.utils import make_group, parse_group


def default_group(layout):
    dims = set(layout.local_dims)
    if len(dims) != 1:
        raise InvalidConfigError("group", None, "registers differ in dimension; pass --group")
    return make_group([dims.pop()])


class Command(QrfCommand):
    help = (
        "Compile a circuit into another reference frame. The compiled circuit is the output and can be "
        "compiled again; the entangling overhead report goes to --report, or to stderr"
    )

    def add_command_arguments(self, parser):
        parser.add_argument("--in", dest="input", required=True, help="Circuit JSON file")
        parser.add_argument("--to-frame", dest="to_frame", required=True, help="Frame to compile into")
        parser.add_argument("--report", default=None, help="Write the complexity report here instead of stderr")
        parser.add_argument("--group", default=None, help="Group factors; defaults to Z_d for d-level registers")

    def run(self, config):
        serializer = CircuitSerializer(data=read_json(config.input_path("input"), "in"))
        serializer.is_valid(raise_exception=True)
        circuit = serializer.save()
        group = parse_group(config.get("group")) if config.get("group") else default_group(circuit.layout)

        fc = build_frame_change(circuit.layout, group, circuit.frame, config.get("to_frame"))
        compiled = compile_circuit(circuit, fc)
        report = ComplexityReportSerializer(overhead_report(circuit, group, fc, compiled=compiled)).data

        if config.get("report"):
            self.write_json(config.get("report"), report)
        else:
            self.stderr.write(to_json(report))
        return CommandOutput(CircuitSerializer(compiled).data)
