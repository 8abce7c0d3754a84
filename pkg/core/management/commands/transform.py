from core.commands import QrfCommand, parse_gate, parse_labels, parse_layout
from core.models import CommandOutput
from frames.serializers import ControlledOperatorSerializer
from frames.transform import build_frame_change, transform_operator, verify_gate_transform
from groups.utils import parse_group


class Command(QrfCommand):
    help = "Transform a register gate into the controlled form it takes in another frame"

    def add_command_arguments(self, parser):
        parser.add_argument("--group", default="2", help="Group factors, e.g. 2 or 2,2")
        parser.add_argument("--layout", default="A,B,C", help="Labels, each optionally label:dim")
        parser.add_argument("--old", required=True, help="Frame the gate is written in")
        parser.add_argument("--new", required=True, help="Frame to move to")
        parser.add_argument("--gate", required=True, help="Builtin gate or matrix JSON")
        parser.add_argument("--support", required=True, help="Comma separated register labels")
        parser.add_argument("--dressed", action="store_true", help="Also act on the old frame register")

    def run(self, config):
        group = parse_group(config.get("group"))
        layout = parse_layout(config.get("layout"), group.order)
        fc = build_frame_change(layout, group, config.get("old"), config.get("new"),
                                dress_old_frame=bool(config.get("dressed")))
        name, op = parse_gate(config.get("gate"))
        support = parse_labels(config.get("support"))

        controlled = transform_operator(fc, op, support)
        data = {
            "frame_change": str(fc),
            "gate": name,
            "controlled": ControlledOperatorSerializer(controlled).data,
            "residual": verify_gate_transform(fc, op, support),
        }
        return CommandOutput(data)
