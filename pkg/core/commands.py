import csv
import io
import json

import structlog
from django.core.management.base import BaseCommand
from rest_framework.renderers import JSONRenderer

from circuits.gates import builtin_gate
from core.exception_handler import custom_exception_handler
from core.exceptions import InvalidConfigError
from core.models import CSV, FORMATS, JSON, RunConfig
from tensors.models import SystemLayout
from tensors.serializers import MatrixField
from tensors.utils import as_unitary

logger = structlog.get_logger(__name__)


class QrfCommand(BaseCommand):
    """
    Base for the qrf commands: shared --seed/--out/--format flags, JSON or CSV
    output, and exit codes 2 (bad input) and 3 (internal invariant breach).

    Subclasses implement `add_command_arguments` and `run(config)`, which
    returns a CommandOutput.
    """

    def add_command_arguments(self, parser):
        pass

    def add_arguments(self, parser):
        self.add_command_arguments(parser)
        parser.add_argument("--seed", type=int, default=None, help="Seed for every random choice")
        parser.add_argument("--out", default=None, help="Write the result here instead of stdout")
        parser.add_argument("--format", choices=FORMATS, default=JSON, help="Output format")

    @property
    def command_name(self):
        return self.__module__.rsplit(".", 1)[-1]

    def run(self, config):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(self.command_name, options)
            output = self.run(config)
            text = self.render(config, output)
            if config.out:
                with open(config.out, "w", newline="") as handle:
                    handle.write(text)
                self.stderr.write(self.style.SUCCESS(f"Wrote {config.out}"))
            else:
                self.stdout.write(text)
            if output.error is not None:
                raise output.error
        except Exception as ex:
            raise custom_exception_handler(ex, self.command_name) from ex

    def render(self, config, output):
        if config.format == CSV:
            if not output.has_csv:
                raise InvalidConfigError("format", CSV, f"{self.command_name} has no CSV output")
            buffer = io.StringIO()
            writer = csv.writer(buffer, delimiter=",", quotechar='"', lineterminator="\n")
            writer.writerow(output.csv_header)
            writer.writerows(output.csv_rows)
            return buffer.getvalue()
        return to_json(output.data)

    def write_json(self, path, data):
        with open(path, "w") as handle:
            handle.write(to_json(data))
        logger.info("Wrote file", command=self.command_name, path=path)


def to_json(data):
    return JSONRenderer().render(data, renderer_context={"indent": 2}).decode("utf-8")


def parse_gate(text):
    """A builtin name such as H or RX(1.0), or a matrix as JSON."""
    text = str(text).strip()
    if not text.startswith(("[", "{")):
        return builtin_gate(text)
    try:
        data = json.loads(text)
    except ValueError as ex:
        raise InvalidConfigError("gate", text, f"not valid JSON: {ex}")
    return "U", as_unitary(MatrixField().to_internal_value(data), name="gate")


def parse_layout(text, dim):
    """Comma separated labels, each optionally with its own dimension: "A,B,C" or "F:4,R:2"."""
    labels, dims = [], []
    for part in str(text).split(","):
        label, _, size = part.strip().partition(":")
        try:
            dims.append(int(size) if size else dim)
        except ValueError:
            raise InvalidConfigError("layout", text, f"bad dimension {size!r}")
        labels.append(label)
    return SystemLayout(tuple(labels), tuple(dims))


def parse_labels(text):
    return tuple(label.strip() for label in str(text).split(",") if label.strip())


def read_json(path, option):
    with open(path) as handle:
        try:
            return json.load(handle)
        except ValueError as ex:
            raise InvalidConfigError(option, path, f"not valid JSON: {ex}")
