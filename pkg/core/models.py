import os

from dataclasses import dataclass, field

from core.exceptions import InvalidConfigError

JSON = "json"
CSV = "csv"
FORMATS = (JSON, CSV)


@dataclass(frozen=True)
class RunConfig:
    """Options of one command invocation, checked before any work starts."""
    command: str
    seed: int = None
    out: str = None
    format: str = JSON
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.format not in FORMATS:
            raise InvalidConfigError("format", self.format, f"expected one of {', '.join(FORMATS)}")
        if self.seed is not None and self.seed < 0:
            raise InvalidConfigError("seed", self.seed, "must not be negative")
        if self.out:
            directory = os.path.dirname(os.path.abspath(self.out))
            if not os.path.isdir(directory):
                raise InvalidConfigError("out", self.out, "directory does not exist")

    @classmethod
    def from_options(cls, command, options):
        common = {"seed", "out", "format", "verbosity", "settings", "pythonpath", "traceback", "no_color",
                  "force_color", "skip_checks"}
        return cls(
            command=command,
            seed=options.get("seed"),
            out=options.get("out"),
            format=options.get("format") or JSON,
            options={key: value for key, value in options.items() if key not in common},
        )

    def get(self, name, default=None):
        value = self.options.get(name)
        return default if value is None else value

    def input_path(self, name):
        path = self.options.get(name)
        if not path or not os.path.isfile(path):
            raise InvalidConfigError(name.replace("_", "-"), path, "file does not exist")
        return path


@dataclass(frozen=True)
class CommandOutput:
    """JSON payload of a command plus an optional CSV projection.

    `error` is raised after the payload has been written.
    """
    data: object
    csv_header: list = None
    csv_rows: list = None
    error: Exception = None

    @property
    def has_csv(self):
        return self.csv_header is not None
