from core.commands import QrfCommand, parse_labels
from core.exceptions import InvalidConfigError, VerificationFailedError
from core.models import CommandOutput
from core.serializers import VerificationReportSerializer
from core.verification import CHECKS, run_verification


class Command(QrfCommand):
    help = "Run the invariant battery and exit with 3 if any residual is out of tolerance"

    def add_command_arguments(self, parser):
        parser.add_argument("--workers", type=int, default=None, help="Threads for independent checks")
        parser.add_argument("--only", default=None, help="Comma separated check names")

    def run(self, config):
        workers = config.get("workers")
        if workers is not None and workers < 1:
            raise InvalidConfigError("workers", workers, "must be at least 1")
        only = None
        if config.get("only"):
            only = parse_labels(config.get("only"))
            known = [name for name, _, _ in CHECKS]
            unknown = [name for name in only if name not in known]
            if unknown:
                raise InvalidConfigError("only", config.get("only"), f"known checks: {', '.join(known)}")

        report = run_verification(seed=config.seed, workers=workers, only=only)
        return CommandOutput(
            VerificationReportSerializer(report).data,
            csv_header=["check", "residual", "tolerance", "passed"],
            csv_rows=[[c.name, f"{c.residual:.3e}", f"{c.tolerance:.0e}", c.passed] for c in report.checks],
            error=None if report.passed else VerificationFailedError(report.failures),
        )
