from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from runs.loading import PARSE_FAILURE, add_input_arguments, load_input
from runs.records import atomic_write
from solver.milp import export_milp


class Command(BaseCommand):
    help = "Write the flow MILP of an instance in LP format."

    def add_arguments(self, parser):
        add_input_arguments(parser)
        parser.add_argument("--epsilon", type=int, help="Trench budget row")
        parser.add_argument("--cut", choices=["on", "off"], default="off")
        parser.add_argument("--weights", type=int, nargs=2, metavar=("CABLE", "TRENCH"),
                            help="Objective weights; default is the hybrid scaling (D, 1)")
        parser.add_argument("--output", help="LP file; standard output when omitted")

    def handle(self, *args, **opts):
        loaded = load_input(opts)
        weights = tuple(opts["weights"]) if opts["weights"] else None
        if weights is not None and sum(weights) == 0:
            raise CommandError("--weights must not both be zero", returncode=PARSE_FAILURE)
        try:
            text = export_milp(loaded.graph, epsilon=opts["epsilon"], cut=opts["cut"] == "on", weights=weights)
        except (ValueError, ValidationError) as exc:
            raise CommandError(str(exc), returncode=PARSE_FAILURE)

        if opts["output"]:
            atomic_write(opts["output"], text)
            self.stdout.write(self.style.SUCCESS(f"Wrote LP model to {opts['output']}"))
        else:
            self.stdout.write(text, ending="")
