from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from oracle.enumeration import BudgetExceeded
from runs.loading import PARSE_FAILURE, TIME_OUT, add_input_arguments, load_input
from runs.records import RunRecord, frontier_csv, report_lines, write_frontier
from solver.conf import solver_setting
from solver.services import Method, solve_with_method, store_run


class Command(BaseCommand):
    help = "Compute the non-dominated frontier of one instance and write it as CSV."

    def add_arguments(self, parser):
        add_input_arguments(parser)
        parser.add_argument("--method", choices=Method.values, default=Method.EPS)
        parser.add_argument("--cut", choices=["on", "off"],
                            default="on" if solver_setting("EPSILON_CUT") else "off")
        parser.add_argument("--time-limit", type=float, default=solver_setting("TIME_LIMIT_SECONDS"))
        parser.add_argument("--output", help="Frontier CSV; the .trees and .report files go next to it")
        parser.add_argument("--report", help="Run report path (default: <output>.report)")
        parser.add_argument("--store", action="store_true", help="Save the run to the database")

    def handle(self, *args, **opts):
        if opts["time_limit"] <= 0:
            raise CommandError("--time-limit must be positive", returncode=PARSE_FAILURE)
        loaded = load_input(opts)
        cut_enabled = opts["cut"] == "on"

        try:
            outcome = solve_with_method(
                loaded.graph,
                method=opts["method"],
                cut_enabled=cut_enabled,
                time_limit=opts["time_limit"],
                max_trees=solver_setting("ORACLE_MAX_TREES"),
            )
        except BudgetExceeded as exc:
            raise CommandError(str(exc), returncode=PARSE_FAILURE)
        except ValidationError as exc:
            raise CommandError("; ".join(exc.messages), returncode=PARSE_FAILURE)

        record = RunRecord.from_outcome(loaded.label, loaded.parameters, opts["method"], outcome, cut_enabled)
        if opts["output"]:
            write_frontier(opts["output"], outcome.frontier, record, opts["report"])
        else:
            self.stdout.write(frontier_csv(outcome.frontier), ending="")
            self.stderr.write(report_lines([record]), ending="")

        if opts["store"]:
            store_run(outcome, instance=loaded.instance, label=loaded.label, parameters=loaded.parameters,
                      cut_enabled=cut_enabled, time_limit=opts["time_limit"])

        if outcome.timed_out:
            raise CommandError(
                f"Time limit of {opts['time_limit']}s reached; {len(outcome.frontier)} proven points written",
                returncode=TIME_OUT,
            )
        if opts["output"]:
            self.stdout.write(self.style.SUCCESS(
                f"{len(outcome.frontier)} non-dominated points written to {opts['output']}"
            ))
