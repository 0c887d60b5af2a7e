import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from instances.generators import CostMode, EdgeRule, Family, Metric, PointDistribution
from runs.loading import PARSE_FAILURE
from runs.records import BENCH_METHODS, BenchTask, aggregate, aggregate_csv, atomic_write, report_lines, run_bench
from runs.sweeps import expand_entry, load_sweep
from solver.conf import solver_setting
from solver.services import store_run

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Run a benchmark sweep (families x sizes x seeds x methods) and aggregate the results."

    def add_arguments(self, parser):
        parser.add_argument("--sweep", help="JSON sweep file; replaces the family flags")
        parser.add_argument("--family", choices=Family.values)
        parser.add_argument("--sizes", type=int, nargs="+")
        parser.add_argument("--density", nargs="+", help="One or more densities, e.g. 0.25 0.5 1")
        parser.add_argument("--seeds", nargs="+", default=["1"], help="Seeds or inclusive ranges such as 1-20")
        parser.add_argument("--cost-mode", nargs="+", choices=CostMode.values, default=[CostMode.CTP])
        parser.add_argument("--dist", choices=PointDistribution.values)
        parser.add_argument("--edge-rule", choices=EdgeRule.values)
        parser.add_argument("--metric", choices=Metric.values)
        parser.add_argument("--blades", type=int, nargs="+")
        parser.add_argument("--methods", nargs="+", choices=list(BENCH_METHODS), default=["eps-cut"])
        parser.add_argument("--time-limit", type=float, default=solver_setting("TIME_LIMIT_SECONDS"))
        parser.add_argument("--parallel", type=int, default=solver_setting("BENCH_PARALLEL"))
        parser.add_argument("--verify-oracle", action="store_true",
                            help="Compare every frontier with the enumeration oracle (n <= 8)")
        parser.add_argument("--output", help="Aggregate CSV; standard output when omitted")
        parser.add_argument("--records", help="Per-run JSON lines")
        parser.add_argument("--store", action="store_true", help="Save every run to the database")

    def _specs(self, opts):
        if opts["sweep"]:
            return load_sweep(opts["sweep"])
        if not opts["family"]:
            return []
        if opts["family"] == Family.WINDMILL:
            return expand_entry({"family": opts["family"], "blades": opts["blades"] or []})
        entry = {"family": opts["family"], "sizes": opts["sizes"] or [], "cost_modes": opts["cost_mode"],
                 "seeds": opts["seeds"]}
        if opts["density"]:
            entry["densities"] = opts["density"]
        for flag, key in (("dist", "distribution"), ("edge_rule", "edge_rule"), ("metric", "metric")):
            if opts[flag]:
                entry[key] = opts[flag]
        return expand_entry(entry)

    def handle(self, *args, **opts):
        if opts["time_limit"] <= 0 or opts["parallel"] < 1:
            raise CommandError("--time-limit and --parallel must be positive", returncode=PARSE_FAILURE)
        try:
            specs = self._specs(opts)
        except (OSError, ValidationError) as exc:
            messages = exc.messages if isinstance(exc, ValidationError) else [str(exc)]
            raise CommandError("; ".join(messages), returncode=PARSE_FAILURE)

        tasks = [
            BenchTask(spec, method, opts["time_limit"], opts["verify_oracle"], solver_setting("ORACLE_MAX_TREES"))
            for spec in specs
            for method in opts["methods"]
        ]
        logger.info("Bench sweep with %d runs on %d workers", len(tasks), opts["parallel"])
        results = run_bench(tasks, parallel=opts["parallel"])
        records = [result.record for result in results]

        if opts["store"]:
            for result in results:
                if result.outcome is not None:
                    _, cut_enabled = BENCH_METHODS[result.record.method]
                    store_run(result.outcome, label=result.record.instance_id,
                              parameters=result.record.parameters, cut_enabled=cut_enabled,
                              time_limit=opts["time_limit"])

        if opts["records"]:
            atomic_write(opts["records"], report_lines(records))
        table = aggregate_csv(aggregate(records))
        if opts["output"]:
            atomic_write(opts["output"], table)
            failures = sum(record.failed for record in records)
            self.stdout.write(self.style.SUCCESS(
                f"{len(records)} runs ({failures} failed) aggregated into {opts['output']}"
            ))
        else:
            self.stdout.write(table, ending="")
