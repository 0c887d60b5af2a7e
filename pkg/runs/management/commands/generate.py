from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from instances.fileformat import write_instance
from instances.generators import (
    CostMode, EdgeRule, Family, InstanceSpec, Metric, PointDistribution, generate,
    instance_id, parameter_comment,
)
from instances.models import Instance
from runs.loading import PARSE_FAILURE
from runs.records import atomic_write


class Command(BaseCommand):
    help = "Generate a deterministic instance file from family parameters."

    def add_arguments(self, parser):
        parser.add_argument("--family", required=True, choices=Family.values)
        parser.add_argument("--n", type=int)
        parser.add_argument("--density", help="Decimal or fraction, e.g. 0.5 or 1/8")
        parser.add_argument("--seed", type=int, default=1)
        parser.add_argument("--cost-mode", choices=CostMode.values, default=CostMode.CTP)
        parser.add_argument("--dist", choices=PointDistribution.values)
        parser.add_argument("--edge-rule", choices=EdgeRule.values)
        parser.add_argument("--metric", choices=Metric.values)
        parser.add_argument("--blades", type=int)
        parser.add_argument("--output", help="Instance file; standard output when omitted")
        parser.add_argument("--store", action="store_true", help="Also save the instance to the database")

    def handle(self, *args, **opts):
        try:
            spec = InstanceSpec(
                family=opts["family"],
                n=opts["n"],
                density=opts["density"],
                distribution=opts["dist"],
                edge_rule=opts["edge_rule"],
                metric=opts["metric"],
                cost_mode=opts["cost_mode"],
                seed=opts["seed"],
                blades=opts["blades"],
            )
            graph = generate(spec)
        except ValidationError as exc:
            raise CommandError("; ".join(exc.messages), returncode=PARSE_FAILURE)

        text = write_instance(graph, comments=[parameter_comment(spec)])
        if opts["output"]:
            atomic_write(opts["output"], text)
            self.stdout.write(self.style.SUCCESS(
                f"Wrote {instance_id(spec)} (n={graph.n}, m={graph.m}) to {opts['output']}"
            ))
        else:
            self.stdout.write(text, ending="")

        if opts["store"]:
            instance = Instance.from_spec(spec)
            self.stderr.write(f"Stored instance {instance.pk}")
