"""Instance input for the management commands: a file path or a stored instance."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from graphs.core import Graph
from instances.fileformat import read_instance
from instances.models import Instance

PARSE_FAILURE = 1
TIME_OUT = 2


@dataclass
class LoadedInstance:
    graph: Graph
    label: str
    parameters: dict
    instance: Instance | None = None


def add_input_arguments(parser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--input', help='Instance file')
    source.add_argument('--instance', help='UUID of a stored instance')


def load_input(options) -> LoadedInstance:
    if options.get('instance'):
        try:
            instance = Instance.objects.get(pk=options['instance'])
        except (Instance.DoesNotExist, ValidationError):
            raise CommandError(f"No stored instance {options['instance']}", returncode=PARSE_FAILURE)
        try:
            graph = instance.to_graph()
        except ValidationError as exc:
            raise CommandError(f"Stored instance {instance.pk}: {'; '.join(exc.messages)}", returncode=PARSE_FAILURE)
        return LoadedInstance(graph, instance.name, dict(instance.parameters), instance)

    path = Path(options['input'])
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise CommandError(f"Cannot read {path}: {exc}", returncode=PARSE_FAILURE)
    try:
        graph = read_instance(text)
    except ValidationError as exc:
        raise CommandError(f"{path}: {'; '.join(exc.messages)}", returncode=PARSE_FAILURE)
    return LoadedInstance(graph, path.stem, {})
