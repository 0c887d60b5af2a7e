"""
Sweep descriptions.

A sweep is a list of entries; every list-valued field multiplies out:

    [{"family": "incomplete", "sizes": [8], "densities": ["0.5"],
      "seeds": [1, 2, 3], "cost_modes": ["ctp", "gctp"]},
     {"family": "windmill", "blades": [1, 2, 3]}]

Seeds may also be given as an inclusive range string such as "1-20".
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from instances.exceptions import InvalidInstanceSpec
from instances.generators import CostMode, Family, InstanceSpec

ENTRY_FIELDS = {
    'family', 'sizes', 'densities', 'seeds', 'cost_modes',
    'distribution', 'edge_rule', 'metric', 'blades',
}


def parse_seeds(value) -> list[int]:
    if isinstance(value, int):
        return [value]
    if isinstance(value, str):
        first, _, last = value.partition('-')
        try:
            start = int(first)
            stop = int(last) if last else start
        except ValueError:
            raise InvalidInstanceSpec(f"Seed range {value!r} is not of the form A-B")
        if stop < start:
            raise InvalidInstanceSpec(f"Seed range {value!r} is empty")
        return list(range(start, stop + 1))
    seeds = []
    for item in value:
        seeds.extend(parse_seeds(item))
    return seeds


def _listed(entry: dict, key: str, default):
    value = entry.get(key, default)
    return value if isinstance(value, list) else [value]


def expand_entry(entry: dict) -> list[InstanceSpec]:
    unknown = set(entry) - ENTRY_FIELDS
    if unknown:
        raise InvalidInstanceSpec(f"Unknown sweep fields: {', '.join(sorted(unknown))}")
    if 'family' not in entry:
        raise InvalidInstanceSpec("Every sweep entry needs a family")

    family = entry['family']
    if family == Family.WINDMILL:
        return [InstanceSpec(family=family, blades=blades) for blades in _listed(entry, 'blades', None)]

    sizes = _listed(entry, 'sizes', None)
    densities = _listed(entry, 'densities', None)
    cost_modes = _listed(entry, 'cost_modes', CostMode.CTP)
    seeds = parse_seeds(entry.get('seeds', 1))
    return [
        InstanceSpec(
            family=family, n=n, density=density, cost_mode=cost_mode, seed=seed,
            distribution=entry.get('distribution'), edge_rule=entry.get('edge_rule'),
            metric=entry.get('metric'),
        )
        for n, density, cost_mode, seed in itertools.product(sizes, densities, cost_modes, seeds)
    ]


def expand_sweep(entries: list[dict]) -> list[InstanceSpec]:
    specs = []
    for entry in entries:
        if not isinstance(entry, dict):
            raise InvalidInstanceSpec(f"Sweep entries must be objects, got {entry!r}")
        specs.extend(expand_entry(entry))
    return specs


def load_sweep(path) -> list[InstanceSpec]:
    try:
        entries = json.loads(Path(path).read_text(encoding='utf-8'))
    except json.JSONDecodeError as exc:
        raise InvalidInstanceSpec(f"Sweep file is not valid JSON: {exc}")
    if not isinstance(entries, list):
        raise InvalidInstanceSpec("A sweep file holds a JSON list of entries")
    return expand_sweep(entries)
