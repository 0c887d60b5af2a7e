"""Solver defaults, overridable through the CABLETRENCH settings dict."""

from django.conf import settings

DEFAULTS = {
    'TIME_LIMIT_SECONDS': 300,
    'EPSILON_CUT': True,
    'ORACLE_MAX_TREES': 5_000_000,
    'BENCH_PARALLEL': 1,
}


def solver_setting(name):
    if name not in DEFAULTS:
        raise KeyError(f"Unknown CABLETRENCH setting {name!r}")
    return getattr(settings, 'CABLETRENCH', {}).get(name, DEFAULTS[name])
