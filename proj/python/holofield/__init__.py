"""Exact holonomy fields, fields of definition and monodromy decompositions."""

import json

from . import _core
from ._core import HolofieldError, LimitError

__all__ = [
    "HolofieldError",
    "LimitError",
    "surface_info",
    "holonomy",
    "fod",
    "intersect_fields",
    "k_of_m",
    "monodromy",
    "typical",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _call(fn, *docs, config=None, verify=False):
    cfg = "" if config is None else _text(config)
    return json.loads(fn(*docs, config=cfg, verify=verify))


def surface_info(surface, *, config=None, verify=False):
    return _call(_core.surface_info, _text(surface), config=config, verify=verify)


def holonomy(surface, *, config=None, verify=False):
    return _call(_core.holonomy, _text(surface), config=config, verify=verify)


def fod(subspace, *, config=None, verify=False):
    return _call(_core.fod, _text(subspace), config=config, verify=verify)


def intersect_fields(fields, *, config=None, verify=False):
    return _call(_core.intersect_fields, [_text(f) for f in fields], config=config, verify=verify)


def k_of_m(surfaces, *, config=None, verify=False):
    return _call(_core.k_of_m, [_text(s) for s in surfaces], config=config, verify=verify)


def monodromy(rep, mode="pa", *, config=None, verify=False):
    """mode is "pa", "decompose" or "blocks"."""
    return _call(_core.monodromy, _text(rep), mode, config=config, verify=verify)


def typical(periods, ambient, *, config=None, verify=False):
    return _call(_core.typical, _text(periods), _text(ambient), config=config, verify=verify)
