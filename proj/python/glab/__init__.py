"""Ideal structure of finite groupoid C*-algebras.

Instances are JSON documents in the same format the ``glab`` command-line
tool reads.  They can be passed as a dict, a JSON string, or a path.
"""

import json
import os

from . import _core
from ._core import (
    CapExceeded,
    DecompositionError,
    GlabError,
    Groupoid,
    IdealStructure,
    ParseError,
    default_seed,
    hermitian_eigen,
    operator_norm,
)

__all__ = [
    "CapExceeded",
    "DecompositionError",
    "GlabError",
    "Groupoid",
    "IdealStructure",
    "ParseError",
    "analyze",
    "default_seed",
    "dr",
    "graph",
    "groupoid",
    "hermitian_eigen",
    "load",
    "operator_norm",
    "random",
    "verify",
]


def _text(instance):
    if isinstance(instance, dict):
        return json.dumps(instance)
    if isinstance(instance, os.PathLike) or (isinstance(instance, str) and not instance.lstrip().startswith("{")):
        with open(instance, encoding="utf-8") as f:
            return f.read()
    return instance


def load(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def analyze(instance, **options):
    return json.loads(_core.analyze(_text(instance), **options))


def verify(instance, theorem="all", **options):
    return json.loads(_core.verify(_text(instance), theorem=theorem, **options))


def graph(instance, **options):
    return json.loads(_core.graph(_text(instance), **options))


def dr(instance, **options):
    return json.loads(_core.dr(_text(instance), **options))


def random(type, size, seed, loops=0):
    return json.loads(_core.random(type, size, seed, loops=loops))


def groupoid(instance):
    return Groupoid(_text(instance))
