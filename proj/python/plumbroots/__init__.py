"""Graded roots, weighted roots and q-series of plumbed 3-manifolds.

Graphs are passed as dicts in the ``plumb-roots/1`` JSON layout, as JSON
text, or as a path to a JSON file.  Results are returned as dicts; exact
rationals appear as ``"p/q"`` strings.
"""

import json
import os

from . import _plumbroots as _m
from ._plumbroots import PlumbError, SchemaError, SCHEMA

__all__ = [
    "PlumbError",
    "SchemaError",
    "SCHEMA",
    "load_graph",
    "spinc",
    "graded_root",
    "bigraded_root",
    "weighted_root",
    "zhat",
    "neumann",
    "verify",
    "surgery",
    "check_axioms",
    "what",
    "set_threads",
]


def _text(graph):
    if isinstance(graph, dict):
        return json.dumps(graph)
    if isinstance(graph, (str, os.PathLike)) and os.path.exists(graph):
        with open(graph, encoding="utf-8") as f:
            return f.read()
    return str(graph)


def _call(fn, graph, *args, **kwargs):
    return json.loads(fn(_text(graph), *args, **kwargs))


def load_graph(graph):
    """Validate a graph and return it in normalized form (marked vertex first)."""
    return json.loads(_m.normalize_graph(_text(graph)))


def spinc(graph):
    return _call(_m.spinc, graph)


def graded_root(graph, index=0, rep=None, depth=3):
    return _call(_m.graded_root, graph, index, rep, depth)


def bigraded_root(graph, index=0, rep=None, depth=3):
    return _call(_m.bigraded_root, graph, index, rep, depth)


def weighted_root(graph, index=0, rep=None, eps=1, depth=3, family="what", specialize=""):
    return _call(_m.weighted_root, graph, index, rep, eps, depth, family, specialize)


def zhat(graph, index=0, rep=None, eps=1, q_max="10", family="what"):
    return _call(_m.zhat, graph, index, rep, eps, str(q_max), family)


def neumann(graph, move, index=0, rep=None):
    return _call(_m.neumann, graph, move, index, rep)


def verify(graph, seed=7, moves=4, cases=6, depth=3, family="what"):
    return _call(_m.verify, graph, seed, moves, cases, depth, family)


def surgery(graph, m0, index=0, rep=None, eps=1, depth=3, family="what", specialize=""):
    return _call(_m.surgery, graph, m0, index, rep, eps, depth, family, specialize)


def check_axioms(max_n=8, max_i=20, family="what"):
    return json.loads(_m.check_axioms(max_n, max_i, family))


def what(n, i):
    """W_n(i) of the principal-value family as a "p/q" string."""
    return _m.what(n, i)


def set_threads(n):
    _m.set_threads(n)
