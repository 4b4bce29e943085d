"""Finite-group engine: nilpotentizers, classification and the
non-nilpotent graph.

The heavy lifting lives in the C++ extension ``nilgraph._core``; this
wrapper parses the JSON reports into plain dictionaries.
"""

import json

from nilgraph._core import (
    Group,
    NilgraphError,
    analyze_text,
    builtin,
    claim_ids,
    default_corpus,
    export_dot,
    list_builtins,
    load_cayley,
    load_perms,
    run_suite_text,
)
from nilgraph import _core

__all__ = [
    "Group",
    "NilgraphError",
    "analyze",
    "analyze_text",
    "builtin",
    "claim_ids",
    "default_corpus",
    "export_dot",
    "list_builtins",
    "load_cayley",
    "load_perms",
    "run_suite",
    "run_suite_text",
]

__version__ = "0.1.0"


def analyze(group, threads=1, clique_budget=100_000_000, timings=False):
    """Analyze a group and return the report as a dictionary.

    Keys: group, series, sets, classification, full_graph, reduced_graph,
    plus timings_ms when ``timings`` is set.
    """
    return json.loads(
        _core.analyze_json(
            group, threads=threads, clique_budget=clique_budget, timings=timings
        )
    )


def run_suite(corpus=None, config=None, only=None, threads=1,
              clique_budget=100_000_000, timings=False):
    """Run the claim suite and return its ledger as a dictionary.

    ``corpus`` is a list of builtin names; together with ``config`` (a path
    to a corpus JSON file) it replaces the default corpus. ``only``
    restricts the run to the given claim ids.
    """
    return json.loads(
        _core.run_suite_json(
            corpus=corpus or [],
            config=config or "",
            only=only or [],
            threads=threads,
            clique_budget=clique_budget,
            timings=timings,
        )
    )
