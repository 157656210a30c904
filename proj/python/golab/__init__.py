"""Exact workbench for geodesic orbit metrics on compact homogeneous spaces.

Thin wrapper over the compiled extension: every operation returns plain
dicts parsed from the core's canonical JSON reports.
"""

import json

try:
    from golab._golab import (  # installed wheel layout
        GolabError,
        InvalidRank,
        InvariantViolation,
        ParseError,
        flag_describe_json,
        lemmas_verify_json,
        rootsys_show_json,
        space_check_json,
        space_decompose_json,
    )
except ImportError:  # in-tree build: extension on sys.path directly
    from _golab import (
        GolabError,
        InvalidRank,
        InvariantViolation,
        ParseError,
        flag_describe_json,
        lemmas_verify_json,
        rootsys_show_json,
        space_check_json,
        space_decompose_json,
    )

__version__ = "0.1.0"

__all__ = [
    "GolabError",
    "InvalidRank",
    "InvariantViolation",
    "ParseError",
    "root_system",
    "flag_describe",
    "space_decompose",
    "space_check",
    "lemmas_verify",
]


def root_system(type, rank):
    """Root system data: simple roots, positive roots, Cartan matrix."""
    return json.loads(rootsys_show_json(type, rank))


def flag_describe(type, rank, painted):
    """Painted-diagram partition and isotropy split; painted nodes are 1-based."""
    return json.loads(flag_describe_json(type, rank, list(painted)))


def space_decompose(config_text, format="auto"):
    """Tangent decomposition of a configured space (TOML or JSON text)."""
    return json.loads(space_decompose_json(config_text, format))


def space_check(config_text, which, format="auto", samples=200, seed=1):
    """Decide a metric property; returns (holds, report).

    which is one of "go", "natred", "normal", "necform".
    """
    holds, report = space_check_json(config_text, which, format, samples, seed)
    return holds, json.loads(report)


def lemmas_verify(rank_max=5):
    """Brute-force lemma sweeps up to the rank bound."""
    return json.loads(lemmas_verify_json(rank_max))
