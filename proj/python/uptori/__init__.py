"""Universal partial words, cycles, families, matrices and tori."""

import json

from . import _uptori
from ._uptori import UptoriError, debruijn, fixture_names, fixture_text, lift, torus_from_upcycle

__all__ = [
    "UptoriError",
    "debruijn",
    "fixture_names",
    "fixture_text",
    "lift",
    "search",
    "torus_from_upcycle",
    "verify_family",
    "verify_grid",
    "verify_upcycle",
    "verify_upword",
]


def verify_upcycle(word, n, alphabet=0):
    return json.loads(_uptori.verify_upcycle(word, n, alphabet))


def verify_upword(word, n, alphabet=0):
    return json.loads(_uptori.verify_upword(word, n, alphabet))


def verify_grid(grid_text, window):
    return json.loads(_uptori.verify_grid(grid_text, window))


def verify_family(family_text, x=0):
    return json.loads(_uptori.verify_family(family_text, x))


def search(alphabet, window, dims, mode="matrix", dedup=True, nontrivial=False, capacity_pruning=False):
    return json.loads(_uptori.search(alphabet, window, dims, mode, dedup, nontrivial, capacity_pruning))
