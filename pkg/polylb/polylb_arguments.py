import argparse

from typing import Dict, Tuple

# Default grid bound for each verification suite.
SUITE_DEFAULTS: Dict[str, int] = {
    "formula_vs_oracle": 7,
    "monotonicity": 30,
    "tau_minimality": 60,
    "dichotomy": 60,
    "small_cases": 7,
    "existence": 200,
    "barnette_truncations": 6,
    "identities": 40,
    "properties": 6,
    "tightness": 7,
    "corpus_bounds": 6,
    "facet_census": 7,
}

# Inclusive (low, high) range accepted for --d-max by each suite.
SUITE_LIMITS: Dict[str, Tuple[int, int]] = {
    "formula_vs_oracle": (2, 7),
    "monotonicity": (4, 200),
    "tau_minimality": (4, 60),
    "dichotomy": (9, 60),
    "small_cases": (5, 7),
    "existence": (2, 200),
    "barnette_truncations": (2, 6),
    "identities": (2, 60),
    "properties": (2, 6),
    "tightness": (3, 7),
    "corpus_bounds": (3, 7),
    "facet_census": (2, 7),
}


class PolyLBArguments(argparse.Namespace):
    def __init__(self) -> None:
        super(PolyLBArguments, self).__init__()
        self.command = None
        self.spec = None
        # one of json, csv, md
        self.format = "md"
        # None writes to stdout
        self.out = None
        self.verbose = 0
        # compute the f-vector from the geometry as well as the formulas
        self.oracle = False
        # refuse oracle runs that would scan more d-subsets than this
        self.oracle_guard = 10 ** 7
        self.force_oracle = False
        self.suite = "all"
        # None means the per-suite default in SUITE_DEFAULTS
        self.d_max = None
        self.s_set = None
        self.which = None
        self.d_range = None
        # None means POLYLB_WORKERS, else 1
        self.workers = None
