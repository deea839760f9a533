"""Determinisation of parity, Büchi and one-pair Rabin automata.

Nondeterministic automata with transition-based acceptance are turned into
deterministic Rabin automata (via root history trees or nested history
trees) and into deterministic min-even parity automata (via later
introduction records).  A lasso-word oracle, exhaustive enumerators and
HOA/DOT input and output support testing and inspection.
"""

from .core import (ACC_SINK, REJ_SINK, TOP, AutomatonError, CapacityError, DetParityAutomaton,
                   DetRabinAutomaton, LassoWord, OnePairRabinNPA, ParityNPA, acceptance_sets,
                   buchi_to_one_pair_rabin, det_run_on_lasso, one_pair_rabin_to_parity,
                   parity_to_one_pair_rabin)
from .hoa import HoaParseError, UnsupportedFeatureError, parse_hoa, print_hoa
from .lir import determinise_parity_to_dpa, is_spiked, lir_step, nht_of_lir, to_max_parity, validate_lir
from .nht import determinise_parity_to_rabin, initial_nht, nht_step, validate_nht
from .oracle import GenConfig, accepts_lasso, check_equivalence, npa_accepts_lasso, random_npa, random_one_pair_rabin
from .rht import determinise_one_pair_rabin, initial_rht, rht_step, validate_history_tree, validate_rht
from .trees import LabelledTree

__version__ = "0.1.0"
