"""Shortest and longest developments in the marked lambda calculus."""

from .essential import essential_set, is_essential
from .metrics import g, h, m, measure, n
from .oracle import DevStats, GenParams, dev_stats, essential_oracle, gen_term, label
from .reduction import Trace, contract, one_step_all, redex_positions, validate_trace
from .strategy import AlreadyNormal, G_step, H_step, longest_trace, shortest_trace
from .syntax import from_json, parse, print_term, to_json
from .term import (
    App,
    InvalidPath,
    Lam,
    Red,
    Step,
    Term,
    Var,
    alpha_eq,
    free_vars,
    is_nf,
    size,
    subst,
)

__version__ = "0.1.0"
