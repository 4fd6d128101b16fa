"""Manipulating elections by cloning candidates.

Voting rules, cloning mechanics, per-rule manipulation analyses, cost-aware
decisions and a brute-force oracle for checking all of them on small cases.
"""

from .cloning import (
    ONE,
    ZERO_PLUS,
    CloningVector,
    ExpandedElection,
    OrderingAssignment,
    SuccessMode,
    apply_cloning,
    check_success_exact,
    estimate_success_probability,
)
from .costs import CostFunction, UnitCost, ZeroCost, cost_of, decide_q_cloning
from .election import Election, condorcet_status, is_pareto_undominated, pairwise_matrix, random_election
from .errors import CloningError, ParseError, SearchSpaceTooLarge
from .formats import parse_costs, parse_election, parse_majority_spec, serialize_election
from .oracle import SearchCaps, brute_force_search, pnk_experiment
from .rules import (
    Borda,
    Copeland,
    KApproval,
    Maximin,
    Plurality,
    PluralityRunoff,
    Rule,
    Veto,
    scores,
    winners,
)
from .strategies import AnalysisReport, Verdict, analyze
from .tournament import (
    MajoritySpec,
    covers,
    k_cyclic_profile,
    majority_graph,
    mcgarvey_realize,
    uncovered_set,
)

__version__ = "0.1.0"
