"""Exact path-cover invariants, maximal t-path traceable graphs and their families."""

from .campaigns import Bounds, CampaignReport, Counterexample, run_campaign
from .canon import canonical_form, canonical_graph
from .enumeration import CatalogEntry, build_catalog, enumerate_graphs, enumerate_up_to
from .errors import (
    ArgumentError,
    ConsistencyError,
    DomainError,
    ParameterError,
    ParseError,
    PathCoverError,
    SizeError,
)
from .families import (
    GeneralizedWhirligigSpec,
    WhirligigSpec,
    generalized_whirligig,
    named,
    skupien,
    whirligig,
    zelinka_type1,
)
from .graph import (
    Graph,
    VertexSet,
    add_edge,
    complement,
    complete_graph,
    disjoint_union,
    empty_graph,
    from_graph6,
    join,
    to_dot,
    to_graph6,
    universal_vertices,
)
from .invariants import (
    InvariantReport,
    PathCover,
    brute_mu,
    i_h,
    is_hamiltonian,
    mu,
    mu_check,
    mu_check_direct,
    report,
    terminal_feasible,
    terminal_pair_feasible,
)
from .maximality import Classification, Decomposition, classify, compose, decompose, predicted_mu_check

__all__ = [
    "add_edge",
    "ArgumentError",
    "Bounds",
    "brute_mu",
    "build_catalog",
    "CampaignReport",
    "canonical_form",
    "canonical_graph",
    "CatalogEntry",
    "Classification",
    "classify",
    "complement",
    "complete_graph",
    "compose",
    "ConsistencyError",
    "Counterexample",
    "decompose",
    "Decomposition",
    "disjoint_union",
    "DomainError",
    "empty_graph",
    "enumerate_graphs",
    "enumerate_up_to",
    "from_graph6",
    "generalized_whirligig",
    "GeneralizedWhirligigSpec",
    "Graph",
    "i_h",
    "InvariantReport",
    "is_hamiltonian",
    "join",
    "mu",
    "mu_check",
    "mu_check_direct",
    "named",
    "ParameterError",
    "ParseError",
    "PathCover",
    "PathCoverError",
    "predicted_mu_check",
    "report",
    "run_campaign",
    "SizeError",
    "skupien",
    "terminal_feasible",
    "terminal_pair_feasible",
    "to_dot",
    "to_graph6",
    "universal_vertices",
    "VertexSet",
    "whirligig",
    "WhirligigSpec",
    "zelinka_type1",
]
