"""Identifying codes on graphs.

A toolkit for working with identifying codes and locating-dominating sets:
verification with concrete counterexample witnesses, exact and greedy
minimum-code search, a brute-force set-splitting solver, and a combiner
that packs many set-splitting instances into a single graph whose codes
of bounded size certify a positive instance.
"""

from idcodes.graph import (
    GraphFormatError,
    LabeledGraph,
    build_graph,
    closed_neighborhood,
    closed_twins,
    emit_graph,
    parse_graph,
)
from idcodes.codes import (
    ConflictPair,
    UndominatedVertex,
    Verdict,
    is_identifying_code,
    is_locating_dominating,
    signature,
)
from idcodes.solvers import (
    Bipartition,
    SolverTimeout,
    SplitInstance,
    greedy_identifying_code,
    ic_decision,
    is_splitting,
    min_identifying_code,
    solve_set_splitting,
)
from idcodes.gadgets import (
    GadgetTemplate,
    bit_gadget_template,
    element_gadget_template,
    hub_gadget_template,
    pendant_pair_template,
    verify_canonical,
    verify_forcing,
)
from idcodes.composition import (
    CompositionArtifact,
    ContractViolation,
    InstanceBundle,
    augment_family,
    budget,
    compose,
    extract_certificate,
    pad_instances,
    vertex_cover_witness,
    witness_code,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CompositionArtifact",
    "ConflictPair",
    "ContractViolation",
    "GadgetTemplate",
    "GraphFormatError",
    "InstanceBundle",
    "LabeledGraph",
    "SolverTimeout",
    "SplitInstance",
    "UndominatedVertex",
    "Verdict",
    "augment_family",
    "bit_gadget_template",
    "budget",
    "build_graph",
    "closed_neighborhood",
    "closed_twins",
    "compose",
    "element_gadget_template",
    "emit_graph",
    "extract_certificate",
    "greedy_identifying_code",
    "hub_gadget_template",
    "ic_decision",
    "is_identifying_code",
    "is_locating_dominating",
    "is_splitting",
    "min_identifying_code",
    "pad_instances",
    "parse_graph",
    "pendant_pair_template",
    "signature",
    "solve_set_splitting",
    "verify_canonical",
    "verify_forcing",
    "vertex_cover_witness",
    "witness_code",
]
