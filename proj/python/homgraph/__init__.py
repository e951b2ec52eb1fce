"""Homomorphism graphs of submodule lattices over small finite rings."""

import json

from ._homgraph import (
    Analysis,
    CapExceeded,
    Graph,
    HomgraphError,
    InternalInconsistency,
    InvalidInput,
    Limits,
    LocalityRequired,
    Module,
    NonConvergence,
    SearchBudgetExceeded,
    analyze,
    are_isomorphic,
    hom,
    hom_oracle,
    module_isomorphism,
    spectrum,
    verify_json,
    zoo,
)


def verify(ring, p=2, k=1, bound=3, suite="all"):
    """Claim verdicts over one zoo, as a list of dicts."""
    return json.loads(verify_json(ring, p=p, k=k, bound=bound, suite=suite))


__all__ = [
    "Analysis",
    "CapExceeded",
    "Graph",
    "HomgraphError",
    "InternalInconsistency",
    "InvalidInput",
    "Limits",
    "LocalityRequired",
    "Module",
    "NonConvergence",
    "SearchBudgetExceeded",
    "analyze",
    "are_isomorphic",
    "hom",
    "hom_oracle",
    "module_isomorphism",
    "spectrum",
    "verify",
    "verify_json",
    "zoo",
]
