"""Automorphism groups and isomorphism testing with sequences of partitions."""
from .autgroup import AutGroupResult, automorphism_group, orbits, search_automorphisms
from .graph import Graph, apply_permutation, available_degree, is_automorphism
from .isotest import IsoOutcome, are_isomorphic
from .sequence import PartitionSequence, generate_sequence

__all__ = [
    "AutGroupResult",
    "Graph",
    "IsoOutcome",
    "PartitionSequence",
    "apply_permutation",
    "are_isomorphic",
    "automorphism_group",
    "available_degree",
    "generate_sequence",
    "is_automorphism",
    "orbits",
    "search_automorphisms",
]
