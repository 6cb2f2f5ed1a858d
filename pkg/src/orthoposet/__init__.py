"""Finite posets, their orthosets, and the logics those orthosets generate.

The package decides, for any finite poset: whether it is N-free or weak-N
free, whether its incomparability orthoset is Dacey or compatible, and
whether the lattice of orthoclosed sets is orthomodular or Boolean.  The
census machinery re-verifies the claimed equivalences between these
properties exhaustively over all small posets and on randomized samples.
N-free, Dacey, orthomodular and the chain-antichain property do form one
provably equivalent cluster; compatible and Boolean form another; the
absence of weak Ns is implied by the second cluster but, contrary to a
natural conjecture, does not imply it (see catalog.weak_nfree_incompatible).
"""

from .bitset import bits, format_subset, mask_of, maximal_cliques, subset_labels
from .bridges import (incomparability_orthoset, strict_comparability_orthoset,
                      ud_decomposition)
from .catalog import (antichain, chain, diamond22, n_poset,
                      nfree_strict_non_dacey, path_orthoset,
                      weak_nfree_incompatible)
from .census import (CensusSummary, TheoremReport, census_run,
                     enumerate_labeled_posets, random_orthoset, random_poset,
                     search_counterexample, verify_theorems)
from .errors import (CycleError, NotOrthoclosedError, OrthoposetError,
                     PosetSyntaxError, SizeLimitError, UnknownElementError)
from .ioformats import (emit_dot_hasse, emit_dot_lattice, parse_poset_file,
                        serialize_poset_file)
from .logic import (AxiomReport, Logic, build_logic, is_boolean,
                    is_orthomodular, verify_ortholattice)
from .npatterns import (NWitness, chain_antichain_property, find_covering_n,
                        find_n, find_weak_n, is_n_free)
from .orthoset import (Orthoset, bases, dacey_subset_checks, double_perp,
                       enumerate_orthoclosed, is_compatible, is_dacey,
                       is_dacey_subset, is_orthoclosed,
                       orthocomplement_pair_check, orthoset_from_pairs, perp,
                       validate_orthoset)
from .poset import (Poset, covers, dual, from_up_rows, incomparable, leq, lt,
                    maximal_antichains, maximal_chains, poset_from_covers,
                    validate_poset)
from .report import Report, build_report, emit_json_report

__all__ = [
    "AxiomReport", "CensusSummary", "CycleError", "Logic",
    "NotOrthoclosedError", "NWitness", "Orthoset", "OrthoposetError",
    "Poset", "PosetSyntaxError", "Report", "SizeLimitError",
    "TheoremReport", "UnknownElementError",
    "antichain", "bases", "bits", "build_logic", "build_report",
    "census_run", "chain", "chain_antichain_property", "covers",
    "dacey_subset_checks", "diamond22", "double_perp", "dual",
    "emit_dot_hasse", "emit_dot_lattice", "emit_json_report",
    "enumerate_labeled_posets", "enumerate_orthoclosed", "find_covering_n",
    "find_n", "find_weak_n", "format_subset", "from_up_rows",
    "incomparability_orthoset", "incomparable", "is_boolean",
    "is_compatible", "is_dacey", "is_dacey_subset", "is_n_free",
    "is_orthoclosed", "is_orthomodular", "leq", "lt", "mask_of",
    "maximal_antichains", "maximal_chains", "maximal_cliques", "n_poset",
    "nfree_strict_non_dacey", "orthocomplement_pair_check",
    "orthoset_from_pairs", "parse_poset_file", "path_orthoset", "perp",
    "poset_from_covers", "random_orthoset", "random_poset",
    "search_counterexample", "serialize_poset_file",
    "strict_comparability_orthoset", "subset_labels", "ud_decomposition",
    "validate_orthoset", "validate_poset", "verify_ortholattice",
    "verify_theorems", "weak_nfree_incompatible",
]
