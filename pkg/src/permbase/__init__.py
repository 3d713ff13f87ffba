"""Base sizes of finite permutation groups, in exact arithmetic.

Three independent methods: exhaustive minimal-base search, the least power
l with <phi, chi^l> nonzero for a base-controlling homomorphism phi, and
1 plus the distance from 1_H to the restriction of phi in the
common-constituent graph on Irr(H).
"""

from .actions import (BaseWitness, GroupAction, KSubsetRangeError,
                      UnfaithfulActionError, alternating_action,
                      alternating_group, cyclic_action, dihedral_action,
                      ksubset_action, min_base_search, natural_action,
                      pgl2_action, search_base, symmetric_action,
                      symmetric_group)
from .basesize import (BaseSizeReport, base_size_all, base_size_char_formula,
                       base_size_kuelshammer, find_base_controlling, graph_for,
                       is_base_controlling)
from .chartable import (CharacterTable, TableVerificationError,
                        character_table, constituent_multiplicity)
from .classfun import (ClassFunction, class_function_from_json,
                       class_function_to_json, induce, inner_product,
                       permutation_character, pm1_characters, restrict,
                       sign_character, trivial_character)
from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi
from .kgraph import (DisconnectedGraphError, KulshammerGraph,
                     PathPropertyResult, build_graph, check_path_property)
from .perm import (DEFAULT_CAP, ConjugacyClasses, EnumerationCapError,
                   Permutation, PermutationGroup, Subgroup, compose,
                   load_group_file)

__version__ = "0.1.0"

__all__ = [
    "BaseSizeReport", "BaseWitness", "CharacterTable", "ClassFunction",
    "ConjugacyClasses", "Cyclotomic", "DEFAULT_CAP", "DisconnectedGraphError",
    "EnumerationCapError", "GroupAction", "KSubsetRangeError",
    "KulshammerGraph", "PathPropertyResult", "Permutation",
    "PermutationGroup", "Subgroup", "TableVerificationError",
    "UnfaithfulActionError", "alternating_action", "alternating_group",
    "base_size_all", "base_size_char_formula", "base_size_kuelshammer",
    "build_graph", "character_table", "check_path_property",
    "class_function_from_json", "class_function_to_json", "compose",
    "constituent_multiplicity", "cyclic_action", "cyclotomic_polynomial",
    "dihedral_action", "euler_phi", "find_base_controlling", "graph_for",
    "induce", "inner_product", "is_base_controlling", "ksubset_action",
    "load_group_file", "min_base_search", "natural_action",
    "permutation_character", "pgl2_action", "pm1_characters", "restrict",
    "search_base", "sign_character", "symmetric_action", "symmetric_group",
    "trivial_character",
]
