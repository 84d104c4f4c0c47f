"""Patience sorting combinatorics: pile configurations, shadow diagrams,
the extended bijection onto stable pile pairs, interchange equivalence,
generalized and barred pattern avoidance, and exhaustive verification of
the identities tying them together.

The library works with plain tuples; the HTTP service lives in
patience_sorting.service and the command line front end in
patience_sorting.cli.
"""

from .core import (
    Permutation,
    Pile,
    PileConfig,
    Shape,
    format_permutation,
    inverse,
    parse_permutation,
    pile_config_from_json,
    pile_config_to_json,
    shape_of,
    validate_permutation,
    validate_pile_config,
)
from .enumeration import (
    CountReport,
    all_pile_configs,
    bell,
    count_avoiders,
    count_involution_configs,
    count_involutions,
    count_stable_pairs,
    image_of_avoiders_312,
    iter_stable_pairs,
    min_piles_bruteforce,
    non_crossing_configs,
)
from .errors import DomainError, GuardError, ParseError, PatienceError
from .extended import (
    extended_patience_sort,
    invert_extended,
    is_stable_pair,
    pair_from_json,
    pair_to_json,
    reflect,
    rpw_of_reflected,
    two_line_permutation,
)
from .patience import (
    lis_length,
    lr_minima_decomposition,
    patience_sort,
    piles_from_set_partition,
    reverse_patience_word,
)
from .patterns import (
    GeneralizedPattern,
    avoids,
    format_pattern,
    normal_form,
    occurrences,
    parse_pattern,
    ps_class,
    ps_interchange_neighbors,
    reduced_pattern,
)
from .shadow import (
    corner_abscissae,
    corner_ordinates,
    diagram_to_json,
    shadow_diagram,
    shadowline_of,
)
from .verify import CheckResult, check_labels, run_checks

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CountReport",
    "DomainError",
    "GeneralizedPattern",
    "GuardError",
    "ParseError",
    "PatienceError",
    "Permutation",
    "Pile",
    "PileConfig",
    "Shape",
    "all_pile_configs",
    "avoids",
    "bell",
    "check_labels",
    "corner_abscissae",
    "corner_ordinates",
    "count_avoiders",
    "count_involution_configs",
    "count_involutions",
    "count_stable_pairs",
    "diagram_to_json",
    "extended_patience_sort",
    "format_pattern",
    "format_permutation",
    "image_of_avoiders_312",
    "inverse",
    "invert_extended",
    "is_stable_pair",
    "iter_stable_pairs",
    "lis_length",
    "lr_minima_decomposition",
    "min_piles_bruteforce",
    "non_crossing_configs",
    "normal_form",
    "occurrences",
    "pair_from_json",
    "pair_to_json",
    "parse_pattern",
    "parse_permutation",
    "patience_sort",
    "pile_config_from_json",
    "pile_config_to_json",
    "piles_from_set_partition",
    "ps_class",
    "ps_interchange_neighbors",
    "reduced_pattern",
    "reflect",
    "reverse_patience_word",
    "rpw_of_reflected",
    "run_checks",
    "shadow_diagram",
    "shadowline_of",
    "shape_of",
    "two_line_permutation",
    "validate_permutation",
    "validate_pile_config",
]
