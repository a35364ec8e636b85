"""Size and degree bounds shared by the library and the CLI."""

# Oracle degree bound D (intersection checks run at degrees 3..D)
DEFAULT_DEGREE_BOUND = 4
MIN_DEGREE_BOUND = 3
MAX_DEGREE_BOUND = 6

# Exhaustive searches
CANONICAL_BOUND = 10
GRAPH_ENUMERATION_BOUND = 7
POSET_ENUMERATION_BOUND = 6
TRIVIALLY_PERFECT_BOUND = 8
PERFECT_BOUND = 7
ORIENTATION_BOUND = 7
HEREDITY_BOUND = 6
TABLE_BOUND = 6
