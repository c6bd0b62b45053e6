"""Graph-spectral analysis, counting and ranking for deterministic finite automata."""

from .automaton import (
    Dfa,
    NerodePartitionResult,
    VectorPair,
    adjacency,
    equivalent,
    is_trim,
    minimize,
    nerode_partition,
    parse_dfa,
    quotient_automaton,
    serialize_dfa,
    trim,
    vectors,
)
from .counting import (
    CountTable,
    LanguageIndex,
    compress,
    count_words,
    cumulative_count,
    decompress,
    rank_word,
    unrank_word,
)
from .exact_linalg import (
    IntMatrix,
    IntPolynomial,
    Matrix,
    Partition,
    RatMatrix,
    char_poly,
    characteristic_matrix,
    expansion,
    is_equitable,
    mat_mul,
    mat_pow,
    nullity,
    quotient_matrix,
    rank,
    spectrum_included,
)
from .rank_one import (
    ClosedFormCount,
    RankOneDecomposition,
    canonical_partition,
    closed_form_count,
    decompose,
    expanded_canonical_automaton,
    fast_power,
    in_vector,
    is_expanded_normal,
    out_vector,
)
from .regex import compile_regex
from .spectral import AnalysisReport, MinimalityCheck, analyze, language_rank, verify_minimality

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "ClosedFormCount",
    "CountTable",
    "Dfa",
    "IntMatrix",
    "IntPolynomial",
    "LanguageIndex",
    "Matrix",
    "MinimalityCheck",
    "NerodePartitionResult",
    "Partition",
    "RankOneDecomposition",
    "RatMatrix",
    "VectorPair",
    "adjacency",
    "analyze",
    "canonical_partition",
    "char_poly",
    "characteristic_matrix",
    "closed_form_count",
    "compile_regex",
    "compress",
    "count_words",
    "cumulative_count",
    "decompose",
    "decompress",
    "equivalent",
    "expanded_canonical_automaton",
    "expansion",
    "fast_power",
    "in_vector",
    "is_equitable",
    "is_expanded_normal",
    "is_trim",
    "language_rank",
    "mat_mul",
    "mat_pow",
    "minimize",
    "nerode_partition",
    "nullity",
    "out_vector",
    "parse_dfa",
    "quotient_automaton",
    "quotient_matrix",
    "rank",
    "rank_word",
    "serialize_dfa",
    "spectrum_included",
    "trim",
    "unrank_word",
    "vectors",
    "verify_minimality",
]
