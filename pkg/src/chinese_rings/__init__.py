"""Conjugate-counting norms on free groups and the Chinese Rings bound."""

from .connection import (
    INFINITY,
    Connection,
    ConnectionCapExceeded,
    NormResult,
    connection_norm,
    enumerate_connections,
    min_norm,
    subset_oracle,
    validate_connection,
)
from .norm import (
    ElementaryOp,
    MetricResult,
    apply_op,
    bounded_insert_probe,
    check_norm_axioms,
    metric,
    block_exponent_distance,
    relator_norm,
    verify_witness,
    witness_ops,
)
from .rings import (
    RingsReport,
    arc_word,
    check_arc_word,
    complexity,
    substitute_conjugate,
    untangle_witness,
)
from .words import (
    EMPTY,
    Letter,
    Word,
    WordSyntaxError,
    concat,
    count_letters,
    erase_generator,
    exponent_sum,
    format_word,
    free_reduce,
    invert,
    is_reduced,
    parse,
)

__version__ = "0.1.0"
