"""Exact checks for partitions with even parts below odd parts.

Partitions are plain tuples of positive integers, largest part first.
"""

from ._eolab import (
    DomainError,
    EolabError,
    ParameterError,
    catalog,
    classify_eo,
    conjugate,
    crank_bijection,
    crank_distribution,
    crank_series,
    durfee_width,
    eo_table,
    eobar_series,
    eobar_table,
    eoc,
    gen_eo_star,
    gen_partitions,
    is_eo_star,
    lemma2,
    lemma3,
    phi,
    run_harness,
    verify,
)

__all__ = [
    "DomainError",
    "EolabError",
    "ParameterError",
    "catalog",
    "classify_eo",
    "conjugate",
    "crank_bijection",
    "crank_distribution",
    "crank_series",
    "durfee_width",
    "eo_table",
    "eobar_series",
    "eobar_table",
    "eoc",
    "gen_eo_star",
    "gen_partitions",
    "is_eo_star",
    "lemma2",
    "lemma3",
    "phi",
    "run_harness",
    "verify",
]
