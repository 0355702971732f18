"""Finitely presented groups: words, presentations, abelianization, cosets, Tietze moves."""

from .cosets import DEFAULT_MAX_COSETS, CosetTable, coset_enumerate
from .smith import AbelianInvariants, abelianization, relation_matrix, smith_normal_form
from .tables import MultiplicationTable, isomorphic_small_groups, multiplication_table
from .tietze import (
    CertificateTerm,
    ConsequenceCertificate,
    check_homomorphism,
    eliminate_generator,
    find_certificate,
    is_free_of_rank,
    remove_redundant_relators,
    remove_relator,
    simplify_by_elimination,
    verify_consequence,
)
from .words import FreeWord, Presentation, commutator, cyclic_key, cyclic_reduce, parse_word

__all__ = [
    "AbelianInvariants", "CertificateTerm", "ConsequenceCertificate", "CosetTable",
    "DEFAULT_MAX_COSETS", "FreeWord", "MultiplicationTable", "Presentation",
    "abelianization", "check_homomorphism", "commutator", "coset_enumerate", "cyclic_key",
    "cyclic_reduce", "eliminate_generator", "find_certificate", "is_free_of_rank",
    "isomorphic_small_groups", "multiplication_table", "parse_word", "relation_matrix",
    "remove_redundant_relators", "remove_relator", "simplify_by_elimination",
    "smith_normal_form", "verify_consequence",
]
