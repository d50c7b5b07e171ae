"""Combinatorial certificates from signed Heegaard diagram data.

Decides whether a diagram is strong, checks the sign-matrix criteria for
non-left-orderability of the presented group, and recognises S^3 among
strong diagrams of integer homology spheres.
"""

from heegaard_cert.errors import InputError, ResourceLimitError
from heegaard_cert.signs import Sign, SignMatrix, classify_formal_det, perm_sign, sign_mul, sign_product
from heegaard_cert.presentation import Letter, Presentation, epsilon_matrix, word_is_trivial_free_reduction
from heegaard_cert.orderability import (
    Outcome,
    OrderabilityVerdict,
    check_lemma_matrix,
    check_notlo_bruteforce,
    find_cycle_witness,
    notlo_column_condition,
    scale_rows,
    verify_cycle_contradiction,
)
from heegaard_cert.heegaard import (
    Generator,
    HeegaardDiagram,
    IntersectionPoint,
    StrongReport,
    algebraic_matrix,
    count_matrix,
    euler_characteristic,
    flip_alpha_orientation,
    gen_lens,
    generators,
    h1_order,
    is_strong,
    presentation_of,
)
from heegaard_cert.matchings import (
    MatchGraph,
    S3Outcome,
    S3Verdict,
    enumerate_matchings,
    graph_of,
    prune_leaf,
    recognize_s3,
    second_matching,
    unique_matching,
)

__version__ = "0.1.0"
