"""Möbius function of the generalized subword order over P_s = {a_1..a_s < c},
generalized Chebyshev polynomials, and finite verification sweeps."""

from .chebyshev import (
    Polynomial,
    chebyshev_closed_form,
    chebyshev_recurrence,
    classical_chebyshev,
    coefficient,
    evaluate,
)
from .counting import (
    WordType,
    alternating_sum_M,
    chain_T_closed,
    count_M_bruteforce,
    count_M_iterated,
    count_M_recurrence,
    word_type,
)
from .interval import Interval, boolean_rank_check, build_interval
from .mobius import (
    MobiusCache,
    chain_counts,
    hall_matrix,
    mob,
    mob_pat,
    mobius_hall,
    mobius_matrix,
    mobius_recursive,
)
from .verify import VerificationReport, verify_all
from .words import (
    C,
    GroundPoset,
    NotComparable,
    Word,
    WordError,
    enumerate_embeddings,
    letter_leq,
    parse_word,
    rightmost_embedding,
    word_leq,
)

__version__ = "0.1.0"
