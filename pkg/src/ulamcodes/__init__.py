"""Permutation codes in the Ulam metric that correct symbol-invariant deletions."""

from ulamcodes.perm import (
    ExtendedPermutation,
    GeneralizedTransposition,
    Permutation,
    Translocation,
    Transposition,
    apply_generalized_transposition,
    apply_translocation,
    apply_transposition,
    inverse,
)
from ulamcodes.metrics import (
    hamming_distance,
    kendall_tau_distance,
    lcs_length,
    levenshtein_distance,
    ulam_distance,
)
from ulamcodes.mapping import ErasedWord, build_erased_word, f_inverse, f_map, is_in_image
from ulamcodes.basecode import (
    AmbiguousDecode,
    Codebook,
    DecodeError,
    DecodeFailure,
    FieldParams,
    build_class,
    build_greedy,
    decode_hamming,
    smallest_prime_geq,
    syndrome,
    verify_min_distance,
)
from ulamcodes.deletion import (
    DeletionCode,
    confusable,
    construct_code,
    decode,
    encode,
    verify_deletion_code,
)

__version__ = "0.1.0"
