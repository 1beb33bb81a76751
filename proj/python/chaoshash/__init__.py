# Copyright (c) 2026 The chaoshash authors
# SPDX-License-Identifier: Apache-2.0
"""Keyed hashing by asynchronous Boolean iterations.

The heavy lifting lives in the compiled extension; this package re-exports
its surface: the hash itself, the post-treatment of existing digests, the
bijectivity oracle and the statistical evaluation battery.
"""

from chaoshash._core import (
    ChaosHashError,
    DiffusionReport,
    SacReport,
    chaos_hash,
    chaos_hash_bits,
    check_bijective_iteration,
    diffusion_test,
    encode_ascii7,
    hamming,
    invert_post_treat,
    normalize,
    post_treat,
    post_treat_digest,
    repartition,
    sac_test,
    strategy_distance,
    strategy_indices,
    __version__,
)

__all__ = [
    "ChaosHashError",
    "DiffusionReport",
    "SacReport",
    "chaos_hash",
    "chaos_hash_bits",
    "check_bijective_iteration",
    "diffusion_test",
    "encode_ascii7",
    "hamming",
    "invert_post_treat",
    "normalize",
    "post_treat",
    "post_treat_digest",
    "repartition",
    "sac_test",
    "strategy_distance",
    "strategy_indices",
    "__version__",
]
