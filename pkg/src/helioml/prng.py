"""Deterministic counter-based random numbers.

Every stochastic choice in this package (synthetic weather noise, bootstrap
resampling, shuffles, network initialization, the tuner's candidate streams)
is a pure function of an integer key tuple fed to the hash below. There is
no hidden generator state, so identical inputs reproduce identical runs bit
for bit, and any other implementation can match the byte stream.

Normative recurrence, all arithmetic modulo 2**64 (two's complement for
negative keys):

    mix64(z):
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        return z ^ (z >> 31)

    hash64(k_1, ..., k_m):
        h = 0
        for k in (k_1, ..., k_m):
            h = mix64((h ^ k) + 0x9E3779B97F4A7C15)
        return h

    uniform(keys...) = (hash64(keys...) >> 11) * 2.0**-53          # [0, 1)

    normal(keys...):                                               # Box-Muller
        u1 = ((hash64(keys..., 0) >> 11) + 1) * 2.0**-53           # (0, 1]
        u2 = (hash64(keys..., 1) >> 11) * 2.0**-53
        return sqrt(-2 ln u1) * cos(2 pi u2)

    permutation(n, keys...) = stable argsort of
        [hash64(keys..., i) for i in 0..n-1]

mix64 is the splitmix64 finalizer; hash64 chains it over the key tuple.
Each call site prepends a stream tag (the STREAM_* constants) so no two
subsystems ever consume the same counter.
"""

from __future__ import annotations

import math

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# Stream tags. One per subsystem so counters never collide.
STREAM_SYNTH = 1          # synthetic weather generator noise
STREAM_SPLIT = 2          # train/test shuffling
STREAM_FOLDS = 3          # cross-validation fold shuffling
STREAM_BOOTSTRAP = 4      # forest bootstrap resampling
STREAM_FEATURE_SUB = 5    # per-node feature subsampling
STREAM_MLP_INIT = 6       # network weight initialization
STREAM_MLP_SHUFFLE = 7    # per-epoch batch shuffling
STREAM_QMC = 8            # low-discrepancy candidate shifts
STREAM_GP_SEARCH = 9      # GP hyperparameter search restarts
STREAM_PERTURB = 10       # suggest() local perturbations
STREAM_TUNE = 11          # per-trial seeds inside tune()
STREAM_CURVE = 12         # learning-curve per-cell trainer seeds


def mix64(z: int) -> int:
    """splitmix64 finalizer on one 64-bit word."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def hash64(*keys: int) -> int:
    """Chain mix64 over a key tuple; the root of every random stream."""
    h = 0
    for k in keys:
        h = mix64(((h ^ (k & _MASK)) + _GOLDEN) & _MASK)
    return h


def uniform(*keys: int) -> float:
    """One uniform draw in [0, 1) for the key tuple."""
    return (hash64(*keys) >> 11) * 2.0**-53


def normal(*keys: int) -> float:
    """One standard-normal draw (Box-Muller, cosine branch) for the key tuple."""
    u1 = ((hash64(*keys, 0) >> 11) + 1) * 2.0**-53
    u2 = (hash64(*keys, 1) >> 11) * 2.0**-53
    return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)


def _mix64_vec(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def hash64_vec(*keys) -> np.ndarray:
    """Vectorized hash64; keys may be ints or broadcastable integer arrays."""
    h = np.uint64(0)
    for k in keys:
        if isinstance(k, np.ndarray):
            k = k.astype(np.uint64)
        else:
            k = np.uint64(k & _MASK)
        h = _mix64_vec((h ^ k) + np.uint64(_GOLDEN))
    if not isinstance(h, np.ndarray):
        h = np.asarray(h)
    return h


def uniform_vec(*keys) -> np.ndarray:
    return (hash64_vec(*keys) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def normal_vec(*keys) -> np.ndarray:
    u1 = ((hash64_vec(*keys, 0) >> np.uint64(11)) + np.uint64(1)).astype(np.float64) * 2.0**-53
    u2 = (hash64_vec(*keys, 1) >> np.uint64(11)).astype(np.float64) * 2.0**-53
    return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)


def permutation(n: int, *keys: int) -> np.ndarray:
    """Deterministic permutation of range(n): stable argsort of per-index hashes."""
    words = hash64_vec(*keys, np.arange(n, dtype=np.uint64))
    return np.argsort(words, kind="stable").astype(np.int64)


def integers(n: int, bound: int, *keys: int) -> np.ndarray:
    """n draws in [0, bound) as hash64(keys..., i) mod bound."""
    words = hash64_vec(*keys, np.arange(n, dtype=np.uint64))
    return (words % np.uint64(bound)).astype(np.int64)


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


def _radical_inverse(base: int, indices: np.ndarray) -> np.ndarray:
    out = np.zeros(indices.shape, dtype=np.float64)
    denom = 1.0
    idx = indices.copy()
    while idx.any():
        denom *= base
        out += (idx % base) / denom
        idx //= base
    return out


def halton_unit(count: int, dims: int, *keys: int) -> np.ndarray:
    """count x dims low-discrepancy points in [0, 1).

    Halton sequence (index starting at 1, prime bases per dimension) under a
    Cranley-Patterson rotation whose per-dimension shift is uniform(keys..., dim).
    """
    if dims > len(_PRIMES):
        raise ValueError(f"at most {len(_PRIMES)} dimensions supported")
    idx = np.arange(1, count + 1, dtype=np.int64)
    pts = np.empty((count, dims), dtype=np.float64)
    for d in range(dims):
        shift = uniform(*keys, d)
        pts[:, d] = (_radical_inverse(_PRIMES[d], idx) + shift) % 1.0
    return pts
