"""Portable seeded random streams.

All random matrices in this package come from SplitMix64, used as a
counter-based generator so that a given seed reproduces the same numbers
in any language that implements the same three steps:

1. ``state_i = seed + (i + 1) * 0x9E3779B97F4A7C15`` (mod 2**64)
2. ``z = (state_i ^ (state_i >> 30)) * 0xBF58476D1CE4E5B9``
   ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``
   ``z = z ^ (z >> 31)``                       (all mod 2**64)
3. ``u_i = (z >> 11) * 2**-53``, a double in [0, 1).

This is exactly the sequential SplitMix64 stream started from ``seed``.
Gaussians use Box-Muller on consecutive pairs ``(u_{2k}, u_{2k+1})``:
``r = sqrt(-2 ln(1 - u_{2k}))``, ``t = 2 pi u_{2k+1}``, giving
``r cos t`` and ``r sin t``.  A standard complex Gaussian is
``(r cos t + 1j r sin t) / sqrt(2)`` (unit total variance).
"""

import numpy as np

GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1


def _seed(seed):
    seed = int(seed)
    if seed < 0 or seed > _MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.uint64(seed)


def splitmix64(seed, count, offset=0):
    """Return ``count`` raw 64-bit outputs of the stream, starting at ``offset``."""
    counters = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = _seed(seed) + counters * GOLDEN_GAMMA
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def uniforms(seed, count, offset=0):
    """Doubles in [0, 1) with 53 random bits each."""
    bits = splitmix64(seed, count, offset) >> np.uint64(11)
    return bits.astype(np.float64) * 2.0**-53


def standard_normals(seed, count, offset=0):
    """``count`` independent N(0, 1) samples via Box-Muller."""
    pairs = (count + 1) // 2
    u = uniforms(seed, 2 * pairs, 2 * offset)
    radius = np.sqrt(-2.0 * np.log1p(-u[0::2]))
    angle = 2.0 * np.pi * u[1::2]
    out = np.empty(2 * pairs)
    out[0::2] = radius * np.cos(angle)
    out[1::2] = radius * np.sin(angle)
    return out[:count]


def complex_normals(seed, shape):
    """Array of standard complex Gaussians filled in row-major order."""
    size = int(np.prod(shape))
    z = standard_normals(seed, 2 * size)
    return ((z[0::2] + 1j * z[1::2]) / np.sqrt(2.0)).reshape(shape)


def derive_seed(seed, index):
    """Per-trial seed used by fuzz campaigns: ``seed XOR index``."""
    return (int(seed) ^ int(index)) & _MASK64


def random_permutation(seed, size):
    """Fisher-Yates shuffle of ``range(size)`` driven by the stream.

    Step ``i`` (for ``i = size-1 .. 1``) swaps position ``i`` with
    ``floor(u * (i + 1))`` where ``u`` is the next uniform.
    """
    perm = list(range(size))
    u = uniforms(seed, max(size - 1, 0))
    for step, i in enumerate(range(size - 1, 0, -1)):
        j = min(int(u[step] * (i + 1)), i)
        perm[i], perm[j] = perm[j], perm[i]
    return perm
