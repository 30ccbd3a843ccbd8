"""Counter-based random streams.

Every uniform variate used by a simulation is a pure function of
``(seed, group, iteration)``, so results do not depend on how iterations
are split into shards or spread over workers.

The variate for group ``g`` at iteration ``t`` is the 64-bit word ``t % 4``
of Philox4x64 block ``t // 4 + 1``, keyed with ``seed + 2**64 * g``, turned
into a double in [0, 1) by numpy's 53-bit conversion.
"""

import numpy as np

#: 64-bit words produced per Philox4x64 counter increment.
WORDS_PER_BLOCK = 4


def stream_key(seed, group_index):
    """The 128-bit Philox key of one group's stream."""
    return int(seed) + (int(group_index) << 64)


def uniforms(seed, group_index, start, stop):
    """Uniform variates of iterations ``[start, stop)`` for one group."""
    block, offset = divmod(start, WORDS_PER_BLOCK)
    generator = np.random.Generator(
        np.random.Philox(key=stream_key(seed, group_index), counter=block)
    )
    return generator.random(offset + stop - start)[offset:]


def uniform_matrix(seed, n_groups, start, stop):
    """Uniform variates shaped ``(stop - start, n_groups)``."""
    columns = [uniforms(seed, g, start, stop) for g in range(n_groups)]
    return np.column_stack(columns)
