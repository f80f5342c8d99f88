"""
Deterministic random substreams.

Every random draw in the package comes from a numpy Generator seeded by a
SeedSequence whose spawn key names where it is used, e.g.
(sweep, replicate, method) for the harness and one extra entry per
permutation. Serial and parallel runs therefore draw identical numbers.
"""

from typing import Union

import numpy as np

SeedLike = Union[None, int, np.random.SeedSequence]


def as_seed_sequence(seed: SeedLike) -> np.random.SeedSequence:
    """Coerce an int, None or SeedSequence to a SeedSequence."""
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def child(seed: SeedLike, *key: int) -> np.random.SeedSequence:
    """SeedSequence extended by an explicit spawn key."""
    parent = as_seed_sequence(seed)
    return np.random.SeedSequence(
        entropy=parent.entropy,
        spawn_key=tuple(parent.spawn_key) + tuple(int(k) for k in key),
        pool_size=parent.pool_size,
    )


def generator(seed: SeedLike, *key: int) -> np.random.Generator:
    """Generator for the substream at `key`."""
    return np.random.Generator(np.random.PCG64(child(seed, *key)))
