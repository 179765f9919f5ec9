"""Seeded, partitioned random streams.

Stream-splitting rule: ``SeedSequence(seed).spawn(partitions)`` gives one
child per partition; partition ``i`` draws ``n // partitions`` values, plus
one extra for ``i < n % partitions``. Results are concatenated in partition
order, so output depends only on ``(n, seed, partitions)`` and never on the
number of worker threads.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np


def partition_sizes(n, partitions):
    base, extra = divmod(int(n), int(partitions))
    return [base + (1 if i < extra else 0) for i in range(partitions)]


def draw(sampler, n, seed, partitions=1, workers=1):
    """Draw ``n`` values from ``sampler(rng, size)`` under the rule above."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if partitions < 1:
        raise ValueError("partitions must be >= 1")
    children = np.random.SeedSequence(seed).spawn(partitions)
    jobs = [
        (np.random.default_rng(child), size)
        for child, size in zip(children, partition_sizes(n, partitions))
    ]
    if workers > 1 and partitions > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: sampler(*job), jobs))
    else:
        parts = [sampler(rng, size) for rng, size in jobs]
    return np.concatenate([np.asarray(p, dtype=float) for p in parts])
