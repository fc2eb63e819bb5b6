"""
Set partitions as restricted growth strings.

A restricted growth string a_0 … a_{n−1} has a_0 = 0 and a_i ≤ 1 + max(a_0 … a_{i−1});
every set partition of {0, …, n−1} has exactly one such encoding, which is also the
first-occurrence canonical labelling of its blocks.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache
from itertools import islice

import numpy as np


@cache
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@dataclass(frozen=True)
class PartitionIterator:
    """
    Enumerates every partition of n elements into at most `max_blocks` blocks, once
    each, in lexicographic order of the restricted growth strings.

    Attributes:
        n (int): Number of elements.
        max_blocks (int): Block-count cap.
    """

    n: int
    max_blocks: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.max_blocks < 1:
            raise ValueError("need n >= 0 and max_blocks >= 1")

    def __len__(self) -> int:
        if self.n == 0:
            return 1
        return sum(stirling2(self.n, k) for k in range(1, min(self.n, self.max_blocks) + 1))

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        n, cap = self.n, self.max_blocks - 1
        if n == 0:
            yield ()
            return
        a = [0] * n
        # prefix_max[i] = max(a[0..i])
        prefix_max = [0] * n
        yield tuple(a)
        while True:
            i = n - 1
            while i > 0 and a[i] >= min(prefix_max[i - 1] + 1, cap):
                i -= 1
            if i == 0:
                return
            a[i] += 1
            prefix_max[i] = max(prefix_max[i - 1], a[i])
            for j in range(i + 1, n):
                a[j] = 0
                prefix_max[j] = prefix_max[i]
            yield tuple(a)

    def batches(self, size: int) -> Iterator[np.ndarray]:
        """Yields the strings in order as int64 arrays of at most `size` rows."""
        it = iter(self)
        while chunk := list(islice(it, size)):
            yield np.array(chunk, dtype=np.int64).reshape(len(chunk), self.n)
