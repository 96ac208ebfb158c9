"""Bitmask helpers and vectorised subset enumeration for the brute-force oracles.

A family of ``k`` items is enumerated as the integers ``0 .. 2**k - 1``; bit
``i`` of a mask selects item ``i``.  Folds over all subsets are computed by
doubling, so every oracle pays O(2**k) numpy work instead of a Python loop.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Sequence

import numpy as np


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def is_submask(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def all_masks(k: int) -> np.ndarray:
    return np.arange(1 << k, dtype=np.int64)


def subset_fold(
    values: Sequence[int],
    op: Callable[[np.ndarray, int], np.ndarray],
    identity: int,
) -> np.ndarray:
    """``out[mask]`` = op-fold of ``values[i]`` for every bit ``i`` of ``mask``."""
    k = len(values)
    out = np.empty(1 << k, dtype=np.int64)
    out[0] = identity
    for i, v in enumerate(values):
        lo = 1 << i
        out[lo : 2 * lo] = op(out[:lo], v)
    return out


def subset_unions(values: Sequence[int]) -> np.ndarray:
    return subset_fold(values, np.bitwise_or, 0)


def subset_intersections(values: Sequence[int], top: int) -> np.ndarray:
    return subset_fold(values, np.bitwise_and, top)


def subset_table_fold(values: Sequence[int], table: np.ndarray, identity: int) -> np.ndarray:
    """Fold through a binary operation table, e.g. a lattice join table."""
    return subset_fold(values, lambda acc, v: table[acc, v], identity)


def directed_masks(le: np.ndarray) -> np.ndarray:
    """Boolean array: is the subfamily ``mask`` nonempty and up-directed?

    ``le`` is the k x k order among the family members.  A subfamily is
    directed when every pair of its members has an upper bound inside it.
    """
    k = le.shape[0]
    masks = all_masks(k)
    bad = np.zeros(1 << k, dtype=bool)
    member = [((masks >> i) & 1).astype(bool) for i in range(k)]
    for i in range(k):
        for j in range(i, k):
            ub = mask_of(np.flatnonzero(le[i] & le[j]).tolist())
            bad |= member[i] & member[j] & ((masks & ub) == 0)
    return (masks != 0) & ~bad


def hits(masks: np.ndarray, target: int) -> np.ndarray:
    """Does each subfamily contain at least one member of ``target``?"""
    return (masks & target) != 0
