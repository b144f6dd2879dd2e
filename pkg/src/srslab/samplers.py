"""Mini-batch samplers: sequenced replacement, epoch shuffle, batched replacement.

All three are deterministic state machines driven by a numpy Generator.
A batch is an int64 array of exactly `batch_size` dataset indices in
[0, dataset_size).  Under sequenced replacement a batch may repeat an
index once the pool holds duplicate copies; the other two regimes always
return distinct indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

SAMPLER_KINDS = ("srs", "epoch", "replacement")


def _check_sizes(dataset_size: int, batch_size: int) -> None:
    if dataset_size < 1:
        raise ValueError(f"dataset_size must be >= 1, got {dataset_size}")
    if batch_size < 1:
        raise ValueError(f"batch_size must be >= 1, got {batch_size}")
    if batch_size > dataset_size:
        raise ValueError(
            f"batch_size {batch_size} exceeds dataset_size {dataset_size}"
        )


@dataclass
class SrsPool:
    """Replacement-sampling pool with a sequenced refill cursor.

    `slots` is a multiset of dataset indices stored as a flat list whose
    order carries no meaning.  Each sample starts with exactly one slot.
    After every draw the pool is topped back up to `dataset_size` entries
    by appending the indices cursor, cursor+1, ... taken modulo
    dataset_size, so the first index follows the last one cyclically.
    """

    dataset_size: int
    batch_size: int
    slots: list[int]
    cursor: int = 0
    draws_completed: int = 0


def init_srs(dataset_size: int, batch_size: int) -> SrsPool:
    """Fresh pool with one slot per dataset index and the cursor at zero.

    Sequence indices are the identity order 0..dataset_size-1, fixed for
    the lifetime of the pool.
    """
    _check_sizes(dataset_size, batch_size)
    return SrsPool(dataset_size, batch_size, list(range(dataset_size)))


def srs_draw_at(state: SrsPool, positions: Sequence[int]) -> np.ndarray:
    """Apply one draw that removes the slots at `positions`, then refill.

    `positions` index into the current slot list and must be distinct;
    this is the deterministic core of `draw_batch_srs`, exposed so a draw
    can be forced onto chosen slots (replays, walkthrough tests).
    Returns the drawn dataset indices in position order.
    """
    slots = state.slots
    b = state.batch_size
    if len(positions) != b:
        raise ValueError(f"expected {b} positions, got {len(positions)}")
    if len(set(positions)) != b:
        raise ValueError("slot positions must be distinct within one draw")
    batch = np.fromiter((slots[p] for p in positions), dtype=np.int64, count=b)
    for p in sorted(positions, reverse=True):
        slots[p] = slots[-1]
        slots.pop()
    start = state.cursor
    n = state.dataset_size
    for k in range(b):
        slots.append((start + k) % n)
    state.cursor = (start + b) % n
    state.draws_completed += 1
    return batch


def draw_batch_srs(state: SrsPool, rng: np.random.Generator) -> np.ndarray:
    """Draw `batch_size` distinct slots uniformly at random and refill.

    Selection is uniform at slot granularity: every slot is equally likely
    regardless of which dataset index occupies it, so duplicate indices can
    appear within one batch.
    """
    positions = _distinct_positions(rng, len(state.slots), state.batch_size)
    return srs_draw_at(state, positions)


def pool_histogram(state: SrsPool) -> dict[int, int]:
    """Multiplicity of every dataset index in the pool, zeros included."""
    hist = {i: 0 for i in range(state.dataset_size)}
    for s in state.slots:
        hist[s] += 1
    return hist


def refill_count(index: int, draws_completed: int, dataset_size: int,
                 batch_size: int) -> int:
    """Copies of `index` appended by the refill cursor in the first
    `draws_completed` draws.  Pure cursor arithmetic, no randomness."""
    total = draws_completed * batch_size
    return total // dataset_size + (1 if index < total % dataset_size else 0)


@dataclass
class EpochShuffleState:
    """Non-replacement sampler: a shuffled order consumed batch by batch.

    When fewer than `batch_size` entries remain the leftovers are dropped
    and a fresh uniform permutation starts the next epoch.
    """

    dataset_size: int
    batch_size: int
    permutation: np.ndarray
    position: int = 0


def init_epoch_shuffle(dataset_size: int, batch_size: int,
                       rng: np.random.Generator) -> EpochShuffleState:
    _check_sizes(dataset_size, batch_size)
    perm = rng.permutation(dataset_size).astype(np.int64)
    return EpochShuffleState(dataset_size, batch_size, perm)


def draw_batch_epoch(state: EpochShuffleState,
                     rng: np.random.Generator) -> np.ndarray:
    """Next `batch_size` entries of the current permutation, reshuffling
    (and discarding any partial remainder) once it is exhausted."""
    if state.position + state.batch_size > state.dataset_size:
        state.permutation = rng.permutation(state.dataset_size).astype(np.int64)
        state.position = 0
    batch = state.permutation[state.position:state.position + state.batch_size]
    state.position += state.batch_size
    return batch.copy()


def draw_batch_replacement(dataset_size: int, batch_size: int,
                           rng: np.random.Generator) -> np.ndarray:
    """One batch of `batch_size` distinct indices, uniform over all
    subsets of that size; nothing carries over between draws."""
    _check_sizes(dataset_size, batch_size)
    positions = _distinct_positions(rng, dataset_size, batch_size)
    return np.array(positions, dtype=np.int64)


def make_sampler(kind: str, dataset_size: int, batch_size: int,
                 rng: np.random.Generator) -> Callable[[], np.ndarray]:
    """Uniform front door: a zero-argument callable yielding batches."""
    if kind == "srs":
        srs_state = init_srs(dataset_size, batch_size)
        return lambda: draw_batch_srs(srs_state, rng)
    if kind == "epoch":
        epoch_state = init_epoch_shuffle(dataset_size, batch_size, rng)
        return lambda: draw_batch_epoch(epoch_state, rng)
    if kind == "replacement":
        return lambda: draw_batch_replacement(dataset_size, batch_size, rng)
    raise ValueError(
        f"unknown sampler kind {kind!r}; expected one of {SAMPLER_KINDS}"
    )


def _distinct_positions(rng: np.random.Generator, n: int, k: int) -> list[int]:
    # Partial Fisher-Yates over a virtual arange(n): O(k) time and space,
    # uniform over ordered k-tuples of distinct values in [0, n).
    js = rng.integers(0, n - np.arange(k))
    remap: dict[int, int] = {}
    out = []
    for i, j in enumerate(js):
        j = int(j)
        top = n - 1 - i
        out.append(remap.get(j, j))
        remap[j] = remap.get(top, top)
    return out
