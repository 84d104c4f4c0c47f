"""Patience sorting and its combinatorial companions.

The sorting rule: deal cards left to right; each card goes on top of the
left-most pile whose top card is larger, or starts a new right-most pile
if no such pile exists.  Top cards always increase left to right, which is
what makes the binary search in patience_sort valid.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterable, Sequence

from .core import Permutation, Pile, PileConfig, validate_pile_config
from .errors import DomainError


def patience_sort(sigma: Permutation) -> PileConfig:
    """Greedy pile building; the left-most eligible pile via binary search.

    >>> patience_sort((6, 4, 5, 1, 8, 7, 2, 3))
    ((6, 4, 1), (5, 2), (8, 7, 3))
    >>> patience_sort((1, 2, 3))
    ((1,), (2,), (3,))
    """
    piles: list[list[int]] = []
    tops: list[int] = []
    for card in sigma:
        j = bisect_right(tops, card)
        if j == len(piles):
            piles.append([card])
            tops.append(card)
        else:
            piles[j].append(card)
            tops[j] = card
    return tuple(tuple(p) for p in piles)


def reverse_patience_word(config: PileConfig) -> Permutation:
    """Concatenate piles left to right, each read bottom to top (decreasing).

    >>> reverse_patience_word(((6, 4, 1), (5, 2), (8, 7, 3)))
    (6, 4, 1, 5, 2, 8, 7, 3)
    """
    return tuple(card for pile in config for card in pile)


def piles_from_set_partition(blocks: Iterable[Iterable[int]]) -> PileConfig:
    """Turn a set partition of {1..n} into a pile configuration.

    Each block becomes a pile sorted decreasingly; piles are ordered by
    their minimum element, which makes the top cards increase.

    >>> piles_from_set_partition([{1, 4, 6}, {2, 5}, {3, 7, 8}])
    ((6, 4, 1), (5, 2), (8, 7, 3))
    """
    piles = [tuple(sorted(block, reverse=True)) for block in blocks]
    if any(not pile for pile in piles):
        raise DomainError("empty block in set partition")
    piles.sort(key=lambda pile: pile[-1])
    return validate_pile_config(piles)


def lr_minima_decomposition(sigma: Permutation) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Iterated left-to-right minima subsequences, as (position, value) pairs.

    Round j extracts the left-to-right minima of what remains after rounds
    1..j-1; positions are 1-based into the original permutation.  The value
    sequences coincide with the piles of patience_sort.

    >>> lr_minima_decomposition((3, 2, 1))
    (((1, 3), (2, 2), (3, 1)),)
    """
    remaining = list(enumerate(sigma, 1))
    rounds = []
    while remaining:
        taken = []
        rest = []
        current = None
        for pos, value in remaining:
            if current is None or value < current:
                taken.append((pos, value))
                current = value
            else:
                rest.append((pos, value))
        rounds.append(tuple(taken))
        remaining = rest
    return tuple(rounds)


def lis_length(sigma: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence.

    Deliberately a quadratic dynamic program sharing no code with
    patience_sort, so the pile-count identity is a genuine cross-check.

    >>> lis_length((6, 4, 5, 1, 8, 7, 2, 3))
    3
    """
    if not sigma:
        return 0
    best = [1] * len(sigma)
    for i in range(len(sigma)):
        for j in range(i):
            if sigma[j] < sigma[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return max(best)
