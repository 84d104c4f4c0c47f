"""Exhaustive generators and independent counting oracles.

Everything here is deliberately desk scale and cross-checkable: set
partitions come from restricted-growth strings, Bell numbers from the
Bell triangle, involutions from a literal sigma = sigma^-1 scan, and the
minimum pile count from a full search over legal plays.  Size guards keep
accidental huge runs out; the PATIENCE_MAX_N environment variable
replaces every guard when set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .core import Permutation, PileConfig, inverse
from .errors import DomainError, GuardError
from .extended import is_stable_pair
from .patience import patience_sort, piles_from_set_partition
from .patterns import GeneralizedPattern, avoids, format_pattern

_DEFAULT_GUARDS = {
    "bell": 12,
    "avoiders": 8,
    "stable_pairs": 5,
    "image_312": 8,
    "min_piles": 8,
    "involution_configs": 7,
    "involutions": 8,
}


def guard_limit(name: str) -> int:
    """Effective ceiling for one guarded operation."""
    override = os.environ.get("PATIENCE_MAX_N")
    if override is not None:
        try:
            return int(override)
        except ValueError:
            raise GuardError(f"PATIENCE_MAX_N={override!r} is not an integer") from None
    return _DEFAULT_GUARDS[name]


def _check_guard(name: str, n: int) -> None:
    limit = guard_limit(name)
    if n > limit:
        raise GuardError(
            f"n={n} exceeds the {name} guard ({limit}); set PATIENCE_MAX_N to override"
        )
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")


@dataclass(frozen=True)
class CountReport:
    """One labeled count, e.g. from an exhaustive scan."""

    n: int
    label: str
    value: int

    def to_json(self) -> dict:
        return {"n": self.n, "label": self.label, "value": self.value}


def all_pile_configs(n: int) -> Iterator[PileConfig]:
    """Every pile configuration of {1..n}, i.e. every set partition.

    Generated from restricted-growth strings, so the stream is duplicate
    free and deterministic; blocks become decreasing piles ordered by
    their minima.

    >>> sum(1 for _ in all_pile_configs(4))
    15
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield ()
        return

    string = [0] * n

    def grow(i: int, used: int) -> Iterator[PileConfig]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(used)]
            for pos, block_index in enumerate(string, 1):
                blocks[block_index].append(pos)
            yield piles_from_set_partition(blocks)
            return
        for b in range(used + 1):
            string[i] = b
            yield from grow(i + 1, max(used, b + 1))

    yield from grow(0, 0)


def bell(n: int) -> int:
    """Bell number via the Bell triangle, independent of all_pile_configs.

    >>> [bell(k) for k in range(8)]
    [1, 1, 2, 5, 15, 52, 203, 877]
    """
    _check_guard("bell", n)
    row = [1]
    for _ in range(n):
        next_row = [row[-1]]
        for value in row:
            next_row.append(next_row[-1] + value)
        row = next_row
    return row[0]


def _as_patterns(
    patterns: GeneralizedPattern | Iterable[GeneralizedPattern],
) -> tuple[GeneralizedPattern, ...]:
    if isinstance(patterns, GeneralizedPattern):
        return (patterns,)
    return tuple(patterns)


def count_avoiders(
    n: int, patterns: GeneralizedPattern | Iterable[GeneralizedPattern]
) -> CountReport:
    """How many permutations of {1..n} avoid every given pattern.

    >>> from patience_sorting.patterns import parse_pattern
    >>> count_avoiders(5, parse_pattern("3-~1-42")).value
    52
    """
    _check_guard("avoiders", n)
    ps = _as_patterns(patterns)
    count = sum(
        1
        for sigma in permutations(range(1, n + 1))
        if all(avoids(sigma, p) for p in ps)
    )
    label = "avoiders of " + ",".join(format_pattern(p) for p in ps)
    return CountReport(n, label, count)


def _configs_by_shape(n: int) -> dict[tuple[int, ...], list[PileConfig]]:
    groups: dict[tuple[int, ...], list[PileConfig]] = {}
    for config in all_pile_configs(n):
        groups.setdefault(tuple(len(p) for p in config), []).append(config)
    return groups


def iter_stable_pairs(n: int) -> Iterator[tuple[PileConfig, PileConfig]]:
    """All stable pairs of {1..n}, deterministic order."""
    _check_guard("stable_pairs", n)
    groups = _configs_by_shape(n)
    for config in all_pile_configs(n):
        for other in groups[tuple(len(p) for p in config)]:
            if is_stable_pair(config, other):
                yield config, other


def count_stable_pairs(n: int) -> CountReport:
    """Equal-shape pile-config pairs passing the stability filter (= n!).

    >>> count_stable_pairs(3).value
    6
    """
    _check_guard("stable_pairs", n)
    count = sum(1 for _ in iter_stable_pairs(n))
    return CountReport(n, "stable pairs", count)


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def non_crossing_configs(n: int) -> Iterator[PileConfig]:
    """One configuration per composition of n: consecutive decreasing runs.

    >>> sorted(non_crossing_configs(3))
    [((1,), (2,), (3,)), ((1,), (3, 2)), ((2, 1), (3,)), ((3, 2, 1),)]
    """
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    for composition in _compositions(n):
        piles = []
        start = 0
        for part in composition:
            piles.append(tuple(range(start + part, start, -1)))
            start += part
        yield tuple(piles)


def _avoids_312_classical(sigma: Permutation) -> bool:
    n = len(sigma)
    for j in range(1, n - 1):
        for i in range(j):
            if sigma[i] > sigma[j]:
                for k in range(j + 1, n):
                    if sigma[j] < sigma[k] < sigma[i]:
                        return False
    return True


def image_of_avoiders_312(n: int) -> set[PileConfig]:
    """Pile configurations of permutations avoiding classical 3-1-2.

    Equals the non-crossing configurations, of which there are 2^(n-1).

    >>> len(image_of_avoiders_312(5))
    16
    """
    _check_guard("image_312", n)
    return {
        patience_sort(sigma)
        for sigma in permutations(range(1, n + 1))
        if _avoids_312_classical(sigma)
    }


def min_piles_bruteforce(sigma: Permutation) -> int:
    """Fewest piles over every legal play of the one-pass pile game.

    A card may start a new pile or land on any strictly larger top card,
    not only the left-most; exhaustive search memoized on the remaining
    deck position and the multiset of tops.

    >>> min_piles_bruteforce((6, 4, 5, 1, 8, 7, 2, 3))
    3
    """
    deck = tuple(sigma)
    _check_guard("min_piles", len(deck))

    @lru_cache(maxsize=None)
    def best_from(pos: int, tops: tuple[int, ...]) -> int:
        if pos == len(deck):
            return len(tops)
        card = deck[pos]
        best = best_from(pos + 1, tuple(sorted(tops + (card,))))
        for top in set(tops):
            if top > card:
                remaining = list(tops)
                remaining.remove(top)
                remaining.append(card)
                result = best_from(pos + 1, tuple(sorted(remaining)))
                if result < best:
                    best = result
        return best

    try:
        return best_from(0, ())
    finally:
        best_from.cache_clear()


def count_involutions(n: int) -> int:
    """Permutations equal to their own inverse, by direct scan.

    >>> [count_involutions(k) for k in range(7)]
    [1, 1, 2, 4, 10, 26, 76]
    """
    _check_guard("involutions", n)
    return sum(
        1 for sigma in permutations(range(1, n + 1)) if inverse(sigma) == sigma
    )


def count_involution_configs(n: int) -> CountReport:
    """Pile configurations R for which (R, R) is a stable pair.

    >>> count_involution_configs(3).value
    4
    """
    _check_guard("involution_configs", n)
    count = sum(1 for config in all_pile_configs(n) if is_stable_pair(config, config))
    return CountReport(n, "self-paired configs", count)
