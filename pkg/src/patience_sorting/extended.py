"""Extended patience sorting: insertion piles plus recording piles,
stability of pile pairs, and inversion back to the permutation.

Playing card sigma(i) at time i, the insertion piles R collect the card
values and the recording piles S collect the times, each new time placed
at the bottom of the pile that received the card.  Stored bottom to top,
an S pile is therefore strictly decreasing and S is itself a valid pile
configuration.  S' denotes S with every pile flipped vertically; reading
its piles gives the increasing within-pile time order.
"""

from __future__ import annotations

from bisect import bisect_right

from .core import (
    Permutation,
    PileConfig,
    pile_config_from_json,
    pile_config_to_json,
    shape_of,
)
from .errors import DomainError, ParseError
from .patience import reverse_patience_word


def extended_patience_sort(sigma: Permutation) -> tuple[PileConfig, PileConfig]:
    """Insertion and recording piles, built simultaneously.

    >>> extended_patience_sort((6, 4, 5, 1, 8, 7, 2, 3))
    (((6, 4, 1), (5, 2), (8, 7, 3)), ((4, 2, 1), (7, 3), (8, 6, 5)))
    """
    piles: list[list[int]] = []
    times: list[list[int]] = []
    tops: list[int] = []
    for when, card in enumerate(sigma, 1):
        j = bisect_right(tops, card)
        if j == len(piles):
            piles.append([card])
            times.append([when])
            tops.append(card)
        else:
            piles[j].append(card)
            times[j].append(when)
            tops[j] = card
    insertion = tuple(tuple(p) for p in piles)
    recording = tuple(tuple(reversed(t)) for t in times)
    return insertion, recording


def reflect(config: PileConfig) -> tuple[tuple[int, ...], ...]:
    """Flip each pile vertically; involutive.

    >>> reflect(((4, 2, 1), (7, 3)))
    ((1, 2, 4), (3, 7))
    """
    return tuple(tuple(reversed(pile)) for pile in config)


def rpw_of_reflected(config: PileConfig) -> Permutation:
    """Reverse patience word of the reflected piles: each pile read increasing.

    >>> rpw_of_reflected(((4, 2, 1), (7, 3), (8, 6, 5)))
    (1, 2, 4, 3, 7, 5, 6, 8)
    """
    return tuple(card for pile in config for card in reversed(pile))


def is_stable_pair(insertion: PileConfig, recording: PileConfig) -> bool:
    """Whether (R, S) lies in the image of extended_patience_sort.

    Requires equal shapes and, writing u for the reverse patience word of R
    and v for the word of the reflected S, forbids at every aligned triple
    (t, t+1, w) with w > t+1 the simultaneous pattern pairs (31-2 in u with
    13-2 in v), (31-2 in u with 32-1 in v) and (32-1 in u with 13-2 in v).
    The roles of u and v are not interchangeable here: the mirrored check
    rejects genuine sorting outputs (for 2431, u = 2143 and v = 1423 host
    31-2 in v with 13-2 in u at positions (2, 3, 4)).

    >>> is_stable_pair(((3, 1), (2,)), ((3, 1), (2,)))
    False
    >>> is_stable_pair(((2, 1), (3,)), ((2, 1), (3,)))
    True
    """
    if shape_of(insertion) != shape_of(recording):
        return False
    u = reverse_patience_word(insertion)
    v = rpw_of_reflected(recording)
    n = len(u)
    for t in range(n - 1):
        for w in range(t + 2, n):
            u31_2 = u[t + 1] < u[w] < u[t]
            u32_1 = u[w] < u[t + 1] < u[t]
            v13_2 = v[t] < v[w] < v[t + 1]
            v32_1 = v[w] < v[t + 1] < v[t]
            if (u31_2 and v13_2) or (u31_2 and v32_1) or (u32_1 and v13_2):
                return False
    return True


def two_line_permutation(insertion: PileConfig, recording: PileConfig) -> Permutation:
    """Unchecked two-line assembly: positions from S', values from R.

    Requires equal shapes only.  On a pair that is not stable the result
    does not round-trip through extended_patience_sort.

    >>> two_line_permutation(((2, 1), (3,)), ((2, 1), (3,)))
    (2, 1, 3)
    """
    if shape_of(insertion) != shape_of(recording):
        raise DomainError("pile shapes differ")
    u = reverse_patience_word(insertion)
    v = rpw_of_reflected(recording)
    sigma = [0] * len(u)
    for position, value in zip(v, u):
        sigma[position - 1] = value
    return tuple(sigma)


def invert_extended(insertion: PileConfig, recording: PileConfig) -> Permutation:
    """Inverse of extended_patience_sort; defined exactly on stable pairs.

    >>> invert_extended(((6, 4, 1), (5, 2), (8, 7, 3)), ((4, 2, 1), (7, 3), (8, 6, 5)))
    (6, 4, 5, 1, 8, 7, 2, 3)
    """
    if not is_stable_pair(insertion, recording):
        raise DomainError("not a stable pair")
    return two_line_permutation(insertion, recording)


def pair_to_json(insertion: PileConfig, recording: PileConfig) -> dict:
    """Wire form: {"R": <pile config JSON>, "S": <pile config JSON>}."""
    return {
        "R": pile_config_to_json(insertion),
        "S": pile_config_to_json(recording),
    }


def pair_from_json(doc: object) -> tuple[PileConfig, PileConfig]:
    """Parse and validate the wire form produced by pair_to_json."""
    if not isinstance(doc, dict) or "R" not in doc or "S" not in doc:
        raise ParseError('pair document must be an object with "R" and "S"')
    return pile_config_from_json(doc["R"]), pile_config_from_json(doc["S"])
