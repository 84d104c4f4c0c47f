"""Foundational value types: permutations, piles, pile configurations, shapes.

Conventions used across the package:

* A permutation is a tuple of ints in one-line notation: ``sigma[i]`` is the
  image of ``i + 1``.  Values are exactly ``{1..n}``; ``n = 0`` (the empty
  tuple) is legal everywhere.
* A pile is a tuple of card values stored bottom to top, strictly
  decreasing, never empty.  Reading a stored pile left to right is exactly
  its segment of the reverse patience word.
* A pile configuration is a tuple of piles whose cards partition ``{1..n}``
  and whose top cards (last entries) strictly increase left to right.
* A shape is the tuple of pile sizes, a composition of ``n``.

All values are immutable tuples: safe to hash, share, and compare.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import DomainError, ParseError

Permutation = tuple[int, ...]
Pile = tuple[int, ...]
PileConfig = tuple[Pile, ...]
Shape = tuple[int, ...]

_SEPARATORS = re.compile(r"[,\s]+")


def validate_permutation(values: Iterable[int]) -> Permutation:
    """Check that ``values`` is a permutation of {1..n} and return it as a tuple.

    >>> validate_permutation([2, 1, 3])
    (2, 1, 3)
    """
    sigma = tuple(values)
    n = len(sigma)
    seen = set()
    for v in sigma:
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(f"permutation value {v!r} is not an integer")
        if v < 1 or v > n:
            raise DomainError(f"value {v} out of range 1..{n}")
        if v in seen:
            raise DomainError(f"duplicate value {v}")
        seen.add(v)
    return sigma


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation: compact digits, or comma/whitespace separated.

    The compact form is only meaningful when every value is a single digit;
    the separated form is required for n >= 10.  The empty string denotes
    the empty permutation.

    >>> parse_permutation("64518723")
    (6, 4, 5, 1, 8, 7, 2, 3)
    >>> parse_permutation("10,2,3,4,5,6,7,8,9,1")[0]
    10
    """
    stripped = text.strip()
    if not stripped:
        return ()
    if _SEPARATORS.search(stripped):
        values = []
        for token in stripped.replace(",", " ").split(" "):
            if token == "":
                raise ParseError("empty token in permutation text")
            try:
                values.append(int(token))
            except ValueError:
                raise ParseError(f"bad token {token!r} in permutation text") from None
    else:
        for ch in stripped:
            if not ch.isdigit():
                raise ParseError(f"bad character {ch!r} in permutation text")
        values = [int(ch) for ch in stripped]
    n = len(values)
    seen = set()
    for v in values:
        if v < 1 or v > n:
            raise ParseError(f"value {v} out of range 1..{n}")
        if v in seen:
            raise ParseError(f"duplicate value {v}")
        seen.add(v)
    return tuple(values)


def format_permutation(sigma: Sequence[int]) -> str:
    """Inverse of parse_permutation: compact digits iff n <= 9, else commas.

    >>> format_permutation((6, 4, 5, 1, 8, 7, 2, 3))
    '64518723'
    >>> format_permutation(())
    ''
    """
    if len(sigma) <= 9:
        return "".join(str(v) for v in sigma)
    return ",".join(str(v) for v in sigma)


def validate_pile_config(piles: Sequence[Sequence[int]]) -> PileConfig:
    """Validate raw pile lists and return the canonical tuple form.

    Accepts iff every pile strictly decreases bottom to top, the cards
    partition {1..n}, and the top cards increase left to right.  Each
    failure mode is reported distinctly.

    >>> validate_pile_config([[6, 4, 1], [5, 2], [8, 7, 3]])[1]
    (5, 2)
    """
    config = tuple(tuple(p) for p in piles)
    cards = []
    for idx, pile in enumerate(config, 1):
        if not pile:
            raise DomainError(f"pile {idx} is empty")
        for a, b in zip(pile, pile[1:]):
            if a <= b:
                raise DomainError(f"pile {idx} does not strictly decrease bottom to top")
        cards.extend(pile)
    n = len(cards)
    seen = set()
    for c in cards:
        if not isinstance(c, int) or isinstance(c, bool):
            raise DomainError(f"card {c!r} is not an integer")
        if c in seen:
            raise DomainError(f"duplicated card {c}")
        seen.add(c)
    for c in range(1, n + 1):
        if c not in seen:
            raise DomainError(f"missing card {c}: piles must partition 1..{n}")
    tops = [pile[-1] for pile in config]
    for left, right in zip(tops, tops[1:]):
        if left >= right:
            raise DomainError(
                f"top cards must increase left to right, got {left} before {right}"
            )
    return config


def shape_of(config: PileConfig) -> Shape:
    """Composition of pile sizes.

    >>> shape_of(((6, 4, 1), (5, 2), (8, 7, 3)))
    (3, 2, 3)
    """
    return tuple(len(pile) for pile in config)


def inverse(sigma: Permutation) -> Permutation:
    """The inverse permutation tau, with tau(sigma(i)) = i.

    >>> inverse((6, 4, 5, 1, 8, 7, 2, 3))
    (4, 7, 8, 2, 3, 1, 6, 5)
    """
    inv = [0] * len(sigma)
    for pos, value in enumerate(sigma, 1):
        inv[value - 1] = pos
    return tuple(inv)


def pile_config_to_json(config: PileConfig) -> dict:
    """Wire form: {"n": int, "piles": [[bottom, ..., top], ...]}."""
    return {"n": sum(len(p) for p in config), "piles": [list(p) for p in config]}


def pile_config_from_json(doc: object) -> PileConfig:
    """Parse and validate the wire form produced by pile_config_to_json."""
    if not isinstance(doc, dict):
        raise ParseError("pile config document must be a JSON object")
    if "piles" not in doc:
        raise ParseError('pile config document lacks a "piles" field')
    piles = doc["piles"]
    if not isinstance(piles, list) or not all(isinstance(p, list) for p in piles):
        raise ParseError('"piles" must be a list of lists')
    config = validate_pile_config(piles)
    n = sum(len(p) for p in config)
    if "n" in doc and doc["n"] != n:
        raise DomainError(f'declared n={doc["n"]} but piles hold {n} cards')
    return config
