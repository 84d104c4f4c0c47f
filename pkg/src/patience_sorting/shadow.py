"""Northeast shadow diagrams.

The northeast shadow of a point is the quarter plane above and to its
right.  The shadowline of a point set is the staircase boundary of the
union of their shadows; it is determined by its southwest corners, which
are exactly the minimal points of the set (no other point is weakly below
and weakly left).  Iterating "take the shadowline, discard its points"
over the diagram {(i, sigma(i))} yields one line per pile: corner
ordinates read off the pile cards, corner abscissae the positions of the
matching left-to-right minima round.
"""

from __future__ import annotations

from typing import Iterable

from .core import Permutation
from .errors import DomainError

LatticePoint = tuple[int, int]
Shadowline = tuple[LatticePoint, ...]
ShadowDiagram = tuple[Shadowline, ...]


def shadowline_of(points: Iterable[LatticePoint]) -> Shadowline:
    """Southwest corners of the shadow boundary: minimal points by increasing x.

    >>> shadowline_of({(1, 1), (2, 2), (3, 3)})
    ((1, 1),)
    """
    pts = sorted(points)
    if not pts:
        raise DomainError("shadowline of an empty point set")
    if len({x for x, _ in pts}) != len(pts) or len({y for _, y in pts}) != len(pts):
        raise DomainError("points must have distinct abscissae and ordinates")
    corners = []
    low = None
    for x, y in pts:
        # scanning by increasing x, a point is minimal iff its y is a new low
        if low is None or y < low:
            corners.append((x, y))
            low = y
    return tuple(corners)


def shadow_diagram(sigma: Permutation) -> ShadowDiagram:
    """Iterated shadowlines of the permutation diagram {(i, sigma(i))}.

    >>> shadow_diagram((3, 2, 1))
    (((1, 3), (2, 2), (3, 1)),)
    """
    remaining = [(i, v) for i, v in enumerate(sigma, 1)]
    lines = []
    while remaining:
        line = shadowline_of(remaining)
        on_line = set(line)
        lines.append(line)
        remaining = [p for p in remaining if p not in on_line]
    return tuple(lines)


def corner_ordinates(diagram: ShadowDiagram) -> list[list[int]]:
    """Per-line corner ordinates, top of staircase first (= pile bottom first).

    >>> corner_ordinates((((1, 6), (2, 4), (4, 1)), ((3, 5), (7, 2))))
    [[6, 4, 1], [5, 2]]
    """
    return [[y for _, y in line] for line in diagram]


def corner_abscissae(diagram: ShadowDiagram) -> list[list[int]]:
    """Per-line corner abscissae, increasing along each staircase."""
    return [[x for x, _ in line] for line in diagram]


def diagram_to_json(diagram: ShadowDiagram) -> dict:
    """Wire form: {"lines": [[[x, y], ...], ...]} with corners by increasing x."""
    return {"lines": [[[x, y] for x, y in line] for line in diagram]}
