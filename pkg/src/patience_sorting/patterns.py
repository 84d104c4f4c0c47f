"""Generalized (vincular), classical, and barred permutation patterns,
plus the interchange moves that generate pile-preserving equivalence.

Pattern text syntax: digits are letters, ``-`` separates letters that may
sit arbitrarily far apart (a dash), adjacent digits must occupy adjacent
positions, and ``~`` marks the single optional barred letter.  Examples:
``312`` (fully contiguous), ``3-1-2`` (classical), ``2-31``, ``3-~1-42``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Permutation
from .errors import ParseError
from .patience import patience_sort, reverse_patience_word


@dataclass(frozen=True)
class GeneralizedPattern:
    """Letters with adjacency structure and an optional barred letter.

    ``dashes[i]`` is True when a gap is allowed between letters i and i+1;
    ``barred`` is the index of the barred letter, or None.
    """

    letters: tuple[int, ...]
    dashes: tuple[bool, ...]
    barred: int | None = None

    def __post_init__(self) -> None:
        m = len(self.letters)
        if sorted(self.letters) != list(range(1, m + 1)):
            raise ParseError(f"letters {self.letters} are not a permutation of 1..{m}")
        if len(self.dashes) != max(m - 1, 0):
            raise ParseError("adjacency flags must number one fewer than letters")
        if self.barred is not None and not 0 <= self.barred < m:
            raise ParseError(f"barred index {self.barred} out of range")


def parse_pattern(text: str) -> GeneralizedPattern:
    """Parse the dash/tilde pattern syntax.

    >>> parse_pattern("3-~1-42")
    GeneralizedPattern(letters=(3, 1, 4, 2), dashes=(True, True, False), barred=1)
    """
    letters: list[int] = []
    dashes: list[bool] = []
    barred = None
    pending_bar = False
    previous_was_letter = False
    for ch in text:
        if ch == "-":
            if not previous_was_letter:
                raise ParseError(f"misplaced dash in pattern {text!r}")
            dashes.append(True)
            previous_was_letter = False
        elif ch == "~":
            if pending_bar:
                raise ParseError(f"doubled bar mark in pattern {text!r}")
            pending_bar = True
        elif ch.isdigit():
            if previous_was_letter:
                dashes.append(False)
            if pending_bar:
                if barred is not None:
                    raise ParseError(f"more than one barred letter in {text!r}")
                barred = len(letters)
                pending_bar = False
            letters.append(int(ch))
            previous_was_letter = True
        else:
            raise ParseError(f"bad character {ch!r} in pattern {text!r}")
    if pending_bar or (dashes and not previous_was_letter):
        raise ParseError(f"pattern {text!r} ends mid-token")
    if not letters:
        raise ParseError("empty pattern")
    return GeneralizedPattern(tuple(letters), tuple(dashes), barred)


def format_pattern(p: GeneralizedPattern) -> str:
    """Inverse of parse_pattern.

    >>> format_pattern(parse_pattern("3-~1-42"))
    '3-~1-42'
    """
    out = []
    for i, letter in enumerate(p.letters):
        if i > 0 and p.dashes[i - 1]:
            out.append("-")
        if p.barred == i:
            out.append("~")
        out.append(str(letter))
    return "".join(out)


def reduced_pattern(p: GeneralizedPattern) -> GeneralizedPattern:
    """Drop the barred letter; renormalize; gaps around it merge to a dash.

    >>> format_pattern(reduced_pattern(parse_pattern("3-~1-42")))
    '2-31'
    """
    if p.barred is None:
        raise ParseError("pattern has no barred letter")
    i = p.barred
    m = len(p.letters)
    kept = [x for k, x in enumerate(p.letters) if k != i]
    rank = {v: r + 1 for r, v in enumerate(sorted(kept))}
    letters = tuple(rank[v] for v in kept)
    dashes = list(p.dashes[: max(i - 1, 0)])
    if 0 < i < m - 1:
        dashes.append(True)
    dashes.extend(p.dashes[i + 1 :])
    return GeneralizedPattern(letters, tuple(dashes), None)


def _matches_prefix(values: list[int], letters: tuple[int, ...]) -> bool:
    # the newly appended value must relate to each earlier one as the letters do
    last = len(values) - 1
    for i in range(last):
        if (values[i] < values[last]) != (letters[i] < letters[last]):
            return False
    return True


def _occurrences0(sigma: Permutation, p: GeneralizedPattern) -> list[tuple[int, ...]]:
    """All occurrences as 0-based position tuples, lexicographically ordered."""
    n, m = len(sigma), len(p.letters)
    found: list[tuple[int, ...]] = []
    positions: list[int] = []
    values: list[int] = []

    def extend(slot: int) -> None:
        if slot == m:
            found.append(tuple(positions))
            return
        if slot == 0:
            candidates = range(n - m + 1)
        elif p.dashes[slot - 1]:
            candidates = range(positions[-1] + 1, n - (m - slot) + 1)
        else:
            candidates = range(positions[-1] + 1, min(positions[-1] + 2, n))
        for q in candidates:
            positions.append(q)
            values.append(sigma[q])
            if _matches_prefix(values, p.letters):
                extend(slot + 1)
            positions.pop()
            values.pop()

    extend(0)
    return found


def occurrences(sigma: Permutation, p: GeneralizedPattern) -> list[tuple[int, ...]]:
    """All occurrences of an unbarred pattern, as 1-based position tuples.

    >>> occurrences((2, 4, 3, 1), parse_pattern("2-31"))
    [(1, 3, 4)]
    >>> occurrences((2, 4, 3, 1), parse_pattern("23-1"))
    [(1, 2, 4)]
    """
    if p.barred is not None:
        raise ParseError("occurrence search requires an unbarred pattern")
    return [tuple(q + 1 for q in occ) for occ in _occurrences0(sigma, p)]


def _extends(sigma: Permutation, full: GeneralizedPattern, occ: tuple[int, ...],
             slot: int) -> bool:
    # can one position be inserted at `slot` to complete an occurrence of `full`?
    n, m = len(sigma), len(full.letters)
    for q in range(n):
        if q in occ:
            continue
        filled = sorted(occ + (q,))
        if filled.index(q) != slot:
            continue
        vals = [sigma[t] for t in filled]
        if any((vals[i] < vals[j]) != (full.letters[i] < full.letters[j])
               for i in range(m) for j in range(i + 1, m)):
            continue
        if all(full.dashes[k] or filled[k + 1] == filled[k] + 1 for k in range(m - 1)):
            return True
    return False


def avoids(sigma: Permutation, p: GeneralizedPattern) -> bool:
    """Pattern avoidance; for barred patterns, every occurrence of the
    reduced pattern must extend to one of the full unbarred pattern.

    >>> avoids((3, 1, 4, 2), parse_pattern("3-~1-42"))
    True
    >>> avoids((2, 3, 1), parse_pattern("3-~1-42"))
    False
    """
    if p.barred is None:
        return not _occurrences0(sigma, p)
    full = GeneralizedPattern(p.letters, p.dashes, None)
    reduced = reduced_pattern(p)
    return all(
        _extends(sigma, full, occ, p.barred)
        for occ in _occurrences0(sigma, reduced)
    )


def ps_interchange_neighbors(sigma: Permutation) -> list[Permutation]:
    """All single adjacent interchanges that preserve the pile configuration.

    The adjacent pair at (j, j+1) with values {lo < hi} may be swapped, in
    either order, exactly when scanning left from j meets a witness value
    strictly between lo and hi before meeting any value below lo.  Both
    directions use the same scan because the swap leaves the prefix alone.

    >>> ps_interchange_neighbors((2, 3, 1))
    [(2, 1, 3)]
    >>> ps_interchange_neighbors((2, 1, 3))
    [(2, 3, 1)]
    """
    out = []
    for j in range(len(sigma) - 1):
        lo, hi = sorted((sigma[j], sigma[j + 1]))
        for i in range(j - 1, -1, -1):
            v = sigma[i]
            if v < lo:
                break
            if v < hi:
                swapped = list(sigma)
                swapped[j], swapped[j + 1] = swapped[j + 1], swapped[j]
                out.append(tuple(swapped))
                break
    return out


def ps_class(sigma: Permutation) -> set[Permutation]:
    """Transitive closure of ps_interchange_neighbors.

    Equals the set of permutations with the same pile configuration.

    >>> sorted(ps_class((2, 3, 1)))
    [(2, 1, 3), (2, 3, 1)]
    """
    seen = {tuple(sigma)}
    queue = deque(seen)
    while queue:
        current = queue.popleft()
        for neighbor in ps_interchange_neighbors(current):
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)
    return seen


def normal_form(sigma: Permutation) -> Permutation:
    """Canonical class representative: the reverse patience word of the piles.

    >>> normal_form((2, 3, 1))
    (2, 1, 3)
    """
    return reverse_patience_word(patience_sort(sigma))
