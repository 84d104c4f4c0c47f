"""One-shot verification suite: every library-level identity as a named,
bounded, independently-checkable pass/fail item.

Each check has a default size cap chosen to finish in seconds to a couple
of minutes; run_checks(max_n) lowers (never raises) the caps, and the
PATIENCE_MAX_N environment variable, when set, replaces the defaults.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator

from .core import Permutation, inverse, validate_pile_config
from .enumeration import (
    all_pile_configs,
    bell,
    count_avoiders,
    count_involution_configs,
    count_involutions,
    count_stable_pairs,
    image_of_avoiders_312,
    min_piles_bruteforce,
    non_crossing_configs,
)
from .extended import (
    extended_patience_sort,
    invert_extended,
    is_stable_pair,
)
from .patience import (
    lis_length,
    lr_minima_decomposition,
    patience_sort,
    reverse_patience_word,
)
from .patterns import (
    avoids,
    normal_form,
    parse_pattern,
    ps_class,
    ps_interchange_neighbors,
)
from .shadow import corner_abscissae, corner_ordinates, shadow_diagram


@dataclass(frozen=True)
class CheckResult:
    label: str
    max_n: int
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "max_n": self.max_n,
            "pass": self.passed,
            "detail": self.detail,
        }


def _perms(n: int) -> Iterator[Permutation]:
    return permutations(range(1, n + 1))


def _scan(cap: int, predicate: Callable[[Permutation], bool]) -> tuple[bool, str]:
    total = 0
    for n in range(cap + 1):
        for sigma in _perms(n):
            total += 1
            if not predicate(sigma):
                return False, f"failed at {sigma}"
    return True, f"S_0..S_{cap}, {total} permutations"


def _check_rpw_fixed_point(cap: int) -> tuple[bool, str]:
    return _scan(
        cap,
        lambda s: patience_sort(reverse_patience_word(patience_sort(s)))
        == patience_sort(s),
    )


def _check_partition_round_trip(cap: int) -> tuple[bool, str]:
    total = 0
    for n in range(cap + 1):
        for config in all_pile_configs(n):
            total += 1
            if patience_sort(reverse_patience_word(config)) != config:
                return False, f"failed at {config}"
    return True, f"all set partitions of 0..{cap} elements, {total} configs"


def _check_minima_match_piles(cap: int) -> tuple[bool, str]:
    def good(sigma: Permutation) -> bool:
        rounds = lr_minima_decomposition(sigma)
        values = tuple(tuple(v for _, v in rnd) for rnd in rounds)
        return values == patience_sort(sigma)

    return _scan(cap, good)


def _check_pile_count_is_lis(cap: int) -> tuple[bool, str]:
    return _scan(cap, lambda s: len(patience_sort(s)) == lis_length(s))


def _check_shadow_corners(cap: int) -> tuple[bool, str]:
    def good(sigma: Permutation) -> bool:
        diagram = shadow_diagram(sigma)
        piles = [list(p) for p in patience_sort(sigma)]
        positions = [
            [pos for pos, _ in rnd] for rnd in lr_minima_decomposition(sigma)
        ]
        return corner_ordinates(diagram) == piles and corner_abscissae(diagram) == positions

    return _scan(cap, good)


def _check_shadow_line_count(cap: int) -> tuple[bool, str]:
    return _scan(cap, lambda s: len(shadow_diagram(s)) == lis_length(s))


def _check_shadowlines_noncrossing(cap: int) -> tuple[bool, str]:
    def good(sigma: Permutation) -> bool:
        lines = shadow_diagram(sigma)
        for j in range(len(lines)):
            for i in range(j + 1, len(lines)):
                for bx, by in lines[i]:
                    # a later-line corner weakly below-left of an earlier-line
                    # corner would have been minimal in the earlier round
                    if any(bx <= ax and by <= ay for ax, ay in lines[j]):
                        return False
        return True

    return _scan(cap, good)


def _check_interchange_partition(cap: int) -> tuple[bool, str]:
    classes = 0
    for n in range(cap + 1):
        seen: set[Permutation] = set()
        for sigma in _perms(n):
            if sigma in seen:
                continue
            closure = ps_class(sigma)
            fiber = {t for t in _perms(n) if patience_sort(t) == patience_sort(sigma)}
            if closure != fiber:
                return False, f"class of {sigma} differs from its pile fiber"
            seen.update(closure)
            classes += 1
    return True, f"n <= {cap}, {classes} classes compared"


def _check_normal_form(cap: int) -> tuple[bool, str]:
    def good(sigma: Permutation) -> bool:
        nf = normal_form(sigma)
        return (
            patience_sort(nf) == patience_sort(sigma)
            and normal_form(nf) == nf
            and nf == reverse_patience_word(patience_sort(sigma))
        )

    return _scan(cap, good)


def _check_neighbors_preserve_piles(cap: int) -> tuple[bool, str]:
    def good(sigma: Permutation) -> bool:
        piles = patience_sort(sigma)
        return all(
            patience_sort(t) == piles for t in ps_interchange_neighbors(sigma)
        )

    return _scan(cap, good)


def _check_barred_avoiders_are_rpw_image(cap: int) -> tuple[bool, str]:
    barred = parse_pattern("3-~1-42")
    for n in range(cap + 1):
        avoiders = {s for s in _perms(n) if avoids(s, barred)}
        image = {reverse_patience_word(c) for c in all_pile_configs(n)}
        normals = {normal_form(s) for s in _perms(n)}
        if not (avoiders == image == normals):
            return False, f"sets differ at n={n}"
    return True, f"n <= {cap}, avoider set = config words = normal forms"


def _check_barred_count_is_bell(cap: int) -> tuple[bool, str]:
    barred = parse_pattern("3-~1-42")
    counts = []
    for n in range(cap + 1):
        a = count_avoiders(n, barred).value
        b = bell(n)
        c = sum(1 for _ in all_pile_configs(n))
        if not (a == b == c):
            return False, f"n={n}: avoiders {a}, bell {b}, configs {c}"
        counts.append(a)
    return True, f"counts {counts}"


def _check_barred_equals_dashed(cap: int) -> tuple[bool, str]:
    barred = parse_pattern("3-~1-42")
    dashed = parse_pattern("23-1")
    for n in range(cap + 1):
        left = {s for s in _perms(n) if avoids(s, barred)}
        right = {s for s in _perms(n) if avoids(s, dashed)}
        if left != right:
            return False, f"avoider sets differ at n={n}"
    return True, f"n <= {cap}, identical avoidance classes"


def _check_config_count_is_bell(cap: int) -> tuple[bool, str]:
    counts = []
    for n in range(cap + 1):
        c = sum(1 for _ in all_pile_configs(n))
        if c != bell(n):
            return False, f"n={n}: {c} configs vs bell {bell(n)}"
        counts.append(c)
    return True, f"counts {counts}"


def _check_stable_pair_count(cap: int) -> tuple[bool, str]:
    factorial = 1
    counts = []
    for n in range(cap + 1):
        factorial = factorial * n if n else 1
        value = count_stable_pairs(n).value
        if value != factorial:
            return False, f"n={n}: {value} pairs vs {factorial}"
        counts.append(value)
    return True, f"counts {counts}"


def _check_extended_round_trip(cap: int) -> tuple[bool, str]:
    return _scan(cap, lambda s: invert_extended(*extended_patience_sort(s)) == s)


def _check_extended_outputs_stable(cap: int) -> tuple[bool, str]:
    def good(sigma: Permutation) -> bool:
        insertion, recording = extended_patience_sort(sigma)
        validate_pile_config(insertion)
        validate_pile_config(recording)
        return is_stable_pair(insertion, recording)

    return _scan(cap, good)


def _check_inverse_swaps_pair(cap: int) -> tuple[bool, str]:
    def good(sigma: Permutation) -> bool:
        insertion, recording = extended_patience_sort(sigma)
        return extended_patience_sort(inverse(sigma)) == (recording, insertion)

    return _scan(cap, good)


def _check_involutions_self_paired(cap: int) -> tuple[bool, str]:
    def good(sigma: Permutation) -> bool:
        insertion, recording = extended_patience_sort(sigma)
        return (sigma == inverse(sigma)) == (insertion == recording)

    return _scan(cap, good)


def _check_involution_config_count(cap: int) -> tuple[bool, str]:
    counts = []
    for n in range(cap + 1):
        value = count_involution_configs(n).value
        expected = count_involutions(n)
        if value != expected:
            return False, f"n={n}: {value} configs vs {expected} involutions"
        counts.append(value)
    return True, f"counts {counts}"


def _check_noncrossing_image(cap: int) -> tuple[bool, str]:
    for n in range(1, cap + 1):
        crossings_free = set(non_crossing_configs(n))
        image = image_of_avoiders_312(n)
        if crossings_free != image or len(image) != 2 ** (n - 1):
            return False, f"n={n}: {len(crossings_free)} vs {len(image)}"
    return True, f"1 <= n <= {cap}, sizes powers of two"


def _check_joint_avoiders_involutions(cap: int) -> tuple[bool, str]:
    pair = (parse_pattern("3-12"), parse_pattern("3-21"))
    counts = []
    for n in range(cap + 1):
        value = count_avoiders(n, pair).value
        if value != count_involutions(n):
            return False, f"n={n}: {value} vs {count_involutions(n)}"
        counts.append(value)
    return True, f"counts {counts}"


def _check_joint_avoiders_powers(cap: int) -> tuple[bool, str]:
    pair = (parse_pattern("31-2"), parse_pattern("32-1"))
    counts = []
    for n in range(1, cap + 1):
        value = count_avoiders(n, pair).value
        if value != 2 ** (n - 1):
            return False, f"n={n}: {value} vs {2 ** (n - 1)}"
        counts.append(value)
    return True, f"counts {counts}"


def _check_greedy_optimal(cap: int) -> tuple[bool, str]:
    return _scan(
        cap,
        lambda s: min_piles_bruteforce(s) == len(patience_sort(s)) == lis_length(s),
    )


_CHECKS: tuple[tuple[str, int, Callable[[int], tuple[bool, str]]], ...] = (
    ("rpw fixed point", 7, _check_rpw_fixed_point),
    ("set partition round trip", 6, _check_partition_round_trip),
    ("minima decomposition matches piles", 7, _check_minima_match_piles),
    ("pile count equals lis length", 7, _check_pile_count_is_lis),
    ("shadow corners match piles and positions", 7, _check_shadow_corners),
    ("shadow line count equals lis length", 7, _check_shadow_line_count),
    ("shadowlines do not cross", 7, _check_shadowlines_noncrossing),
    ("interchange classes match pile fibers", 6, _check_interchange_partition),
    ("normal form is canonical", 6, _check_normal_form),
    ("interchanges preserve piles", 6, _check_neighbors_preserve_piles),
    ("barred avoiders are the rpw image", 6, _check_barred_avoiders_are_rpw_image),
    ("barred avoider count is bell", 7, _check_barred_count_is_bell),
    ("barred avoiders match dashed avoiders", 7, _check_barred_equals_dashed),
    ("config count is bell", 8, _check_config_count_is_bell),
    ("stable pair count is factorial", 5, _check_stable_pair_count),
    ("extended round trip", 7, _check_extended_round_trip),
    ("extended outputs are stable", 7, _check_extended_outputs_stable),
    ("inverse swaps the pair", 7, _check_inverse_swaps_pair),
    ("involutions pair with themselves", 7, _check_involutions_self_paired),
    ("self-paired configs count involutions", 6, _check_involution_config_count),
    ("noncrossing equals image of 312 avoiders", 7, _check_noncrossing_image),
    ("joint dashed avoiders count involutions", 7, _check_joint_avoiders_involutions),
    ("joint dashed avoiders count powers of two", 7, _check_joint_avoiders_powers),
    ("greedy pile count is optimal", 6, _check_greedy_optimal),
)


def check_labels() -> list[str]:
    return [label for label, _, _ in _CHECKS]


def run_checks(max_n: int) -> list[CheckResult]:
    """Run every check, capped at min(its default, max_n, PATIENCE_MAX_N)."""
    override = os.environ.get("PATIENCE_MAX_N")
    ceiling = None
    if override is not None:
        try:
            ceiling = int(override)
        except ValueError:
            ceiling = None
    results = []
    for label, default_cap, fn in _CHECKS:
        cap = min(default_cap if ceiling is None else ceiling, max_n)
        try:
            passed, detail = fn(cap)
        except Exception as exc:  # a crashing check is a failing check
            passed, detail = False, f"error: {exc}"
        results.append(CheckResult(label, cap, passed, detail))
    return results
