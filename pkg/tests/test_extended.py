import math
from itertools import permutations

import pytest

from patience_sorting import (
    DomainError,
    ParseError,
    extended_patience_sort,
    inverse,
    invert_extended,
    is_stable_pair,
    pair_from_json,
    pair_to_json,
    patience_sort,
    reflect,
    rpw_of_reflected,
    shape_of,
    two_line_permutation,
    validate_pile_config,
)

WORKED = (6, 4, 5, 1, 8, 7, 2, 3)
WORKED_R = ((6, 4, 1), (5, 2), (8, 7, 3))
WORKED_S = ((4, 2, 1), (7, 3), (8, 6, 5))


def test_extended_worked_example():
    assert extended_patience_sort(WORKED) == (WORKED_R, WORKED_S)


def test_extended_small_cases():
    assert extended_patience_sort((3, 2, 1)) == (((3, 2, 1),), ((3, 2, 1),))
    assert extended_patience_sort((1,)) == (((1,),), ((1,),))
    assert extended_patience_sort(()) == ((), ())
    assert extended_patience_sort((1, 2)) == (((1,), (2,)), ((1,), (2,)))


def test_recording_piles_are_valid_configs():
    for n in range(7):
        for sigma in permutations(range(1, n + 1)):
            r, s = extended_patience_sort(sigma)
            assert r == patience_sort(sigma)
            validate_pile_config(s)
            assert shape_of(s) == shape_of(r)


def test_reflect_examples():
    assert reflect(WORKED_S) == ((1, 2, 4), (3, 7), (5, 6, 8))
    assert reflect(((1,), (2,))) == ((1,), (2,))
    assert reflect(()) == ()


def test_reflect_is_an_involution():
    for n in range(6):
        for sigma in permutations(range(1, n + 1)):
            _, s = extended_patience_sort(sigma)
            assert reflect(reflect(s)) == s


def test_rpw_of_reflected_examples():
    assert rpw_of_reflected(WORKED_S) == (1, 2, 4, 3, 7, 5, 6, 8)
    assert rpw_of_reflected(((1,), (2,))) == (1, 2)
    assert rpw_of_reflected(((2, 1), (3,))) == (1, 2, 3)


def test_is_stable_pair_examples():
    assert is_stable_pair(WORKED_R, WORKED_S)
    assert is_stable_pair(((1,),), ((1,),))
    assert is_stable_pair((), ())
    # same shape but the pairing is not realizable by any play
    assert not is_stable_pair(((3, 1), (2,)), ((3, 1), (2,)))
    # shape mismatch is an immediate no
    assert not is_stable_pair(((2, 1), (3,)), ((1,), (3, 2)))


def test_is_stable_pair_accepts_all_outputs():
    # 2431 produces a pair whose reading words contain mirrored
    # pattern roles; it must still be accepted
    r, s = extended_patience_sort((2, 4, 3, 1))
    assert is_stable_pair(r, s)
    for n in range(7):
        for sigma in permutations(range(1, n + 1)):
            r, s = extended_patience_sort(sigma)
            assert is_stable_pair(r, s)


def test_is_stable_pair_matches_image_exhaustively():
    for n in range(5):
        image = {extended_patience_sort(s) for s in permutations(range(1, n + 1))}
        configs = {patience_sort(s) for s in permutations(range(1, n + 1))}
        accepted = {
            (r, s)
            for r in configs
            for s in configs
            if is_stable_pair(r, s)
        }
        assert accepted == image


def test_two_line_permutation_examples():
    assert two_line_permutation(WORKED_R, WORKED_S) == WORKED
    assert two_line_permutation(((2, 1), (3,)), ((2, 1), (3,))) == (2, 1, 3)
    with pytest.raises(DomainError):
        two_line_permutation(((2, 1), (3,)), ((1,), (3, 2)))


def test_two_line_on_unstable_pair_breaks_round_trip():
    # two_line_permutation is mechanical; stability is what makes it invert
    r = s = ((3, 1), (2,))
    sigma = two_line_permutation(r, s)
    assert sigma == (3, 2, 1)
    assert extended_patience_sort(sigma) != (r, s)


def test_invert_extended_examples():
    assert invert_extended(WORKED_R, WORKED_S) == WORKED
    assert invert_extended(((1,),), ((1,),)) == (1,)
    assert invert_extended(((2, 1), (3,)), ((2, 1), (3,))) == (2, 1, 3)
    assert invert_extended((), ()) == ()


def test_invert_extended_rejects_unstable():
    with pytest.raises(DomainError, match="not a stable pair"):
        invert_extended(((3, 1), (2,)), ((3, 1), (2,)))
    with pytest.raises(DomainError, match="not a stable pair"):
        invert_extended(((2, 1), (3,)), ((1,), (3, 2)))


def test_round_trip_exhaustive():
    for n in range(7):
        for sigma in permutations(range(1, n + 1)):
            r, s = extended_patience_sort(sigma)
            assert invert_extended(r, s) == sigma


def test_inverse_permutation_swaps_the_pair():
    for n in range(7):
        for sigma in permutations(range(1, n + 1)):
            r, s = extended_patience_sort(sigma)
            assert extended_patience_sort(inverse(sigma)) == (s, r)


def test_involutions_are_the_diagonal():
    for n in range(7):
        for sigma in permutations(range(1, n + 1)):
            r, s = extended_patience_sort(sigma)
            assert (sigma == inverse(sigma)) == (r == s)


def test_extended_is_injective_small():
    for n in range(5):
        seen = set()
        for sigma in permutations(range(1, n + 1)):
            seen.add(extended_patience_sort(sigma))
        assert len(seen) == math.factorial(n)


def test_pair_json_round_trip():
    doc = pair_to_json(WORKED_R, WORKED_S)
    assert doc == {
        "R": {"n": 8, "piles": [[6, 4, 1], [5, 2], [8, 7, 3]]},
        "S": {"n": 8, "piles": [[4, 2, 1], [7, 3], [8, 6, 5]]},
    }
    assert pair_from_json(doc) == (WORKED_R, WORKED_S)


def test_pair_from_json_rejects_bad_documents():
    with pytest.raises(ParseError):
        pair_from_json({"R": {"n": 1, "piles": [[1]]}})
    with pytest.raises(ParseError):
        pair_from_json([1, 2])
    with pytest.raises(DomainError):
        pair_from_json(
            {
                "R": {"n": 2, "piles": [[1, 2]]},
                "S": {"n": 2, "piles": [[2, 1]]},
            }
        )
