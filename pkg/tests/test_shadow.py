from itertools import permutations

import pytest

from patience_sorting import (
    DomainError,
    corner_abscissae,
    corner_ordinates,
    diagram_to_json,
    lis_length,
    lr_minima_decomposition,
    patience_sort,
    shadow_diagram,
    shadowline_of,
)


def test_shadowline_of_diagram_points():
    points = {(1, 6), (2, 4), (3, 5), (4, 1), (5, 8), (6, 7), (7, 2), (8, 3)}
    assert shadowline_of(points) == ((1, 6), (2, 4), (4, 1))


def test_shadowline_single_and_nested():
    assert shadowline_of({(2, 4)}) == ((2, 4),)
    assert shadowline_of({(1, 1), (2, 2), (3, 3)}) == ((1, 1),)


def test_shadowline_errors():
    with pytest.raises(DomainError, match="empty"):
        shadowline_of(set())
    with pytest.raises(DomainError, match="distinct"):
        shadowline_of({(1, 2), (1, 3)})
    with pytest.raises(DomainError, match="distinct"):
        shadowline_of({(1, 2), (3, 2)})


def test_shadow_diagram_worked_example():
    diagram = shadow_diagram((6, 4, 5, 1, 8, 7, 2, 3))
    assert corner_ordinates(diagram) == [[6, 4, 1], [5, 2], [8, 7, 3]]
    assert corner_abscissae(diagram) == [[1, 2, 4], [3, 7], [5, 6, 8]]


def test_shadow_diagram_monotone():
    assert shadow_diagram((3, 2, 1)) == (((1, 3), (2, 2), (3, 1)),)
    assert shadow_diagram((1, 2, 3)) == (((1, 1),), ((2, 2),), ((3, 3),))
    assert shadow_diagram(()) == ()


def test_corner_ordinates_derived_example():
    assert corner_ordinates(shadow_diagram((2, 1, 4, 3))) == [[2, 1], [4, 3]]
    assert corner_ordinates(shadow_diagram((1,))) == [[1]]


def test_corners_match_piles_and_positions_exhaustive():
    for n in range(7):
        for sigma in permutations(range(1, n + 1)):
            diagram = shadow_diagram(sigma)
            piles = [list(p) for p in patience_sort(sigma)]
            positions = [
                [pos for pos, _ in rnd] for rnd in lr_minima_decomposition(sigma)
            ]
            assert corner_ordinates(diagram) == piles
            assert corner_abscissae(diagram) == positions
            assert len(diagram) == lis_length(sigma)


def test_shadowlines_never_cross_exhaustive():
    # a corner of a later line weakly below-left of an earlier-line corner
    # would have been minimal in the earlier round
    for n in range(7):
        for sigma in permutations(range(1, n + 1)):
            lines = shadow_diagram(sigma)
            for j in range(len(lines)):
                for i in range(j + 1, len(lines)):
                    for bx, by in lines[i]:
                        assert not any(bx <= ax and by <= ay for ax, ay in lines[j])


def test_diagram_json():
    doc = diagram_to_json(shadow_diagram((2, 1, 4, 3)))
    assert doc == {"lines": [[[1, 2], [2, 1]], [[3, 4], [4, 3]]]}
