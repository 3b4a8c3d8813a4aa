"""Irreducible decompositions, Stanley covers, and Hilbert series."""

import pytest

from mvdecomp import (
    HilbertSeries,
    MonomialIdeal,
    StanleyCone,
    artinian_closure,
    hilbert_series,
    irreducible_decomposition,
    krull_dimension,
    maximal_corners,
    minimalize,
    stanley_artinian,
    stanley_general,
    standard_monomial_count,
    verify_irreducible,
    verify_stanley,
)
from mvdecomp.errors import DomainError


def test_eight_generator_decomposition_golden(seven_components):
    assert irreducible_decomposition(seven_components) == (
        (0, 0, 1),
        (0, 2, 3),
        (0, 4, 2),
        (1, 3, 0),
        (2, 1, 0),
        (3, 0, 4),
        (4, 5, 5),
    )


def test_artinian_decomposition_equals_corners(three_corners):
    assert irreducible_decomposition(three_corners) == maximal_corners(three_corners)


def test_monomial_prime_like_cases():
    assert irreducible_decomposition(minimalize([(1, 1)], 2)) == ((0, 1), (1, 0))
    assert irreducible_decomposition(minimalize([(1, 0)], 2)) == ((1, 0),)
    assert irreducible_decomposition(minimalize([(2, 0), (0, 3)], 2)) == ((2, 3),)


def test_decomposition_rejects_trivial_ideals():
    with pytest.raises(DomainError):
        irreducible_decomposition(MonomialIdeal(2, ()))
    with pytest.raises(DomainError):
        irreducible_decomposition(MonomialIdeal(2, ((0, 0),)))


def test_decomposition_options_do_not_change_output(seven_components):
    reference = irreducible_decomposition(seven_components)
    assert irreducible_decomposition(seven_components, threads=3) == reference
    assert irreducible_decomposition(seven_components, eliminate=True) == reference
    assert irreducible_decomposition(seven_components, backend="pure") == reference


def test_decomposition_verifies_on_corpus(corpus_small):
    for ideal in corpus_small[:30]:
        components = irreducible_decomposition(ideal)
        assert verify_irreducible(ideal, components)


def test_stanley_artinian_golden(three_corners):
    decomposition = stanley_artinian(three_corners)
    assert len(decomposition.cones) == 13
    assert all(cone.free == frozenset() for cone in decomposition.cones)
    bases = {cone.base for cone in decomposition.cones}
    assert (2, 0, 0) in bases and (0, 2, 2) in bases
    assert (3, 0, 0) not in bases


def test_stanley_artinian_rejects_non_artinian(seven_components):
    with pytest.raises(DomainError, match="stanley_general"):
        stanley_artinian(seven_components)


def test_stanley_general_agrees_on_artinian_input(three_corners):
    assert stanley_general(three_corners) == stanley_artinian(three_corners)


def test_stanley_general_golden_xy():
    decomposition = stanley_general(minimalize([(1, 1)], 2))
    assert [(cone.base, sorted(cone.free)) for cone in decomposition.cones] == [
        ((0, 0), []),
        ((0, 1), []),
        ((0, 2), [1]),
        ((1, 0), []),
        ((2, 0), [0]),
    ]


def test_stanley_single_variable_edge():
    decomposition = stanley_general(minimalize([(0, 1)], 2))
    assert [(cone.base, sorted(cone.free)) for cone in decomposition.cones] == [
        ((0, 0), []),
        ((1, 0), [0]),
    ]


def test_stanley_cone_covering():
    cone = StanleyCone((1, 0), frozenset({1}))
    assert cone.covers((1, 5))
    assert not cone.covers((2, 0))
    assert not cone.covers((0, 0))


def test_stanley_verifies_on_corpus(corpus_small):
    for ideal in corpus_small[:25]:
        assert verify_stanley(ideal, stanley_general(ideal))


def test_hilbert_series_golden_xy():
    series = hilbert_series(stanley_general(minimalize([(1, 1)], 2)))
    assert str(series) == "1 + 2*t + 2*t^2/(1-t)"
    assert series.coefficients(5) == [1, 2, 2, 2, 2, 2]
    assert series.coefficient(0) == 1
    assert series.coefficient(100) == 2


def test_hilbert_series_of_artinian_quotient_is_polynomial(three_corners):
    series = hilbert_series(stanley_artinian(three_corners))
    assert "/" not in str(series)
    counts = [standard_monomial_count(three_corners, d) for d in range(9)]
    assert series.coefficients(8) == counts
    assert sum(counts) == 13


def test_hilbert_series_groups_terms_by_power():
    series = HilbertSeries(((0, 0), (0, 1), (1, 1), (2, 2)))
    assert str(series) == "1 + (1 + t)/(1-t) + t^2/(1-t)^2"
    # 1 at d=0; 1/(1-t) and t/(1-t) contribute 1 each; t^2/(1-t)^2 adds d-1
    assert series.coefficients(4) == [2, 2, 3, 4, 5]


def test_hilbert_matches_counting_on_corpus(corpus_small):
    for ideal in corpus_small[:20]:
        series = hilbert_series(stanley_general(ideal))
        expected = [standard_monomial_count(ideal, d) for d in range(12)]
        assert series.coefficients(11) == expected


def test_krull_dimension_goldens(three_corners, seven_components):
    assert krull_dimension(stanley_artinian(three_corners)) == 0
    assert krull_dimension(stanley_general(seven_components)) == 2
    assert krull_dimension(stanley_general(minimalize([(1, 1)], 2))) == 1


def test_krull_matches_component_support(corpus_small):
    for ideal in corpus_small[:20]:
        components = irreducible_decomposition(ideal)
        expected = max(ideal.n - sum(1 for e in c if e) for c in components)
        assert krull_dimension(stanley_general(ideal)) == expected


def test_truncation_produces_irredundant_components(corpus_small):
    from mvdecomp import divides

    for ideal in corpus_small[:40]:
        components = irreducible_decomposition(ideal)
        assert len(set(components)) == len(components)
        for i, a in enumerate(components):
            for b in components[i + 1 :]:
                assert not all(
                    y == 0 or (0 < x <= y) for x, y in zip(a, b)
                ), (a, b)
                assert not all(
                    x == 0 or (0 < y <= x) for x, y in zip(a, b)
                ), (a, b)
