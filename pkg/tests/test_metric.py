from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from isorealize.exceptions import (
    AsymmetricMatrix,
    DegenerateSpace,
    DuplicateLabel,
    EmptySubset,
    FewerThanTwoPoints,
    MalformedFraction,
    MalformedMatrix,
    NonpositiveOffDiagonal,
    NonzeroDiagonal,
    RepeatedIndex,
    TriangleViolation,
)
from isorealize.iso_search import naive_enumerate
from isorealize.metric import (
    FiniteMetricSpace,
    diameter,
    discrete_space,
    distance_to_subset,
    min_pairwise_distance,
    parse_fraction,
    rescale_to_unit_diameter,
    validate_space,
)

from conftest import random_space


class TestValidateSpace:
    def test_two_points(self):
        space = validate_space(["a", "b"], [[F(0), F(1)], [F(1), F(0)]])
        assert space.n == 2

    def test_asymmetric(self):
        with pytest.raises(AsymmetricMatrix) as exc:
            validate_space(["a", "b"], [[0, 1], [2, 0]])
        assert exc.value.pair == (0, 1)

    def test_triangle(self):
        with pytest.raises(TriangleViolation) as exc:
            validate_space(["a", "b", "c"], [[0, 1, 3], [1, 0, 1], [3, 1, 0]])
        assert exc.value.triple == (0, 1, 2)

    def test_nonzero_diagonal(self):
        with pytest.raises(NonzeroDiagonal):
            validate_space(["a", "b"], [[F(1, 2), 1], [1, 0]])

    def test_zero_distance_rejected(self):
        with pytest.raises(NonpositiveOffDiagonal) as exc:
            validate_space(["a", "b", "c"], [[0, 0, 1], [0, 0, 1], [1, 1, 0]])
        assert exc.value.pair == (0, 1)

    def test_floats_rejected(self):
        with pytest.raises(MalformedMatrix):
            validate_space(["a", "b"], [[0, 0.5], [0.5, 0]])

    def test_duplicate_labels(self):
        with pytest.raises(DuplicateLabel):
            validate_space(["a", "a"], [[0, 1], [1, 0]])

    def test_non_square(self):
        with pytest.raises(MalformedMatrix):
            validate_space(["a", "b"], [[0, 1]])

    def test_tight_triangle_accepted(self):
        validate_space("abc", [[0, 1, 2], [1, 0, 1], [2, 1, 0]])

    def test_violation_by_a_tiny_margin(self):
        eps = F(1, 10**30)
        with pytest.raises(TriangleViolation):
            validate_space("abc", [[0, 1, 2 + eps], [1, 0, 1], [2 + eps, 1, 0]])

    def test_accepts_exactly_the_metrics_on_three_points(self):
        # every symmetric zero-diagonal matrix with entries in {0, 1/2, 1, 2}
        vals = [F(0), F(1, 2), F(1), F(2)]
        for a, b, c in product(vals, repeat=3):
            is_metric = min(a, b, c) > 0 and a <= b + c and b <= a + c and c <= a + b
            m = [[0, a, b], [a, 0, c], [b, c, 0]]
            if is_metric:
                validate_space("xyz", m)
            else:
                with pytest.raises((TriangleViolation, NonpositiveOffDiagonal)):
                    validate_space("xyz", m)


class TestParseFraction:
    @pytest.mark.parametrize("text,value", [("3/2", F(3, 2)), ("0", F(0)), ("-7", F(-7)), ("1/10", F(1, 10))])
    def test_ok(self, text, value):
        assert parse_fraction(text) == value

    @pytest.mark.parametrize("text", ["", "1/0", "2/4", "1.5", " 1", "a/b", "1//2", 0.5, None, True])
    def test_malformed(self, text):
        with pytest.raises(MalformedFraction):
            parse_fraction(text)


def test_diameter():
    assert diameter(discrete_space(1)) == 0
    assert diameter(FiniteMetricSpace("ab", [[0, 1], [1, 0]])) == 1
    assert diameter(discrete_space(3)) == 1


class TestRescale:
    def test_scalar(self):
        out = rescale_to_unit_diameter(FiniteMetricSpace("ab", [[0, 4], [4, 0]]))
        assert out.d == ((0, 1), (1, 0))

    def test_identity_case(self, c3):
        assert rescale_to_unit_diameter(c3) == c3

    def test_three_points(self):
        out = rescale_to_unit_diameter(FiniteMetricSpace("abc", [[0, 2, 4], [2, 0, 2], [4, 2, 0]]))
        assert out.d == ((0, F(1, 2), 1), (F(1, 2), 0, F(1, 2)), (1, F(1, 2), 0))
        assert out.labels == ("a", "b", "c")

    def test_degenerate(self):
        with pytest.raises(DegenerateSpace):
            rescale_to_unit_diameter(discrete_space(1))

    def test_unit_diameter_and_same_isometries(self, rng):
        for _ in range(30):
            n = rng.randint(2, 6)
            space = random_space(rng, n, rng.choice(["discrete", "perturbed", "path"]))
            scaled = rescale_to_unit_diameter(space)
            assert diameter(scaled) == 1
            assert naive_enumerate(space).perms == naive_enumerate(scaled).perms


class TestDistanceToSubset:
    def test_member(self, c3):
        assert distance_to_subset(c3, 1, {1, 2}) == 0
        assert distance_to_subset(c3, 1, range(3)) == 0

    def test_discrete(self, c3):
        assert distance_to_subset(c3, 2, {0, 1}) == 1

    def test_empty(self, c3):
        with pytest.raises(EmptySubset):
            distance_to_subset(c3, 0, [])

    @settings(max_examples=50)
    @given(st.integers(0, 4), st.sets(st.integers(0, 4), min_size=1))
    def test_zero_iff_member(self, p, subset):
        space = FiniteMetricSpace("abcde", [[F(abs(a - b)) for b in range(5)] for a in range(5)])
        assert (distance_to_subset(space, p, subset) == 0) == (p in subset)


class TestMinPairwise:
    def test_discrete(self, c3):
        assert min_pairwise_distance(c3, (0, 2)) == 1

    def test_half(self):
        space = FiniteMetricSpace("abc", [[0, F(1, 2), 1], [F(1, 2), 0, F(1, 2)], [1, F(1, 2), 0]])
        assert min_pairwise_distance(space, (0, 2)) == 1
        assert min_pairwise_distance(space, (0, 1, 2)) == F(1, 2)

    def test_errors(self, c3):
        with pytest.raises(FewerThanTwoPoints):
            min_pairwise_distance(c3, (0,))
        with pytest.raises(RepeatedIndex):
            min_pairwise_distance(c3, (0, 0))
