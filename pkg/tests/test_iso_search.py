from fractions import Fraction as F
from math import factorial

import pytest

from isorealize.exceptions import NotABijection, SizeGuardExceeded, SpaceMismatch, TooLargeForOracle
from isorealize.groups import cyclic_group, symmetric_group
from isorealize.iso_search import (
    IsoGroup,
    Isometry,
    compose,
    enumerate_isometries,
    identity,
    invert,
    is_isometry,
    naive_enumerate,
    verify_embedding,
)
from isorealize.metric import FiniteMetricSpace, discrete_space, rescale_to_unit_diameter

from conftest import random_space


class TestIsIsometry:
    def test_identity(self, rigid3):
        assert is_isometry(rigid3, (0, 1, 2))

    def test_transposition_on_discrete(self, c3):
        assert is_isometry(c3, (1, 0, 2))

    def test_endpoint_swap_on_rigid(self, rigid3, listed_rigid_matrix):
        assert not is_isometry(rigid3, (1, 0, 2))
        assert not is_isometry(listed_rigid_matrix, (1, 0, 2))

    def test_not_a_bijection(self, c3):
        with pytest.raises(NotABijection):
            is_isometry(c3, (0, 0, 1))


class TestAlgebra:
    def test_inverse(self, c3):
        phi = Isometry((1, 2, 0), c3)
        assert compose(phi, invert(phi)) == identity(c3)

    def test_identity_neutral(self, c3):
        psi = Isometry((2, 1, 0), c3)
        assert compose(identity(c3), psi) == psi

    def test_rotations(self, c3):
        rot = Isometry((1, 2, 0), c3)
        assert compose(rot, rot).perm == (2, 0, 1)

    def test_space_mismatch(self, c3, rigid3):
        with pytest.raises(SpaceMismatch):
            compose(identity(c3), identity(rigid3))


class TestEnumerate:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_discrete_is_symmetric_group(self, n):
        group = enumerate_isometries(discrete_space(n))
        assert len(group) == factorial(n)

    def test_rigid(self, rigid3, listed_rigid_matrix):
        for space in (rigid3, listed_rigid_matrix):
            assert enumerate_isometries(space).perms == [(0, 1, 2)]
            assert naive_enumerate(space).perms == [(0, 1, 2)]

    def test_one_point(self):
        assert len(naive_enumerate(discrete_space(1))) == 1

    def test_lexicographic_order(self):
        assert enumerate_isometries(discrete_space(3)).perms == sorted(naive_enumerate(discrete_space(3)).perms)

    def test_matches_oracle_and_is_closed(self, rng):
        for trial in range(50):
            kind = ("discrete", "perturbed", "path")[trial % 3]
            space = random_space(rng, rng.randint(1, 6), kind)
            fast = enumerate_isometries(space)
            assert fast == naive_enumerate(space)
            assert fast.is_closed()

    def test_rescale_invariance(self, rng):
        for _ in range(10):
            space = random_space(rng, rng.randint(2, 6), "path")
            assert enumerate_isometries(space) == enumerate_isometries(rescale_to_unit_diameter(space))

    def test_threads_give_identical_output(self, rng):
        for _ in range(5):
            space = random_space(rng, 6, "perturbed")
            assert enumerate_isometries(space, n_jobs=3).perms == enumerate_isometries(space).perms

    def test_budget(self):
        with pytest.raises(SizeGuardExceeded):
            enumerate_isometries(discrete_space(6), node_budget=50)

    def test_oracle_cap(self):
        with pytest.raises(TooLargeForOracle):
            naive_enumerate(discrete_space(9))

    def test_isogroup_json(self, c3):
        group = enumerate_isometries(c3)
        assert group.to_json() == {"n": 3, "elements": [list(p) for p in sorted(group.perms)]}
        assert IsoGroup.from_perms(c3, group.perms) == group


class TestVerifyEmbedding:
    def test_left_translations_of_c3(self, c3):
        group = cyclic_group(3)
        images = [Isometry(tuple(group.mul(g, x) for x in range(3)), c3) for g in range(3)]
        assert verify_embedding(group, images)

    def test_trivial_map(self, c3):
        check = verify_embedding(cyclic_group(3), lambda g: identity(c3))
        assert not check and check.reason == "not injective"

    def test_translation_times_conjugation_on_s3(self):
        group = symmetric_group(3)
        X = discrete_space(6)
        c = 1  # a transposition, not central in S_3
        conj = Isometry(tuple(group.mul(group.mul(c, x), group.inv(c)) for x in range(6)), X)

        def image(g):
            return compose(Isometry(tuple(group.mul(g, x) for x in range(6)), X), conj)

        check = verify_embedding(group, image)
        assert not check and check.reason == "not a homomorphism"
        g, h = check.witness
        assert image(group.mul(g, h)).perm != compose(image(g), image(h)).perm
