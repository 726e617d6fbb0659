import itertools

import pytest
from hypothesis import given, settings

from digitopo import (
    DigitalImage,
    DigitalMap,
    HomotopyTable,
    find_isomorphism,
    gen_box,
    gen_interval,
    gen_sphere,
    is_continuous,
    is_embedding,
    is_isomorphism,
    simplex_census,
    verify_homotopy,
)
from digitopo.morphisms import identity, translation

from generators import images, random_image, random_map, random_symmetry
from oracles import continuous_by_connected_subsets, isomorphic_by_permutations


class TestDigitalMap:
    def test_must_be_total(self):
        M = gen_interval(0, 2)
        with pytest.raises(ValueError):
            DigitalMap(M, M, {(0,): (0,)})

    def test_values_in_target(self):
        M = gen_interval(0, 1)
        with pytest.raises(ValueError):
            DigitalMap(M, M, {(0,): (0,), (1,): (5,)})

    def test_inverse_requires_bijection(self):
        M = gen_interval(0, 1)
        with pytest.raises(ValueError):
            DigitalMap(M, M, {(0,): (0,), (1,): (0,)}).inverse()

    def test_compose(self):
        M = gen_interval(0, 2)
        flip = DigitalMap(M, M, {(x,): (2 - x,) for x in range(3)})
        assert flip.compose(flip).table == identity(M).table


class TestContinuity:
    def test_constant_map(self):
        M, N = gen_interval(0, 3), gen_interval(0, 0)
        assert is_continuous(DigitalMap(M, N, {p: (0,) for p in M.points}))

    def test_jump(self):
        M = gen_interval(0, 1)
        N = gen_interval(0, 2)
        assert not is_continuous(DigitalMap(M, N, {(0,): (0,), (1,): (2,)}))

    def test_fold_onto_interval(self):
        M, N = gen_interval(0, 4), gen_interval(0, 2)
        assert is_continuous(DigitalMap(M, N, {(x,): (min(x, 4 - x),) for x in range(5)}))

    def test_identity(self):
        M = gen_sphere(2)
        assert is_continuous(identity(M))

    def test_matches_oracle(self, rng):
        for _ in range(150):
            A = random_image(rng, max_points=6)
            B = random_image(rng, max_points=6)
            f = random_map(rng, A, B)
            expected = continuous_by_connected_subsets(f.table, A.points, A.l, B.l)
            assert is_continuous(f) == expected

    def test_composition_of_continuous_maps(self, rng):
        checked = 0
        for _ in range(400):
            A, B, C = (random_image(rng, max_points=5) for _ in range(3))
            f, g = random_map(rng, A, B), random_map(rng, B, C)
            if is_continuous(f) and is_continuous(g):
                assert is_continuous(f.compose(g))
                checked += 1
        assert checked > 20


class TestIsomorphism:
    def test_four_cycle_not_interval(self):
        square = gen_box([(0, 1), (0, 1)])
        assert find_isomorphism(square, gen_interval(0, 3)) is None

    def test_four_cycle_not_s1(self):
        square = gen_box([(0, 1), (0, 1)])
        assert find_isomorphism(square, gen_sphere(1)) is None

    def test_translation(self):
        M = gen_box([(0, 2), (0, 1)])
        f = translation(M, (5, -3))
        assert is_isomorphism(f)

    def test_bijection_that_breaks_adjacency(self):
        M = gen_interval(0, 2)
        swap = DigitalMap(M, M, {(0,): (1,), (1,): (0,), (2,): (2,)})
        assert not is_isomorphism(swap)

    def test_deterministic_witness(self):
        A, B = gen_interval(0, 3), gen_interval(10, 13)
        assert find_isomorphism(A, B).table == find_isomorphism(A, B).table

    def test_found_maps_are_isomorphisms(self, rng):
        for _ in range(200):
            A = random_image(rng, max_points=7)
            sym = random_symmetry(rng, A.dim)
            B = DigitalImage.from_points([sym(p) for p in A.points], A.l)
            f = find_isomorphism(A, B)
            assert f is not None and is_isomorphism(f)

    @settings(max_examples=80, deadline=None)
    @given(images(max_points=6), images(max_points=6))
    def test_agrees_with_permutation_scan(self, A, B):
        found = find_isomorphism(A, B)
        expected = isomorphic_by_permutations(A.points, A.l, B.points, B.l)
        assert (found is not None) == expected
        if found is not None:
            assert is_isomorphism(found)

    def test_census_invariant(self, rng):
        for _ in range(100):
            A = random_image(rng, max_points=8)
            sym = random_symmetry(rng, A.dim)
            B = DigitalImage.from_points([sym(p) for p in A.points], A.l)
            assert simplex_census(A).counts == simplex_census(B).counts


class TestEmbedding:
    def test_axis_into_plane(self):
        line = gen_interval(0, 3)
        plane = gen_box([(0, 3), (0, 3)])
        gamma = DigitalMap(line, plane, {(x,): (x, 0) for x in range(4)})
        assert is_embedding(gamma)

    def test_diagonal_into_4_plane_is_not_an_embedding(self):
        line = gen_interval(0, 2)
        plane = gen_box([(0, 2), (0, 2)])
        gamma = DigitalMap(line, plane, {(x,): (x, x) for x in range(3)})
        assert not is_embedding(gamma)

    def test_non_injective(self):
        line = gen_interval(0, 1)
        gamma = DigitalMap(line, line, {(0,): (0,), (1,): (0,)})
        assert not is_embedding(gamma)


def _contraction(steps=2):
    M = gen_interval(0, 2)
    table = {((x,), t): (max(x - t, 0),) for x in range(3) for t in range(steps + 1)}
    H = HomotopyTable(M, M, steps, table)
    f = identity(M)
    g = DigitalMap(M, M, {p: (0,) for p in M.points})
    return M, H, f, g


class TestHomotopy:
    def test_contraction_of_interval(self):
        _, H, f, g = _contraction()
        assert verify_homotopy(H, f, g)

    def test_wrong_endpoint(self):
        M, H, f, _ = _contraction()
        assert verify_homotopy(H, f, f).reason.startswith("endpoint:")

    def test_discontinuous_track(self):
        M = gen_interval(0, 2)
        table = {((x,), t): ((x,) if t == 0 else (0,)) for x in range(3) for t in range(2)}
        H = HomotopyTable(M, M, 1, table)
        g = DigitalMap(M, M, {p: (0,) for p in M.points})
        check = verify_homotopy(H, identity(M), g)
        assert not check and check.reason.startswith("continuity:")

    def test_discontinuous_stage(self):
        M = gen_interval(0, 2)
        mid = {(0,): (0,), (1,): (1,), (2,): (0,)}
        bad = {(0,): (0,), (1,): (2,), (2,): (0,)}
        table = {}
        for p in M.points:
            table[p, 0], table[p, 1], table[p, 2] = mid[p], bad[p], mid[p]
        H = HomotopyTable(M, M, 2, table)
        f = DigitalMap(M, M, mid)
        check = verify_homotopy(H, f, f)
        assert not check and check.reason.startswith("continuity:")

    def test_table_must_be_total(self):
        M = gen_interval(0, 1)
        with pytest.raises(ValueError):
            HomotopyTable(M, M, 1, {((0,), 0): (0,)})

    def test_mismatched_maps(self):
        _, H, f, _ = _contraction()
        other = gen_interval(0, 5)
        with pytest.raises(ValueError):
            verify_homotopy(H, f, identity(other))

    def test_constant_homotopy(self):
        M = gen_sphere(1)
        steps = 3
        H = HomotopyTable(M, M, steps, {(p, t): p for p in M.points for t in range(steps + 1)})
        assert verify_homotopy(H, identity(M), identity(M))


def test_all_bijections_of_a_path():
    # the path 0-1-2 has exactly two automorphisms
    M = gen_interval(0, 2)
    autos = [perm for perm in itertools.permutations(M.points)
             if is_isomorphism(DigitalMap(M, M, dict(zip(M.points, perm))))]
    assert len(autos) == 2
