"""Exact convex geometry: hull descriptions, membership, closest points."""

import random
from fractions import Fraction

from gaugedgw.convex import (
    _hull_general,
    closest_point_to_origin,
    hull_description,
    primitive,
    rank_rows,
    solve_linear,
)


class TestLinearAlgebra:
    def test_solve_consistent(self):
        assert solve_linear([[1, 2], [3, 4]], [5, 11]) == [1, 2]

    def test_solve_inconsistent(self):
        assert solve_linear([[1, 1], [2, 2]], [1, 3]) is None

    def test_rank(self):
        assert rank_rows([[1, 2], [2, 4], [0, 1]]) == 2

    def test_primitive(self):
        assert primitive((Fraction(1, 2), Fraction(-3, 4))) == (2, -3)
        assert primitive((4, -6)) == (2, -3)


class TestHullDescription:
    def test_point_hull(self):
        desc = hull_description([(1, 2)])
        assert desc.affine_dim == 0
        assert desc.contains((1, 2))
        assert not desc.contains((0, 0))
        assert desc.contains_relative_interior((1, 2))

    def test_segment(self):
        desc = hull_description([(0, 0), (2, 2)])
        assert desc.affine_dim == 1
        assert desc.contains((1, 1))
        assert desc.contains_relative_interior((1, 1))
        assert desc.contains((0, 0)) and not desc.contains_relative_interior((0, 0))
        assert not desc.contains((3, 3))
        assert not desc.contains((1, 0))

    def test_triangle(self):
        desc = hull_description([(0, 0), (4, 0), (0, 4)])
        assert desc.affine_dim == 2
        assert desc.contains_relative_interior((1, 1))
        assert desc.contains((2, 0)) and not desc.contains_relative_interior((2, 0))
        assert not desc.contains((3, 3))

    def test_interval_1d(self):
        desc = hull_description([(-1,), (1,), (0,)])
        assert desc.contains((0,)) and desc.contains_relative_interior((0,))
        assert desc.contains((1,)) and not desc.contains_relative_interior((1,))
        assert not desc.contains((2,))

    def test_fast_path_matches_general_path(self):
        rng = random.Random(7)
        for _ in range(300):
            size = rng.randint(1, 5)
            points = [
                (rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(size)
            ]
            fast = hull_description(points)
            slow = _hull_general(points)
            assert fast.affine_dim == slow.affine_dim
            for x in [(a, b) for a in range(-4, 5) for b in range(-4, 5)]:
                assert fast.contains(x) == slow.contains(x), (points, x)
                assert fast.contains_relative_interior(
                    x
                ) == slow.contains_relative_interior(x), (points, x)

    def test_three_dimensional_general_path(self):
        cube = [(a, b, c) for a in (0, 2) for b in (0, 2) for c in (0, 2)]
        desc = hull_description(cube)
        assert desc.affine_dim == 3
        assert desc.contains_relative_interior((1, 1, 1))
        assert desc.contains((0, 1, 1)) and not desc.contains_relative_interior(
            (0, 1, 1)
        )
        assert not desc.contains((3, 1, 1))

    def test_lower_dimensional_hull_in_three_space(self):
        square = [(0, 0, 1), (2, 0, 1), (0, 2, 1), (2, 2, 1)]
        desc = hull_description(square)
        assert desc.affine_dim == 2
        assert desc.contains((1, 1, 1))
        assert not desc.contains((1, 1, 0))


IDENTITY2 = ((1, 0), (0, 1))


class TestClosestPoint:
    def test_origin_inside(self):
        v = closest_point_to_origin([(-1, -1), (2, 0), (0, 2)], IDENTITY2)
        assert v == (0, 0)

    def test_single_point(self):
        assert closest_point_to_origin([(3, 4)], IDENTITY2) == (3, 4)

    def test_segment_projection(self):
        v = closest_point_to_origin([(1, -1), (1, 1)], IDENTITY2)
        assert v == (1, 0)

    def test_vertex_is_closest(self):
        v = closest_point_to_origin([(1, 1), (2, 1), (1, 2)], IDENTITY2)
        assert v == (1, 1)

    def test_metric_changes_projection(self):
        # with metric diag(1, 4) the segment x + y = 2 is closest at (8/5, 2/5)
        gram = ((1, 0), (0, 4))
        v = closest_point_to_origin([(2, 0), (0, 2)], gram)
        assert v == (Fraction(8, 5), Fraction(2, 5))

    def test_variational_inequality_on_random_inputs(self):
        # v is the projection of 0 iff v lies in the hull and
        # (p - v, v)_G >= 0 for every generator p.
        rng = random.Random(11)
        grams = [IDENTITY2, ((2, 1), (1, 2)), ((1, 0), (0, 4))]
        for _ in range(200):
            size = rng.randint(1, 5)
            points = [
                (
                    Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3))),
                    Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3))),
                )
                for _ in range(size)
            ]
            gram = rng.choice(grams)
            v = closest_point_to_origin(points, gram)

            def gdot(a, b):
                return sum(
                    Fraction(a[i]) * gram[i][j] * Fraction(b[j])
                    for i in range(2)
                    for j in range(2)
                )

            for p in points:
                gap = gdot((p[0] - v[0], p[1] - v[1]), v)
                assert gap >= 0, (points, gram, v, p)
            # membership through the independent H-description route
            desc = hull_description(points)
            assert desc.contains(v)
