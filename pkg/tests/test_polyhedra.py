from fractions import Fraction as F
from itertools import product
from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bsato.errors import EmptyInput, NotPointed
from bsato.polyhedra import HRep, PointedCone, VRep, extreme_rays, h_to_v, hilbert_basis, triangulate, v_to_h

from oracles import brute_hilbert_basis, caratheodory_member, in_cone, lattice_points_between, representable


def ineq_set(h):
    return {(tuple(u), b) for u, b in h.inequalities}


def test_hull_of_two_shifted_orthants():
    h = v_to_h(VRep(points=[(2, 0), (0, 2)], rays=[(1, 0), (0, 1)]))
    assert ineq_set(h) == {((1, 1), 2), ((1, 0), 0), ((0, 1), 0)}


def test_hull_of_pairwise_products_in_three_variables():
    h = v_to_h(VRep(points=[(0, 1, 1), (1, 0, 1), (1, 1, 0)], rays=[(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert ineq_set(h) == {
        ((1, 1, 1), 2),
        ((0, 1, 1), 1),
        ((1, 0, 1), 1),
        ((1, 1, 0), 1),
        ((1, 0, 0), 0),
        ((0, 1, 0), 0),
        ((0, 0, 1), 0),
    }


def test_orthant():
    h = v_to_h(VRep(points=[(0, 0, 0)], rays=[(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert ineq_set(h) == {((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0)}


def test_empty_vrep():
    with pytest.raises(EmptyInput):
        v_to_h(VRep())


def test_h_to_v_recovers_vertices():
    v = h_to_v(HRep(inequalities=[((1, 1), 2), ((1, 0), 0), ((0, 1), 0)]))
    assert set(v.points) == {(2, 0), (0, 2)}
    assert set(v.rays) == {(1, 0), (0, 1)}


def test_extreme_rays_examples():
    assert extreme_rays(PointedCone(2, [(1, 0), (0, 1)])) == [(0, 1), (1, 0)]
    assert extreme_rays(PointedCone(2, [(1, 0), (1, 2)])) == [(0, 1), (2, -1)]
    assert extreme_rays(PointedCone(2, [(1, 0)], [(1, 1)])) == [(1, -1)]


def test_not_pointed():
    with pytest.raises(NotPointed):
        PointedCone(2, [(1, 0)])


def test_hilbert_basis_examples():
    assert hilbert_basis(PointedCone(2, [(1, 0), (0, 1)])) == [(0, 1), (1, 0)]
    assert hilbert_basis(PointedCone(2, [(1, 0), (1, 2)])) == [(0, 1), (1, 0), (2, -1)]
    assert hilbert_basis(PointedCone(2, [(1, 0), (-1, 0), (0, 1), (0, -1)])) == []


def test_hilbert_basis_of_narrow_cone_matches_brute_force():
    cons = [(0, 1), (5, -3)]
    assert hilbert_basis(PointedCone(2, cons)) == brute_hilbert_basis(cons, [], 6)


def test_triangulation_covers_square_cone():
    rays = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)]
    cells = triangulate(rays)
    assert len(cells) == 2
    assert all(len(c) == 3 for c in cells)


vec = st.integers(-3, 3)


def cone_inputs(d):
    normals = st.lists(st.tuples(*[vec] * d), min_size=d, max_size=d + 2)
    return normals


def _pointed(d, normals, eqs=()):
    normals = [u for u in normals if any(u)]
    try:
        return PointedCone(d, normals, eqs)
    except NotPointed:
        return None


@settings(max_examples=120)
@given(st.sampled_from([2, 3]).flatmap(lambda d: st.tuples(st.just(d), cone_inputs(d))))
def test_hilbert_basis_coverage_and_irreducibility(data):
    d, normals = data
    cone = _pointed(d, normals)
    assume(cone is not None and cone.rays)
    hb = hilbert_basis(cone)
    ineqs, eqs = cone.inequalities, cone.equations
    assert hb == sorted(set(hb))
    for h in hb:
        assert in_cone(ineqs, eqs, h)
    radius = 10 if d == 2 else 6
    for x in product(range(-radius, radius + 1), repeat=d):
        if in_cone(ineqs, eqs, x):
            assert representable(hb, ineqs, eqs, x), x
    for h in hb:
        splits = [a for a in lattice_points_between(ineqs, eqs, h) if any(a) and a != h]
        assert not splits, (h, splits[:3])


@settings(max_examples=100)
@given(cone_inputs(3), st.tuples(vec, vec, vec))
def test_hilbert_basis_in_a_plane_slice(normals, eq):
    assume(any(eq))
    cone = _pointed(3, normals, [eq])
    assume(cone is not None and cone.rays)
    hb = hilbert_basis(cone)
    ineqs, eqs = cone.inequalities, cone.equations
    for x in product(range(-6, 7), repeat=3):
        if in_cone(ineqs, eqs, x):
            assert representable(hb, ineqs, eqs, x)
    for h in hb:
        assert not [a for a in lattice_points_between(ineqs, eqs, h) if any(a) and a != h]


@settings(max_examples=100)
@given(st.sampled_from([2, 3]).flatmap(lambda d: st.tuples(st.just(d), cone_inputs(d))))
def test_extreme_rays_primitive_and_distinct(data):
    d, normals = data
    cone = _pointed(d, normals)
    assume(cone is not None)
    rays = extreme_rays(cone)
    for r in rays:
        assert gcd(*r) == 1
        assert in_cone(cone.inequalities, cone.equations, r)
    for i, a in enumerate(rays):
        for b in rays[i + 1 :]:
            # proportional primitive vectors with the same orientation are equal
            assert a != b


small_point = st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))


@settings(max_examples=100)
@given(
    st.sampled_from([2, 3]),
    st.lists(small_point, min_size=1, max_size=4),
    st.lists(small_point, max_size=3),
)
def test_v_to_h_round_trip(d, points, rays):
    points = [p[:d] for p in points]
    rays = [r[:d] for r in rays if any(r[:d])]
    h = v_to_h(VRep(points, rays))
    for p in points:
        assert h.contains(p)
    for r in rays:
        assert all(sum(a * b for a, b in zip(u, r)) >= 0 for u, _ in h.inequalities)
        assert all(sum(a * b for a, b in zip(v, r)) == 0 for v, _ in h.equations)
    grid = [F(k, 2) for k in range(-4, 5)] if d == 2 else list(range(-2, 3))
    for x in product(grid, repeat=d):
        assert h.contains(x) == caratheodory_member(points, rays, x), x
