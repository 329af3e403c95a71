"""Exact rational polyhedra: double description, triangulation, Hilbert bases.

Everything here works with integer or :class:`~fractions.Fraction` vectors
and never rounds. Vectors handed back to callers are tuples of ints
(primitive where they represent directions) sorted lexicographically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .errors import EmptyInput, NotPointed

__all__ = [
    "VRep",
    "HRep",
    "PointedCone",
    "DDCone",
    "v_to_h",
    "extreme_rays",
    "triangulate",
    "hilbert_basis",
    "cone_contains",
]


@dataclass(frozen=True)
class VRep:
    """``conv(points) + cone(rays)``."""

    points: tuple = ()
    rays: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(tuple(Fraction(x) for x in p) for p in self.points))
        object.__setattr__(self, "rays", tuple(tuple(Fraction(x) for x in r) for r in self.rays))

    @property
    def dim(self) -> int:
        if self.points:
            return len(self.points[0])
        if self.rays:
            return len(self.rays[0])
        raise EmptyInput("empty V-representation")


@dataclass(frozen=True)
class HRep:
    """``{x : <u, x> >= b for (u, b) in inequalities, <v, x> = c for (v, c) in equations}``."""

    inequalities: tuple = ()
    equations: tuple = ()

    def contains(self, x) -> bool:
        return all(la.dot(u, x) >= b for u, b in self.inequalities) and all(
            la.dot(v, x) == c for v, c in self.equations
        )

    def reduce(self) -> HRep:
        """Drop inequalities implied by the others (normalizes through generators)."""
        return v_to_h(h_to_v(self))


@dataclass(frozen=True)
class PointedCone:
    """``{x in R^d : <u, x> >= 0 for u in inequalities, <v, x> = 0 for v in equations}``.

    Construction fails with :class:`NotPointed` if the set contains a line.
    """

    dim: int
    inequalities: tuple = ()
    equations: tuple = ()
    _dd: DDCone = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        ineqs = tuple(la.primitive(u) for u in self.inequalities)
        eqs = tuple(la.primitive(v) for v in self.equations)
        for v in ineqs + eqs:
            if len(v) != self.dim:
                raise ValueError(f"normal {v} does not have {self.dim} entries")
        object.__setattr__(self, "inequalities", ineqs)
        object.__setattr__(self, "equations", eqs)
        if self._dd is None:
            dd = DDCone(self.dim)
            for v in eqs:
                dd = dd.add_equation(v)
            for u in ineqs:
                dd = dd.add_inequality(u)
            object.__setattr__(self, "_dd", dd)
        if self._dd.lineality:
            raise NotPointed(f"cone contains the line spanned by {self._dd.lineality[0]}")

    def contains(self, x) -> bool:
        return all(la.dot(u, x) >= 0 for u in self.inequalities) and all(
            la.dot(v, x) == 0 for v in self.equations
        )

    @property
    def rays(self) -> list[tuple[int, ...]]:
        return sorted(r for r, _ in self._dd.rays)


def cone_contains(cone: PointedCone, x) -> bool:
    return cone.contains(x)


def _neg(v):
    return tuple(-x for x in v)


class DDCone:
    """Incremental double description of ``{x : A x >= 0, E x = 0}``.

    Holds a lineality basis and the extreme rays of the pointed quotient,
    each ray tagged with the set of processed inequalities it makes tight.
    Adding a constraint returns a new object, so a search tree can branch
    from any intermediate state.
    """

    __slots__ = ("dim", "lineality", "rays", "count")

    def __init__(self, dim: int, lineality=None, rays=None, count: int = 0):
        self.dim = dim
        if lineality is None:
            lineality = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
        self.lineality: list[tuple[int, ...]] = lineality
        self.rays: list[tuple[tuple[int, ...], frozenset]] = rays if rays is not None else []
        self.count = count

    def add_equation(self, a) -> DDCone:
        a = la.primitive(a)
        return self.add_inequality(a).add_inequality(_neg(a))

    def add_inequality(self, a) -> DDCone:
        a = la.primitive(a)
        idx = self.count
        lin = self.lineality
        vals = [la.dot(a, l) for l in lin]
        pick = next((i for i, v in enumerate(vals) if v != 0), None)
        if pick is not None:
            l0, v0 = lin[pick], vals[pick]
            if v0 < 0:
                l0, v0 = _neg(l0), -v0
            new_lin = []
            for i, (l, v) in enumerate(zip(lin, vals)):
                if i == pick:
                    continue
                w = la.primitive(tuple(v0 * x - v * y for x, y in zip(l, l0)))
                if any(w):
                    new_lin.append(w)
            new_rays = []
            for r, z in self.rays:
                v = la.dot(a, r)
                w = la.primitive(tuple(v0 * x - v * y for x, y in zip(r, l0)))
                new_rays.append((w, z | {idx}))
            new_rays.append((la.primitive(l0), frozenset(range(idx))))
            return DDCone(self.dim, new_lin, new_rays, idx + 1)

        pos, zero, neg = [], [], []
        for i, (r, z) in enumerate(self.rays):
            v = la.dot(a, r)
            if v > 0:
                pos.append((i, r, z, v))
            elif v < 0:
                neg.append((i, r, z, v))
            else:
                zero.append((r, z | {idx}))
        new_rays = [(r, z) for _, r, z, _ in pos] + zero
        if pos and neg:
            allz = [z for _, z in self.rays]
            for ip, rp, zp, vp in pos:
                for jn, rn, zn, vn in neg:
                    common = zp & zn
                    adjacent = True
                    for m, z in enumerate(allz):
                        if m != ip and m != jn and common <= z:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    w = la.primitive(tuple(vp * x - vn * y for x, y in zip(rn, rp)))
                    new_rays.append((w, common | {idx}))
        return DDCone(self.dim, list(lin), new_rays, idx + 1)

    def cuts_interior(self, a) -> bool:
        """For a full-dimensional cone: whether adding ``a.x >= 0`` keeps it full dimensional."""
        if any(la.dot(a, l) != 0 for l in self.lineality):
            return True
        return any(la.dot(a, r) > 0 for r, _ in self.rays)

    def spans_full_space(self) -> bool:
        """Whether the cone is full dimensional."""
        gens = list(self.lineality) + [r for r, _ in self.rays]
        return la.rank(gens) == self.dim

    def generators(self):
        return list(self.lineality), sorted(r for r, _ in self.rays)


def v_to_h(v: VRep) -> HRep:
    """Irredundant inequality description of ``conv(points) + cone(rays)``.

    The homogenized generators ``(1, p)`` and ``(0, r)`` span a cone whose
    facets are the extreme rays of its dual; dual lineality gives equations.
    """
    if not v.points and not v.rays:
        raise EmptyInput("no points and no rays")
    d = v.dim
    points = list(v.points) or [tuple(Fraction(0) for _ in range(d))]
    gens = [(Fraction(1),) + tuple(p) for p in points] + [(Fraction(0),) + tuple(r) for r in v.rays]
    dual = DDCone(d + 1)
    for g in gens:
        dual = dual.add_inequality(g)
    ineqs = []
    for y, _ in dual.rays:
        u = y[1:]
        if not any(u):
            continue
        ineqs.append((u, -y[0]))
    eqs = []
    for y in dual.lineality:
        u, b = y[1:], -y[0]
        first = next(x for x in u if x != 0)
        if first < 0:
            u, b = _neg(u), -b
        eqs.append((u, b))
    return HRep(tuple(sorted(ineqs)), tuple(sorted(eqs)))


def h_to_v(h: HRep) -> VRep:
    """Generators of a pointed H-polyhedron (lineality is rejected)."""
    ineqs = list(h.inequalities)
    eqs = list(h.equations)
    if not ineqs and not eqs:
        raise EmptyInput("no constraints")
    d = len((ineqs or eqs)[0][0])
    cone = DDCone(d + 1)
    for u, b in eqs:
        cone = cone.add_equation((-Fraction(b),) + tuple(u))
    cone = cone.add_inequality((1,) + (0,) * d)
    for u, b in ineqs:
        cone = cone.add_inequality((-Fraction(b),) + tuple(u))
    if cone.lineality:
        raise NotPointed("polyhedron contains a line")
    points, rays = [], []
    for r, _ in cone.rays:
        if r[0] == 0:
            rays.append(r[1:])
        else:
            points.append(tuple(Fraction(x, r[0]) for x in r[1:]))
    return VRep(tuple(sorted(points)), tuple(sorted(rays)))


def extreme_rays(cone: PointedCone) -> list[tuple[int, ...]]:
    """Primitive integer generators of the extreme rays, sorted lexicographically."""
    return cone.rays


# ---------------------------------------------------------------------------
# triangulation and Hilbert bases


def _facets(rays: list[tuple[int, ...]]) -> list[frozenset]:
    """Facets of a full-dimensional pointed cone, as sets of ray indices."""
    k = len(rays[0])
    dual = DDCone(k)
    for r in rays:
        dual = dual.add_inequality(r)
    out = set()
    for y, _ in dual.rays:
        out.add(frozenset(i for i, r in enumerate(rays) if la.dot(y, r) == 0))
    return sorted(out, key=sorted)


def triangulate(rays: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Pulling triangulation of a full-dimensional pointed cone.

    Returns simplicial cones as sorted tuples of indices into ``rays``. The
    cone over ``rays[min face]`` of the triangulations of the facets not
    containing it, recursively; the result depends only on the ray order.
    """
    k = len(rays[0])
    if la.rank(rays) != k:
        raise ValueError("triangulate expects a full-dimensional cone")
    top_facets = _facets(rays)
    memo: dict[frozenset, list[tuple[int, ...]]] = {}

    def face_rank(face):
        return la.rank([rays[i] for i in face])

    def tri(face: frozenset, dim: int):
        if face in memo:
            return memo[face]
        if len(face) == dim:
            res = [tuple(sorted(face))]
        else:
            apex = min(face)
            subfaces = set()
            for g in top_facets:
                f = face & g
                if apex in f or len(f) < dim - 1 or f in subfaces:
                    continue
                if face_rank(f) == dim - 1:
                    subfaces.add(f)
            res = []
            for f in sorted(subfaces, key=sorted):
                for s in tri(f, dim - 1):
                    res.append(tuple(sorted(s + (apex,))))
        memo[face] = res
        return res

    return sorted(tri(frozenset(range(len(rays))), k))


def _parallelepiped_points(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Lattice points ``sum l_i g_i`` with every ``0 <= l_i < 1`` (full rank ``gens``)."""
    k = len(gens)
    M = [[gens[j][i] for j in range(k)] for i in range(k)]
    if abs(la.bareiss_det(M)) == 1:
        return [(0,) * k]
    det, adj = la.det_and_adjugate(M)
    sign = 1 if det > 0 else -1
    D = abs(det)
    diag = la.hnf_diagonal(gens)
    out = []
    for x in itertools.product(*(range(h) for h in diag)):
        # lambda = adj x / det; keep the fractional part scaled by D
        lam = [(sign * la.dot(row, x)) % D for row in adj]
        pt = tuple(la.dot(M[i], lam) // D for i in range(k))
        out.append(pt)
    return out


def _saturated_basis(rays: list[tuple[int, ...]], d: int) -> list[tuple[int, ...]]:
    """Basis of the lattice ``Z^d ∩ span(rays)``."""
    k = la.rank(rays)
    if k == d:
        return [tuple(int(i == j) for j in range(d)) for i in range(d)]
    perp = la.nullspace(rays, d)
    return la.integer_kernel(perp, d)


def hilbert_basis(cone: PointedCone) -> list[tuple[int, ...]]:
    """Minimal generating set of the monoid of lattice points in ``cone``.

    Candidates are the extreme rays plus the lattice points of the half-open
    fundamental parallelepiped of every simplicial cone in a triangulation;
    a candidate is dropped when subtracting a smaller irreducible one stays
    in the cone. Sorted lexicographically.
    """
    return _hilbert_basis(cone.inequalities, cone.equations, cone.rays, cone.dim)


def _hilbert_basis(ineqs, eqs, rays, d) -> list[tuple[int, ...]]:
    if not rays:
        return []
    basis = _saturated_basis(rays, d)
    k = len(basis)
    if k == d:
        coords = [tuple(r) for r in rays]
    else:
        coords = []
        for r in rays:
            z = la.solve(basis, r)
            coords.append(tuple(int(x) for x in z))

    def lift(z):
        if k == d:
            return tuple(z)
        return tuple(sum(z[j] * basis[j][i] for j in range(k)) for i in range(d))

    cands = {tuple(r) for r in rays}
    if len(coords) == 1:
        simplices = [(0,)]
    else:
        simplices = triangulate(coords)
    for simp in simplices:
        gens = [coords[i] for i in simp]
        for z in _parallelepiped_points(gens):
            if any(z):
                cands.add(lift(z))

    weight = [sum(col) for col in zip(*ineqs)] if ineqs else [0] * d
    if not any(weight):
        # cone cut out by equations only is {0}; handled by `rays` being empty
        weight = [0] * d

    def grade(v):
        return la.dot(weight, v)

    def inside(v):
        return all(la.dot(u, v) >= 0 for u in ineqs) and all(la.dot(e, v) == 0 for e in eqs)

    ordered = sorted(cands, key=lambda v: (grade(v), v))
    irreducible: list[tuple[int, ...]] = []
    for h in ordered:
        gh = grade(h)
        reducible = False
        for g in irreducible:
            if grade(g) >= gh:
                continue
            diff = tuple(a - b for a, b in zip(h, g))
            if inside(diff):
                reducible = True
                break
        if not reducible:
            irreducible.append(h)
    return sorted(irreducible)
