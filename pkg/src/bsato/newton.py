"""Multiplier ideals and jumping coefficients of monomial ideals.

The Newton polyhedron of the ideal is the convex hull of the exponent
vectors plus the positive orthant. Writing its non-coordinate facets as
``phi(x) = 1`` with linear ``phi``, the monomial ``x^nu`` lies in the
multiplier ideal of exponent ``alpha`` exactly when
``min(phi(nu + 1)) > alpha``, and every value ``min(phi(x))`` at a positive
integer point ``x`` is a jumping coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .conegen import ExponentMatrix
from .errors import InvalidInput, NonPositiveCoordinate
from .exactalg import FactoredBPoly
from .polyhedra import VRep, v_to_h

__all__ = [
    "NewtonPolyhedron",
    "RootJumpCheck",
    "JumpReport",
    "newton_polyhedron",
    "jump_of_monomial",
    "lct",
    "multiplier_membership",
    "jumping_coefficients",
    "enumeration_bound",
    "check_roots_and_jumps",
]


@dataclass(frozen=True)
class NewtonPolyhedron:
    dim: int
    facets: tuple[tuple[Fraction, ...], ...]
    orthant_facets: tuple[tuple[int, ...], ...] = ()

    def values(self, x) -> list[Fraction]:
        return [sum(u * xi for u, xi in zip(phi, x)) for phi in self.facets]

    def order(self, x) -> Fraction:
        """``min(phi(x))`` over the facets."""
        return min(self.values(x))


@dataclass(frozen=True)
class RootJumpCheck:
    """Comparison of the jumping numbers with the roots of ``b_f(-s)``.

    ``window_jumps`` are the jumps in ``[lct, lct + 1)``; every one of them
    must be a root. ``roots_not_jumps`` lists roots in that window that are
    not jumps, which is allowed.
    """

    min_root: Fraction
    lct_matches: bool
    window_jumps: tuple[Fraction, ...]
    missing_from_roots: tuple[Fraction, ...]
    roots_not_jumps: tuple[Fraction, ...] = ()

    @property
    def passed(self) -> bool:
        return self.lct_matches and not self.missing_from_roots


@dataclass(frozen=True)
class JumpReport:
    lct: Fraction
    jumps: tuple[tuple[Fraction, tuple[int, ...]], ...]
    check: RootJumpCheck | None = None
    bf: FactoredBPoly | None = None
    meta: dict = field(default_factory=dict, compare=False)


def newton_polyhedron(A: ExponentMatrix) -> NewtonPolyhedron:
    """Facet functionals of ``conv(columns of A) + R_{>=0}^n``, scaled to equal 1 on their facet."""
    if not isinstance(A, ExponentMatrix):
        A = ExponentMatrix(A)
    n = A.n
    orthant = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    h = v_to_h(VRep(points=A.columns(), rays=orthant))
    facets, walls = [], []
    for u, b in h.inequalities:
        if b > 0:
            facets.append(tuple(Fraction(x) / b for x in u))
        else:
            walls.append(tuple(int(x) for x in u))
    return NewtonPolyhedron(n, tuple(sorted(facets)), tuple(sorted(walls)))


def _as_polyhedron(P) -> NewtonPolyhedron:
    if isinstance(P, NewtonPolyhedron):
        return P
    return newton_polyhedron(P)


def jump_of_monomial(P, x) -> Fraction:
    """Jumping number attached to a positive integer point ``x``."""
    P = _as_polyhedron(P)
    x = tuple(int(v) for v in x)
    if len(x) != P.dim:
        raise InvalidInput(f"point needs {P.dim} coordinates")
    if any(v <= 0 for v in x):
        raise NonPositiveCoordinate(f"coordinates of {x} must be positive")
    return P.order(x)


def lct(P) -> Fraction:
    """Log canonical threshold: the facets are nondecreasing, so it is attained at (1,...,1)."""
    P = _as_polyhedron(P)
    return P.order((1,) * P.dim)


def multiplier_membership(P, nu, alpha) -> bool:
    """Whether ``x^nu`` lies in the multiplier ideal of exponent ``alpha``."""
    P = _as_polyhedron(P)
    nu = tuple(int(v) for v in nu)
    if len(nu) != P.dim:
        raise InvalidInput(f"exponent needs {P.dim} entries")
    if any(v < 0 for v in nu):
        raise InvalidInput("exponents must be nonnegative")
    return P.order(tuple(v + 1 for v in nu)) > Fraction(alpha)


def enumeration_bound(P: NewtonPolyhedron, max_value) -> int:
    """Box size ``B`` such that every jump up to ``max_value`` has a witness in ``{1..B}^n``.

    A coordinate above ``(max_value + U) / delta`` (``U`` the largest facet
    coefficient, ``delta`` the smallest positive one) can be lowered by one
    without changing the minimum over facets.
    """
    coeffs = [c for phi in P.facets for c in phi]
    positive = [c for c in coeffs if c > 0]
    if not positive:
        return 1
    U = max(positive)
    delta = min(positive)
    return max(1, math.ceil((Fraction(max_value) + U) / delta))


def jumping_coefficients(P, max_value) -> list[tuple[Fraction, tuple[int, ...]]]:
    """All jumping numbers ``<= max_value`` with their lexicographically least witness."""
    P = _as_polyhedron(P)
    max_value = Fraction(max_value)
    if max_value < lct(P):
        raise InvalidInput(f"max {max_value} is below the log canonical threshold {lct(P)}")
    B = enumeration_bound(P, max_value)
    # integer arithmetic on the facets scaled by a common denominator
    L = math.lcm(*(c.denominator for phi in P.facets for c in phi))
    rows = [[int(c * L) for c in phi] for phi in P.facets]
    top = math.floor(max_value * L)
    found: dict[int, tuple[int, ...]] = {}
    for x in product(range(1, B + 1), repeat=P.dim):
        v = min(sum(a * b for a, b in zip(row, x)) for row in rows)
        if v <= top and v not in found:
            found[v] = x
    return [(Fraction(v, L), x) for v, x in sorted(found.items())]


def check_roots_and_jumps(A: ExponentMatrix, bs_result=None) -> JumpReport:
    """Compare the log canonical threshold and jumps with the roots of ``b_f(-s)``.

    The smallest root must equal the lct, and each jump in ``[lct, lct+1)``
    must be a root.
    """
    from .bsengine import bernstein_sato

    if not isinstance(A, ExponentMatrix):
        A = ExponentMatrix(A)
    res = bs_result if bs_result is not None else bernstein_sato(A)
    P = newton_polyhedron(A)
    c = lct(P)
    jumps = jumping_coefficients(P, c + 1)
    window = tuple(v for v, _ in jumps if v < c + 1)
    roots = set(res.bf)
    check = RootJumpCheck(
        min_root=min(roots),
        lct_matches=min(roots) == c,
        window_jumps=window,
        missing_from_roots=tuple(v for v in window if v not in roots),
        roots_not_jumps=tuple(sorted(a for a in roots if c <= a < c + 1 and a not in window)),
    )
    return JumpReport(
        lct=c,
        jumps=tuple((v, x) for v, x in jumps if v < c + 1),
        check=check,
        bf=res.bf,
        meta={"box_bound": enumeration_bound(P, c + 1)},
    )
