"""Finite generating sets for the ideal of binomial shift polynomials.

For monomials ``f_j = prod_i x_i^{a_ij}`` the ideal lives in
``Q[s_1, ..., s_r]`` and is generated by ``g_c`` for all integer ``c`` with
``sum(c) == 1``. Those ``c`` are split by sign patterns of the linear forms
``l_1..l_n`` (rows of the exponent matrix) and ``-c_1..-c_r``; inside one
sign pattern the shifts of total 1 form a module over the shifts of total 0,
and its generators are the degree-one elements of a Hilbert basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations, product

from . import _linalg as la
from .errors import BadShiftSum, InvalidInput
from .exactalg import MultiPoly
from .polyhedra import DDCone, _hilbert_basis

log = logging.getLogger(__name__)

__all__ = [
    "ExponentMatrix",
    "ConeModuleGenerators",
    "linear_forms",
    "form_values",
    "g_poly",
    "module_generators",
    "full_sign_vectors",
    "automorphisms",
    "af_shifts",
    "af_generators",
]


@dataclass(frozen=True)
class ExponentMatrix:
    """Exponents ``a[i][j]`` of variable ``x_i`` in generator ``f_j``.

    Columns are generators; duplicate columns are dropped on construction
    (first occurrence kept) and zero columns are rejected.
    """

    a: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.a)
        if not rows or not rows[0]:
            raise InvalidInput("exponent matrix must have at least one row and one column")
        if any(len(row) != len(rows[0]) for row in rows):
            raise InvalidInput("exponent matrix rows have different lengths")
        if any(x < 0 for row in rows for x in row):
            raise InvalidInput("exponents must be nonnegative")
        cols = []
        for col in zip(*rows):
            if not any(col):
                raise InvalidInput("a generator is the constant monomial 1")
            if col not in cols:
                cols.append(col)
        object.__setattr__(self, "a", tuple(zip(*cols)))

    @classmethod
    def from_monomials(cls, monomials, nvars: int | None = None) -> ExponentMatrix:
        monomials = [tuple(m) for m in monomials]
        if not monomials:
            raise InvalidInput("no monomials given")
        n = nvars if nvars is not None else len(monomials[0])
        if any(len(m) != n for m in monomials):
            raise InvalidInput(f"every monomial needs {n} exponents")
        return cls(tuple(zip(*monomials)))

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def r(self) -> int:
        return len(self.a[0])

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(col) for col in zip(*self.a)]


@dataclass(frozen=True)
class ConeModuleGenerators:
    eps: tuple[int, ...]
    gens: tuple[tuple[int, ...], ...]


def linear_forms(A: ExponentMatrix) -> list[tuple[int, ...]]:
    """Coefficient vectors of ``l_1..l_n`` (rows of ``A``) then ``-e_1..-e_r``."""
    forms = [tuple(row) for row in A.a]
    r = A.r
    forms += [tuple(-int(i == j) for j in range(r)) for i in range(r)]
    return forms


def form_values(A: ExponentMatrix, c) -> tuple[int, ...]:
    """``(l_1(c), ..., l_n(c), -c_1, ..., -c_r)``."""
    return tuple(la.dot(f, c) for f in linear_forms(A))


def _falling(base: MultiPoly, m: int, step: int) -> MultiPoly:
    """``base * (base + step) * ... * (base + (m-1)*step)``."""
    out = MultiPoly.constant(base.nvars, 1)
    for k in range(m):
        out = out * (base + k * step)
    return out


def g_poly(A: ExponentMatrix, c) -> MultiPoly:
    """Binomial product attached to a shift ``c`` with ``sum(c) == 1``.

    ``prod_{c_j<0} binom(s_j, -c_j) * prod_{l_i(c)>0} binom(l_i(s)+l_i(c), l_i(c))``
    scaled to primitive integer coefficients (the ``1/m!`` factors drop out).
    """
    c = tuple(int(x) for x in c)
    if len(c) != A.r:
        raise ValueError(f"shift vector needs {A.r} entries")
    if sum(c) != 1:
        raise BadShiftSum(f"shift {c} sums to {sum(c)}, expected 1")
    r = A.r
    out = MultiPoly.constant(r, 1)
    for j, cj in enumerate(c):
        if cj < 0:
            # s_j (s_j - 1) ... (s_j + c_j + 1)
            out = out * _falling(MultiPoly.variable(r, j), -cj, -1)
    for row in A.a:
        m = la.dot(row, c)
        if m > 0:
            # (l + 1) (l + 2) ... (l + m)
            out = out * _falling(MultiPoly.linear(row, 1), m, 1)
    return out.primitive()


def _shift_type(A: ExponentMatrix, c) -> tuple[int, ...]:
    """Exponent data that determines ``g_c``: negative parts of ``c``, positive parts of ``l(c)``."""
    return tuple(max(0, -x) for x in c) + tuple(max(0, la.dot(row, c)) for row in A.a)


def _cone_constraints(A: ExponentMatrix, eps) -> list[tuple[int, ...]]:
    forms = linear_forms(A)
    if len(eps) != len(forms):
        raise ValueError(f"sign vector needs {len(forms)} entries")
    if any(e not in (1, -1) for e in eps):
        raise ValueError("sign vector entries must be +1 or -1")
    cons = [tuple(1 for _ in range(A.r))]
    cons += [tuple(e * x for x in f) for e, f in zip(eps, forms)]
    return cons


def _degree_one(cons, dd: DDCone, r: int) -> tuple[tuple[int, ...], ...]:
    if dd.lineality:
        # every coordinate sign is fixed, so this cannot happen
        raise AssertionError("shift cone is not pointed")
    rays = sorted(v for v, _ in dd.rays)
    hb = _hilbert_basis(cons, (), rays, r)
    return tuple(sorted(h for h in hb if sum(h) == 1))


def module_generators(A: ExponentMatrix, eps) -> ConeModuleGenerators:
    """Generators ``I(eps)`` of total-1 shifts over total-0 shifts in one sign region.

    Uses the cone ``{c : sum(c) >= 0, eps_i l_i(c) >= 0}``, graded by
    ``sum(c)``; the Hilbert basis elements of degree one are exactly the
    module generators. An empty result means no shift of total 1 has this
    sign pattern.
    """
    eps = tuple(int(e) for e in eps)
    cons = _cone_constraints(A, eps)
    dd = DDCone(A.r)
    for u in cons:
        dd = dd.add_inequality(u)
    return ConeModuleGenerators(eps, _degree_one(cons, dd, A.r))


def all_sign_vectors(A: ExponentMatrix):
    return product((1, -1), repeat=A.n + A.r)


def automorphisms(A: ExponentMatrix, max_rows: int = 8) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs ``(row_perm, col_perm)`` with ``a[row_perm[i]][col_perm[j]] == a[i][j]``.

    Searched by brute force over row permutations; above ``max_rows`` rows
    only the identity is returned.
    """
    n, r = A.n, A.r
    ident = (tuple(range(n)), tuple(range(r)))
    if n > max_rows:
        return [ident]
    cols = A.columns()
    where = {c: j for j, c in enumerate(cols)}
    out = []
    for sigma in permutations(range(n)):
        tau = []
        for col in cols:
            image = [0] * n
            for i, x in enumerate(col):
                image[sigma[i]] = x
            j = where.get(tuple(image))
            if j is None:
                break
            tau.append(j)
        else:
            out.append((tuple(sigma), tuple(tau)))
    return out


def _act_on_signs(eps, sigma, tau, n):
    out = list(eps)
    for i, s in enumerate(sigma):
        out[s] = eps[i]
    for j, t in enumerate(tau):
        out[n + t] = eps[n + j]
    return tuple(out)


def _act_on_shift(c, tau):
    out = [0] * len(c)
    for j, t in enumerate(tau):
        out[t] = c[j]
    return tuple(out)


def full_sign_vectors(A: ExponentMatrix) -> list[tuple[tuple[int, ...], DDCone]]:
    """Sign vectors whose cone ``{sum(c) >= 0, eps_i l_i(c) >= 0}`` is full dimensional.

    Closed full-dimensional regions cover every lattice point, so these are the
    only sign vectors needed for generating the ideal. Found by a depth-first
    search that adds one signed form at a time to an incremental double
    description and prunes branches that lose an interior point. Forms that
    vanish identically get sign +1 only.
    """
    forms = linear_forms(A)
    r = A.r
    root = DDCone(r).add_inequality(tuple(1 for _ in range(r)))
    out = []

    def visit(depth, dd, eps):
        if depth == len(forms):
            out.append((tuple(eps), dd))
            return
        f = forms[depth]
        if not any(f):
            visit(depth + 1, dd, eps + [1])
            return
        for e in (1, -1):
            a = tuple(e * x for x in f)
            if dd.cuts_interior(a):
                visit(depth + 1, dd.add_inequality(a), eps + [e])

    visit(0, root, [])
    return out


def af_shifts(A: ExponentMatrix, prune: bool = True) -> list[tuple[int, ...]]:
    """Shift vectors whose binomial products generate the ideal.

    Union of the degree-one Hilbert basis elements over all full-dimensional
    sign regions. With ``prune`` a shift is dropped when another shift has a
    componentwise smaller type vector, because its polynomial is then a
    multiple of the other one.
    """
    found: set[tuple[int, ...]] = set()
    regions = full_sign_vectors(A)
    group = automorphisms(A)
    n = A.n
    done = 0
    for eps, dd in regions:
        # one region per symmetry orbit; the rest are images of it
        if any(_act_on_signs(eps, s, t, n) < eps for s, t in group):
            continue
        done += 1
        cons = _cone_constraints(A, eps)
        for c in _degree_one(cons, dd, A.r):
            for _, t in group:
                found.add(_act_on_shift(c, t))
    shifts = sorted(found)
    log.debug("%d sign regions (%d up to symmetry), %d shifts", len(regions), done, len(shifts))
    if not prune:
        return shifts
    typed = sorted(((_shift_type(A, c), c) for c in shifts), key=lambda tc: (sum(tc[0]), tc))
    kept: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    seen_types = set()
    for t, c in typed:
        if t in seen_types:
            continue
        if any(all(x <= y for x, y in zip(kt, t)) for kt, _ in kept):
            continue
        kept.append((t, c))
        seen_types.add(t)
    return sorted(c for _, c in kept)


def af_generators(A: ExponentMatrix, prune: bool = True) -> list[MultiPoly]:
    """Finite generating set of the ideal, deduplicated and in canonical order."""
    polys = {g_poly(A, c) for c in af_shifts(A, prune=prune)}
    return sorted(polys, key=lambda p: (p.total_degree(), len(p), p.sorted_terms()))
