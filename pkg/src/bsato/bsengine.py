"""Bernstein-Sato polynomials of monomial ideals.

``b_f(s)`` is the monic generator of the polynomials ``b`` with
``b(s_1 + ... + s_r)`` in the ideal spanned by the binomial shift
polynomials of :mod:`bsato.conegen`. The codimension shift, Thom-Sebastiani
composition and the several-variable generator live here too.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .conegen import ExponentMatrix, af_generators
from .errors import InvalidInput
from .exactalg import FactoredBPoly, MultiPoly, UniPoly, expand, factor_rational_roots, shift_variable
from .groebner import buchberger, eliminate_to_univariate, grevlex, minimal_polynomial

log = logging.getLogger(__name__)

__all__ = [
    "BsResult",
    "bernstein_sato",
    "codim",
    "compose_thom_sebastiani",
    "bw_generator",
    "diagonal_sum",
]


@dataclass(frozen=True)
class BsResult:
    bf: FactoredBPoly
    bf_expanded: UniPoly
    af_generator_count: int
    codim: int
    bz: FactoredBPoly
    timings: dict = field(default_factory=dict, compare=False)

    def min_root(self) -> Fraction:
        """Smallest root of ``b_f(-s)``."""
        return min(self.bf)


def diagonal_sum(r: int) -> MultiPoly:
    return MultiPoly.linear([1] * r)


def bernstein_sato(A: ExponentMatrix, method: str = "normal-form") -> BsResult:
    """Compute ``b_f`` for the monomials with exponent columns of ``A``.

    ``method="normal-form"`` finds the first linear relation among the normal
    forms of ``(s_1+...+s_r)^k`` modulo a grevlex basis. ``method="block"``
    adjoins ``t - (s_1+...+s_r)`` and eliminates the ``s`` block with a block
    order; it gives the same polynomial but is far slower beyond small cases.
    """
    if not isinstance(A, ExponentMatrix):
        A = ExponentMatrix(A)
    r = A.r
    t0 = time.perf_counter()
    gens = af_generators(A)
    t1 = time.perf_counter()
    if method == "normal-form":
        basis = buchberger(gens, grevlex(r))
        poly = minimal_polynomial(diagonal_sum(r), basis)
    elif method == "block":
        t = MultiPoly.variable(r + 1, r)
        relation = t - diagonal_sum(r).extend(1)
        poly = eliminate_to_univariate([g.extend(1) for g in gens] + [relation])
    else:
        raise ValueError(f"unknown method {method!r}")
    t2 = time.perf_counter()
    bf = factor_rational_roots(poly)
    if any(alpha <= 0 for alpha in bf):
        raise AssertionError(f"b_f(-s) has a nonpositive root: {bf}")
    cd = codim(A)
    log.debug("b_f = %s from %d generators (%.2fs + %.2fs)", bf, len(gens), t1 - t0, t2 - t1)
    return BsResult(
        bf=bf,
        bf_expanded=expand(bf),
        af_generator_count=len(gens),
        codim=cd,
        bz=shift_variable(bf, cd),
        timings={"generators": t1 - t0, "elimination": t2 - t1},
    )


def codim(A: ExponentMatrix, max_vars: int = 16) -> int:
    """Codimension of the monomial subscheme: a smallest set of variables meeting every support."""
    if not isinstance(A, ExponentMatrix):
        A = ExponentMatrix(A)
    if A.n > max_vars:
        raise InvalidInput(f"codimension search is limited to {max_vars} variables")
    supports = [frozenset(i for i, x in enumerate(col) if x) for col in A.columns()]
    for k in range(1, A.n + 1):
        for hit in combinations(range(A.n), k):
            hs = set(hit)
            if all(hs & sup for sup in supports):
                return k
    return A.n


def compose_thom_sebastiani(bf: FactoredBPoly, bg: FactoredBPoly) -> FactoredBPoly:
    """b-function of ``f x g`` on a product: ``q_gamma = max(n_alpha + m_beta - 1)`` over ``alpha + beta = gamma``."""
    out: dict[Fraction, int] = {}
    for alpha, n_a in bf.items():
        for beta, m_b in bg.items():
            gamma = alpha + beta
            out[gamma] = max(out.get(gamma, 0), n_a + m_b - 1)
    return FactoredBPoly(out)


def bw_generator(A: ExponentMatrix, w) -> MultiPoly:
    """``prod_i (l_i(s)+1)(l_i(s)+2)...(l_i(s)+l_i(w))`` for a weight ``w`` in ``N^r``."""
    if not isinstance(A, ExponentMatrix):
        A = ExponentMatrix(A)
    w = tuple(int(x) for x in w)
    if len(w) != A.r:
        raise InvalidInput(f"weight vector needs {A.r} entries")
    if any(x < 0 for x in w):
        raise InvalidInput("weights must be nonnegative")
    out = MultiPoly.constant(A.r, 1)
    for row in A.a:
        form = MultiPoly.linear(row)
        for k in range(1, sum(a * x for a, x in zip(row, w)) + 1):
            out = out * (form + k)
    return out
