"""Buchberger's algorithm over Q with elimination orders.

Public functions take and return :class:`~bsato.exactalg.MultiPoly`. The
engine itself works on ``dict`` polynomials with integer coefficients kept
primitive after every reduction, which keeps coefficient growth in check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

from .errors import ZeroEliminationIdeal
from .exactalg import MultiPoly, UniPoly

__all__ = [
    "MonomialOrder",
    "GroebnerBasis",
    "grevlex",
    "lex",
    "block_order",
    "normal_form",
    "buchberger",
    "ideal_member",
    "ideal_equal",
    "eliminate_to_univariate",
    "minimal_polynomial",
    "is_groebner",
    "is_reduced",
    "s_polynomial",
]


def _grevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on ``nvars`` variables.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``. The block order uses
    grevlex on the first ``split`` variables, breaks ties with grevlex on the
    rest, and so eliminates the first block.
    """

    kind: str
    nvars: int
    split: int = 0
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and not 0 < self.split < self.nvars:
            raise ValueError("block order needs 0 < split < nvars")

    def key(self, exp):
        k = self._cache.get(exp)
        if k is None:
            if self.kind == "grevlex":
                k = _grevlex_key(exp)
            elif self.kind == "lex":
                k = exp
            else:
                k = (_grevlex_key(exp[: self.split]), _grevlex_key(exp[self.split :]))
            self._cache[exp] = k
        return k


def grevlex(nvars: int) -> MonomialOrder:
    return MonomialOrder("grevlex", nvars)


def lex(nvars: int) -> MonomialOrder:
    return MonomialOrder("lex", nvars)


def block_order(nvars: int, split: int) -> MonomialOrder:
    return MonomialOrder("block", nvars, split)


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[MultiPoly, ...]
    order: MonomialOrder

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and not any(any(e) for e in self.generators[0].terms)


# ---------------------------------------------------------------------------
# integer dict polynomials


def _to_int(p: MultiPoly) -> dict:
    if not p.terms:
        return {}
    den = reduce(math.lcm, (c.denominator for c in p.terms.values()), 1)
    out = {e: int(c * den) for e, c in p.terms.items()}
    return _primitive(out)


def _primitive(p: dict) -> dict:
    if not p:
        return p
    g = reduce(math.gcd, p.values())
    if g == 1:
        return p
    return {e: c // g for e, c in p.items()}


def _lm(p: dict, key):
    return max(p, key=key)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _reduce(p: dict, basis: list[tuple[dict, tuple, int]], key, full: bool = True) -> dict:
    """Fraction-free division of ``p`` by ``basis`` entries ``(poly, lm, lc)``."""
    p = dict(p)
    rem: dict = {}
    steps = 0
    while p:
        m = max(p, key=key)
        c = p[m]
        for g, glm, glc in basis:
            if _divides(glm, m):
                shift = tuple(x - y for x, y in zip(m, glm))
                d = math.gcd(c, glc)
                a, b = glc // d, c // d
                if a != 1:
                    if a < 0:
                        a, b = -a, -b
                    for e in p:
                        p[e] *= a
                    for e in rem:
                        rem[e] *= a
                for ge, gc in g.items():
                    e = tuple(x + y for x, y in zip(ge, shift))
                    v = p.get(e, 0) - b * gc
                    if v:
                        p[e] = v
                    else:
                        p.pop(e, None)
                steps += 1
                if steps % 8 == 0:
                    g_all = reduce(math.gcd, list(p.values()) + list(rem.values()), 0)
                    if g_all > 1:
                        p = {e: v // g_all for e, v in p.items()}
                        rem = {e: v // g_all for e, v in rem.items()}
                break
        else:
            if not full:
                rem.update(p)
                break
            rem[m] = c
            del p[m]
    return _primitive(rem)


def _to_multipoly(nvars: int, p: dict, key) -> MultiPoly:
    """Monic rational form of an integer dict polynomial."""
    if not p:
        return MultiPoly.zero(nvars)
    lc = p[_lm(p, key)]
    return MultiPoly(nvars, {e: Fraction(c, lc) for e, c in p.items()})


def _spoly(f: dict, flm, flc, g: dict, glm, glc) -> dict:
    m = _lcm(flm, glm)
    sf = tuple(x - y for x, y in zip(m, flm))
    sg = tuple(x - y for x, y in zip(m, glm))
    d = math.gcd(flc, glc)
    a, b = glc // d, flc // d
    out: dict = {}
    for e, c in f.items():
        e2 = tuple(x + y for x, y in zip(e, sf))
        out[e2] = out.get(e2, 0) + a * c
    for e, c in g.items():
        e2 = tuple(x + y for x, y in zip(e, sg))
        v = out.get(e2, 0) - b * c
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return _primitive({e: c for e, c in out.items() if c})


class _Engine:
    """Buchberger state: polynomials, current basis indices and pending pairs."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.key = order.key
        self.polys: list[dict] = []
        self.lms: list[tuple] = []
        self.lcs: list[int] = []

    def add(self, p: dict) -> int:
        m = _lm(p, self.key)
        if p[m] < 0:
            p = {e: -c for e, c in p.items()}
        self.polys.append(p)
        self.lms.append(m)
        self.lcs.append(p[m])
        return len(self.polys) - 1

    def basis_entries(self, idx):
        return [(self.polys[i], self.lms[i], self.lcs[i]) for i in idx]

    def update(self, G: list[int], B: list[tuple[int, int]], h: int):
        """Gebauer-Moeller installation of a new basis element ``h``."""
        lms = self.lms
        lmh = lms[h]
        C = list(G)
        D: list[tuple[int, int]] = []
        while C:
            g1 = C.pop()
            lcm1 = _lcm(lmh, lms[g1])
            if _coprime(lmh, lms[g1]) or (
                not any(_divides(_lcm(lmh, lms[g2]), lcm1) for g2 in C)
                and not any(_divides(_lcm(lmh, lms[g2]), lcm1) for _, g2 in D)
            ):
                D.append((h, g1))
        E = [(a, g) for a, g in D if not _coprime(lmh, lms[g])]
        B_new = []
        for g1, g2 in B:
            lcm12 = _lcm(lms[g1], lms[g2])
            if (
                not _divides(lmh, lcm12)
                or _lcm(lms[g1], lmh) == lcm12
                or _lcm(lmh, lms[g2]) == lcm12
            ):
                B_new.append((g1, g2))
        B_new.extend(E)
        G_new = [g for g in G if not _divides(lmh, lms[g])]
        G_new.append(h)
        return G_new, B_new

    def run(self, gens: list[dict]) -> list[int]:
        key = self.key
        gens = sorted((g for g in gens if g), key=lambda p: key(_lm(p, key)))
        G: list[int] = []
        B: list[tuple[int, int]] = []
        for f in gens:
            f = _reduce(f, self.basis_entries(G), key)
            if not f:
                continue
            h = self.add(f)
            if all(e == 0 for e in self.lms[h]):
                return [h]
            G, B = self.update(G, B, h)

        def pair_key(pr):
            m = _lcm(self.lms[pr[0]], self.lms[pr[1]])
            return (sum(m), key(m), pr)

        while B:
            best = min(B, key=pair_key)
            B.remove(best)
            i, j = best
            s = _spoly(self.polys[i], self.lms[i], self.lcs[i],
                       self.polys[j], self.lms[j], self.lcs[j])
            h = _reduce(s, self.basis_entries(G), key)
            if not h:
                continue
            hi = self.add(h)
            if all(e == 0 for e in self.lms[hi]):
                return [hi]
            G, B = self.update(G, B, hi)
        return G

    def reduced(self, G: list[int]) -> list[dict]:
        """Minimal then fully interreduced basis, sorted by leading monomial."""
        key = self.key
        G = sorted(G, key=lambda i: key(self.lms[i]))
        minimal: list[int] = []
        for i in G:
            if not any(_divides(self.lms[j], self.lms[i]) for j in minimal):
                minimal.append(i)
        out = []
        for i in minimal:
            others = [k for k in minimal if k != i]
            r = _reduce(self.polys[i], self.basis_entries(others), key)
            m = _lm(r, key)
            if r[m] < 0:
                r = {e: -c for e, c in r.items()}
            out.append(r)
        return out


def _check_ring(polys, order: MonomialOrder) -> int:
    nv = order.nvars
    for p in polys:
        if p.nvars != nv:
            raise ValueError(f"polynomial in {p.nvars} variables used with a {nv}-variable order")
    return nv


def buchberger(gens: list[MultiPoly], order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Each generator of the result is monic and the list is sorted increasingly
    by leading monomial, so identical input yields identical output.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if order is None:
        order = grevlex(gens[0].nvars)
    nv = _check_ring(gens, order)
    ints = [_to_int(g) for g in gens if not g.is_zero()]
    if not ints:
        return GroebnerBasis((), order)
    eng = _Engine(order)
    G = eng.run(ints)
    red = eng.reduced(G)
    return GroebnerBasis(tuple(_to_multipoly(nv, r, order.key) for r in red), order)


def normal_form(p: MultiPoly, basis, order: MonomialOrder | None = None) -> MultiPoly:
    """Remainder of ``p`` on division by ``basis`` (Fraction coefficients kept exact)."""
    if isinstance(basis, GroebnerBasis):
        order = order or basis.order
        basis = list(basis.generators)
    if order is None:
        order = grevlex(p.nvars)
    _check_ring([p, *basis], order)
    key = order.key
    divisors = []
    for g in basis:
        if g.is_zero():
            raise ValueError("basis elements must be nonzero")
        m = max(g.terms, key=key)
        divisors.append((g, m, g.terms[m]))
    rest = dict(p.terms)
    rem = {}
    while rest:
        m = max(rest, key=key)
        c = rest[m]
        for g, glm, glc in divisors:
            if _divides(glm, m):
                shift = tuple(x - y for x, y in zip(m, glm))
                q = c / glc
                for ge, gc in g.terms.items():
                    e = tuple(x + y for x, y in zip(ge, shift))
                    v = rest.get(e, 0) - q * gc
                    if v:
                        rest[e] = v
                    else:
                        rest.pop(e, None)
                break
        else:
            rem[m] = c
            del rest[m]
    return MultiPoly(p.nvars, rem)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    key = order.key
    fm = max(f.terms, key=key)
    gm = max(g.terms, key=key)
    m = _lcm(fm, gm)
    nv = f.nvars

    def mono(e, c):
        return MultiPoly(nv, {e: c})

    return (
        mono(tuple(x - y for x, y in zip(m, fm)), 1 / f.terms[fm]) * f
        - mono(tuple(x - y for x, y in zip(m, gm)), 1 / g.terms[gm]) * g
    )


def is_groebner(basis: GroebnerBasis) -> bool:
    """Every S-polynomial of a basis pair reduces to zero."""
    gs = list(basis.generators)
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            s = s_polynomial(gs[i], gs[j], basis.order)
            if not normal_form(s, gs, basis.order).is_zero():
                return False
    return True


def is_reduced(basis: GroebnerBasis) -> bool:
    key = basis.order.key
    gs = list(basis.generators)
    lms = [max(g.terms, key=key) for g in gs]
    for i, g in enumerate(gs):
        if g.terms[lms[i]] != 1:
            return False
        for j, m in enumerate(lms):
            if i != j and any(_divides(m, e) for e in g.terms):
                return False
    return True


def ideal_member(p: MultiPoly, gens, order: MonomialOrder | None = None) -> bool:
    """Whether ``p`` lies in the ideal generated by ``gens``."""
    if p.is_zero():
        return True
    basis = gens if isinstance(gens, GroebnerBasis) else buchberger(list(gens), order)
    if not basis.generators:
        return False
    return normal_form(p, basis).is_zero()


def ideal_equal(a: list[MultiPoly], b: list[MultiPoly]) -> bool:
    """Whether two generator lists span the same ideal."""
    a = [p for p in a if not p.is_zero()]
    b = [p for p in b if not p.is_zero()]
    if not a or not b:
        return not a and not b
    ga = buchberger(a)
    gb = buchberger(b)
    return all(ideal_member(p, ga) for p in b) and all(ideal_member(p, gb) for p in a)


def minimal_polynomial(element: MultiPoly, gens, max_degree: int = 64) -> UniPoly:
    """Monic generator of ``{b in Q[t] : b(element) in (gens)}``.

    Works modulo a grevlex basis: the normal forms of ``element**k`` are
    computed as ``NF(element * NF(element**(k-1)))`` and the first linear
    dependency among them gives the answer. This is the same elimination
    ideal :func:`eliminate_to_univariate` computes after adjoining
    ``t - element``, without the block-order basis.
    """
    basis = gens if isinstance(gens, GroebnerBasis) else buchberger(list(gens), grevlex(element.nvars))
    if basis.is_unit():
        return UniPoly.constant(1)
    # echelon rows (pivot, normal form, combination of powers); each row is
    # reduced against the earlier ones, so one pass in order reduces a vector
    rows: list[tuple[tuple, dict, list[Fraction]]] = []
    key = basis.order.key
    power = normal_form(MultiPoly.constant(element.nvars, 1), basis)
    for k in range(max_degree + 1):
        vec = dict(power.terms)
        combo = [Fraction(0)] * (k + 1)
        combo[k] = Fraction(1)
        for piv, rvec, rcombo in rows:
            c = vec.get(piv)
            if c:
                for e, v in rvec.items():
                    w = vec.get(e, 0) - c * v
                    if w:
                        vec[e] = w
                    else:
                        vec.pop(e, None)
                for i, v in enumerate(rcombo):
                    combo[i] -= c * v
        if not vec:
            return UniPoly(combo).monic()
        piv = max(vec, key=key)
        pc = vec[piv]
        vec = {e: v / pc for e, v in vec.items()}
        combo = [v / pc for v in combo]
        rows.append((piv, vec, combo))
        power = normal_form(power * element, basis)
    raise ZeroEliminationIdeal(f"no relation of degree <= {max_degree}")


def eliminate_to_univariate(gens: list[MultiPoly], keep: int | None = None) -> UniPoly:
    """Monic generator of ``(gens) ∩ Q[x_keep]`` where ``x_keep`` is the last variable.

    The other variables are eliminated with a block order in which any
    monomial involving them exceeds every power of the kept variable.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    nv = gens[0].nvars
    if keep is None:
        keep = nv - 1
    if keep != nv - 1:
        perm = list(range(nv))
        perm[keep], perm[nv - 1] = nv - 1, keep
        gens = [g.permute(perm) for g in gens]
    if nv == 1:
        basis = buchberger(gens, grevlex(1))
    else:
        basis = buchberger(gens, block_order(nv, nv - 1))
    last = nv - 1
    for g in basis.generators:
        if g.uses_only([last]):
            coeffs = [Fraction(0)] * (g.total_degree() + 1)
            for exp, c in g.terms.items():
                coeffs[exp[last]] = c
            return UniPoly(coeffs).monic()
    raise ZeroEliminationIdeal("no element of the basis involves only the kept variable")
