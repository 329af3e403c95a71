"""Exact rational arithmetic: dense univariate and sparse multivariate polynomials.

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from functools import reduce

from .errors import NonRationalFactor

Rational = Fraction

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "UniPoly",
    "MultiPoly",
    "FactoredBPoly",
    "expand",
    "factor_rational_roots",
    "shift_variable",
]


def parse_rational(value) -> Fraction:
    """Read a rational from an int, a Fraction or a ``"p/q"`` string."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot read a rational from {type(value).__name__}")


def format_rational(q) -> str:
    """Serialize as ``"p/q"`` in lowest terms, dropping ``"/1"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class UniPoly:
    """Dense univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls([c])

    @classmethod
    def linear(cls, root_shift) -> UniPoly:
        """The polynomial ``s + root_shift``."""
        return cls([root_shift, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> UniPoly:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        lc = self.coeffs[-1]
        return UniPoly(c / lc for c in self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: UniPoly) -> UniPoly:
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return UniPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)
        )

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.coeffs[-1]
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lc
            quo[k - dq] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * oc
        return UniPoly(quo), UniPoly(rem[:dq])

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("s" if k == 1 else f"s^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{format_rational(mag)}*{mono}"
            else:
                body = format_rational(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


class MultiPoly:
    """Sparse polynomial over Q in ``nvars`` variables.

    Terms map exponent tuples to nonzero Fractions. Iteration order is
    descending lexicographic on exponents, so equal polynomials always print
    and serialize identically.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], Fraction] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> MultiPoly:
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> MultiPoly:
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def linear(cls, coeffs: Iterable, const=0) -> MultiPoly:
        """``sum(coeffs[i] * x_i) + const``."""
        coeffs = list(coeffs)
        n = len(coeffs)
        terms = {(0,) * n: const}
        for i, c in enumerate(coeffs):
            exp = [0] * n
            exp[i] = 1
            terms[tuple(exp)] = c
        return cls(n, terms)

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), reverse=True)

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def uses_only(self, indices: Iterable[int]) -> bool:
        keep = set(indices)
        return all(
            all(e == 0 for i, e in enumerate(exp) if i not in keep) for exp in self.terms
        )

    # arithmetic
    def _check(self, other: MultiPoly) -> None:
        if other.nvars != self.nvars:
            raise ValueError("polynomials live in rings of different sizes")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def primitive(self) -> MultiPoly:
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.terms:
            return self
        den = reduce(math.lcm, (c.denominator for c in self.terms.values()), 1)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = reduce(math.gcd, ints.values())
        lead = max(ints)
        if ints[lead] < 0:
            g = -g
        return MultiPoly(self.nvars, {e: Fraction(c // g) for e, c in ints.items()})

    def extend(self, extra: int) -> MultiPoly:
        """Append ``extra`` unused variables at the end."""
        pad = (0,) * extra
        return MultiPoly(self.nvars + extra, {e + pad: c for e, c in self.terms.items()})

    def permute(self, perm: list[int]) -> MultiPoly:
        """Rename variable ``i`` to variable ``perm[i]``."""
        out = {}
        for exp, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exp):
                new[perm[i]] = e
            out[tuple(new)] = c
        return MultiPoly(self.nvars, out)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.to_string()!r})"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, names: list[str] | None = None) -> str:
        if names is None:
            names = [f"s{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


class FactoredBPoly(Mapping):
    """A product ``prod (s + alpha)^n_alpha`` keyed by ``alpha`` (the negated root)."""

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping | Iterable = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: dict[Fraction, int] = {}
        for alpha, mult in items:
            mult = int(mult)
            if mult < 0:
                raise ValueError("multiplicities must be positive")
            if mult:
                a = parse_rational(alpha)
                acc[a] = acc.get(a, 0) + mult
        self._factors = dict(sorted(acc.items()))

    def __getitem__(self, alpha) -> int:
        return self._factors[Fraction(alpha)]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._factors)

    def __len__(self) -> int:
        return len(self._factors)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mapping):
            try:
                return self._factors == FactoredBPoly(other)._factors
            except (TypeError, ValueError):
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._factors.items()))

    @property
    def degree(self) -> int:
        return sum(self._factors.values())

    def roots(self) -> list[Fraction]:
        """Roots of the polynomial in ``s``, i.e. the negated keys."""
        return [-a for a in self._factors]

    def __repr__(self) -> str:
        inner = ", ".join(f"{format_rational(a)}: {m}" for a, m in self._factors.items())
        return f"FactoredBPoly({{{inner}}})"

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        parts = []
        for a, m in self._factors.items():
            if a == 0:
                base = "s"
            elif a > 0:
                base = f"(s + {format_rational(a)})"
            else:
                base = f"(s - {format_rational(-a)})"
            parts.append(base if m == 1 else f"{base}^{m}")
        return "*".join(parts)


def expand(f: FactoredBPoly) -> UniPoly:
    """Multiply out ``prod (s + alpha)^n``."""
    out = UniPoly.constant(1)
    for alpha, mult in f.items():
        lin = UniPoly.linear(alpha)
        for _ in range(mult):
            out = out * lin
    return out


def _primitive_integer_coeffs(p: UniPoly) -> list[int]:
    den = reduce(math.lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(math.gcd, ints)
    return [c // g for c in ints]


def factor_rational_roots(p: UniPoly) -> FactoredBPoly:
    """Split a polynomial completely into rational linear factors.

    Candidates come from the rational root theorem applied to the primitive
    integer form; each multiplicity is found by repeated division.
    Raises :class:`NonRationalFactor` if something of positive degree is left.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rest = p.monic()
    factors: dict[Fraction, int] = {}
    while rest.degree > 0 and rest.coeffs[0] == 0:
        rest = UniPoly(rest.coeffs[1:])
        factors[Fraction(0)] = factors.get(Fraction(0), 0) + 1
    if rest.degree > 0:
        ints = _primitive_integer_coeffs(rest)
        lead_divs = _divisors(ints[-1])
        const_divs = _divisors(ints[0])
        candidates = sorted(
            {Fraction(sign * a, b) for a in const_divs for b in lead_divs for sign in (1, -1)},
            key=lambda q: (abs(q), q),
        )
        for root in candidates:
            if rest.degree == 0:
                break
            lin = UniPoly.linear(-root)
            while rest.degree > 0:
                quo, rem = divmod(rest, lin)
                if not rem.is_zero():
                    break
                rest = quo
                factors[-root] = factors.get(-root, 0) + 1
    if rest.degree > 0:
        raise NonRationalFactor(f"factor {rest} has no rational root")
    return FactoredBPoly(factors)


def shift_variable(f: FactoredBPoly, delta) -> FactoredBPoly:
    """Substitute ``s -> s - delta``: each key ``alpha`` becomes ``alpha - delta``."""
    delta = Fraction(delta)
    return FactoredBPoly({a - delta: m for a, m in f.items()})
