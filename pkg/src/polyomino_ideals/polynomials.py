"""Exact sparse multivariate polynomials over the rationals.

Monomials are dense exponent tuples indexed by variable number; coefficients
are exact (int or Fraction, never floats).  Polynomials are thin immutable
wrappers around a dict mapping monomial to nonzero coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Monomial = tuple  # exponent tuple, one entry per variable


def mono_one(nvars: int) -> Monomial:
    return (0,) * nvars


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_is_squarefree(a: Monomial) -> bool:
    return all(e <= 1 for e in a)


def _inverse(c):
    if c == 1:
        return 1
    if c == -1:
        return -1
    return Fraction(1) / c


class Polynomial:
    """Immutable polynomial; terms maps exponent tuple to nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls({})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> "Polynomial":
        return cls({mono: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def key(self) -> frozenset:
        """Hashable canonical form (coefficients normalized to Fraction)."""
        return frozenset((m, Fraction(c)) for m, c in self.terms.items())

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    v = out.get(m, 0) + c1 * c2
                    if v:
                        out[m] = v
                    else:
                        del out[m]
            return Polynomial(out)
        return Polynomial({m: c * other for m, c in self.terms.items()})

    __rmul__ = __mul__

    def term_mul(self, mono: Monomial, coeff=1) -> "Polynomial":
        """Multiply by a single term coeff * x^mono."""
        return Polynomial({mono_mul(m, mono): c * coeff for m, c in self.terms.items()})

    def leading(self, order) -> tuple[Monomial, object]:
        """Leading (monomial, coefficient) under the given order."""
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order) -> "Polynomial":
        _, lc = self.leading(order)
        if lc == 1:
            return self
        if lc == -1:
            return -self
        inv = _inverse(lc)
        return Polynomial({m: c * inv for m, c in self.terms.items()})

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def __repr__(self) -> str:
        return f"Polynomial({polynomial_str(self)})"


def is_pure_difference(p: Polynomial) -> bool:
    """True when p is a difference of two monomials with coefficients +1, -1."""
    if len(p.terms) != 2:
        return False
    return sorted(Fraction(c) for c in p.terms.values()) == [Fraction(-1), Fraction(1)]


def polynomial_str(p: Polynomial, names=None, order=None) -> str:
    """Readable rendering; terms sorted descending (by order when given)."""
    if not p.terms:
        return "0"
    if names is None:
        names = [f"x{k}" for k in range(len(next(iter(p.terms))))]
    if order is not None:
        monos = sorted(p.terms, key=order.key, reverse=True)
    else:
        monos = sorted(p.terms, reverse=True)
    parts = []
    for m in monos:
        c = p.terms[m]
        factors = []
        for v, e in enumerate(m):
            if e == 1:
                factors.append(names[v])
            elif e > 1:
                factors.append(f"{names[v]}^{e}")
        body = "*".join(factors) if factors else "1"
        if c == 1:
            term = body
        elif c == -1:
            term = f"-{body}"
        else:
            term = f"{c}*{body}"
        if parts and not term.startswith("-"):
            parts.append(f"+ {term}")
        elif parts:
            parts.append(f"- {term[1:]}")
        else:
            parts.append(term)
    return " ".join(parts)


@dataclass(frozen=True)
class IdealGens:
    """A finite generating set of an ideal in a fixed variable count."""

    generators: tuple[Polynomial, ...]
    nvars: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if not g:
                raise ValueError("ideal generators must be nonzero")
            for m in g.terms:
                if len(m) != self.nvars:
                    raise ValueError("generator over wrong variable count")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)
