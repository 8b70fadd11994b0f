"""Monomial orders: lex, deglex, degrevlex, weight vectors, elimination.

An order exposes ``key(mono) -> tuple`` so monomials compare through their
keys; keys from different order instances are not comparable.  The variable
permutation lists variables from greatest to least precedence.  degrevlex
compares total degree first, then breaks ties at the last distinct exponent
position of the permuted arrangement (larger exponent there wins), which in
the canonical row-major arrangement makes the diagonal term of an inner
minor the leading one.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .polynomials import Monomial

SCHEMES = ("lex", "deglex", "degrevlex")


class MonomialOrder:
    """Total multiplicative order on monomials with 1 as minimum."""

    __slots__ = ("scheme", "nvars", "perm", "weights")

    def __init__(self, scheme: str, nvars: int, perm=None, weights=None):
        if scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {scheme!r}")
        if perm is None:
            perm = tuple(range(nvars))
        else:
            perm = tuple(perm)
            if sorted(perm) != list(range(nvars)):
                raise ValueError("perm must be a permutation of the variables")
        if weights is not None:
            weights = tuple(weights)
            if len(weights) != nvars:
                raise ValueError("weight vector has wrong length")
            if any(w < 0 for w in weights):
                raise ValueError("weights must be non-negative")
        self.scheme = scheme
        self.nvars = nvars
        self.perm = perm
        self.weights = weights

    def key(self, m: Monomial) -> tuple:
        arranged = tuple(m[v] for v in self.perm)
        if self.scheme == "lex":
            base: tuple = arranged
        elif self.scheme == "deglex":
            base = (sum(m), arranged)
        else:  # degrevlex: degree, then last distinct exponent decides
            base = (sum(m), tuple(reversed(arranged)))
        if self.weights is not None:
            w = sum(wi * ei for wi, ei in zip(self.weights, m))
            return (w, base)
        return base

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """-1, 0 or 1 as m1 is less than, equal to or greater than m2."""
        k1, k2 = self.key(m1), self.key(m2)
        if k1 < k2:
            return -1
        if k1 > k2:
            return 1
        return 0

    def spec_string(self) -> str:
        parts = [self.scheme]
        if self.perm != tuple(range(self.nvars)):
            parts.append("perm=" + ",".join(map(str, self.perm)))
        if self.weights is not None:
            parts.append("weights=" + ",".join(map(str, self.weights)))
        return ":".join(parts)

    def __repr__(self) -> str:
        return f"MonomialOrder({self.spec_string()!r}, nvars={self.nvars})"


class EliminationOrder:
    """Block order: the last variable dominates, the rest compare by inner."""

    __slots__ = ("inner", "elim_var")

    def __init__(self, inner: MonomialOrder, elim_var: int):
        if elim_var != inner.nvars:
            raise ValueError("elimination variable must be the last index")
        self.inner = inner
        self.elim_var = elim_var

    def key(self, m: Monomial) -> tuple:
        return (m[self.elim_var], self.inner.key(m[: self.elim_var]))


def canonical_order(nvars: int) -> MonomialOrder:
    """The fixed order used for all ideal equality tests: degrevlex on the
    row-major variable numbering."""
    return MonomialOrder("degrevlex", nvars)


def order_sample(
    nvars: int,
    permutations: int = 5,
    weight_orders: int = 5,
    seed: int = 0,
) -> list[MonomialOrder]:
    """Reproducible finite stand-in for ranging over all monomial orders.

    lex, deglex and degrevlex on the canonical numbering, plus seeded random
    variable permutations and seeded non-negative weight vectors (degrevlex
    tie-break).
    """
    rng = random.Random(seed)
    out = [
        MonomialOrder("lex", nvars),
        MonomialOrder("deglex", nvars),
        MonomialOrder("degrevlex", nvars),
    ]
    for _ in range(permutations):
        out.append(MonomialOrder("degrevlex", nvars, perm=rng.sample(range(nvars), nvars)))
    for _ in range(weight_orders):
        ws = tuple(rng.randrange(0, 11) for _ in range(nvars))
        out.append(MonomialOrder("degrevlex", nvars, weights=ws))
    return out


class OrderSpec(NamedTuple):
    scheme: str
    perm: tuple | None
    weights: tuple | None


def parse_order_spec(text: str) -> OrderSpec:
    """Parse ``lex|deglex|degrevlex[:perm=<ints>][:weights=<ints>]``."""
    parts = text.strip().split(":")
    scheme = parts[0]
    if scheme not in SCHEMES:
        raise ValueError(f"unknown order scheme {scheme!r}")
    perm = weights = None
    for part in parts[1:]:
        if "=" not in part:
            raise ValueError(f"malformed order option {part!r}")
        name, _, value = part.partition("=")
        values = tuple(int(x) for x in value.split(","))
        if name == "perm":
            perm = values
        elif name == "weights":
            weights = values
        else:
            raise ValueError(f"unknown order option {name!r}")
    return OrderSpec(scheme, perm, weights)


def make_order(spec: OrderSpec | str, nvars: int) -> MonomialOrder:
    if isinstance(spec, str):
        spec = parse_order_spec(spec)
    return MonomialOrder(spec.scheme, nvars, perm=spec.perm, weights=spec.weights)
