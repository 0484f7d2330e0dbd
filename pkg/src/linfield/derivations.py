"""Derivations of Q(x1..xn): partials, gradients and L = sum a_i d_i.

A derivation is stored by its coefficient vector (a_1, ..., a_n); two
derivations are equal exactly when their vectors are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _gcd
from .errors import VariableCountError
from .field import Poly, RatFunc, _as_ratfunc, substitute


@dataclass(frozen=True)
class VectorA:
    """An n-tuple of rational functions, i.e. an element of A^n."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if not coords:
            raise ValueError("VectorA needs at least one coordinate")
        n = coords[0].nvars
        if any(c.nvars != n for c in coords):
            raise VariableCountError("coordinates disagree on the variable count")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, items, n=None) -> VectorA:
        items = list(items)
        if n is None:
            n = next((x.nvars for x in items if isinstance(x, (RatFunc, Poly))), None)
        return cls(tuple(_as_ratfunc(x, n) for x in items))

    @classmethod
    def zero(cls, n, length=None) -> VectorA:
        return cls(tuple(RatFunc.zero(n) for _ in range(n if length is None else length)))

    @classmethod
    def unit(cls, n, k) -> VectorA:
        return cls(tuple(RatFunc.one(n) if i == k else RatFunc.zero(n) for i in range(n)))

    @property
    def nvars(self):
        return self.coords[0].nvars

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other):
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return VectorA(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return VectorA(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return VectorA(tuple(-a for a in self))

    def scale(self, f) -> VectorA:
        f = _as_ratfunc(f, self.nvars)
        return VectorA(tuple(f * a for a in self))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _check_index(i, n):
    if not 1 <= i <= n:
        raise IndexError(f"partial index {i} outside 1..{n}")


def partial(i: int, psi: RatFunc) -> RatFunc:
    """d psi / d x_i with a one-based index."""
    _check_index(i, psi.nvars)
    return psi.diff(i - 1)


def grad(psi: RatFunc) -> VectorA:
    return VectorA(tuple(psi.diff(i) for i in range(psi.nvars)))


def inner_product(u: VectorA, v: VectorA) -> RatFunc:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    total = RatFunc.zero(u.nvars)
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def apply_derivation(a: VectorA, psi: RatFunc) -> RatFunc:
    """L psi = sum_i a_i d_i psi."""
    psi = _as_ratfunc(psi, a.nvars)
    if len(a) != psi.nvars:
        raise VariableCountError(f"derivation has {len(a)} coefficients, psi has {psi.nvars} variables")
    if psi.is_constant():
        return RatFunc.zero(psi.nvars)
    n = psi.nvars

    def lift(f):
        return RatFunc._canon(n, 1, f, {(0,) * n: 1}) if f else RatFunc.zero(n)

    def on_poly(f):
        return inner_product(a, VectorA(tuple(lift(_gcd.diff(f, i)) for i in range(n))))

    if psi.is_polynomial():
        return on_poly(psi.N) * psi.c
    # L(c N/D) = c (D LN - N LD) / D^2
    top = on_poly(psi.N) * lift(psi.D) - on_poly(psi.D) * lift(psi.N)
    return top * RatFunc._make(n, psi.c, {(0,) * n: 1}, _gcd.mul(psi.D, psi.D))


def formal_partials(psi: RatFunc) -> list[RatFunc]:
    """Partials of psi in its own variables y_1..y_r (the D_j of the chain rule)."""
    return [psi.diff(j) for j in range(psi.nvars)]


def chain_rule_rhs(psi: RatFunc, phi: Sequence[RatFunc], i: int) -> RatFunc:
    """sum_j (D_j psi)(phi) * d_i phi_j."""
    _check_index(i, phi[0].nvars)
    total = RatFunc.zero(phi[0].nvars)
    for d_psi, f in zip(formal_partials(psi), phi):
        if d_psi:
            total = total + substitute(d_psi, phi) * f.diff(i - 1)
    return total


def chain_rule_check(psi: RatFunc, phi: Sequence[RatFunc], i: int) -> bool:
    lhs = partial(i, substitute(psi, phi))
    return lhs == chain_rule_rhs(psi, phi, i)


def derivation_chain_rule_rhs(psi: RatFunc, phi: Sequence[RatFunc], a: VectorA) -> RatFunc:
    """sum_j (D_j psi)(phi) * L phi_j for the derivation L with coefficients a."""
    rhs = RatFunc.zero(a.nvars)
    for d_psi, f in zip(formal_partials(psi), phi):
        if d_psi:
            rhs = rhs + substitute(d_psi, phi) * apply_derivation(a, f)
    return rhs


def derivation_chain_rule_check(psi: RatFunc, phi: Sequence[RatFunc], a: VectorA) -> bool:
    return apply_derivation(a, substitute(psi, phi)) == derivation_chain_rule_rhs(psi, phi, a)
