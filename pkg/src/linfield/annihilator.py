"""From n-1 independent functions to the line of derivations killing them.

Membership in the subfield generated by the functions is only answered
through Ker L, which can be strictly larger (for n=2 and Phi={x1^2} the
annihilator is d2, and x1 is in Ker d2 without being a function of x1^2).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from . import _gcd
from .derivations import VectorA, apply_derivation
from .errors import DependentInputError, ZeroEtaError
from .field import RatFunc, _as_ratfunc
from .independence import cleared_rows, is_functionally_independent, jacobian, nullspace
from .operators import NHOperator, conjugate


def normalize_vector(v: VectorA) -> VectorA:
    """Canonical representative of the line A*v.

    Denominators are cleared, the gcd of the entries divided out (integer
    content included), and the sign chosen so the first nonzero entry has a
    positive leading coefficient.
    """
    n = v.nvars
    if v.is_zero():
        raise ValueError("cannot normalize the zero vector")
    (row,) = cleared_rows([v])
    g = {}
    for f in row:
        if f:
            g = _gcd.gcd(g, f) if g else _gcd.primitive(f)
    row = [_gcd.divexact(f, g) if f else {} for f in row]
    first = next(f for f in row if f)
    k = gcd(*(_gcd.content(f) for f in row if f))
    if first[_gcd.lead(first)] < 0:
        k = -k
    one = {(0,) * n: 1}
    out = []
    for f in row:
        if not f:
            out.append(RatFunc.zero(n))
            continue
        c, h = _gcd.split(f)
        out.append(RatFunc._make(n, Fraction(c, k), h, one))
    return VectorA(tuple(out))


def annihilate(Phi: Sequence[RatFunc]) -> VectorA:
    """Normalized coefficient vector a with <a | grad phi> = 0 for every phi in Phi."""
    Phi = list(Phi)
    if not Phi:
        raise DependentInputError("need n - 1 functions, got none")
    n = Phi[0].nvars
    if len(Phi) != n - 1:
        raise DependentInputError(f"need exactly n - 1 = {n - 1} functions, got {len(Phi)}")
    if n == 1:
        raise DependentInputError("n = 1 has no nonzero annihilating derivation")
    if not is_functionally_independent(Phi):
        raise DependentInputError("the functions are functionally dependent")
    basis = nullspace(jacobian(Phi))
    if len(basis) != 1:
        raise DependentInputError(f"nullspace has dimension {len(basis)}, expected 1")
    return normalize_vector(basis[0])


def coset_operator(Phi: Sequence[RatFunc], eta: RatFunc) -> NHOperator:
    """The operator L + q, L annihilating Phi, whose kernel is the coset eta * Ker L."""
    Phi = list(Phi)
    eta = _as_ratfunc(eta, Phi[0].nvars if Phi else None)
    if eta.is_zero():
        raise ZeroEtaError("eta must be nonzero")
    return conjugate(annihilate(Phi), eta)


def kernel_membership(a: VectorA, xi: RatFunc) -> bool:
    return apply_derivation(a, xi).is_zero()


def coset_membership(a: VectorA, eta: RatFunc, xi: RatFunc) -> bool:
    """Is xi in the coset eta * Ker L?"""
    eta = _as_ratfunc(eta, a.nvars)
    if eta.is_zero():
        raise ZeroEtaError("eta must be nonzero")
    return kernel_membership(a, _as_ratfunc(xi, a.nvars) / eta)


def minors_vector(rows: Sequence[VectorA]) -> VectorA:
    """Generalized cross product of n-1 vectors in A^n (signed maximal minors).

    Independent of the elimination route; the result is orthogonal to every row.
    """
    n = len(rows[0])
    if len(rows) != n - 1:
        raise ValueError("need n - 1 rows")
    nv = rows[0].nvars

    def det(m):
        if not m:
            return RatFunc.one(nv)
        total = RatFunc.zero(nv)
        for j, x in enumerate(m[0]):
            if x:
                sub = [r[:j] + r[j + 1:] for r in m[1:]]
                term = x * det(sub)
                total = total + term if j % 2 == 0 else total - term
        return total

    mat = [list(r.coords) for r in rows]
    coords = []
    for i in range(n):
        sub = [r[:i] + r[i + 1:] for r in mat]
        d = det(sub)
        coords.append(d if i % 2 == 0 else -d)
    return VectorA(tuple(coords))
