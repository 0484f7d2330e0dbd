"""Seeded instance generators and evaluation-based identity checks.

Nothing here is used by the library's own semantics; symbolic equality of
canonical forms stays authoritative.  These helpers feed the test and
acceptance suites with reproducible random instances and give an
independent, Schwartz-Zippel style cross-check of claimed identities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .derivations import VectorA
from .errors import PoleError
from .field import Poly, RatFunc, monomials_of_degree

POINT_BOUND = 10 ** 6
MAX_REDRAWS = 50


@dataclass(frozen=True)
class GenParams:
    n: int = 2
    max_degree: int = 3
    max_terms: int = 4
    coeff_bound: int = 9
    seed: int = 0

    def with_seed(self, seed):
        return replace(self, seed=seed)


def _rng(params, rng):
    return rng if rng is not None else random.Random(params.seed)


def _coeff(rng, bound):
    c = 0
    while not c:
        c = rng.randint(-bound, bound)
    return c


def random_monomial(n, degree, rng):
    e = [0] * n
    for _ in range(degree):
        e[rng.randrange(n)] += 1
    return tuple(e)


def random_poly(params: GenParams, rng=None, nonzero=False) -> Poly:
    rng = _rng(params, rng)
    while True:
        terms = {}
        for _ in range(rng.randint(1, params.max_terms)):
            e = random_monomial(params.n, rng.randint(0, params.max_degree), rng)
            terms[e] = terms.get(e, 0) + _coeff(rng, params.coeff_bound)
        p = Poly(params.n, terms)
        if p or not nonzero:
            return p


def random_homogeneous(n, degree, terms, rng, coeff_bound=9) -> Poly:
    monos = list(monomials_of_degree(n, degree))
    chosen = rng.sample(monos, min(terms, len(monos)))
    return Poly(n, {e: _coeff(rng, coeff_bound) for e in chosen})


def random_ratfunc(params: GenParams, rng=None, nonzero=False) -> RatFunc:
    """Random element of Q(x1..xn); numerator and denominator degree <= max_degree."""
    rng = _rng(params, rng)
    num = random_poly(params, rng, nonzero=nonzero)
    den = random_poly(params, rng, nonzero=True)
    return RatFunc(num, den)


def random_nonconstant(params: GenParams, rng=None) -> RatFunc:
    rng = _rng(params, rng)
    while True:
        f = random_ratfunc(params, rng, nonzero=True)
        if not f.is_constant():
            return f


def random_vector(params: GenParams, rng=None) -> VectorA:
    rng = _rng(params, rng)
    return VectorA(tuple(random_ratfunc(params, rng) for _ in range(params.n)))


def random_nonzero_vector(params: GenParams, rng=None) -> VectorA:
    rng = _rng(params, rng)
    while True:
        v = random_vector(params, rng)
        if not v.is_zero():
            return v


def random_point(n, rng, bound=POINT_BOUND):
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))


# -- stock kernel elements ---------------------------------------------------

def euler_vector(n) -> VectorA:
    """Coefficients (x1, ..., xn) of the Euler operator sum x_i d_i."""
    return VectorA(tuple(RatFunc.var(n, i) for i in range(n)))


def homogeneous_ratio(n, degree, rng, terms=2, coeff_bound=9) -> RatFunc:
    """Quotient of two homogeneous polynomials of equal degree: Euler kernel element."""
    num = random_homogeneous(n, degree, terms, rng, coeff_bound)
    den = random_homogeneous(n, degree, terms, rng, coeff_bound)
    return RatFunc(num, den)


def monomial_ratio(n, degree, rng) -> RatFunc:
    """Ratio of two monomials of the same total degree."""
    a = random_monomial(n, degree, rng)
    b = random_monomial(n, degree, rng)
    return RatFunc(Poly(n, {a: 1}), Poly(n, {b: 1}))


def homogeneous_element(n, degree, rng, terms=2, coeff_bound=9) -> RatFunc:
    """Homogeneous rational function of the given (possibly negative) degree.

    The Euler operator multiplies it by ``degree``, so it lies in Ker(L - degree).
    """
    base = homogeneous_ratio(n, rng.randint(1, 2), rng, terms, coeff_bound)
    mono = Poly(n, {random_monomial(n, abs(degree), rng): 1})
    shift = RatFunc.from_poly(mono)
    return base * (shift if degree >= 0 else shift.inv())


# -- identity checking --------------------------------------------------------

def _point_values(lhs, rhs, rng, n):
    for _ in range(MAX_REDRAWS):
        pt = random_point(n, rng)
        try:
            return lhs.evaluate(pt), rhs.evaluate(pt)
        except PoleError:
            continue
    raise PoleError(f"no pole-free evaluation point found in {MAX_REDRAWS} draws")


def identity_check(lhs: RatFunc, rhs: RatFunc, trials: int = 5, seed: int = 0) -> bool:
    """Compare lhs and rhs at ``trials`` random rational points.

    Integer coordinates are drawn uniformly from [-10^6, 10^6].  Points where
    either side has a pole are redrawn; after 50 consecutive failures a
    PoleError is raised.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if lhs.nvars != rhs.nvars:
        raise ValueError("operands have different variable counts")
    rng = random.Random(seed)
    for _ in range(trials):
        a, b = _point_values(lhs, rhs, rng, lhs.nvars)
        if a != b:
            return False
    return True


_OPS = ("+", "-", "*", "/")


def random_expression_text(n, rng, depth=3) -> str:
    """Random well-formed expression source in x1..xn (may denote a pole-free zero divisor)."""
    if depth == 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.5:
            return f"x{rng.randint(1, n)}"
        if r < 0.8:
            return str(rng.randint(0, 9))
        return f"x{rng.randint(1, n)}^{rng.randint(-2, 3)}"
    op = rng.choice(_OPS)
    left = random_expression_text(n, rng, depth - 1)
    right = random_expression_text(n, rng, depth - 1)
    if rng.random() < 0.15:
        return f"-({left} {op} {right})"
    if rng.random() < 0.15:
        return f"({left} {op} {right})^{rng.randint(0, 2)}"
    return f"({left} {op} {right})"
