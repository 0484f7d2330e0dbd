"""Exact arithmetic in Q[x1..xn] and its fraction field.

Scalars are :class:`fractions.Fraction`.  Polynomials are sparse maps from
exponent tuples to nonzero coefficients, ordered by graded lexicographic
order with x1 > x2 > ... > xn.  A :class:`RatFunc` is always stored in
canonical form: numerator and denominator coprime, and the grlex-leading
coefficient of the denominator equal to 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm as ilcm
from numbers import Rational
from typing import Iterable, Iterator, Sequence

from . import _gcd
from .errors import (
    PoleError,
    UndefinedCompositionError,
    VariableCountError,
    ZeroDenominatorError,
    ZeroInverseError,
)

Scalar = Fraction
Monomial = tuple  # tuple[int, ...] of length n

grlex_key = _gcd.grlex_key


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """Monomials of total degree d in n variables, grlex-descending."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for k in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - k):
            yield (k,) + rest


def basis_monomials(n: int, cutoff: int) -> Iterator[Monomial]:
    """The ordered basis B_P truncated at total degree ``cutoff``.

    Degrees ascend; inside one degree the order is x1^d, x1^(d-1) x2, ...
    """
    for d in range(cutoff + 1):
        yield from monomials_of_degree(n, d)


def format_monomial(exp: Monomial) -> str:
    parts = []
    for i, k in enumerate(exp, start=1):
        if k == 1:
            parts.append(f"x{i}")
        elif k:
            parts.append(f"x{i}^{k}")
    return "*".join(parts)


def format_scalar(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Poly:
    """Sparse polynomial over Q in a fixed number of variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                e = tuple(e)
                if len(e) != nvars or min(e, default=0) < 0:
                    raise ValueError(f"bad exponent vector {e!r} for {nvars} variables")
                if not isinstance(c, (int, Fraction)):
                    c = Fraction(c)
                c = _norm(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
            clean = {e: _norm(c) for e, c in clean.items() if c}
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n, c):
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, n):
        return cls.constant(n, 1)

    @classmethod
    def var(cls, n, i):
        """The variable x_{i+1} (``i`` is zero-based)."""
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        e = [0] * n
        e[i] = 1
        return cls._raw(n, {tuple(e): 1})

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_value(self) -> Fraction:
        return Fraction(self.terms.get((0,) * self.nvars, 0))

    def coeff(self, exp) -> Fraction:
        return Fraction(self.terms.get(tuple(exp), 0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return _gcd.lead(self.terms)

    def leading_coeff(self) -> Fraction:
        return Fraction(self.terms[self.leading_monomial()])

    def sorted_terms(self):
        """(monomial, coefficient) pairs, grlex-descending."""
        return sorted(((e, Fraction(c)) for e, c in self.terms.items()),
                      key=lambda t: grlex_key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, Rational):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise VariableCountError(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, Rational):
            return Poly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            w = _norm(out.get(e, 0) + c)
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for e1, c1 in b.items():
            for e2, c2 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return Poly._raw(self.nvars, {e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {e: _norm(v * c) for e, v in self.terms.items()})

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Poly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def diff(self, i: int) -> Poly:
        """Partial derivative with respect to x_{i+1} (zero-based ``i``)."""
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = _norm(c * k)
        return Poly._raw(self.nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise VariableCountError(f"expected {self.nvars} coordinates, got {len(point)}")
        point = [Fraction(v) for v in point]
        powers = [{} for _ in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    pk = cache.get(k)
                    if pk is None:
                        pk = cache[k] = point[i] ** k
                    t *= pk
            total += t
        return total

    # -- integer/primitive views -------------------------------------------

    def primitive_parts(self):
        """Return (c, f) with self = c * f, f a primitive integer dict, lead(f) > 0."""
        if not self.terms:
            return Fraction(0), {}
        den = 1
        for c in self.terms.values():
            if type(c) is Fraction:
                den = ilcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = _gcd.content(ints)
        if ints[_gcd.lead(ints)] < 0:
            g = -g
        return Fraction(g, den), {e: v // g for e, v in ints.items()}

    @classmethod
    def from_ints(cls, nvars, ints, c=1) -> Poly:
        if c == 1:
            return cls._raw(nvars, dict(ints))
        return cls._raw(nvars, {e: _norm(v * c) for e, v in ints.items()})

    def exact_div(self, other: Poly) -> Poly:
        """self / other, raising ValueError when the division is not exact."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        c1, f = self.primitive_parts()
        c2, g = other.primitive_parts()
        q = _gcd.divexact(f, g)
        if q is None:
            raise ValueError("polynomial division is not exact")
        return Poly.from_ints(self.nvars, q, c1 / c2)

    def divides(self, other: Poly) -> bool:
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = format_monomial(e)
            mag = abs(c)
            if not mono:
                body = format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_scalar(mag)}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Poly({self.nvars}, {str(self)!r})"


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """GCD over Q as a primitive integer polynomial with positive leading coefficient."""
    if p.nvars != q.nvars:
        raise VariableCountError(f"{p.nvars} vs {q.nvars} variables")
    _, f = p.primitive_parts()
    _, g = q.primitive_parts()
    return Poly._raw(p.nvars, _gcd.gcd(f, g))


def _int_gcd(f, g):
    """GCD of primitive integer dicts, with cheap exits for constants and monomials."""
    if _gcd.is_const(f) or _gcd.is_const(g):
        return {(0,) * len(next(iter(f))): 1}
    if len(f) == 1 and len(g) == 1:
        (e1,), (e2,) = f, g
        return {tuple(min(a, b) for a, b in zip(e1, e2)): 1}
    if len(f) == 1 or len(g) == 1:
        mono, other = (f, g) if len(f) == 1 else (g, f)
        (e,) = mono
        m = tuple(min(k, min(x[i] for x in other)) for i, k in enumerate(e))
        return {m: 1}
    if f == g:
        return f
    return _gcd.gcd(f, g)


def _one_dict(n):
    return {(0,) * n: 1}


def _num_den_ints(c: Fraction):
    return c.numerator, c.denominator


class RatFunc:
    """Element of Q(x1..xn) in canonical form.

    Internally the value is ``c * N / D`` where N and D are coprime,
    primitive integer polynomials (dicts) with positive grlex-leading
    coefficients and c is a Fraction.  This triple is unique, so equality
    is structural.  ``num`` and ``den`` expose the canonical pair with a
    monic denominator.
    """

    __slots__ = ("nvars", "c", "N", "D", "_hash", "_num", "_den")

    def __init__(self, num, den=None, nvars=None):
        if not isinstance(num, Poly):
            if nvars is None:
                raise TypeError("nvars is required when num is a scalar")
            num = Poly.constant(nvars, num)
        if den is None:
            den = Poly.one(num.nvars)
        elif not isinstance(den, Poly):
            den = Poly.constant(num.nvars, den)
        if num.nvars != den.nvars:
            raise VariableCountError(f"{num.nvars} vs {den.nvars} variables")
        if not den:
            raise ZeroDenominatorError("denominator is the zero polynomial")
        cn, f = num.primitive_parts()
        cd, g = den.primitive_parts()
        self._assign(*RatFunc._reduce(num.nvars, cn / cd, f, g))

    def _assign(self, n, c, N, D):
        self.nvars = n
        self.c = c
        self.N = N
        self.D = D
        self._hash = self._num = self._den = None

    @staticmethod
    def _reduce(n, c, N, D):
        if not N or not c:
            return n, Fraction(0), {}, _one_dict(n)
        cn, N = _gcd.split(N)
        cd, D = _gcd.split(D)
        if not _gcd.is_const(D):
            h = _int_gcd(N, D)
            if not _gcd.is_const(h):
                N = _gcd.divexact(N, h)
                D = _gcd.divexact(D, h)
        return n, Fraction(c) * cn / cd, N, D

    @classmethod
    def _make(cls, n, c, N, D):
        r = cls.__new__(cls)
        r._assign(n, Fraction(c), N, D)
        return r

    @classmethod
    def _canon(cls, n, c, N, D):
        """Canonicalize c * N / D for arbitrary integer dicts N and D != 0."""
        r = cls.__new__(cls)
        r._assign(*cls._reduce(n, c, N, D))
        return r

    @classmethod
    def zero(cls, n):
        return cls._make(n, 0, {}, _one_dict(n))

    @classmethod
    def one(cls, n):
        return cls._make(n, 1, _one_dict(n), _one_dict(n))

    @classmethod
    def constant(cls, n, c):
        c = Fraction(c)
        if not c:
            return cls.zero(n)
        return cls._make(n, c, _one_dict(n), _one_dict(n))

    @classmethod
    def var(cls, n, i):
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        e = [0] * n
        e[i] = 1
        return cls._make(n, 1, {tuple(e): 1}, _one_dict(n))

    @classmethod
    def from_poly(cls, p: Poly):
        c, f = p.primitive_parts()
        if not f:
            return cls.zero(p.nvars)
        return cls._make(p.nvars, c, f, _one_dict(p.nvars))

    # -- canonical pair -------------------------------------------------------

    @property
    def num(self) -> Poly:
        if self._num is None:
            lc = self.D[_gcd.lead(self.D)]
            self._num = Poly.from_ints(self.nvars, self.N, self.c / lc)
        return self._num

    @property
    def den(self) -> Poly:
        if self._den is None:
            lc = self.D[_gcd.lead(self.D)]
            self._den = Poly.from_ints(self.nvars, self.D, Fraction(1, lc))
        return self._den

    # -- inspection ---------------------------------------------------------

    def __bool__(self):
        return bool(self.N)

    def is_zero(self):
        return not self.N

    def is_polynomial(self):
        return _gcd.is_const(self.D)

    def is_constant(self):
        return (not self.N or _gcd.is_const(self.N)) and _gcd.is_const(self.D)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.c

    def degree(self) -> int:
        """max(deg num, deg den)."""
        return max(max((sum(e) for e in self.N), default=-1), max(sum(e) for e in self.D))

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return (self.nvars == other.nvars and self.c == other.c
                    and self.N == other.N and self.D == other.D)
        if isinstance(other, Rational):
            return self.is_constant() and self.c == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.c, frozenset(self.N.items()), frozenset(self.D.items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.nvars != self.nvars:
                raise VariableCountError(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise VariableCountError(f"{self.nvars} vs {other.nvars} variables")
            return RatFunc.from_poly(other)
        if isinstance(other, Rational):
            return RatFunc.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.N:
            return other
        if not other.N:
            return self
        n = self.nvars
        p1, q1 = _num_den_ints(self.c)
        p2, q2 = _num_den_ints(other.c)
        scale = Fraction(1, q1 * q2)
        N1, D1, N2, D2 = self.N, self.D, other.N, other.D
        if D1 == D2:
            t = _gcd.add(_gcd.scale(N1, p1 * q2), _gcd.scale(N2, p2 * q1))
            return RatFunc._canon(n, scale, t, D1)
        g = _int_gcd(D1, D2)
        if _gcd.is_const(g):
            t = _gcd.add(_gcd.scale(_gcd.mul(N1, D2), p1 * q2), _gcd.scale(_gcd.mul(N2, D1), p2 * q1))
            if not t:
                return RatFunc.zero(n)
            ct, t = _gcd.split(t)
            return RatFunc._make(n, scale * ct, t, _gcd.mul(D1, D2))
        D1g = _gcd.divexact(D1, g)
        D2g = _gcd.divexact(D2, g)
        t = _gcd.add(_gcd.scale(_gcd.mul(N1, D2g), p1 * q2), _gcd.scale(_gcd.mul(N2, D1g), p2 * q1))
        if not t:
            return RatFunc.zero(n)
        ct, t = _gcd.split(t)
        g2 = _int_gcd(t, g)
        if not _gcd.is_const(g2):
            t = _gcd.divexact(t, g2)
            g = _gcd.divexact(g, g2)
        return RatFunc._make(n, scale * ct, t, _gcd.mul(_gcd.mul(D1g, D2g), g))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(self.nvars, -self.c, self.N, self.D)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.nvars
        if not self.N or not other.N:
            return RatFunc.zero(n)
        c = self.c * other.c
        if other.is_constant():
            return RatFunc._make(n, c, self.N, self.D)
        if self.is_constant():
            return RatFunc._make(n, c, other.N, other.D)
        N1, D1, N2, D2 = self.N, self.D, other.N, other.D
        g1 = _int_gcd(N1, D2)
        if not _gcd.is_const(g1):
            N1, D2 = _gcd.divexact(N1, g1), _gcd.divexact(D2, g1)
        g2 = _int_gcd(N2, D1)
        if not _gcd.is_const(g2):
            N2, D1 = _gcd.divexact(N2, g2), _gcd.divexact(D1, g2)
        return RatFunc._make(n, c, _gcd.mul(N1, N2), _gcd.mul(D1, D2))

    __rmul__ = __mul__

    def inv(self) -> RatFunc:
        if not self.N:
            raise ZeroInverseError("zero has no multiplicative inverse")
        return RatFunc._make(self.nvars, 1 / self.c, self.D, self.N)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.N:
            raise ZeroDenominatorError("division by zero")
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int) -> RatFunc:
        if not isinstance(k, int):
            raise TypeError("only integer powers are defined")
        if k < 0:
            return self.inv() ** (-k)
        if k == 0:
            return RatFunc.one(self.nvars)
        if not self.N:
            return self
        return RatFunc._make(self.nvars, self.c ** k, _gcd.power(self.N, k), _gcd.power(self.D, k))

    def diff(self, i: int) -> RatFunc:
        """Partial derivative with respect to x_{i+1} (zero-based ``i``)."""
        n = self.nvars
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        dN = _gcd.diff(self.N, i)
        dD = _gcd.diff(self.D, i)
        if not dD:
            if not dN:
                return RatFunc.zero(n)
            return RatFunc._canon(n, self.c, dN, self.D)
        t = _gcd.sub(_gcd.mul(self.D, dN), _gcd.mul(self.N, dD))
        if not t:
            return RatFunc.zero(n)
        return RatFunc._canon(n, self.c, t, _gcd.mul(self.D, self.D))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise VariableCountError(f"expected {self.nvars} coordinates, got {len(point)}")
        pt = [Fraction(v) for v in point]
        if all(v.denominator == 1 for v in pt):
            pt = [v.numerator for v in pt]
        d = _gcd.evaluate(self.D, pt)
        if not d:
            raise PoleError(f"denominator {self.den} vanishes at {tuple(point)}")
        if not self.N:
            return Fraction(0)
        return self.c * Fraction(_gcd.evaluate(self.N, pt)) / d

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFunc({self.nvars}, {str(self)!r})"


def _as_ratfunc(x, n=None) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    if n is None:
        raise TypeError("cannot infer variable count for a bare scalar")
    return RatFunc.constant(n, x)


# -- operation-level API ----------------------------------------------------

def ratfunc_new(p1: Poly, p2: Poly) -> RatFunc:
    return RatFunc(p1, p2)


def ratfunc_add(a: RatFunc, b: RatFunc) -> RatFunc:
    return a + b


def ratfunc_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return a * b


def ratfunc_neg(a: RatFunc) -> RatFunc:
    return -a


def ratfunc_inv(a: RatFunc) -> RatFunc:
    return a.inv()


def encode_sequence(p: Poly, cutoff_degree: int | None = None) -> list[Fraction]:
    """Coefficients of ``p`` on B_P through total degree ``cutoff_degree``."""
    if isinstance(p, RatFunc):
        if not p.is_polynomial():
            raise ValueError("only polynomials have a B_P sequence")
        p = p.num.scale(1 / p.den.constant_value())
    if cutoff_degree is None:
        cutoff_degree = max(p.degree(), 0)
    if cutoff_degree < p.degree():
        raise ValueError(f"cutoff {cutoff_degree} is below the degree {p.degree()}")
    return [p.coeff(e) for e in basis_monomials(p.nvars, cutoff_degree)]


def decode_sequence(seq: Iterable, n: int) -> Poly:
    terms = {}
    basis = iter(basis_monomials(n, 10 ** 9))
    for c in seq:
        e = next(basis)
        if c:
            terms[e] = c
    return Poly(n, terms)


def _compose(F, tops, bottoms, n):
    """Return (T, mexp) with F(tops/bottoms) = T / prod(bottoms[j] ** mexp[j])."""
    r = len(tops)
    mexp = [max((e[j] for e in F), default=0) for j in range(r)]
    caches = [({0: _one_dict(n)}, {0: _one_dict(n)}) for _ in range(r)]

    def power(j, which, k):
        cache = caches[j][which]
        if k not in cache:
            base = tops[j] if which == 0 else bottoms[j]
            cache[k] = _gcd.power(base, k) if base else {}
        return cache[k]

    total = {}
    for e, c in F.items():
        t = {(0,) * n: c}
        for j, k in enumerate(e):
            if k:
                t = _gcd.mul(t, power(j, 0, k))
            if mexp[j] - k:
                t = _gcd.mul(t, power(j, 1, mexp[j] - k))
            if not t:
                break
        total = _gcd.add(total, t)
    return total, mexp


def substitute(psi: RatFunc, phi: Sequence[RatFunc]) -> RatFunc:
    """Compose psi(y1..yr) with y_j := phi[j]."""
    psi = _as_ratfunc(psi)
    if len(phi) != psi.nvars:
        raise VariableCountError(f"psi has {psi.nvars} variables but {len(phi)} were supplied")
    n = phi[0].nvars
    if any(f.nvars != n for f in phi):
        raise VariableCountError("substituted functions disagree on the variable count")
    # phi_j = tops[j] / bottoms[j] with integer coefficients throughout
    tops = [_gcd.scale(f.N, f.c.numerator) for f in phi]
    bottoms = [_gcd.scale(f.D, f.c.denominator) for f in phi]
    big_d, md = _compose(psi.D, tops, bottoms, n)
    if not big_d:
        raise UndefinedCompositionError(f"denominator {psi.den} vanishes identically after substitution")
    if not psi.N:
        return RatFunc.zero(n)
    big_n, mn = _compose(psi.N, tops, bottoms, n)
    for j in range(len(phi)):
        extra = md[j] - mn[j]
        if extra > 0:
            big_n = _gcd.mul(big_n, _gcd.power(bottoms[j], extra))
        elif extra < 0:
            big_d = _gcd.mul(big_d, _gcd.power(bottoms[j], -extra))
    if not big_n:
        return RatFunc.zero(n)
    return RatFunc._canon(n, psi.c, big_n, big_d)


def eval_point(psi: RatFunc, point: Sequence) -> Fraction:
    return psi.evaluate(point)
