"""Functional independence through the rank of the gradient matrix.

Rank over Q(x1..xn) is computed exactly: every row is cleared to a common
polynomial denominator and a fraction-free (Bareiss) elimination runs over
Q[x1..xn].  Evaluating at a random point first gives a cheap lower bound,
which settles the common full-rank case without symbolic elimination.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm as ilcm
from typing import Sequence

from . import _gcd
from .derivations import VectorA, grad
from .errors import PoleError
from .field import RatFunc

POINT_BOUND = 10 ** 6
MAX_REDRAWS = 50


@dataclass(frozen=True)
class JacobianMatrix:
    """Row j is the gradient of the j-th function."""

    rows: tuple

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, idx):
        j, i = idx
        return self.rows[j][i]

    def __str__(self):
        return "[" + ", ".join(str(r) for r in self.rows) + "]"


def jacobian(Phi: Sequence[RatFunc]) -> JacobianMatrix:
    if not Phi:
        raise ValueError("jacobian of an empty set")
    return JacobianMatrix(tuple(grad(phi) for phi in Phi))


def _rows(M):
    rows = M.rows if isinstance(M, JacobianMatrix) else M
    return [list(r) for r in rows]


def _ncols(rows):
    return len(rows[0]) if rows else 0


def _nvars(rows):
    for r in rows:
        for x in r:
            return x.nvars
    raise ValueError("empty matrix")


# -- rank over Q ------------------------------------------------------------

def rank_q(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a matrix of rationals by Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    nr, nc = len(m), _ncols(m)
    rank = 0
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nr):
            f = m[i][col]
            if f:
                f /= p
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def evaluate_matrix(M, point) -> list[list[Fraction]]:
    """Entry-wise evaluation; raises PoleError if any entry has a pole at point."""
    return [[x.evaluate(point) for x in r] for r in _rows(M)]


def evaluated_rank(M, point) -> int:
    return rank_q(evaluate_matrix(M, point))


def random_point(n, rng, bound=POINT_BOUND):
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))


def evaluated_rank_random(M, rng) -> int:
    """Rank at a random pole-free point; redraws up to MAX_REDRAWS times."""
    rows = _rows(M)
    n = _nvars(rows)
    for _ in range(MAX_REDRAWS):
        try:
            return evaluated_rank(rows, random_point(n, rng))
        except PoleError:
            continue
    raise PoleError(f"no pole-free point found in {MAX_REDRAWS} draws")


# -- rank over A ------------------------------------------------------------
# Entries below are primitive integer polynomials (raw dicts, see _gcd).

def _lcm_int(f, g):
    if _gcd.is_const(f):
        return g
    if _gcd.is_const(g):
        return f
    return _gcd.mul(f, _gcd.divexact(g, _gcd.gcd(f, g)))


def cleared_rows(M) -> list[list[dict]]:
    """Scale each row by a common denominator so every entry is an integer polynomial."""
    out = []
    for row in _rows(M):
        n = row[0].nvars
        den = {(0,) * n: 1}
        scale = 1
        for x in row:
            if x:
                den = _lcm_int(den, x.D)
                scale = ilcm(scale, x.c.denominator)
        cleared = []
        for x in row:
            if not x:
                cleared.append({})
                continue
            cofactor = den if _gcd.is_const(x.D) else _gcd.divexact(den, x.D)
            k = x.c.numerator * (scale // x.c.denominator)
            cleared.append(_gcd.scale(_gcd.mul(x.N, cofactor), k))
        out.append(cleared)
    return out


def _size(f):
    return (max(sum(e) for e in f), len(f))


def _bareiss_step(m, k, col, prev, cols):
    pivot = m[k][col]
    for i in range(k + 1, len(m)):
        lead = m[i][col]
        for j in cols:
            val = _gcd.mul(pivot, m[i][j]) if m[i][j] else {}
            if lead and m[k][j]:
                val = _gcd.sub(val, _gcd.mul(lead, m[k][j]))
            if prev is not None and val:
                val = _gcd.divexact(val, prev)
            m[i][j] = val
        m[i][col] = {}


def symbolic_rank(M) -> int:
    """Exact rank over Q(x1..xn) by fraction-free elimination with full pivoting."""
    rows = _rows(M)
    if not rows:
        return 0
    m = cleared_rows(rows)
    nr, nc = len(m), _ncols(m)
    prev = None
    rank = 0
    for k in range(min(nr, nc)):
        best = None
        for j in range(k, nc):
            for i in range(k, nr):
                if m[i][j]:
                    key = (_size(m[i][j]), j, i)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pj, pi = best
        m[k], m[pi] = m[pi], m[k]
        for r in m:
            r[k], r[pj] = r[pj], r[k]
        _bareiss_step(m, k, k, prev, range(k + 1, nc))
        prev = m[k][k]
        rank += 1
    return rank


def rank(M, seed: int = 0) -> int:
    """Rank over Q(x1..xn).

    A random evaluation gives a lower bound; when it already equals
    min(rows, cols) that is the answer, otherwise symbolic elimination decides.
    """
    rows = _rows(M)
    if not rows or not _ncols(rows):
        return 0
    full = min(len(rows), _ncols(rows))
    if evaluated_rank_random(rows, random.Random(seed)) == full:
        return full
    return symbolic_rank(rows)


def is_functionally_independent(Phi: Sequence[RatFunc]) -> bool:
    Phi = list(Phi)
    if not Phi:
        return True
    if len(Phi) > Phi[0].nvars:
        return False
    return rank(jacobian(Phi)) == len(Phi)


# -- nullspace over A -------------------------------------------------------

def echelon(M):
    """Fraction-free row echelon form, keeping column order.

    Returns (rows, pivot_columns); rows hold integer polynomial dicts and
    each one is a linear combination of the cleared input rows.
    """
    m = cleared_rows(M)
    nr, nc = len(m), _ncols(m)
    prev = None
    pivots = []
    row = 0
    for col in range(nc):
        if row == nr:
            break
        cands = [i for i in range(row, nr) if m[i][col]]
        if not cands:
            continue
        pi = min(cands, key=lambda i: (_size(m[i][col]), i))
        m[row], m[pi] = m[pi], m[row]
        _bareiss_step(m, row, col, prev, range(col + 1, nc))
        prev = m[row][col]
        pivots.append(col)
        row += 1
    return m[:row], pivots


def nullspace(M) -> list[VectorA]:
    """Basis of {v in A^cols : M v = 0}, one vector per free column."""
    rows = _rows(M)
    n = _nvars(rows)
    nc = _ncols(rows)
    ech, pivots = echelon(rows)
    one = {(0,) * n: 1}

    def lift(f):
        return RatFunc._canon(n, 1, f, one)

    basis = []
    for free in (c for c in range(nc) if c not in pivots):
        x = [RatFunc.zero(n) for _ in range(nc)]
        x[free] = RatFunc.one(n)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            acc = RatFunc.zero(n)
            for j in range(pc + 1, nc):
                if x[j] and ech[r][j]:
                    acc = acc + lift(ech[r][j]) * x[j]
            x[pc] = -acc / lift(ech[r][pc])
        basis.append(VectorA(tuple(x)))
    return basis
