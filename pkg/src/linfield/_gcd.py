"""Multivariate GCD over the integers on raw sparse dictionaries.

Polynomials here are plain ``dict`` objects mapping exponent tuples to
nonzero Python ints.  The fast path is the heuristic GCD (evaluate one
variable at a large integer, recurse, rebuild by balanced base-xi
expansion, confirm by exact division).  When it gives up, a recursive
primitive pseudo-remainder sequence takes over; that route never fails.
"""

import heapq
from functools import reduce
from math import gcd as igcd, isqrt

HEU_GCD_MAX = 6


class HeuristicGCDFailed(Exception):
    pass


def grlex_key(exp):
    return (sum(exp), exp)


def lead(f):
    return max(f, key=grlex_key)


def content(f):
    return reduce(igcd, f.values(), 0)


def primitive(f):
    """Divide out the integer content and make the grlex-leading coefficient positive."""
    if not f:
        return {}
    c = content(f)
    if f[lead(f)] < 0:
        c = -c
    if c == 1:
        return dict(f)
    return {e: v // c for e, v in f.items()}


def add(f, g):
    out = dict(f)
    for e, v in g.items():
        w = out.get(e, 0) + v
        if w:
            out[e] = w
        else:
            out.pop(e, None)
    return out


def sub(f, g):
    out = dict(f)
    for e, v in g.items():
        w = out.get(e, 0) - v
        if w:
            out[e] = w
        else:
            out.pop(e, None)
    return out


def mul(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = {}
    get = out.get
    for e1, c1 in g.items():
        for e2, c2 in f.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = get(e, 0) + c1 * c2
    return {e: v for e, v in out.items() if v}


def scale(f, c):
    if not c:
        return {}
    return {e: v * c for e, v in f.items()}


def present_vars(f):
    found = set()
    for e in f:
        for i, k in enumerate(e):
            if k:
                found.add(i)
    return found


def degree_in(f, v):
    return max((e[v] for e in f), default=-1)


def divexact(f, g):
    """Return f / g when g divides f in Z[x], else None."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return {}
    nv = len(next(iter(g)))
    for v in range(nv):
        if degree_in(g, v) > degree_in(f, v):
            return None
    lg = lead(g)
    lc = g[lg]
    rest = [(e, c) for e, c in g.items() if e != lg]
    rem = dict(f)
    heap = [(-sum(e), tuple(-k for k in e)) for e in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        negdeg, negexp = heapq.heappop(heap)
        m = tuple(-k for k in negexp)
        c = rem.get(m)
        if c is None:
            continue
        qe = tuple(a - b for a, b in zip(m, lg))
        if min(qe) < 0:
            return None
        qc, r = divmod(c, lc)
        if r:
            return None
        quot[qe] = qc
        del rem[m]
        for e, gc in rest:
            t = tuple(a + b for a, b in zip(qe, e))
            old = rem.get(t)
            if old is None:
                rem[t] = -qc * gc
                heapq.heappush(heap, (-sum(t), tuple(-k for k in t)))
            else:
                w = old - qc * gc
                if w:
                    rem[t] = w
                else:
                    del rem[t]
    return quot


# -- heuristic GCD ---------------------------------------------------------

def _evaluate(f, v, x):
    out = {}
    for e, c in f.items():
        k = e[v]
        if k:
            e = e[:v] + (0,) + e[v + 1:]
            c = c * x ** k
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _interpolate(h, v, x):
    half = x // 2
    out = {}
    for e, c in h.items():
        i = 0
        while c:
            d = c % x
            if d > half:
                d -= x
            if d:
                out[e[:v] + (i,) + e[v + 1:]] = d
            c = (c - d) // x
            i += 1
    return out


def heu_gcd(f, g):
    """Return (h, f/h, g/h) with h the GCD of nonzero f and g over Z."""
    vf, vg = present_vars(f), present_vars(g)
    if not vf or not vg:
        h = igcd(content(f), content(g))
        zero = (0,) * len(next(iter(f)))
        return {zero: h}, {e: v // h for e, v in f.items()}, {e: v // h for e, v in g.items()}

    cont = igcd(content(f), content(g))
    if cont != 1:
        f = {e: v // cont for e, v in f.items()}
        g = {e: v // cont for e, v in g.items()}
    v = max(vf | vg)

    f_norm = max(abs(c) for c in f.values())
    g_norm = max(abs(c) for c in g.values())
    # a divisor found at xi > 1 + 2*min norm is the true gcd; smaller points
    # (as in the usual 99*sqrt(B) shortcut) can accept a proper divisor
    x = max(2 * min(f_norm, g_norm) + 29,
            2 * min(f_norm // abs(f[lead(f)]), g_norm // abs(g[lead(g)])) + 2)

    for _ in range(HEU_GCD_MAX):
        ff = _evaluate(f, v, x)
        gg = _evaluate(g, v, x)
        if ff and gg:
            h, cff, cfg = heu_gcd(ff, gg)

            h = primitive(_interpolate(h, v, x))
            cf = divexact(f, h)
            if cf is not None:
                cg = divexact(g, h)
                if cg is not None:
                    return scale(h, cont), cf, cg

            cff = _interpolate(cff, v, x)
            h = divexact(f, cff) if cff else None
            if h is not None:
                cg = divexact(g, h)
                if cg is not None:
                    return scale(h, cont), cff, cg

            cfg = _interpolate(cfg, v, x)
            h = divexact(g, cfg) if cfg else None
            if h is not None:
                cf = divexact(f, h)
                if cf is not None:
                    return scale(h, cont), cf, cfg

        x = 73794 * x * isqrt(isqrt(x)) // 27011

    raise HeuristicGCDFailed("no luck")


# -- primitive PRS fallback -------------------------------------------------

def _coeffs_in(f, v):
    out = {}
    for e, c in f.items():
        k = e[v]
        out.setdefault(k, {})[e[:v] + (0,) + e[v + 1:]] = c
    return out


def _content_in(f, v):
    return reduce(prs_gcd, _coeffs_in(f, v).values())


def _pp_in(f, v):
    c = _content_in(f, v)
    return primitive(divexact(f, c))


def _shift(f, v, k):
    if not k:
        return f
    return {e[:v] + (e[v] + k,) + e[v + 1:]: c for e, c in f.items()}


def _prem(a, b, v):
    # pseudo-remainder up to a factor free of v; good enough for a PRS that
    # takes primitive parts at every step
    db = degree_in(b, v)
    lcb = _coeffs_in(b, v)[db]
    r = a
    while r:
        dr = degree_in(r, v)
        if dr < db:
            break
        lcr = _coeffs_in(r, v)[dr]
        r = sub(mul(lcb, r), _shift(mul(lcr, b), v, dr - db))
    return r


def prs_gcd(f, g):
    """GCD over Q, returned as a primitive integer polynomial with positive lead."""
    if not f:
        return primitive(g)
    if not g:
        return primitive(f)
    vf, vg = present_vars(f), present_vars(g)
    if not vf or not vg:
        zero = (0,) * len(next(iter(f)))
        return {zero: 1}
    common = vf & vg
    if vf != common:
        v = min(vf - common)
        return prs_gcd(_content_in(f, v), g)
    if vg != common:
        v = min(vg - common)
        return prs_gcd(f, _content_in(g, v))

    v = min(common)
    cf, cg = _content_in(f, v), _content_in(g, v)
    c = prs_gcd(cf, cg)
    a = primitive(divexact(f, cf))
    b = primitive(divexact(g, cg))
    if degree_in(a, v) < degree_in(b, v):
        a, b = b, a
    while True:
        r = _prem(a, b, v)
        if not r:
            h = b
            break
        if degree_in(r, v) == 0:
            h = {(0,) * len(next(iter(f))): 1}
            break
        a, b = b, _pp_in(r, v)
    return primitive(mul(c, h))


def gcd(f, g):
    """Primitive GCD of two integer polynomials (positive grlex-leading coefficient)."""
    if not f:
        return primitive(g)
    if not g:
        return primitive(f)
    try:
        h, _, _ = heu_gcd(f, g)
    except HeuristicGCDFailed:
        return prs_gcd(f, g)
    return primitive(h)


# -- small integer-dict kernels used by the rational function type ----------

def is_const(f):
    return len(f) == 1 and not any(next(iter(f)))


def split(f):
    """(signed content, primitive part with positive lead)."""
    c = content(f)
    if f[lead(f)] < 0:
        c = -c
    if c == 1:
        return 1, f
    return c, {e: v // c for e, v in f.items()}


def diff(f, i):
    out = {}
    for e, c in f.items():
        k = e[i]
        if k:
            out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
    return out


def power(f, k):
    nv = len(next(iter(f)))
    result = {(0,) * nv: 1}
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def evaluate(f, point):
    """Evaluate at a point of ints (exact int result) or Fractions."""
    powers = [{} for _ in point]
    total = 0
    for e, c in f.items():
        t = c
        for i, k in enumerate(e):
            if k:
                cache = powers[i]
                pk = cache.get(k)
                if pk is None:
                    pk = cache[k] = point[i] ** k
                t = t * pk
        total += t
    return total
