"""Pure-Python hot kernels: exponent-vector ops, normal-ordering term
products and sparse term-map accumulation.

The compiled twin lives in ``_speedups.pyx``; both expose the same
functions and must stay behaviourally identical (see
tests/test_kernel_parity.py).  Exponent vectors are plain int tuples laid
out as (central..., x..., d...); coefficients are arbitrary exact Python
objects (int, Fraction, RatFunc) combined with +, * and == 0.
"""

from math import comb, gcd

BACKEND = "python"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if the monomial a divides b (componentwise <=)."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(b, a):
    """Exponent vector of b / a; caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def drl_key(e):
    """Graded reverse-lexicographic sort key, first variable most
    significant; bigger key = bigger monomial."""
    return (sum(e),) + tuple(-x for x in reversed(e))


def block_drl_key(e, blocks):
    """Key for a block order: earlier blocks dominate, degrevlex inside."""
    key = []
    for block in blocks:
        key.append(sum(e[i] for i in block))
        key.extend(-e[i] for i in reversed(block))
    return tuple(key)


# per-variable expansion of d^b x^c, keyed by (b, c)
_DX_CACHE = {}


def _dx_expansion(b, c):
    entry = _DX_CACHE.get((b, c))
    if entry is None:
        entry = tuple(
            (k, comb(b, k) * comb(c, k) * _factorial(k))
            for k in range(min(b, c) + 1)
        )
        _DX_CACHE[(b, c)] = entry
    return entry


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def weyl_term_mul(ea, eb, ncentral, npairs):
    """Normally ordered product of two exponent vectors.

    Returns a list of (exponent, integer factor) pairs; the caller scales
    by the coefficient product.  Central slots add; each (x_i, d_i) pair
    expands through d^b x^c = sum_k k! C(b,k) C(c,k) x^(c-k) d^(b-k).
    """
    base = list(mono_mul(ea, eb))
    out = [(base, 1)]
    for i in range(npairs):
        bi = ea[ncentral + npairs + i]
        ci = eb[ncentral + i]
        if bi == 0 or ci == 0:
            continue
        expansion = _dx_expansion(bi, ci)
        nxt = []
        for exp, coeff in out:
            for k, factor in expansion:
                if k == 0:
                    nxt.append((exp, coeff))
                else:
                    e2 = list(exp)
                    e2[ncentral + i] -= k
                    e2[ncentral + npairs + i] -= k
                    nxt.append((e2, coeff * factor))
        out = nxt
    return [(tuple(exp), coeff) for exp, coeff in out]


def terms_mul_weyl(ta, tb, ncentral, npairs):
    """Full operator product of two term maps, normally ordered."""
    out = {}
    for ea, ca in ta.items():
        for eb, cb in tb.items():
            c = ca * cb
            for exp, factor in weyl_term_mul(ea, eb, ncentral, npairs):
                prev = out.get(exp)
                v = c * factor if factor != 1 else c
                v = v if prev is None else prev + v
                if v == 0:
                    out.pop(exp, None)
                else:
                    out[exp] = v
    return out


def terms_mul_comm(ta, tb):
    out = {}
    for ea, ca in ta.items():
        for eb, cb in tb.items():
            exp = mono_mul(ea, eb)
            v = ca * cb
            prev = out.get(exp)
            v = v if prev is None else prev + v
            if v == 0:
                out.pop(exp, None)
            else:
                out[exp] = v
    return out


def terms_add_scaled(dst, src, c):
    """dst += c * src in place; returns the exponents written."""
    touched = []
    for exp, v in src.items():
        w = c * v
        prev = dst.get(exp)
        w = w if prev is None else prev + w
        if w == 0:
            dst.pop(exp, None)
        else:
            dst[exp] = w
            touched.append(exp)
    return touched


def terms_scale(dst, c):
    for exp in dst:
        dst[exp] = dst[exp] * c


def axpy_weyl(dst, c, mono, src, ncentral, npairs):
    """dst += c * (monomial ∘ src) with the normally ordered product;
    returns the exponents written."""
    touched = []
    for eb, cb in src.items():
        base = c * cb
        for exp, factor in weyl_term_mul(mono, eb, ncentral, npairs):
            v = base * factor if factor != 1 else base
            prev = dst.get(exp)
            v = v if prev is None else prev + v
            if v == 0:
                dst.pop(exp, None)
            else:
                dst[exp] = v
                touched.append(exp)
    return touched


def int_content(terms):
    """gcd of the (integer) coefficients of a term map; 0 for empty."""
    g = 0
    for v in terms.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def max_total_degree(terms):
    deg = -1
    for exp in terms:
        d = sum(exp)
        if d > deg:
            deg = d
    return deg
