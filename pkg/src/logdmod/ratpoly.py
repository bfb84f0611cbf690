"""Exact commutative arithmetic: rationals, sparse multivariate
polynomials and normalized rational functions.

Scalars are stdlib Fractions (arbitrary-precision, auto-reduced, positive
denominator); plain ints are accepted anywhere a rational is.  Polynomials
are term maps from dense exponent tuples to nonzero coefficients, tied to
an immutable PolyRing.  Coefficients are rationals by default; a ring may
instead declare a parameter field, in which case coefficients are RatFunc
values over that parameter ring (used for generic-parameter runs).

The canonical monomial order everywhere (display, monic normalization) is
graded reverse lexicographic with the first declared variable most
significant.
"""

from fractions import Fraction

from . import kernel
from .errors import ContextMismatchError, MathError

Rational = Fraction


class PolyRing:
    """Immutable variable context: ordered names, optional parameter field.

    Two polynomials interoperate only when built over the same ring
    object (identity, not name equality).
    """

    __slots__ = ("names", "index", "param_ring")

    def __init__(self, names, param_ring=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        if param_ring is not None and set(param_ring.names) & set(names):
            raise ValueError("parameter names collide with ring variables")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "index", {n: i for i, n in enumerate(names)})
        object.__setattr__(self, "param_ring", param_ring)

    def __setattr__(self, *a):
        raise AttributeError("PolyRing is immutable")

    def __repr__(self):
        field = "QQ" if self.param_ring is None else f"QQ({','.join(self.param_ring.names)})"
        return f"PolyRing({field}[{','.join(self.names)}])"

    @property
    def arity(self):
        return len(self.names)

    def coerce(self, c):
        """Lift a scalar into this ring's coefficient domain."""
        if self.param_ring is None:
            if isinstance(c, (int, Fraction)):
                return c
            if isinstance(c, RatFunc) and c.is_scalar():
                return c.scalar_value()
            raise TypeError(f"not a rational scalar: {c!r}")
        if isinstance(c, RatFunc):
            if c.ring is not self.param_ring:
                raise ContextMismatchError("RatFunc over a different parameter ring")
            return c
        if isinstance(c, (int, Fraction)):
            return RatFunc.from_scalar(self.param_ring, c)
        if isinstance(c, CommPoly) and c.ring is self.param_ring:
            return RatFunc(c, self.param_ring.one_poly_raw())
        raise TypeError(f"cannot coerce {c!r} into {self!r} coefficients")

    def coeff_one(self):
        return 1 if self.param_ring is None else RatFunc.from_scalar(self.param_ring, 1)

    def one_poly_raw(self):
        return CommPoly._raw(self, {(0,) * self.arity: self.coerce(1)})

    def zero(self):
        return CommPoly._raw(self, {})

    def one(self):
        return self.one_poly_raw()

    def constant(self, c):
        c = self.coerce(c)
        if not c:
            return self.zero()
        return CommPoly._raw(self, {(0,) * self.arity: c})

    def var(self, name):
        i = self.index.get(name)
        if i is None:
            raise KeyError(f"unknown variable {name!r} in {self!r}")
        exp = [0] * self.arity
        exp[i] = 1
        return CommPoly._raw(self, {tuple(exp): self.coerce(1)})

    def monomial(self, exp, coeff=1):
        exp = tuple(exp)
        if len(exp) != self.arity or any(e < 0 for e in exp):
            raise ValueError(f"bad exponent vector {exp} for {self!r}")
        coeff = self.coerce(coeff)
        if not coeff:
            return self.zero()
        return CommPoly._raw(self, {exp: coeff})

    def poly(self, terms):
        """Build from an {exponent: coefficient} mapping, dropping zeros."""
        out = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != self.arity or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {self!r}")
            c = self.coerce(c)
            if c:
                out[exp] = c
        return CommPoly._raw(self, out)


class CommPoly:
    """Sparse multivariate polynomial over a PolyRing; immutable."""

    __slots__ = ("ring", "terms", "_hash")

    @staticmethod
    def _raw(ring, terms):
        p = object.__new__(CommPoly)
        object.__setattr__(p, "ring", ring)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __init__(self, ring, terms):
        raise TypeError("use PolyRing constructors (poly/var/constant/...)")

    def __setattr__(self, *a):
        raise AttributeError("CommPoly is immutable")

    # -- predicates -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.terms:
            return 0 if self.ring.param_ring is None else self.ring.coerce(0)
        (exp, c), = self.terms.items()
        if any(exp):
            raise MathError(f"not a constant: {self}")
        return c

    def is_monomial(self):
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, CommPoly):
            return self.ring is other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.is_constant() and bool(self.terms) and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((id(self.ring), frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- arithmetic -------------------------------------------------
    def _check(self, other):
        if self.ring is not other.ring:
            raise ContextMismatchError(f"mixing rings {self.ring!r} and {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = self.ring.constant(other)
        if not isinstance(other, CommPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        kernel.terms_add_scaled(out, other.terms, 1)
        return CommPoly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            other = self.ring.constant(other)
        if not isinstance(other, CommPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        kernel.terms_add_scaled(out, other.terms, -1)
        return CommPoly._raw(self.ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        if not isinstance(other, CommPoly):
            return NotImplemented
        self._check(other)
        return CommPoly._raw(self.ring, kernel.terms_mul_comm(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c):
        c = self.ring.coerce(c)
        if not c:
            return self.ring.zero()
        return CommPoly._raw(self.ring, {e: v * c for e, v in self.terms.items()})

    # -- structure --------------------------------------------------
    def total_degree(self):
        return kernel.max_total_degree(self.terms)

    def degree_in(self, name):
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=-1)

    def mentions(self, name):
        i = self.ring.index[name]
        return any(e[i] for e in self.terms)

    def leading(self):
        """(exponent, coefficient) maximal under the canonical order."""
        if not self.terms:
            raise MathError("leading term of the zero polynomial")
        exp = max(self.terms, key=kernel.drl_key)
        return exp, self.terms[exp]

    def monic(self):
        if not self.terms:
            return self
        _, lc = self.leading()
        if lc == 1:
            return self
        if self.ring.param_ring is None:
            inv = Fraction(1, 1) / lc
        else:
            inv = lc.inverse()
        return self.scale(inv)

    def coeff_of(self, exp):
        return self.terms.get(tuple(exp), 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: kernel.drl_key(t[0]), reverse=True)

    def derivative(self, name):
        i = self.ring.index[name]
        out = {}
        for exp, c in self.terms.items():
            k = exp[i]
            if k:
                e2 = list(exp)
                e2[i] = k - 1
                out[tuple(e2)] = c * k
        return CommPoly._raw(self.ring, out)

    def substitute(self, images, target_ring):
        """Map this polynomial into target_ring.

        images maps variable names to scalars or target-ring polynomials;
        unmapped variables must exist in the target under the same name.
        """
        values = {}
        for i, name in enumerate(self.ring.names):
            if name in images:
                img = images[name]
                if not isinstance(img, CommPoly):
                    img = target_ring.constant(img)
                elif img.ring is not target_ring:
                    raise ContextMismatchError(f"image of {name} not in target ring")
                values[i] = img
            else:
                values[i] = target_ring.var(name)
        out = target_ring.zero()
        powcache = {}
        for exp, c in self.terms.items():
            term = target_ring.constant(c)
            for i, e in enumerate(exp):
                if e:
                    key = (i, e)
                    p = powcache.get(key)
                    if p is None:
                        p = values[i] ** e
                        powcache[key] = p
                    term = term * p
            out = out + term
        return out

    def convert(self, target_ring):
        """Name-based embedding into another ring over the same scalars."""
        return self.substitute({}, target_ring)

    # -- rendering --------------------------------------------------
    def __str__(self):
        return render_terms(self.terms, self.ring.names)

    def __repr__(self):
        return f"<CommPoly {self}>"


def _coeff_str(c):
    if isinstance(c, RatFunc):
        return c.factor_str()
    return str(c)


def render_terms(terms, names, sort_key=kernel.drl_key):
    """Canonical text form: terms sorted descending, explicit `*`, `^`."""
    if not terms:
        return "0"
    pieces = []
    for exp in sorted(terms, key=sort_key, reverse=True):
        c = terms[exp]
        mono = "*".join(
            f"{names[i]}^{e}" if e > 1 else names[i]
            for i, e in enumerate(exp) if e
        )
        if isinstance(c, RatFunc) and c.is_scalar():
            c = c.scalar_value()
        if isinstance(c, RatFunc):
            body = c.factor_str() if not c.is_one() else ""
            sign = "+"
            if not mono and not body:
                body = "1"
        else:
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            body = "" if (a == 1 and mono) else str(a)
        if body and mono:
            piece = f"{body}*{mono}"
        else:
            piece = body or mono
        pieces.append((sign, piece))
    sign0, piece0 = pieces[0]
    out = piece0 if sign0 == "+" else f"-{piece0}"
    for sign, piece in pieces[1:]:
        out += f" {sign} {piece}"
    return out


# ---------------------------------------------------------------- gcd

def multivariate_gcd(p, q):
    """gcd of two rational-coefficient polynomials, monic under the
    canonical order; gcd(0, q) is monic q."""
    if not isinstance(p, CommPoly) or not isinstance(q, CommPoly):
        raise TypeError("multivariate_gcd expects CommPoly arguments")
    p._check(q)
    if p.ring.param_ring is not None:
        raise MathError("gcd is defined over rational coefficients only")
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    return _gcd(p, q).monic()


def _occurring(p):
    out = set()
    for exp in p.terms:
        for i, e in enumerate(exp):
            if e:
                out.add(i)
    return out


def _gcd(p, q):
    if p.is_constant() or q.is_constant():
        return p.ring.one()
    common = _occurring(p) & _occurring(q)
    if not common:
        return p.ring.one()
    # main variable: fewest occurrences across both operands
    def occurrences(i):
        return sum(1 for e in p.terms if e[i]) + sum(1 for e in q.terms if e[i])
    v = min(common, key=lambda i: (occurrences(i), i))
    fp, cont_p = _primitive_univariate(p, v)
    fq, cont_q = _primitive_univariate(q, v)
    cont = _gcd(cont_p, cont_q) if not (cont_p.is_constant() or cont_q.is_constant()) else p.ring.one()
    f, g = (fp, fq) if max(fp) >= max(fq) else (fq, fp)
    while g:
        r = _pseudo_rem(f, g, p.ring)
        if r:
            r = _divide_univariate_content(r, p.ring)
        f, g = g, r
    gcd_main = _from_univariate(f, v, p.ring)
    return cont * gcd_main


def _as_univariate(p, v):
    """Split off variable v: {degree: coefficient polynomial (v-free)}."""
    out = {}
    for exp, c in p.terms.items():
        d = exp[v]
        e2 = list(exp)
        e2[v] = 0
        key = tuple(e2)
        bucket = out.setdefault(d, {})
        bucket[key] = bucket.get(key, 0) + c
    return {
        d: CommPoly._raw(p.ring, {e: c for e, c in bucket.items() if c})
        for d, bucket in out.items()
        if any(bucket.values())
    }


def _from_univariate(f, v, ring):
    terms = {}
    for d, coeff in f.items():
        for exp, c in coeff.terms.items():
            e2 = list(exp)
            e2[v] = d
            terms[tuple(e2)] = c
    return CommPoly._raw(ring, terms)


def _coeff_gcd(f, ring):
    g = ring.zero()
    for coeff in f.values():
        g = _gcd(g, coeff) if g else coeff
        if g.is_constant():
            break
    return g if g else ring.one()


def _primitive_univariate(p, v):
    f = _as_univariate(p, v)
    cont = _coeff_gcd(f, p.ring)
    if not cont.is_constant():
        f = {d: exact_div(c, cont) for d, c in f.items()}
    return f, cont


def _divide_univariate_content(f, ring):
    cont = _coeff_gcd(f, ring)
    if cont.is_constant():
        return f
    return {d: exact_div(c, cont) for d, c in f.items()}


def _pseudo_rem(f, g, ring):
    """Pseudo-remainder of univariate views (content is discarded by the
    caller, so leading-coefficient powers need not be exact)."""
    dg = max(g)
    lg = g[dg]
    r = dict(f)
    while r:
        dr = max(r)
        if dr < dg:
            break
        lr = r[dr]
        shift = dr - dg
        nr = {}
        for d, c in r.items():
            nr[d] = c * lg
        for d, c in g.items():
            prod = c * lr
            tgt = d + shift
            nr[tgt] = nr.get(tgt, ring.zero()) - prod
        r = {d: c for d, c in nr.items() if c}
    return r


class ExactDivisionError(MathError):
    pass


def exact_div(p, q):
    """p / q when the division is exact; raises ExactDivisionError else."""
    p._check(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if q.is_constant():
        c = q.constant_value()
        if p.ring.param_ring is None:
            return p.scale(Fraction(1, 1) / c)
        return p.scale(c.inverse())
    lq_exp, lq_c = q.leading()
    rem = dict(p.terms)
    out = {}
    while rem:
        exp = max(rem, key=kernel.drl_key)
        if not kernel.mono_divides(lq_exp, exp):
            raise ExactDivisionError(f"{q} does not divide {p}")
        m = kernel.mono_div(exp, lq_exp)
        if p.ring.param_ring is None:
            c = Fraction(rem[exp]) / Fraction(lq_c)
        else:
            c = rem[exp] * lq_c.inverse()
        out[m] = c
        kernel.terms_add_scaled(rem, {kernel.mono_mul(m, e): v for e, v in q.terms.items()}, -c)
    return CommPoly._raw(p.ring, out)


def divides(q, p):
    try:
        exact_div(p, q)
        return True
    except ExactDivisionError:
        return False


# ------------------------------------------------------------ RatFunc

class RatFunc:
    """Normalized fraction of rational-coefficient polynomials over a
    parameter ring: gcd-reduced, denominator monic and nonzero."""

    __slots__ = ("ring", "num", "den", "_hash")

    def __init__(self, num, den):
        if num.ring is not den.ring:
            raise ContextMismatchError("numerator and denominator rings differ")
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = multivariate_gcd(num, den)
            if not g.is_constant():
                num = exact_div(num, g)
                den = exact_div(den, g)
            _, lc = den.leading()
            if lc != 1:
                inv = Fraction(1, 1) / lc
                num = num.scale(inv)
                den = den.scale(inv)
        else:
            den = num.ring.one()
        object.__setattr__(self, "ring", num.ring)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def from_scalar(ring, c):
        return RatFunc(ring.constant(c), ring.one())

    @staticmethod
    def from_poly(p):
        return RatFunc(p, p.ring.one())

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num == self.den

    def is_scalar(self):
        return self.num.is_constant() and self.den.is_constant()

    def scalar_value(self):
        if not self.num:
            return Fraction(0)
        return Fraction(self.num.constant_value()) / self.den.constant_value()

    def is_poly(self):
        return self.den.is_constant()

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_scalar(self.ring, other)
        if isinstance(other, CommPoly) and other.ring is self.ring:
            return RatFunc.from_poly(other)
        return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RatFunc)
        object.__setattr__(out, "ring", self.ring)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        object.__setattr__(out, "_hash", None)
        return out

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return RatFunc.from_scalar(self.ring, 0)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o * self.inverse()

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverting zero rational function")
        return RatFunc(self.den, self.num)

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def factor_str(self):
        """Rendering as a multiplicative factor (parenthesized when needed)."""
        if self.is_scalar():
            return str(self.scalar_value())
        if self.den.is_constant() and self.den.constant_value() == 1:
            if self.num.is_monomial():
                return str(self.num)
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"<RatFunc {self}>"
