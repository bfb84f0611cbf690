"""The parametric Weyl algebra: normally ordered operators, products via
[d_i, x_i] = 1, commutators, the action on polynomials, and principal
symbols.

Exponent vectors are laid out (central | x | d).  Normal order is a
property of the representation: each variable has exactly one slot, so
x-powers are implicitly left of d-powers and no re-sorting ever happens.
Central variables (parameters and s) commute with everything.
"""

from fractions import Fraction

from . import kernel
from .errors import ContextMismatchError, MathError, UnsupportedFormError
from .ratpoly import CommPoly, PolyRing, RatFunc, render_terms


class WeylContext:
    """Variable context of the algebra K[central][x]<d>.

    base_vars and derivation_vars are paired componentwise.  When
    param_ring is given, coefficients live in the fraction field of that
    parameter ring instead of Q (generic-parameter mode).
    """

    __slots__ = ("central_vars", "base_vars", "derivation_vars", "param_ring",
                 "names", "index", "fn_ring", "symbol_ring", "symbol_vars",
                 "full_comm_ring")

    def __init__(self, central_vars, base_vars, derivation_vars, param_ring=None):
        central_vars = tuple(central_vars)
        base_vars = tuple(base_vars)
        derivation_vars = tuple(derivation_vars)
        if len(base_vars) != len(derivation_vars):
            raise ValueError("base and derivation variables must be paired")
        names = central_vars + base_vars + derivation_vars
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        object.__setattr__(self, "central_vars", central_vars)
        object.__setattr__(self, "base_vars", base_vars)
        object.__setattr__(self, "derivation_vars", derivation_vars)
        object.__setattr__(self, "param_ring", param_ring)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "index", {n: i for i, n in enumerate(names)})
        object.__setattr__(self, "fn_ring",
                           PolyRing(central_vars + base_vars, param_ring))
        symbol_vars = tuple("xi" + d[1:] if d.startswith("d") else "xi_" + d
                            for d in derivation_vars)
        object.__setattr__(self, "symbol_vars", symbol_vars)
        object.__setattr__(self, "symbol_ring",
                           PolyRing(central_vars + base_vars + symbol_vars, param_ring))
        object.__setattr__(self, "full_comm_ring", PolyRing(names, param_ring))

    def __setattr__(self, *a):
        raise AttributeError("WeylContext is immutable")

    def __repr__(self):
        field = "QQ" if self.param_ring is None else f"QQ({','.join(self.param_ring.names)})"
        return (f"WeylContext({field}[{','.join(self.central_vars)}]"
                f"[{','.join(self.base_vars)}]<{','.join(self.derivation_vars)}>)")

    @property
    def ncentral(self):
        return len(self.central_vars)

    @property
    def npairs(self):
        return len(self.base_vars)

    @property
    def arity(self):
        return len(self.names)

    def coerce(self, c):
        return self.fn_ring.coerce(c)

    def zero(self):
        return WeylOp._raw(self, {})

    def one(self):
        return WeylOp._raw(self, {(0,) * self.arity: self.coerce(1)})

    def constant(self, c):
        c = self.coerce(c)
        if not c:
            return self.zero()
        return WeylOp._raw(self, {(0,) * self.arity: c})

    def var(self, name):
        i = self.index.get(name)
        if i is None:
            raise KeyError(f"unknown variable {name!r} in {self!r}")
        exp = [0] * self.arity
        exp[i] = 1
        return WeylOp._raw(self, {tuple(exp): self.coerce(1)})

    def monomial(self, exp, coeff=1):
        exp = tuple(exp)
        if len(exp) != self.arity or any(e < 0 for e in exp):
            raise ValueError(f"bad exponent vector {exp}")
        coeff = self.coerce(coeff)
        if not coeff:
            return self.zero()
        return WeylOp._raw(self, {exp: coeff})

    def op(self, terms):
        out = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != self.arity or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp}")
            c = self.coerce(c)
            if c:
                out[exp] = c
        return WeylOp._raw(self, out)

    def from_poly(self, f):
        """Embed a polynomial of the function ring as a multiplication
        operator."""
        if f.ring is not self.fn_ring:
            f = f.convert(self.fn_ring)
        pad = (0,) * self.npairs
        return WeylOp._raw(self, {exp + pad: c for exp, c in f.terms.items()})


class WeylOp:
    """Normally ordered element of the Weyl algebra; immutable."""

    __slots__ = ("context", "terms", "_hash")

    @staticmethod
    def _raw(context, terms):
        op = object.__new__(WeylOp)
        object.__setattr__(op, "context", context)
        object.__setattr__(op, "terms", terms)
        object.__setattr__(op, "_hash", None)
        return op

    def __init__(self, context, terms):
        raise TypeError("use WeylContext constructors (op/var/from_poly/...)")

    def __setattr__(self, *a):
        raise AttributeError("WeylOp is immutable")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, WeylOp):
            return self.context is other.context and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            zero_exp = (0,) * self.context.arity
            return set(self.terms) == {zero_exp} and self.terms[zero_exp] == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((id(self.context), frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def _check(self, other):
        if self.context is not other.context:
            raise ContextMismatchError("operands from different Weyl contexts")

    def _wrap(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.context.constant(other)
        if isinstance(other, CommPoly):
            return self.context.from_poly(other)
        if isinstance(other, WeylOp):
            return other
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        self._check(o)
        out = dict(self.terms)
        kernel.terms_add_scaled(out, o.terms, 1)
        return WeylOp._raw(self.context, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylOp._raw(self.context, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        self._check(o)
        out = dict(self.terms)
        kernel.terms_add_scaled(out, o.terms, -1)
        return WeylOp._raw(self.context, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        self._check(o)
        ctx = self.context
        return WeylOp._raw(ctx, kernel.terms_mul_weyl(
            self.terms, o.terms, ctx.ncentral, ctx.npairs))

    def __rmul__(self, other):
        # scalars and central coefficients commute; polynomials and
        # operators must use the ordered product
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(other)
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.context.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            half = n >> 1
            if half:
                base = base * base
            n = half
        return result

    def scale(self, c):
        c = self.context.coerce(c)
        if not c:
            return self.context.zero()
        return WeylOp._raw(self.context, {e: v * c for e, v in self.terms.items()})

    # -- structure --------------------------------------------------
    def d_degree(self):
        """Maximal total degree in the derivation variables."""
        ctx = self.context
        lo = ctx.ncentral + ctx.npairs
        return max((sum(e[lo:]) for e in self.terms), default=-1)

    def total_degree(self):
        return kernel.max_total_degree(self.terms)

    def is_commutative(self):
        ctx = self.context
        lo = ctx.ncentral + ctx.npairs
        return all(not any(e[lo:]) for e in self.terms)

    def to_fn_poly(self):
        """Inverse of from_poly; requires no derivation variables."""
        ctx = self.context
        lo = ctx.ncentral + ctx.npairs
        if not self.is_commutative():
            raise UnsupportedFormError("operator involves derivation variables")
        return ctx.fn_ring.poly({e[:lo]: c for e, c in self.terms.items()})

    def sorted_terms(self):
        ctx = self.context
        lo = ctx.ncentral + ctx.npairs

        def key(item):
            e = item[0]
            return (sum(e[lo:]),) + kernel.drl_key(e)

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        ctx = self.context
        lo = ctx.ncentral + ctx.npairs

        def key(e):
            return (sum(e[lo:]),) + kernel.drl_key(e)

        return render_terms(self.terms, ctx.names, sort_key=key)

    def __repr__(self):
        return f"<WeylOp {self}>"


def commutator(p, q):
    """PQ - QP."""
    return p * q - q * p


def apply_op(p, f):
    """The natural action of an operator on a function-ring polynomial:
    derivations act as partial derivatives, everything else multiplies."""
    ctx = p.context
    if isinstance(f, WeylOp):
        f = f.to_fn_poly()
    if f.ring is not ctx.fn_ring:
        if any(f.mentions(d) for d in ctx.derivation_vars if d in f.ring.index):
            raise UnsupportedFormError("argument mentions derivation variables")
        f = f.convert(ctx.fn_ring)
    nc, np_ = ctx.ncentral, ctx.npairs
    out = ctx.fn_ring.zero()
    deriv_cache = {(0,) * np_: f}

    def derived(dexp):
        got = deriv_cache.get(dexp)
        if got is not None:
            return got
        # peel one derivative off the last nonzero slot
        i = max(j for j, e in enumerate(dexp) if e)
        prev = list(dexp)
        prev[i] -= 1
        base = derived(tuple(prev))
        got = base.derivative(ctx.base_vars[i])
        deriv_cache[dexp] = got
        return got

    for exp, c in p.terms.items():
        dexp = exp[nc + np_:]
        g = derived(dexp)
        if not g:
            continue
        mono = ctx.fn_ring.monomial(exp[:nc + np_], c)
        out = out + mono * g
    return out


def principal_symbol(p):
    """Top d-degree part with derivations replaced by cotangent
    variables; the zero operator maps to the zero symbol."""
    ctx = p.context
    if not p.terms:
        return ctx.symbol_ring.zero()
    lo = ctx.ncentral + ctx.npairs
    top = p.d_degree()
    terms = {e: c for e, c in p.terms.items() if sum(e[lo:]) == top}
    return ctx.symbol_ring.poly(terms)


# ------------------------------------------------- context conversions

def map_op(op, target, var_images=None, coeff_map=None):
    """Rebuild an operator in another context.

    var_images maps variable names to scalars (central variables only) or
    target variable names; unmapped names keep their own.  coeff_map
    transforms coefficients.  Only central variables may be collapsed to
    scalars; x/d slots must map to x/d slots of the same kind.
    """
    src = op.context
    var_images = var_images or {}
    out = {}
    nc, np_ = src.ncentral, src.npairs
    zero_t = (0,) * target.arity
    for exp, c in op.terms.items():
        if coeff_map is not None:
            c = coeff_map(c, exp)
        else:
            c = target.coerce(c)
        texp = list(zero_t)
        for i, e in enumerate(exp):
            if not e:
                continue
            name = src.names[i]
            img = var_images.get(name, name)
            if isinstance(img, str):
                j = target.index.get(img)
                if j is None:
                    raise ContextMismatchError(f"variable {img!r} missing in target")
                texp[j] += e
            else:
                if i >= nc:
                    raise UnsupportedFormError(
                        f"cannot specialize non-central variable {name}")
                c = c * target.coerce(Fraction(img) ** e)
        if not c:
            continue
        texp = tuple(texp)
        prev = out.get(texp)
        c = c if prev is None else prev + c
        if c:
            out[texp] = c
        else:
            del out[texp]
    return WeylOp._raw(target, out)


def specialize_op(op, values, target):
    """Substitute rational values for central variables."""
    return map_op(op, target, var_images={k: Fraction(v) for k, v in values.items()})


def to_generic(op, target):
    """Move parameter variables of a central-mode operator into RatFunc
    coefficients of the target (generic-mode) context."""
    src = op.context
    params = target.param_ring
    out = {}
    nc_t = target.ncentral
    for exp, c in op.terms.items():
        pexp = [0] * params.arity
        texp = [0] * target.arity
        for i, e in enumerate(exp):
            if not e:
                continue
            name = src.names[i]
            if name in params.index:
                pexp[params.index[name]] = e
            elif name in target.index:
                texp[target.index[name]] += e
            else:
                raise ContextMismatchError(f"variable {name!r} missing in target")
        coeff = RatFunc(params.monomial(pexp, c), params.one())
        texp = tuple(texp)
        prev = out.get(texp)
        coeff = coeff if prev is None else prev + coeff
        if coeff:
            out[texp] = coeff
        elif texp in out:
            del out[texp]
    return WeylOp._raw(target, out)


def clear_denominators(op, target):
    """Rewrite a generic-mode operator with parameter variables inlined,
    scaled by the lcm of coefficient denominators (integral form)."""
    from .ratpoly import exact_div, multivariate_gcd

    src = op.context
    params = src.param_ring
    if params is None:
        return map_op(op, target)
    den = params.one()
    for c in op.terms.values():
        g = c.den
        common = multivariate_gcd(den, g)
        den = exact_div(den * g, common) if not common.is_constant() else den * g
    out = target.zero()
    for exp, c in op.terms.items():
        num = c.num * exact_div(den, c.den)
        texp = [0] * target.arity
        for i, e in enumerate(exp):
            if e:
                texp[target.index[src.names[i]]] = e
        mono = target.monomial(tuple(texp))
        out = out + target.from_poly(num.convert(target.fn_ring)) * mono
    return out
