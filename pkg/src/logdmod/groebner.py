"""Buchberger engine over the parametric Weyl algebra and its
commutative degenerations.

One reduction engine serves four uses: rational coefficients
(fraction-free integer arithmetic), generic-parameter coefficients
(monic RatFunc arithmetic), free modules under a position-over-term
order (an extra leading slot that must match exactly), and plain
commutative rings (a Weyl context with no derivation pairs).

Leading terms multiply commutatively in the Weyl algebra (normal-order
correction terms are componentwise smaller), so the classical pair
criteria and the elimination argument apply unchanged.
"""

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as int_gcd

from . import kernel
from .errors import ContextMismatchError, DegreeBoundExceeded, MathError
from .ratpoly import CommPoly, PolyRing, RatFunc, exact_div, multivariate_gcd
from .weyl import WeylContext, WeylOp

DEFAULT_DEGREE_BOUND = 60


# ------------------------------------------------------------- orders

class TermOrder:
    """Monomial order bound to a context: degrevlex, lex, or a block
    elimination order (degrevlex inside blocks, earlier blocks dominate).

    Keys are additive flat int tuples; bigger key = bigger monomial.
    Construction samples random monomials to confirm that 1 is minimal
    and that the order is multiplicative.
    """

    def __init__(self, context, kind, blocks=None):
        self.context = context
        self.kind = kind
        arity = context.arity
        if kind == "degrevlex":
            self.key = kernel.drl_key
        elif kind == "lex":
            self.key = lambda e: tuple(e)
        elif kind == "block":
            if not blocks or sorted(i for b in blocks for i in b) != list(range(arity)):
                raise ValueError("blocks must partition the variables")
            blocks = tuple(tuple(b) for b in blocks)
            self.key = lambda e, _b=blocks: kernel.block_drl_key(e, _b)
        else:
            raise ValueError(f"unknown order kind {kind!r}")
        self.blocks = blocks
        self._sanity_check(arity)

    def _sanity_check(self, arity):
        rng = random.Random(20240914)
        one = (0,) * arity
        kone = self.key(one)
        for _ in range(24):
            a = tuple(rng.randrange(4) for _ in range(arity))
            b = tuple(rng.randrange(4) for _ in range(arity))
            m = tuple(rng.randrange(4) for _ in range(arity))
            if self.key(a) > kone or a == one:
                pass
            else:
                raise MathError(f"{self.kind}: 1 is not minimal")
            if (self.key(a) < self.key(b)) != (
                    self.key(kernel.mono_mul(m, a)) < self.key(kernel.mono_mul(m, b))):
                raise MathError(f"{self.kind}: order is not multiplicative")

    @staticmethod
    def degrevlex(context):
        return TermOrder(context, "degrevlex")

    @staticmethod
    def lex(context):
        return TermOrder(context, "lex")

    @staticmethod
    def elimination(context, eliminate_names):
        """Block order whose dominant block holds the eliminated
        variables; kept variables form the tail block."""
        elim = set(eliminate_names)
        unknown = elim - set(context.names)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        front = tuple(i for i, n in enumerate(context.names) if n in elim)
        back = tuple(i for i, n in enumerate(context.names) if n not in elim)
        return TermOrder(context, "block", blocks=(front, back))

    def __repr__(self):
        return f"TermOrder({self.kind})"


@dataclass(frozen=True)
class FreeModuleElem:
    """Element of a finite free left module over the Weyl algebra."""

    components: tuple

    def __post_init__(self):
        if not self.components:
            raise ValueError("rank must be positive")
        ctx = self.components[0].context
        for c in self.components:
            if c.context is not ctx:
                raise ContextMismatchError("mixed contexts in module element")

    @property
    def rank(self):
        return len(self.components)

    @property
    def context(self):
        return self.components[0].context

    def __bool__(self):
        return any(self.components)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass
class GroebnerBasis:
    elements: list
    order: TermOrder
    reduced: bool
    context: WeylContext
    module_rank: int | None = None
    genericity_certificate: list = field(default_factory=list)
    representations: list | None = None
    stats: dict = field(default_factory=dict)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


@dataclass
class DivisionResult:
    remainder: object
    cofactors: list | None


# ----------------------------------------------------------- engine

class _Engine:
    """Shared reduction state for one run: context shape, order keys,
    coefficient mode and the genericity certificate."""

    def __init__(self, context, order, module=False, degree_bound=DEFAULT_DEGREE_BOUND):
        self.ctx = context
        self.ff = context.param_ring is not None
        self.module = module
        self.nc = context.ncentral + (1 if module else 0)
        self.np = context.npairs
        self.degree_bound = degree_bound
        base_key = order.key
        if module:
            self.key = lambda t: (-t[0],) + base_key(t[1:])
        else:
            self.key = base_key
        self.certificate = {}

    # -- key/divisibility helpers ------------------------------------
    def lt(self, terms):
        return max(terms, key=self.key)

    def lt_divides(self, lte, e):
        if self.module:
            return lte[0] == e[0] and kernel.mono_divides(lte[1:], e[1:])
        return kernel.mono_divides(lte, e)

    def quotient(self, e, lte):
        if self.module:
            return (0,) + kernel.mono_div(e[1:], lte[1:])
        return kernel.mono_div(e, lte)

    def mono_mul(self, m, e):
        return kernel.mono_mul(m, e)

    def lcm(self, a, b):
        if self.module:
            return (a[0],) + kernel.mono_lcm(a[1:], b[1:])
        return kernel.mono_lcm(a, b)

    def degree(self, e):
        return sum(e[1:]) if self.module else sum(e)

    def record_inverted(self, coeff):
        """Log parameter polynomials inverted while normalizing, as the
        genericity certificate of the run."""
        for part in (coeff.num, coeff.den):
            if part.is_constant():
                continue
            p = part.monic()
            self.certificate[frozenset(p.terms.items())] = p

    # -- normalization ------------------------------------------------
    def normalize(self, terms):
        """Scale to canonical form: integer-primitive with positive
        leading coefficient over Q, monic over a parameter field."""
        if not terms:
            return terms
        if self.ff:
            lc = terms[self.lt(terms)]
            if lc != 1:
                self.record_inverted(lc)
                inv = lc.inverse()
                return {e: c * inv for e, c in terms.items()}
            return terms
        c = kernel.int_content(terms)
        if terms[self.lt(terms)] < 0:
            c = -c
        if c != 1:
            return {e: v // c for e, v in terms.items()}
        return terms

    def to_int_terms(self, terms):
        """Clear rational denominators; returns (int terms, multiplier)."""
        den = 1
        for c in terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // int_gcd(den, c.denominator)
        if den == 1 and all(isinstance(c, int) for c in terms.values()):
            return dict(terms), 1
        return {e: int(c * den) for e, c in terms.items()}, den

    # -- core reduction -----------------------------------------------
    def reduce(self, terms, divisors, track=False, strip_content=False):
        """Normal form of `terms` against prepared divisors.

        divisors: list of (lt_exp, lc, term_map); over Q the term maps
        hold ints and lc > 0, over a parameter field they are monic.
        Returns (remainder, scale, cofactors): over Q the exact identity
        is scale * input = sum(cofactor_j * divisor_j) + remainder with
        integer data; over a field scale == 1.  With strip_content (only
        valid untracked) the result may be rescaled by a positive
        rational, which preserves ideal membership and zero-ness.
        """
        work = dict(terms)
        rem = {}
        scale = 1
        cofs = [{} for _ in divisors] if track else None
        key = self.key
        heap = [tuple(-k for k in key(e)) + (e,) for e in work]
        heapq.heapify(heap)
        seen_degree = 0
        while heap:
            popped = heapq.heappop(heap)
            e = popped[-1]
            c = work.get(e)
            if c is None:
                continue
            hit = -1
            for j, (lte, lc, dterms) in enumerate(divisors):
                if self.lt_divides(lte, e):
                    hit = j
                    break
            if hit < 0:
                rem[e] = c
                del work[e]
                continue
            lte, lc, dterms = divisors[hit]
            m = self.quotient(e, lte)
            if self.ff:
                b = c
            else:
                g = int_gcd(c, lc)
                a = lc // g
                b = c // g
                if a != 1:
                    scale *= a
                    for k in work:
                        work[k] *= a
                    for k in rem:
                        rem[k] *= a
                    if track:
                        for cof in cofs:
                            for k in cof:
                                cof[k] *= a
            touched = kernel.axpy_weyl(work, -b, m, dterms, self.nc, self.np)
            if e in work:
                raise MathError("reduction failed to cancel the leading term")
            for t in touched:
                d = self.degree(t)
                if d > seen_degree:
                    seen_degree = d
                    if d > self.degree_bound:
                        raise DegreeBoundExceeded(d, self.degree_bound)
                heapq.heappush(heap, tuple(-k for k in key(t)) + (t,))
            if track:
                cof = cofs[hit]
                cof[m] = cof.get(m, 0) + b
                if not cof[m]:
                    del cof[m]
            elif strip_content and not self.ff and len(work) > 4:
                lead = work.get(self.lt(work)) if work else 0
                if lead and abs(lead).bit_length() > 2048:
                    both = dict(work)
                    both.update(rem)
                    g = kernel.int_content(both)
                    if g > 1:
                        for k in work:
                            work[k] //= g
                        for k in rem:
                            rem[k] //= g
        return rem, scale, cofs

    def spoly(self, ga, gb, track_data=None):
        """S-polynomial of two prepared divisors (and the matching
        monomial/scalar data for representation tracking)."""
        (lta, lca, ta), (ltb, lcb, tb) = ga, gb
        l = self.lcm(lta, ltb)
        ma = self.quotient(l, lta)
        mb = self.quotient(l, ltb)
        if self.ff:
            ca, cb = 1, 1
        else:
            g = int_gcd(lca, lcb)
            ca, cb = lcb // g, lca // g
        s = {}
        kernel.axpy_weyl(s, ca, ma, ta, self.nc, self.np)
        kernel.axpy_weyl(s, -cb, mb, tb, self.nc, self.np)
        if track_data is not None:
            track_data.extend([(ca, ma), (cb, mb)])
        return s


def _prepare_divisor(engine, terms):
    """(lt_exp, lc, normalized term map) for reduction use."""
    if not terms:
        raise MathError("zero divisor")
    if engine.ff:
        t = engine.normalize(terms)
        return (engine.lt(t), t[engine.lt(t)], t)
    t, _ = engine.to_int_terms(terms)
    t = engine.normalize(t)
    lt = engine.lt(t)
    return (lt, t[lt], t)


# ------------------------------------------------------- public ops

def leading_term(op, order):
    """Order-maximal term as (monomial operator, coefficient)."""
    if not op:
        raise MathError("leading term of the zero operator")
    engine = _Engine(op.context, order)
    e = engine.lt(op.terms)
    return op.context.monomial(e), op.terms[e]


def _flat(opv, module):
    if module:
        out = {}
        for pos, comp in enumerate(opv.components):
            for e, c in comp.terms.items():
                out[(pos,) + e] = c
        return out
    return dict(opv.terms)


def _unflat(ctx, terms, rank):
    if rank is None:
        return WeylOp._raw(ctx, dict(terms))
    comps = [dict() for _ in range(rank)]
    for e, c in terms.items():
        comps[e[0]][e[1:]] = c
    return FreeModuleElem(tuple(WeylOp._raw(ctx, t) for t in comps))


def divide(P, divisors, order, track=False, degree_bound=DEFAULT_DEGREE_BOUND):
    """Left division with remainder: P = sum(cofactor_i * divisor_i) + r,
    no remainder term divisible by any divisor leading monomial."""
    module = isinstance(P, FreeModuleElem)
    ctx = P.context
    engine = _Engine(ctx, order, module=module, degree_bound=degree_bound)
    rank = P.rank if module else None
    prepped = []
    scales = []
    for d in divisors:
        flat = _flat(d, module)
        if not flat:
            raise MathError("zero divisor")
        if engine.ff:
            lt = engine.lt(flat)
            lc = flat[lt]
            if lc != 1:
                inv = lc.inverse()
                flat = {e: c * inv for e, c in flat.items()}
            prepped.append((lt, 1, flat))
            scales.append(lc.inverse() if lc != 1 else 1)
        else:
            ints, den = engine.to_int_terms(flat)
            lt = engine.lt(ints)
            cont = kernel.int_content(ints)
            if ints[lt] < 0:
                cont = -cont
            ints = {e: v // cont for e, v in ints.items()}
            prepped.append((engine.lt(ints), ints[engine.lt(ints)], ints))
            scales.append(Fraction(den, cont))
    pflat = _flat(P, module)
    if engine.ff:
        rem, _, cofs = engine.reduce(pflat, prepped, track=track)
        if track:
            cofactors = []
            for j, cof in enumerate(cofs):
                factor = scales[j]
                cofactors.append(WeylOp._raw(ctx, {
                    e: (c * factor if factor != 1 else c) for e, c in cof.items()}))
        else:
            cofactors = None
        remainder = _unflat(ctx, rem, rank)
        return DivisionResult(remainder, cofactors)
    ints, den = engine.to_int_terms(pflat)
    rem, scale, cofs = engine.reduce(ints, prepped, track=track)
    total = Fraction(1, den * scale)
    remainder = _unflat(ctx, {e: c * total for e, c in rem.items()}, rank)
    cofactors = None
    if track:
        cofactors = []
        for j, cof in enumerate(cofs):
            f = total * scales[j]
            cofactors.append(WeylOp._raw(ctx, {e: c * f for e, c in cof.items()}))
    return DivisionResult(remainder, cofactors)


def _rep_axpy(rep_dst, c, mono, rep_src, engine):
    for k in range(len(rep_dst)):
        if rep_src[k]:
            kernel.axpy_weyl(rep_dst[k], c, mono, rep_src[k], engine.nc, engine.np)


def buchberger(gens, order, *, track_reps=False, degree_bound=DEFAULT_DEGREE_BOUND,
               module_rank=None):
    """Reduced left Groebner basis; optionally tracks each basis element
    as a left combination of the input generators (certificate mode)."""
    gens = list(gens)
    module = module_rank is not None
    if not gens:
        raise MathError("empty generator list")
    ctx = gens[0].context
    engine = _Engine(ctx, order, module=module, degree_bound=degree_bound)

    basis = []       # term maps, normalized
    lts = []
    reps = []        # list of lists of term maps over the input gens
    stats = {"pairs_considered": 0, "pairs_reduced": 0}

    if track_reps and module:
        raise MathError("representation tracking is for ring ideals only")

    def rep_unit(i, scale=1):
        out = [dict() for _ in gens]
        out[i][(0,) * ctx.arity] = scale
        return out

    def add_element(terms, rep):
        if engine.ff:
            lt0 = engine.lt(terms)
            lc = terms[lt0]
            if lc != 1:
                engine.record_inverted(lc)
                inv = lc.inverse()
                terms = {e: c * inv for e, c in terms.items()}
                if rep is not None:
                    rep = [{e: c * inv for e, c in r.items()} for r in rep]
        else:
            cont = kernel.int_content(terms)
            if terms[engine.lt(terms)] < 0:
                cont = -cont
            if cont != 1:
                terms = {e: v // cont for e, v in terms.items()}
                if rep is not None:
                    f = Fraction(1, cont)
                    rep = [{e: c * f for e, c in r.items()} for r in rep]
        basis.append(terms)
        lts.append(engine.lt(terms))
        if rep is not None:
            reps.append(rep)

    seeds = []
    for i, g in enumerate(gens):
        flat = _flat(g, module)
        if not flat:
            continue
        if engine.ff:
            seeds.append((flat, rep_unit(i) if track_reps else None))
        else:
            ints, den = engine.to_int_terms(flat)
            seeds.append((ints, rep_unit(i, den) if track_reps else None))
    if not seeds:
        return GroebnerBasis([], order, True, ctx, module_rank=module_rank,
                             stats=stats)
    for terms, rep in seeds:
        add_element(terms, rep if track_reps else None)

    done = set()
    queue = {}

    def pair_allowed(i, j):
        if module and lts[i][0] != lts[j][0]:
            return False
        return True

    def push_pairs(upto):
        j = upto
        for i in range(j):
            if pair_allowed(i, j):
                l = engine.lcm(lts[i], lts[j])
                queue[(i, j)] = (engine.degree(l),) + engine.key(l)

    for j in range(len(basis)):
        push_pairs(j)

    while queue:
        (i, j) = min(queue, key=lambda p: queue[p] + p)
        del queue[(i, j)]
        done.add((i, j))
        stats["pairs_considered"] += 1
        lcm_ij = engine.lcm(lts[i], lts[j])
        # coprime leading monomials
        if not module and lcm_ij == kernel.mono_mul(lts[i], lts[j]):
            continue
        if module and lcm_ij[1:] == kernel.mono_mul(lts[i][1:], lts[j][1:]):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not engine.lt_divides(lts[k], lcm_ij):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        gi = (lts[i], basis[i][lts[i]], basis[i])
        gj = (lts[j], basis[j][lts[j]], basis[j])
        track_data = [] if track_reps else None
        s = engine.spoly(gi, gj, track_data)
        if not s:
            continue
        stats["pairs_reduced"] += 1
        prepped = [(lts[k], basis[k][lts[k]], basis[k]) for k in range(len(basis))]
        rem, scale, cofs = engine.reduce(s, prepped, track=track_reps,
                                         strip_content=not track_reps)
        if not rem:
            continue
        rep = None
        if track_reps:
            (ca, ma), (cb, mb) = track_data
            rep = [dict() for _ in gens]
            sa = ca * scale
            _rep_axpy(rep, sa, ma, reps[i], engine)
            _rep_axpy(rep, -(cb * scale), mb, reps[j], engine)
            for k, cof in enumerate(cofs):
                for m, c in cof.items():
                    _rep_axpy(rep, -c, m, reps[k], engine)
        add_element(rem, rep)
        push_pairs(len(basis) - 1)

    # minimal basis
    order_idx = sorted(range(len(basis)), key=lambda i: engine.key(lts[i]))
    kept = []
    for i in order_idx:
        if any(engine.lt_divides(lts[k], lts[i]) for k in kept):
            continue
        kept.append(i)
    # interreduce tails
    final = []
    final_reps = []
    for pos, i in enumerate(kept):
        others = [k for k in kept if k != i]
        prepped = [(lts[k], basis[k][lts[k]], basis[k]) for k in others]
        rem, scale, cofs = engine.reduce(basis[i], prepped, track=track_reps)
        if track_reps:
            rep = [dict() for _ in gens]
            for k_, r in enumerate(reps[i]):
                kernel.terms_add_scaled(rep[k_], r, scale)
            for jj, cof in enumerate(cofs):
                for m, c in cof.items():
                    _rep_axpy(rep, -c, m, reps[others[jj]], engine)
            final_reps.append(rep)
        final.append(rem)

    elements = []
    out_reps = []
    for idx, terms in enumerate(final):
        if engine.ff:
            lt0 = engine.lt(terms)
            lc = terms[lt0]
            inv = lc.inverse() if lc != 1 else None
            if inv is not None:
                engine.record_inverted(lc)
                terms = {e: c * inv for e, c in terms.items()}
            elements.append(_unflat(ctx, terms, module_rank))
            if track_reps:
                rep = final_reps[idx]
                if inv is not None:
                    rep = [{e: c * inv for e, c in r.items()} for r in rep]
                out_reps.append([WeylOp._raw(ctx, dict(r)) for r in rep])
        else:
            cont = kernel.int_content(terms)
            if terms[engine.lt(terms)] < 0:
                cont = -cont
            scaled = {e: Fraction(v, cont) for e, v in terms.items()}
            elements.append(_unflat(ctx, scaled, module_rank))
            if track_reps:
                f = Fraction(1, cont)
                rep = [{e: c * f for e, c in r.items()} for r in final_reps[idx]]
                out_reps.append([WeylOp._raw(ctx, dict(r)) for r in rep])

    stats["basis_size"] = len(elements)
    cert = sorted((p for p in engine.certificate.values()),
                  key=lambda p: str(p))
    return GroebnerBasis(elements, order, True, ctx, module_rank=module_rank,
                         genericity_certificate=cert,
                         representations=out_reps if track_reps else None,
                         stats=stats)


def module_buchberger(gens, order, *, degree_bound=DEFAULT_DEGREE_BOUND):
    """Reduced module Groebner basis under position-over-term (first
    position dominant)."""
    gens = [g if isinstance(g, FreeModuleElem) else FreeModuleElem(tuple(g))
            for g in gens]
    ranks = {g.rank for g in gens}
    if len(ranks) != 1:
        raise MathError(f"mixed module ranks {sorted(ranks)}")
    return buchberger(gens, order, degree_bound=degree_bound,
                      module_rank=ranks.pop())


def normal_form(P, gb):
    return divide(P, list(gb.elements), gb.order).remainder


def reduces_to_zero(P, gb):
    return not normal_form(P, gb)


def verify_groebner(gb, gens=None):
    """Full S-pair reduction-to-zero post-check (no pair criteria), plus
    reduction of the original generators when given."""
    els = list(gb.elements)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            module = gb.module_rank is not None
            engine = _Engine(gb.context, gb.order, module=module)
            fi, fj = _flat(els[i], module), _flat(els[j], module)
            if module and engine.lt(fi)[0] != engine.lt(fj)[0]:
                continue
            gi = (engine.lt(fi), fi[engine.lt(fi)], fi)
            gj = (engine.lt(fj), fj[engine.lt(fj)], fj)
            s = engine.spoly(gi, gj)
            if not s:
                continue
            prepped = [_prepare_divisor(engine, _flat(e, module)) for e in els]
            rem, _, _ = engine.reduce(s, prepped)
            if rem:
                return False
    if gens is not None:
        for g in gens:
            if g and not reduces_to_zero(g, gb):
                return False
    return True


def _eliminate_full(gens, keep, *, degree_bound=DEFAULT_DEGREE_BOUND,
                    track_reps=False):
    ctx = gens[0].context
    keep = set(keep)
    if not keep <= set(ctx.central_vars):
        raise MathError("eliminate keeps only central variables")
    order = TermOrder.elimination(ctx, [n for n in ctx.names if n not in keep])
    gb = buchberger(gens, order, degree_bound=degree_bound, track_reps=track_reps)
    drop_idx = [i for i, n in enumerate(ctx.names) if n not in keep]
    kept = []
    for i, g in enumerate(gb.elements):
        if all(not any(e[j] for j in drop_idx) for e in g.terms):
            kept.append((g, gb.representations[i] if track_reps else None))
    return kept, gb


def eliminate(gens, keep, *, degree_bound=DEFAULT_DEGREE_BOUND):
    """Generators of (left ideal) ∩ K[keep] for a set of central
    variables, via a block elimination order."""
    kept, _ = _eliminate_full(gens, keep, degree_bound=degree_bound)
    return [g for g, _rep in kept]


def left_quotient(J_gens, h, *, degree_bound=DEFAULT_DEGREE_BOUND, check=True):
    """Generators of {R | R h ∈ J} via a rank-2 module basis for the
    module generated by (h, 1) and (g, 0), position 0 dominant."""
    if not h:
        raise MathError("left quotient by the zero operator")
    ctx = h.context
    zero = ctx.zero()
    one = ctx.one()
    vecs = [FreeModuleElem((h, one))]
    vecs.extend(FreeModuleElem((g, zero)) for g in J_gens)
    order = TermOrder.degrevlex(ctx)
    gb = module_buchberger(vecs, order, degree_bound=degree_bound)
    quotient = [v.components[1] for v in gb.elements if not v.components[0]]
    if check:
        gbj = buchberger(list(J_gens), order, degree_bound=degree_bound)
        for r in quotient:
            if not reduces_to_zero(r * h, gbj):
                raise MathError("left-quotient syzygy check failed")
    cert = list(gb.genericity_certificate)
    return quotient, cert


# ------------------------------------------------ commutative closure

_COMM_SHADOW = {}


def _comm_context(ring):
    ctx = _COMM_SHADOW.get(id(ring))
    if ctx is None:
        ctx = WeylContext(ring.names, (), (), param_ring=ring.param_ring)
        _COMM_SHADOW[id(ring)] = (ctx, ring)
        return ctx
    return ctx[0]


def _to_op(p):
    ctx = _comm_context(p.ring)
    return WeylOp._raw(ctx, dict(p.terms))


def _to_poly(op, ring):
    return CommPoly._raw(ring, dict(op.terms))


def commutative_buchberger(gens, order_kind="degrevlex",
                           degree_bound=DEFAULT_DEGREE_BOUND):
    """Reduced commutative Groebner basis (the degenerate Weyl case).

    An empty or all-zero generator list yields the basis of the zero
    ideal, [].
    """
    gens = list(gens)
    if not gens:
        return []
    ring = gens[0].ring
    ops = [_to_op(g) for g in gens if g]
    if not ops:
        return []
    ctx = _comm_context(ring)
    order = TermOrder(ctx, order_kind)
    gb = buchberger(ops, order, degree_bound=degree_bound)
    return [_to_poly(op, ring) for op in gb.elements]


def comm_normal_form(p, gb_polys, order_kind="degrevlex"):
    if not gb_polys:
        return p
    ctx = _comm_context(p.ring)
    order = TermOrder(ctx, order_kind)
    res = divide(_to_op(p), [_to_op(g) for g in gb_polys], order)
    return _to_poly(res.remainder, p.ring)


def ideal_contains(gb_polys, p, order_kind="degrevlex"):
    return not comm_normal_form(p, gb_polys, order_kind)


def ideal_equal(gens_a, gens_b, order_kind="degrevlex"):
    """Commutative ideal equality by mutual reduction."""
    gb_a = commutative_buchberger(gens_a, order_kind)
    gb_b = commutative_buchberger(gens_b, order_kind)
    return (all(ideal_contains(gb_b, g, order_kind) for g in gens_a)
            and all(ideal_contains(gb_a, g, order_kind) for g in gens_b))


def colon_ideal(I_gens, h):
    """Generators of (I : h) = {p | p h ∈ I} in a commutative ring, via
    the intersection trick with an auxiliary variable."""
    I_gens = list(I_gens)
    if not I_gens:
        raise MathError("colon of the empty ideal")
    ring = I_gens[0].ring
    if h.ring is not ring:
        h = h.convert(ring)
    if not h:
        raise MathError("colon quotient by zero")
    aux = "t_aux"
    ext = PolyRing((aux,) + ring.names, ring.param_ring)
    t = ext.var(aux)
    lifted = [t * g.convert(ext) for g in I_gens]
    lifted.append((ext.one() - t) * h.convert(ext))
    kept = eliminate([_to_op(p) for p in lifted], keep=set(ring.names))
    out = []
    for op in kept:
        p = _to_poly(op, ext)
        q = exact_div(p, h.convert(ext))
        out.append(q.substitute({aux: 0}, ring))
    return [g for g in out if g]


def krull_dimension(gb_polys):
    """Dimension of the quotient by leading monomials: the largest set of
    variables supporting no leading monomial entirely."""
    if not gb_polys:
        return None
    ring = gb_polys[0].ring
    n = ring.arity
    lts = [max(g.terms, key=kernel.drl_key) for g in gb_polys if g]
    if any(not any(e) for e in lts):
        return -1  # unit ideal
    best = 0
    for mask in range(1 << n):
        subset = [i for i in range(n) if mask >> i & 1]
        if len(subset) <= best:
            continue
        sset = set(subset)
        if all(any(e[i] for i in range(n) if i not in sset) for e in lts):
            best = len(subset)
    return best
