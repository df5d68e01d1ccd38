"""Weight modules F = V (x) C_q for the loop algebra, and the operator
identities the construction satisfies.

A module is determined by (context, B, V, alpha): V a gl_n module, alpha
a shift vector.  Vectors are finite sums of components v(s), v in V and
s in Z^n; x (x) b acts through psi(b) times the degree-shift action

    t^r        : v(s) -> sigma(r, s) v(r+s)
    ad t^r     : v(s) -> (sigma(r, s) - sigma(s, r)) v(r+s)
    D(u, r)    : v(s) -> sigma(r, s) ((u, s+alpha) v + R(u, r) v)(r+s)

with R(u, r) = sum_ij r_i u_j E_ij acting through V.  All checkers below
return residual vectors that must be exactly zero; nothing is compared
approximately.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .cocycle import CocycleContext, vadd, vneg
from .cyclotomic import Cyclotomic
from .gln import GlnModule
from .loop import (
    BAlgebra,
    BElement,
    GElement,
    LoopElement,
    dot_us,
    loop_D,
    loop_ad,
    loop_t,
    tau_bracket,
)
from .matrices import FieldSpan
from .torus import _as_scalar


class ModuleParams:
    """Everything fixed about one module: context, B, V and alpha."""

    def __init__(self, ctx: CocycleContext, alg: BAlgebra, V: GlnModule, alpha):
        if V.n != ctx.n:
            raise ValueError(f"V is a gl_{V.n} module but the context has n={ctx.n}")
        if V.field.conductor != ctx.field.conductor:
            raise ValueError("V scalars live in a different field")
        if alg.field.conductor != ctx.field.conductor:
            raise ValueError("B scalars live in a different field")
        if len(alpha) != ctx.n:
            raise ValueError(f"alpha must have length {ctx.n}")
        self.ctx = ctx
        self.alg = alg
        self.V = V
        self.alpha = tuple(_as_scalar(ctx, a) for a in alpha)
        self.zero_deg = (0,) * ctx.n

    def __repr__(self):
        return f"ModuleParams({self.ctx!r}, {self.alg!r}, {self.V!r})"

    def pair_alpha(self, u, s) -> Cyclotomic:
        """(u, s + alpha)."""
        acc = self.ctx.field.zero
        for ui, si, ai in zip(u, s, self.alpha):
            if ui:
                acc = acc + ui * (ai + si)
        return acc

    def b_one(self) -> BElement:
        return self.alg.one()

    def as_b(self, b) -> BElement:
        if isinstance(b, BElement):
            return b
        return self.alg.z(b) if b else self.alg.one()

    def zero_vec(self):
        return (self.ctx.field.zero,) * self.V.dim


class FVector:
    """Finite sum of components v(s): dict from degree to a V coefficient tuple."""

    __slots__ = ("params", "comps")

    def __init__(self, params: ModuleParams, comps: dict):
        self.params = params
        self.comps = {s: v for s, v in comps.items() if any(v)}

    @classmethod
    def zero(cls, params):
        return cls(params, {})

    @classmethod
    def basis(cls, params, s, v):
        """v(s) with v either a coefficient tuple or a basis index."""
        s = params.ctx.check_vec(s)
        if isinstance(v, int):
            v = params.V.basis_vector(v)
        else:
            v = tuple(_as_scalar(params.ctx, c) for c in v)
        if len(v) != params.V.dim:
            raise ValueError(f"component length {len(v)} != dim {params.V.dim}")
        return cls(params, {s: v})

    def __add__(self, other):
        if not isinstance(other, FVector):
            return NotImplemented
        out = dict(self.comps)
        for s, v in other.comps.items():
            cur = out.get(s)
            out[s] = v if cur is None else tuple(a + b for a, b in zip(cur, v))
        return FVector(self.params, out)

    def __neg__(self):
        return FVector(self.params, {s: tuple(-a for a in v) for s, v in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        c = _as_scalar(self.params.ctx, c)
        return FVector(
            self.params, {s: tuple(c * a for a in v) for s, v in self.comps.items()}
        )

    def __mul__(self, other):
        return self.scaled(other)

    __rmul__ = __mul__

    def is_zero(self):
        return not self.comps

    def __bool__(self):
        return bool(self.comps)

    def __eq__(self, other):
        if not isinstance(other, FVector):
            return NotImplemented
        return self.comps == other.comps

    def support(self):
        return sorted(self.comps)

    def component(self, s):
        return self.comps.get(tuple(s), self.params.zero_vec())

    def __repr__(self):
        return f"FVector({self.comps!r})"

    def __str__(self):
        from .syntax import format_fvector

        return format_fvector(self)


def act(x: LoopElement, xi: FVector) -> FVector:
    """Action of a loop element; exact, degree shift by the x-degree."""
    params = xi.params
    ctx = params.ctx
    out: dict = {}

    def bump(deg, vec):
        cur = out.get(deg)
        out[deg] = vec if cur is None else tuple(a + b for a, b in zip(cur, vec))

    for bidx, g in x.parts.items():
        w = params.alg.psi_basis(bidx)
        if not w:
            continue
        for s, v in xi.comps.items():
            for r, c in g.torus.items():
                coef = w * c * ctx.sigma(r, s)
                if coef:
                    bump(vadd(r, s), tuple(coef * a for a in v))
            for r, c in g.inner.items():
                delta = ctx.sigma(r, s) - ctx.sigma(s, r)
                if delta:
                    coef = w * c * delta
                    bump(vadd(r, s), tuple(coef * a for a in v))
            for r, u in g.witt.items():
                coef = w * ctx.sigma(r, s)
                scal = coef * params.pair_alpha(u, s)
                moved = params.V.weighted_apply(r, u, v)
                bump(
                    vadd(r, s),
                    tuple(scal * a + coef * b for a, b in zip(v, moved)),
                )
    return FVector(params, out)


def op_loop(x: LoopElement):
    return lambda xi: act(x, xi)


def op_commutator(A, B):
    return lambda xi: A(B(xi)) - B(A(xi))


def op_t(params, r, b=0, coeff=None):
    return op_loop(loop_t(params.ctx, params.alg, r, _b_arg(params, b), coeff))


def op_ad(params, s, b=0, coeff=None):
    return op_loop(loop_ad(params.ctx, params.alg, s, _b_arg(params, b), coeff))


def op_D(params, u, r, b=0):
    return op_loop(loop_D(params.ctx, params.alg, u, r, _b_arg(params, b)))


def op_X(params, r, b=0):
    """(ad t^r - t^r) (x) b, the anti-associative family."""
    g = GElement.ad(params.ctx, r) - GElement.t(params.ctx, r)
    return op_loop(LoopElement.make(g, params.alg, _b_arg(params, b)))


def _b_arg(params, b):
    return b if isinstance(b, (int, BElement)) else params.as_b(b)


def op_T(params, u, r, b1, b2):
    """T(u,r,b1,b2) = sigma(r,r) t^-r b1 D(u,r) b2 as a composite operator."""
    r = params.ctx.check_vec(r)
    srr = params.ctx.sigma(r, r)
    left = op_t(params, vneg(r), b1)
    right = op_D(params, u, r, b2)
    return lambda xi: left(right(xi)).scaled(srr)


def op_Tprime(params, u, r, b1, b2):
    """T'(u,r,b1,b2) = T(u,r,b1,b2) - D(u,0) b1 b2."""
    b12 = params.as_b(b1) * params.as_b(b2)
    T = op_T(params, u, r, b1, b2)
    D0 = op_D(params, u, (0,) * params.ctx.n, b12)
    return lambda xi: T(xi) - D0(xi)


def i_element(params, u, r, b1, b2) -> LoopElement:
    """I(u,r,b1,b2) = psi(b1) sqrt(sigma(r,r)) D(u,r) b2 - D(u,0) b1 b2 in tau."""
    b1 = params.as_b(b1)
    b2 = params.as_b(b2)
    root = params.ctx.sqrt_sigma_diag(r)
    first = loop_D(params.ctx, params.alg, u, r, b2).scaled(b1.psi() * root)
    second = loop_D(params.ctx, params.alg, u, (0,) * params.ctx.n, b1 * b2)
    return first - second


def op_I(params, u, r, b1, b2):
    return op_loop(i_element(params, u, r, b1, b2))


# ---------------------------------------------------------------------------
# residual checkers: every function returns a vector that must be zero


def rep_check(x: LoopElement, y: LoopElement, xi: FVector) -> FVector:
    """[x, y].xi - x.(y.xi) + y.(x.xi); zero iff the bracket is represented."""
    return act(tau_bracket(x, y), xi) - act(x, act(y, xi)) + act(y, act(x, xi))


def weight_check(params, u, s, v) -> FVector:
    """D(u,0) acts on v(s) by the weight (u, s+alpha)."""
    xi = FVector.basis(params, s, v)
    zero = (0,) * params.ctx.n
    return act(loop_D(params.ctx, params.alg, u, zero, 0), xi) - xi.scaled(
        params.pair_alpha(u, s)
    )


def assoc_check(params, r, s, b1, b2, xi) -> FVector:
    """t^r b1 . t^s b2 = sigma(r,s) t^(r+s) b1 b2 as operators."""
    b1 = params.as_b(b1)
    b2 = params.as_b(b2)
    lhs = op_t(params, r, b1)(op_t(params, s, b2)(xi))
    rhs = op_t(params, vadd(tuple(r), tuple(s)), b1 * b2)(xi).scaled(
        params.ctx.sigma(r, s)
    )
    return lhs - rhs


def antiassoc_check(params, r, s, b1, b2, xi) -> FVector:
    """X_r b1 . X_s b2 = -sigma(s,r) X_(r+s) b1 b2 for X_r = ad t^r - t^r."""
    b1 = params.as_b(b1)
    b2 = params.as_b(b2)
    lhs = op_X(params, r, b1)(op_X(params, s, b2)(xi))
    rhs = op_X(params, vadd(tuple(r), tuple(s)), b1 * b2)(xi).scaled(
        params.ctx.sigma(s, r)
    )
    return lhs + rhs


def unit_check(params, xi) -> FVector:
    """t^0 (x) 1 acts as the identity."""
    return act(loop_t(params.ctx, params.alg, (0,) * params.ctx.n, 0), xi) - xi


def eq31_check(params, r, s, b2, b4, xi) -> FVector:
    """ad t^s b2 . ad t^r b4 - t^s b2 . ad t^r b4 - t^r b4 . ad t^s b2
    + sigma(r,s) ad t^(r+s) b2 b4 = 0 as operators."""
    b2 = params.as_b(b2)
    b4 = params.as_b(b4)
    ad_r = op_ad(params, r, b4)
    ad_s = op_ad(params, s, b2)
    t_s = op_t(params, s, b2)
    t_r = op_t(params, r, b4)
    total = (
        ad_s(ad_r(xi))
        - t_s(ad_r(xi))
        - t_r(ad_s(xi))
        + op_ad(params, vadd(tuple(r), tuple(s)), b2 * b4)(xi).scaled(
            params.ctx.sigma(r, s)
        )
    )
    return total


def _op_pair(params, s, b1, b2):
    # t^-s b1 ad t^s b2, the composite generating the abelian ideal
    left = op_t(params, vneg(tuple(s)), b1)
    right = op_ad(params, s, b2)
    return lambda xi: left(right(xi))


def prop31_check(params, r, s, b1, b2, b3, b4, xi) -> FVector:
    """[t^-s b1 ad t^s b2, t^-r b3 ad t^r b4] = 0 for r, s outside rad f."""
    ctx = params.ctx
    if ctx.in_radf(s) or ctx.in_radf(r):
        raise ValueError("prop31_check needs degrees outside rad f")
    A = _op_pair(params, s, b1, b2)
    B = _op_pair(params, r, b3, b4)
    return op_commutator(A, B)(xi)


def lemma32_check(params, u, r, s, b1, b2, b3, b4, xi) -> FVector:
    """[t^-r b1 D(u,r) b2, t^-s b3 ad t^s b4]
    = (u,s){sigma(r,s)^2 t^-(r+s) b1 b3 ad t^(r+s) b2 b4
            - sigma(-r,r) t^-s b1 b2 b3 ad t^s b4} as operators.

    The second term carries a minus sign: expanding t^-r t^(r-s) produces
    -(u,s) sigma(r,-s) sigma(-r,r-s) = -(u,s) sigma(-r,r) on that term.
    """
    ctx = params.ctx
    if not ctx.in_radf(r):
        raise ValueError("lemma32_check needs r in rad f")
    if ctx.in_radf(s):
        raise ValueError("lemma32_check needs s outside rad f")
    b1, b2 = params.as_b(b1), params.as_b(b2)
    b3, b4 = params.as_b(b3), params.as_b(b4)
    left = op_t(params, vneg(tuple(r)), b1)
    right = op_D(params, u, r, b2)
    A = lambda xi_: left(right(xi_))  # noqa: E731
    B = _op_pair(params, s, b3, b4)
    lhs = op_commutator(A, B)(xi)
    rs = vadd(tuple(r), tuple(s))
    term1 = _op_pair(params, rs, b1 * b3, b2 * b4)(xi).scaled(ctx.sigma(r, s) ** 2)
    term2 = _op_pair(params, s, b1 * b2 * b3, b4)(xi).scaled(
        ctx.sigma(vneg(tuple(r)), r)
    )
    us = dot_us(ctx.field, tuple(_as_scalar(ctx, c) for c in u), s)
    rhs = (term1 - term2).scaled(us)
    return lhs - rhs


def t_bracket_structure_check(params, u, v, r, s, b1, b2, b3, b4, xi) -> FVector:
    """[T(u,r,..), T(v,s,..)] = (v,r)T(u,r,b1,b2b3b4) - (u,s)T(v,s,b3,b1b2b4)
    + T(w,r+s,b1b3,b2b4) with w = (u,s)v - (v,r)u."""
    return _bracket_structure(params, op_T, u, v, r, s, b1, b2, b3, b4, xi)


def tprime_bracket_check(params, u, v, r, s, b1, b2, b3, b4, xi) -> FVector:
    """Same structure constants for T' = T - D(u,0)b1b2."""
    return _bracket_structure(params, op_Tprime, u, v, r, s, b1, b2, b3, b4, xi)


def _bracket_structure(params, mk, u, v, r, s, b1, b2, b3, b4, xi):
    ctx = params.ctx
    u = tuple(_as_scalar(ctx, c) for c in u)
    v = tuple(_as_scalar(ctx, c) for c in v)
    b1, b2 = params.as_b(b1), params.as_b(b2)
    b3, b4 = params.as_b(b3), params.as_b(b4)
    lhs = op_commutator(mk(params, u, r, b1, b2), mk(params, v, s, b3, b4))(xi)
    ur = dot_us(ctx.field, v, r)  # (v, r)
    us = dot_us(ctx.field, u, s)  # (u, s)
    w = tuple(us * x - ur * y for x, y in zip(v, u))
    rhs = (
        mk(params, u, r, b1, b2 * b3 * b4)(xi).scaled(ur)
        - mk(params, v, s, b3, b1 * b2 * b4)(xi).scaled(us)
        + mk(params, w, vadd(tuple(r), tuple(s)), b1 * b3, b2 * b4)(xi)
    )
    return lhs - rhs


def d0_commutes_check(params, v, u, r, b1, b2, xi) -> FVector:
    """[D(v,0), T(u,r,b1,b2)] = 0 as operators."""
    zero = (0,) * params.ctx.n
    A = op_D(params, v, zero, 0)
    B = op_T(params, u, r, b1, b2)
    return op_commutator(A, B)(xi)


def t_degree_check(params, u, r, b1, b2, s, v) -> bool:
    """T preserves weight spaces: T(v(s)) is supported at s only."""
    out = op_T(params, u, r, b1, b2)(FVector.basis(params, s, v))
    return all(deg == tuple(s) for deg in out.support())


def eta_check(params, u, v, r, s, b1, b2, b3, b4, xi):
    """Transport of the bracket along I(u,r,b1,b2) -> T'(u,r,b1,b2).

    Returns (res_i, res_ii): res_i is the bracket of the I elements in tau
    against the structure-constant combination, evaluated on xi; res_ii is
    the matching T' identity.  res_i involves the square-root branch
    through sqrt(sigma(r,r)) and is sensitive to its multiplicativity on
    rad f; res_ii is branch independent.
    """
    ctx = params.ctx
    u = tuple(_as_scalar(ctx, c) for c in u)
    v = tuple(_as_scalar(ctx, c) for c in v)
    b1, b2 = params.as_b(b1), params.as_b(b2)
    b3, b4 = params.as_b(b3), params.as_b(b4)
    lhs = op_commutator(
        op_loop(i_element(params, u, r, b1, b2)),
        op_loop(i_element(params, v, s, b3, b4)),
    )(xi)
    ur = dot_us(ctx.field, v, r)
    us = dot_us(ctx.field, u, s)
    rs = vadd(tuple(r), tuple(s))
    rhs_el = (
        i_element(params, v, rs, b1 * b3, b2 * b4).scaled(us)
        - i_element(params, u, rs, b1 * b3, b2 * b4).scaled(ur)
        - i_element(params, v, s, b3, b1 * b2 * b4).scaled(us)
        + i_element(params, u, r, b1, b2 * b3 * b4).scaled(ur)
    )
    res_i = lhs - act(rhs_el, xi)
    res_ii = tprime_bracket_check(params, u, v, r, s, b1, b2, b3, b4, xi)
    return res_i, res_ii


def dtilde_check(params, u, r, b1, b2, xi) -> FVector:
    """psi(b1) D(u,r) b2 - D(u,r) b1 b2 annihilates the module."""
    b1 = params.as_b(b1)
    b2 = params.as_b(b2)
    el = loop_D(params.ctx, params.alg, u, r, b2).scaled(b1.psi()) - loop_D(
        params.ctx, params.alg, u, r, b1 * b2
    )
    return act(el, xi)


def scalar_transport_check(params, g: GElement, b, xi) -> FVector:
    """x (x) b = psi(b) (x (x) 1) as operators, for any homogeneous x."""
    b = params.as_b(b)
    el = LoopElement.make(g, params.alg, b)
    ref = LoopElement.make(g, params.alg, 0).scaled(b.psi())
    return act(el - ref, xi)


def adb_scalar_check(params, s, b, xi) -> FVector:
    """ad t^s b = psi(b) ad t^s as operators (s outside rad f)."""
    if params.ctx.in_radf(s):
        raise ValueError("adb_scalar_check needs s outside rad f")
    return scalar_transport_check(params, GElement.ad(params.ctx, s), b, xi)


def lambda_check(params, u, b, v) -> FVector:
    """D(u,0) b acts on the zero weight space by psi(b) (u, alpha)."""
    b = params.as_b(b)
    xi = FVector.basis(params, params.zero_deg, v)
    lam = b.psi() * params.pair_alpha(u, params.zero_deg)
    zero = params.zero_deg
    el = loop_D(params.ctx, params.alg, u, zero, b)
    return act(el, xi) - xi.scaled(lam)


def eq32_check(params, u, b, k, v) -> FVector:
    """D(u,0)b . t^k v(0) = {lambda(u,b) + (u,k) psi(b)} t^k v(0)."""
    ctx = params.ctx
    b = params.as_b(b)
    u = tuple(_as_scalar(ctx, c) for c in u)
    tkv = act(loop_t(ctx, params.alg, k, 0), FVector.basis(params, params.zero_deg, v))
    lam = b.psi() * params.pair_alpha(u, params.zero_deg)
    coef = lam + dot_us(ctx.field, u, k) * b.psi()
    el = loop_D(ctx, params.alg, u, params.zero_deg, b)
    return act(el, tkv) - tkv.scaled(coef)


def eq35_check(params, u, r, b, k, v) -> FVector:
    """D(u,r)b . t^k v(0) = T'(u,r,1,b) t^r t^k v(0)
    + {lambda(u,b) + (u,k) psi(b)} t^r t^k v(0)."""
    ctx = params.ctx
    b = params.as_b(b)
    u = tuple(_as_scalar(ctx, c) for c in u)
    v0 = FVector.basis(params, params.zero_deg, v)
    tkv = act(loop_t(ctx, params.alg, k, 0), v0)
    trtkv = act(loop_t(ctx, params.alg, r, 0), tkv)
    lam = b.psi() * params.pair_alpha(u, params.zero_deg)
    coef = lam + dot_us(ctx.field, u, k) * b.psi()
    lhs = act(loop_D(ctx, params.alg, u, r, b), tkv)
    rhs = op_Tprime(params, u, r, 0, b)(trtkv) + trtkv.scaled(coef)
    return lhs - rhs


def eq36_check(params, u, r, k, v) -> FVector:
    """D(u,r) . t^k v(0) = T'(u,r,1,1) t^r t^k v(0) + (u,k+alpha) t^r t^k v(0)."""
    ctx = params.ctx
    u = tuple(_as_scalar(ctx, c) for c in u)
    v0 = FVector.basis(params, params.zero_deg, v)
    tkv = act(loop_t(ctx, params.alg, k, 0), v0)
    trtkv = act(loop_t(ctx, params.alg, r, 0), tkv)
    lhs = act(loop_D(ctx, params.alg, u, r, 0), tkv)
    rhs = op_Tprime(params, u, r, 0, 0)(trtkv) + trtkv.scaled(params.pair_alpha(u, k))
    return lhs - rhs


def eq38_check(params, u, r, b, xi) -> FVector:
    """T'(u,r,1,b) = psi(b) T'(u,r,1,1) + psi(b)(u,alpha) - lambda(u,b).

    With lambda(u,b) = psi(b)(u,alpha) the scalar part cancels, so the
    residual isolates the operator part.
    """
    b = params.as_b(b)
    u = tuple(_as_scalar(params.ctx, c) for c in u)
    lam = b.psi() * params.pair_alpha(u, params.zero_deg)
    shift = b.psi() * params.pair_alpha(u, params.zero_deg) - lam
    lhs = op_Tprime(params, u, r, 0, b)(xi)
    rhs = op_Tprime(params, u, r, 0, 0)(xi).scaled(b.psi()) + xi.scaled(shift)
    return lhs - rhs


def eq37_residual(params, v, u, r, b) -> LoopElement:
    """[D(v,0)b, D(u,r)] - (v,r) D(u,r) b inside tau (element level)."""
    ctx = params.ctx
    u = tuple(_as_scalar(ctx, c) for c in u)
    v = tuple(_as_scalar(ctx, c) for c in v)
    b = params.as_b(b)
    lhs = tau_bracket(
        loop_D(ctx, params.alg, v, params.zero_deg, b),
        loop_D(ctx, params.alg, u, r, 0),
    )
    rhs = loop_D(ctx, params.alg, u, r, b).scaled(dot_us(ctx.field, v, r))
    return lhs - rhs


def tprime_commutes_with_t(params, u, m, b1, b2, k, xi) -> FVector:
    """[T'(u,m,b1,b2), t^k] = 0 as operators, any k in Z^n."""
    A = op_Tprime(params, u, m, b1, b2)
    B = op_t(params, k, 0)
    return op_commutator(A, B)(xi)


# ---------------------------------------------------------------------------
# the quotient onto the zero weight space


def proj0(xi: FVector):
    """Collapse v(m) -> sqrt(sigma(m,m))^-1 v; a V-valued linear map.

    Kills every generator sqrt(sigma(m,m)) v(m) - v(0) and restricts to
    the identity on the zero weight space, so it realizes the quotient by
    their span.
    """
    params = xi.params
    out = list(params.zero_vec())
    for m, v in xi.comps.items():
        c = params.ctx.sqrt_sigma_diag(m).inv()
        for i, a in enumerate(v):
            out[i] = out[i] + c * a
    return tuple(out)


def w_generator(params, m, v) -> FVector:
    """sqrt(sigma(m,m)) t^m . v(0) - v(0), a generator of the quotient kernel."""
    v0 = FVector.basis(params, params.zero_deg, v)
    tm = act(loop_t(params.ctx, params.alg, m, 0), v0)
    return tm.scaled(params.ctx.sqrt_sigma_diag(m)) - v0


def proj0_intertwine_check(params, u, r, b1, b2, xi):
    """proj0(T' xi) = psi(b1 b2) R(u,r) proj0(xi); returns a V residual."""
    ctx = params.ctx
    u = tuple(_as_scalar(ctx, c) for c in u)
    b12 = params.as_b(b1) * params.as_b(b2)
    lhs = proj0(op_Tprime(params, u, r, b1, b2)(xi))
    w = proj0(xi)
    moved = params.V.weighted_apply(tuple(r), u, w)
    c = b12.psi()
    return tuple(a - c * b for a, b in zip(lhs, moved))


def weight_decompose(xi: FVector):
    """Components as a sorted list of (degree, single-component vector)."""
    return [
        (s, FVector(xi.params, {s: v})) for s, v in sorted(xi.comps.items())
    ]


# ---------------------------------------------------------------------------
# windowed cyclicity evidence


@dataclass
class ProbeResult:
    """Span growth data from one windowed cyclicity probe."""

    window: int
    degrees: int
    target_dim: int
    span_dim: int
    saturated: bool
    history: list = dc_field(default_factory=list)
    orbit_ranks: list = dc_field(default_factory=list)
    orbit_target: int = 0
    start_degree: tuple = ()

    def as_dict(self):
        return {
            "window": self.window,
            "degrees": self.degrees,
            "target_dim": self.target_dim,
            "span_dim": self.span_dim,
            "saturated": self.saturated,
            "history": list(self.history),
            "orbit_ranks": list(self.orbit_ranks),
            "orbit_target": self.orbit_target,
            "start_degree": list(self.start_degree),
        }


def _window_box(n, w):
    out = [()]
    for _ in range(n):
        out = [v + (x,) for v in out for x in range(-w, w + 1)]
    return out


def _window_generators(params, degrees):
    ctx = params.ctx
    gens = []
    for r in degrees:
        gens.append(loop_t(ctx, params.alg, r, 0))
        if ctx.in_radf(r):
            for i in range(ctx.n):
                u = tuple(1 if j == i else 0 for j in range(ctx.n))
                gens.append(loop_D(ctx, params.alg, u, r, 0))
        elif any(r):
            gens.append(loop_ad(ctx, params.alg, r, 0))
    return gens


def cyclicity_probe(params, window: int, seed: int, orbit_samples: int = 20) -> ProbeResult:
    """Windowed span saturation from one random vector, plus weight-space
    orbit ranks under the degree-preserving T operators.

    Evidence only: generators and images are truncated to the window, so a
    non-saturated span is a counterexample candidate, not a failure.
    """
    ctx = params.ctx
    rng = random.Random(f"{seed}/probe")
    degrees = _window_box(ctx.n, window)
    slot = {s: i for i, s in enumerate(degrees)}
    d = params.V.dim
    width = d * len(degrees)

    def flatten(xi):
        row = [ctx.field.zero] * width
        for s, v in xi.comps.items():
            base = slot[s] * d
            for i, a in enumerate(v):
                row[base + i] = a
        return row

    def clip(xi):
        return FVector(params, {s: v for s, v in xi.comps.items() if s in slot})

    start_deg = degrees[rng.randrange(len(degrees))]
    vec = tuple(ctx.field.rational(rng.randint(-2, 2)) for _ in range(d))
    if not any(vec):
        vec = params.V.basis_vector(0)
    start = FVector.basis(params, start_deg, vec)

    gens = _window_generators(params, degrees)
    span = FieldSpan(width)
    span.add(flatten(start))
    frontier = [start]
    history = [span.rank]
    while frontier and span.rank < width:
        new = []
        for xi in frontier:
            for g in gens:
                img = clip(act(g, xi))
                if img and span.add(flatten(img)):
                    new.append(img)
                    if span.rank == width:
                        break
            if span.rank == width:
                break
        frontier = new
        history.append(span.rank)

    # T-orbit ranks inside one weight space
    radf_degs = [r for r in degrees if ctx.in_radf(r)]
    units = [tuple(1 if j == i else 0 for j in range(ctx.n)) for i in range(ctx.n)]
    t_ops = [op_T(params, u, r, 0, 0) for r in radf_degs for u in units]
    orbit_ranks = []
    for _ in range(orbit_samples):
        v = tuple(ctx.field.rational(rng.randint(-2, 2)) for _ in range(d))
        if not any(v):
            v = params.V.basis_vector(rng.randrange(d))
        xi = FVector.basis(params, start_deg, v)
        orb = FieldSpan(d)
        orb.add(list(xi.component(start_deg)))
        frontier2 = [xi]
        while frontier2 and orb.rank < d:
            nxt = []
            for cur in frontier2:
                for T in t_ops:
                    img = T(cur)
                    if img and orb.add(list(img.component(start_deg))):
                        nxt.append(img)
            frontier2 = nxt
        orbit_ranks.append(orb.rank)

    return ProbeResult(
        window=window,
        degrees=len(degrees),
        target_dim=width,
        span_dim=span.rank,
        saturated=span.rank == width,
        history=history,
        orbit_ranks=orbit_ranks,
        orbit_target=d,
        start_degree=start_deg,
    )
