"""Derivation algebra of the quantum torus, its loop algebra, and the
coefficient algebras B.

A GElement lives in g = C_q x| Der(C_q) and has three graded parts:

  * torus: the abelian ideal copy of C_q (any degree),
  * inner: inner derivations ad t^r for degrees r outside rad f,
  * witt:  derivations D(u, r) = t^r (sum_i u_i d_i) for r inside rad f,
           where d_i is the degree derivation t^a -> a_i t^a.

ad t^r for central t^r is the zero derivation, so the inner part is only
keyed outside the radical; constructors normalize accordingly.  D(u, r)
acts by t^s -> (u, s) sigma(r, s) t^(r+s).

B is either Laurent C[z, z^-1] or truncated C[z]/(z^k); psi is an algebra
map B -> C, determined by psi(z) (forced to 0 in the truncated case).
The loop algebra tau = g (x) B has bracket [x (x) a, y (x) b] = [x, y] (x) ab.
"""

from __future__ import annotations

from fractions import Fraction

from .cocycle import CocycleContext, vadd
from .cyclotomic import Cyclotomic
from .torus import TorusElement, _as_scalar


def dot_us(field, u, s):
    """Pairing (u, s) = sum_i u_i s_i, u scalars and s integers."""
    acc = field.zero
    for ui, si in zip(u, s):
        if si:
            acc = acc + ui * si
    return acc


def _as_uvec(ctx, u):
    if len(u) != ctx.n:
        raise ValueError(f"u must have length {ctx.n}")
    return tuple(_as_scalar(ctx, c) for c in u)


class GElement:
    """Element of the semidirect sum C_q x| Der(C_q), graded by Z^n."""

    __slots__ = ("ctx", "torus", "inner", "witt")

    def __init__(self, ctx, torus=None, inner=None, witt=None):
        self.ctx = ctx
        self.torus = {a: c for a, c in (torus or {}).items() if c}
        self.inner = {a: c for a, c in (inner or {}).items() if c}
        self.witt = {a: u for a, u in (witt or {}).items() if any(u)}

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def t(cls, ctx, a, coeff=None):
        a = ctx.check_vec(a)
        c = ctx.field.one if coeff is None else _as_scalar(ctx, coeff)
        return cls(ctx, torus={a: c})

    @classmethod
    def from_torus(cls, x: TorusElement):
        return cls(x.ctx, torus=dict(x.terms))

    @classmethod
    def ad(cls, ctx, r, coeff=None):
        """Inner derivation ad t^r; the zero element when t^r is central."""
        r = ctx.check_vec(r)
        if ctx.in_radf(r):
            return cls(ctx)
        c = ctx.field.one if coeff is None else _as_scalar(ctx, coeff)
        return cls(ctx, inner={r: c})

    @classmethod
    def D(cls, ctx, u, r):
        r = ctx.check_vec(r)
        if not ctx.in_radf(r):
            raise ValueError(f"D(u, r) needs r in rad f; {r} is not central")
        return cls(ctx, witt={r: _as_uvec(ctx, u)})

    def _check(self, other):
        if not isinstance(other, GElement):
            raise TypeError(f"expected GElement, got {type(other).__name__}")
        if other.ctx is not self.ctx and (
            other.ctx.n != self.ctx.n
            or other.ctx.N != self.ctx.N
            or other.ctx.K != self.ctx.K
        ):
            raise ValueError("mixed contexts")
        return other

    def __add__(self, other):
        o = self._check(other)
        torus = dict(self.torus)
        for a, c in o.torus.items():
            torus[a] = torus.get(a, self.ctx.field.zero) + c
        inner = dict(self.inner)
        for a, c in o.inner.items():
            inner[a] = inner.get(a, self.ctx.field.zero) + c
        witt = dict(self.witt)
        zero_u = (self.ctx.field.zero,) * self.ctx.n
        for a, u in o.witt.items():
            cur = witt.get(a, zero_u)
            witt[a] = tuple(x + y for x, y in zip(cur, u))
        return GElement(self.ctx, torus, inner, witt)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        c = _as_scalar(self.ctx, c)
        return GElement(
            self.ctx,
            {a: c * v for a, v in self.torus.items()},
            {a: c * v for a, v in self.inner.items()},
            {a: tuple(c * x for x in u) for a, u in self.witt.items()},
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scaled(other)
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self):
        return not (self.torus or self.inner or self.witt)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, GElement):
            return NotImplemented
        return (
            self.torus == other.torus
            and self.inner == other.inner
            and self.witt == other.witt
        )

    def degrees(self):
        return sorted(set(self.torus) | set(self.inner) | set(self.witt))

    def torus_part(self) -> TorusElement:
        return TorusElement(self.ctx, dict(self.torus))

    def bracket(self, other) -> GElement:
        """Lie bracket, computed species by species on monomial parts."""
        o = self._check(other)
        ctx = self.ctx
        sigma = ctx.sigma
        field = ctx.field
        out = GElement.zero(ctx)

        def add_torus(a, c):
            nonlocal out
            if c:
                out = out + GElement(ctx, torus={a: c})

        def add_inner(a, c):
            nonlocal out
            if not c:
                return
            # structure constants into central degrees vanish identically
            assert not ctx.in_radf(a), "nonzero inner coefficient at a central degree"
            out = out + GElement(ctx, inner={a: c})

        def add_witt(a, u):
            nonlocal out
            if any(u):
                out = out + GElement(ctx, witt={a: u})

        # [t^a, t^b] = (sigma(a,b) - sigma(b,a)) t^(a+b)
        for a, ca in self.torus.items():
            for b, cb in o.torus.items():
                add_torus(vadd(a, b), ca * cb * (sigma(a, b) - sigma(b, a)))
        # [ad t^r, t^s] = (sigma(r,s) - sigma(s,r)) t^(r+s)
        for r, cr in self.inner.items():
            for s, cs in o.torus.items():
                add_torus(vadd(r, s), cr * cs * (sigma(r, s) - sigma(s, r)))
        for s, cs in self.torus.items():
            for r, cr in o.inner.items():
                add_torus(vadd(r, s), -(cr * cs * (sigma(r, s) - sigma(s, r))))
        # [D(u,r), t^s] = (u, s) sigma(r,s) t^(r+s)
        for r, u in self.witt.items():
            for s, cs in o.torus.items():
                add_torus(vadd(r, s), cs * dot_us(field, u, s) * sigma(r, s))
        for s, cs in self.torus.items():
            for r, u in o.witt.items():
                add_torus(vadd(r, s), -(cs * dot_us(field, u, s) * sigma(r, s)))
        # [ad t^r, ad t^s] = (sigma(r,s) - sigma(s,r)) ad t^(r+s); the
        # coefficient vanishes whenever r+s is central, so this stays inner
        for r, cr in self.inner.items():
            for s, cs in o.inner.items():
                add_inner(vadd(r, s), cr * cs * (sigma(r, s) - sigma(s, r)))
        # [D(u,r), ad t^s] = (u, s) sigma(r,s) ad t^(r+s)
        for r, u in self.witt.items():
            for s, cs in o.inner.items():
                add_inner(vadd(r, s), cs * dot_us(field, u, s) * sigma(r, s))
        for s, cs in self.inner.items():
            for r, u in o.witt.items():
                add_inner(vadd(r, s), -(cs * dot_us(field, u, s) * sigma(r, s)))
        # [D(u,r), D(u',r')] = D(sigma(r,r')((u,r')u' - (u',r)u), r+r')
        for r, u in self.witt.items():
            for rp, up in o.witt.items():
                coef = sigma(r, rp)
                a = dot_us(field, u, rp)
                b = dot_us(field, up, r)
                w = tuple(coef * (a * x - b * y) for x, y in zip(up, u))
                add_witt(vadd(r, rp), w)
        return out

    def __str__(self):
        from .syntax import format_g

        return format_g(self)

    def __repr__(self):
        return f"GElement(torus={self.torus!r}, inner={self.inner!r}, witt={self.witt!r})"


def g_bracket(x: GElement, y: GElement) -> GElement:
    return x.bracket(y)


class BAlgebraError(ValueError):
    """Bad coefficient-algebra configuration."""


class BAlgebra:
    """C[z, z^-1] or C[z]/(z^k) with a character psi determined by psi(z)."""

    def __init__(self, field, kind: str, k: int = None, psi_z=None):
        self.field = field
        if kind not in ("laurent", "truncated"):
            raise BAlgebraError(f"kind must be 'laurent' or 'truncated', got {kind!r}")
        self.kind = kind
        if kind == "truncated":
            if k is None or k < 1:
                raise BAlgebraError("truncated algebra needs k >= 1")
            self.k = k
            # characters kill nilpotents: psi(z)^k = psi(z^k) = 0 forces psi(z) = 0
            if psi_z is not None and _as_scalar_field(field, psi_z):
                raise BAlgebraError("psi(z) must be 0 on a truncated algebra")
            self.psi_z = field.zero
        else:
            self.k = None
            if psi_z is None:
                psi_z = 1
            self.psi_z = _as_scalar_field(field, psi_z)
            if not self.psi_z:
                raise BAlgebraError("psi(z) must be nonzero on the Laurent algebra")
        self._psi_pow = {0: field.one}

    def __repr__(self):
        if self.kind == "truncated":
            return f"BAlgebra(truncated, k={self.k})"
        return f"BAlgebra(laurent, psi(z)={self.psi_z})"

    def check_index(self, i: int) -> int:
        if not isinstance(i, int):
            raise BAlgebraError(f"basis exponent must be an integer, got {i!r}")
        if self.kind == "truncated" and not (0 <= i < self.k):
            raise BAlgebraError(f"exponent {i} out of range for z^k = 0 with k={self.k}")
        return i

    def mul_basis(self, i: int, j: int):
        """Index of z^i z^j, or None when the product is zero."""
        s = i + j
        if self.kind == "truncated" and s >= self.k:
            return None
        return s

    def psi_basis(self, i: int) -> Cyclotomic:
        hit = self._psi_pow.get(i)
        if hit is None:
            hit = self.psi_z ** i if self.kind == "laurent" else self.field.zero
            self._psi_pow[i] = hit
        return hit

    def one(self) -> BElement:
        return BElement(self, {0: self.field.one})

    def z(self, i: int = 1) -> BElement:
        return BElement(self, {self.check_index(i): self.field.one})

    def element(self, terms: dict) -> BElement:
        return BElement(self, {self.check_index(i): _as_scalar_field(self.field, c) for i, c in terms.items()})


def _as_scalar_field(field, c):
    if isinstance(c, Cyclotomic):
        if c.field.conductor != field.conductor:
            raise ValueError("scalar from a different field")
        return c
    return field.rational(c)


class BElement:
    """Finite sum of basis monomials z^i with cyclotomic coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: BAlgebra, terms: dict):
        self.alg = alg
        self.terms = {i: c for i, c in terms.items() if c}

    def _check(self, other):
        if not isinstance(other, BElement):
            raise TypeError(f"expected BElement, got {type(other).__name__}")
        if other.alg is not self.alg and (
            other.alg.kind != self.alg.kind
            or other.alg.k != self.alg.k
            or other.alg.psi_z != self.alg.psi_z
        ):
            raise ValueError("mixed coefficient algebras")
        return other

    def __add__(self, other):
        o = self._check(other)
        out = dict(self.terms)
        for i, c in o.terms.items():
            out[i] = out.get(i, self.alg.field.zero) + c
        return BElement(self.alg, out)

    def __neg__(self):
        return BElement(self.alg, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BElement):
            o = self._check(other)
            out: dict = {}
            for i, ci in self.terms.items():
                for j, cj in o.terms.items():
                    ij = self.alg.mul_basis(i, j)
                    if ij is None:
                        continue
                    term = ci * cj
                    out[ij] = out.get(ij, self.alg.field.zero) + term
            return BElement(self.alg, out)
        if isinstance(other, (int, Fraction, Cyclotomic)):
            c = _as_scalar_field(self.alg.field, other)
            return BElement(self.alg, {i: c * v for i, v in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self * other
        return NotImplemented

    def psi(self) -> Cyclotomic:
        acc = self.alg.field.zero
        for i, c in self.terms.items():
            p = self.alg.psi_basis(i)
            if p:
                acc = acc + c * p
        return acc

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, BElement):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        from .syntax import format_b

        return format_b(self)

    def __repr__(self):
        return f"BElement({self.terms!r})"


def psi_kernel_element(b: BElement) -> BElement:
    """Projection of b onto ker psi: b - psi(b) * 1."""
    return b - b.alg.one() * b.psi()


class LoopElement:
    """Element of tau = g (x) B, stored as B-exponent -> GElement."""

    __slots__ = ("ctx", "alg", "parts")

    def __init__(self, ctx, alg, parts=None):
        self.ctx = ctx
        self.alg = alg
        self.parts = {i: g for i, g in (parts or {}).items() if not g.is_zero()}

    @classmethod
    def zero(cls, ctx, alg):
        return cls(ctx, alg)

    @classmethod
    def make(cls, g: GElement, alg: BAlgebra, b) -> LoopElement:
        """g (x) b, with b a basis exponent or a BElement."""
        if isinstance(b, BElement):
            parts: dict = {}
            for i, c in b.terms.items():
                parts[i] = parts.get(i, GElement.zero(g.ctx)) + g.scaled(c)
            return cls(g.ctx, alg, parts)
        return cls(g.ctx, alg, {alg.check_index(b): g})

    def _check(self, other):
        if not isinstance(other, LoopElement):
            raise TypeError(f"expected LoopElement, got {type(other).__name__}")
        if other.ctx.n != self.ctx.n or other.ctx.N != self.ctx.N or other.ctx.K != self.ctx.K:
            raise ValueError("mixed contexts")
        if other.alg is not self.alg and (
            other.alg.kind != self.alg.kind or other.alg.k != self.alg.k
        ):
            raise ValueError("mixed coefficient algebras")
        return other

    def __add__(self, other):
        o = self._check(other)
        parts = dict(self.parts)
        for i, g in o.parts.items():
            parts[i] = parts.get(i, GElement.zero(self.ctx)) + g
        return LoopElement(self.ctx, self.alg, parts)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        return LoopElement(self.ctx, self.alg, {i: g.scaled(c) for i, g in self.parts.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scaled(other)
        if isinstance(other, LoopElement):
            return self.torus_product(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scaled(other)
        return NotImplemented

    def is_zero(self):
        return not self.parts

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self.parts == other.parts

    def is_torus_only(self) -> bool:
        return all(not g.inner and not g.witt for g in self.parts.values())

    def torus_product(self, other) -> LoopElement:
        """Associative product on C_q (x) B; defined for torus-only elements."""
        o = self._check(other)
        if not (self.is_torus_only() and o.is_torus_only()):
            raise TypeError("product is only defined on torus elements; use bracket")
        out: dict = {}
        for i, g in self.parts.items():
            for j, h in o.parts.items():
                ij = self.alg.mul_basis(i, j)
                if ij is None:
                    continue
                prod = GElement.from_torus(g.torus_part() * h.torus_part())
                out[ij] = out.get(ij, GElement.zero(self.ctx)) + prod
        return LoopElement(self.ctx, self.alg, out)

    def bracket(self, other) -> LoopElement:
        """[x (x) a, y (x) b] = [x, y] (x) ab, termwise over B exponents."""
        o = self._check(other)
        out: dict = {}
        for i, g in self.parts.items():
            for j, h in o.parts.items():
                ij = self.alg.mul_basis(i, j)
                if ij is None:
                    continue
                gb = g.bracket(h)
                if gb.is_zero():
                    continue
                out[ij] = out.get(ij, GElement.zero(self.ctx)) + gb
        return LoopElement(self.ctx, self.alg, out)

    def __str__(self):
        from .syntax import format_loop

        return format_loop(self)

    def __repr__(self):
        return f"LoopElement({self.parts!r})"


def tau_bracket(x: LoopElement, y: LoopElement) -> LoopElement:
    return x.bracket(y)


def loop_t(ctx, alg, r, b=0, coeff=None) -> LoopElement:
    return LoopElement.make(GElement.t(ctx, r, coeff), alg, b)


def loop_ad(ctx, alg, r, b=0, coeff=None) -> LoopElement:
    return LoopElement.make(GElement.ad(ctx, r, coeff), alg, b)


def loop_D(ctx, alg, u, r, b=0) -> LoopElement:
    return LoopElement.make(GElement.D(ctx, u, r), alg, b)


def cq2_embed(x, alg: BAlgebra, b) -> LoopElement:
    """The map t^r (x) b -> (ad t^r) (x) b on torus elements.

    Central degrees map to zero (ad of a central monomial is the zero
    derivation), so this factors through C_q / Z(C_q).
    """
    if isinstance(x, TorusElement):
        g = GElement.zero(x.ctx)
        for a, c in x.terms.items():
            g = g + GElement.ad(x.ctx, a, c)
        return LoopElement.make(g, alg, b)
    raise TypeError("cq2_embed expects a TorusElement")
