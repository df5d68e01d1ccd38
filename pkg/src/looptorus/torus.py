"""Sparse elements of the rational quantum torus.

The torus is the twisted group algebra of Z^n: basis monomials t^a for
a in Z^n with t^a t^b = sigma(a, b) t^(a+b).  Elements are dicts from
degree tuples to nonzero cyclotomic coefficients; all arithmetic is
degree-by-degree and exact.
"""

from __future__ import annotations

from fractions import Fraction

from .cocycle import CocycleContext, vadd, vneg
from .cyclotomic import Cyclotomic


class TorusElement:
    """A finite sum  sum_a c_a t^a  over a fixed context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: CocycleContext, terms: dict):
        self.ctx = ctx
        self.terms = {a: c for a, c in terms.items() if c}

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def monomial(cls, ctx, a, coeff=None):
        a = ctx.check_vec(a)
        c = ctx.field.one if coeff is None else _as_scalar(ctx, coeff)
        return cls(ctx, {a: c})

    def _check(self, other):
        if not isinstance(other, TorusElement):
            raise TypeError(f"expected TorusElement, got {type(other).__name__}")
        if other.ctx is not self.ctx and (
            other.ctx.n != self.ctx.n
            or other.ctx.N != self.ctx.N
            or other.ctx.K != self.ctx.K
        ):
            raise ValueError("mixed torus contexts")
        return other

    def __add__(self, other):
        o = self._check(other)
        out = dict(self.terms)
        for a, c in o.terms.items():
            acc = out.get(a)
            out[a] = c if acc is None else acc + c
        return TorusElement(self.ctx, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TorusElement(self.ctx, {a: -c for a, c in self.terms.items()})

    def scaled(self, c) -> TorusElement:
        c = _as_scalar(self.ctx, c)
        return TorusElement(self.ctx, {a: c * v for a, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            o = self._check(other)
            sigma = self.ctx.sigma
            out: dict = {}
            for a, ca in self.terms.items():
                for b, cb in o.terms.items():
                    ab = vadd(a, b)
                    term = ca * cb * sigma(a, b)
                    acc = out.get(ab)
                    out[ab] = term if acc is None else acc + term
            return TorusElement(self.ctx, out)
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.scaled(other)
        return NotImplemented

    def bracket(self, other) -> TorusElement:
        """Commutator [x, y] = xy - yx."""
        o = self._check(other)
        return self * o - o * self

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.terms == other.terms

    def support(self):
        return sorted(self.terms)

    def coeff(self, a) -> Cyclotomic:
        return self.terms.get(tuple(a), self.ctx.field.zero)

    def decompose(self):
        """Split into (commutator part, central part).

        The torus is the direct sum of its center (degrees in rad f) and
        the span of all commutators (degrees outside rad f): a monomial
        t^(r+s) with r+s not in rad f is a scalar multiple of [t^r, t^s]
        for a suitable split, so projecting by degree realizes the sum.
        """
        comm: dict = {}
        central: dict = {}
        for a, c in self.terms.items():
            (central if self.ctx.in_radf(a) else comm)[a] = c
        return TorusElement(self.ctx, comm), TorusElement(self.ctx, central)

    def __str__(self):
        from .syntax import format_torus

        return format_torus(self)

    def __repr__(self):
        return f"TorusElement({self.terms!r})"


def _as_scalar(ctx, c):
    if isinstance(c, Cyclotomic):
        if c.field.conductor != ctx.field.conductor:
            raise ValueError("scalar from a different field")
        return c
    return ctx.field.rational(c)


def commutator_witness(ctx: CocycleContext, a, window: int = 4):
    """Degrees (r, s) with r + s = a and [t^r, t^s] a nonzero multiple of t^a.

    Exists exactly when a is outside rad f; searches shifts r = a - s over
    the window box and also unit-vector candidates, returning None only
    when a is central.
    """
    a = ctx.check_vec(a)
    if ctx.in_radf(a):
        return None
    # s with f(a-s, s) != 1; unit vectors already witness noncentrality of a
    candidates = []
    for k in range(ctx.n):
        for sign in (1, -1):
            s = tuple(sign if i == k else 0 for i in range(ctx.n))
            candidates.append(s)
    if window:
        box = _box(ctx.n, window)
        candidates.extend(box)
    for s in candidates:
        r = vadd(a, vneg(s))
        if not ctx.f_is_one(r, s):
            return r, s
    return None


def _box(n, w):
    out = [()]
    for _ in range(n):
        out = [v + (x,) for v in out for x in range(-w, w + 1)]
    return out
