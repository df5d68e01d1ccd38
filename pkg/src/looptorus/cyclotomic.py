"""Exact arithmetic in a fixed cyclotomic field Q(zeta_L).

Elements are residues modulo the L-th cyclotomic polynomial Phi_L, stored
as fixed-length tuples of rationals (coefficients of 1, z, ..., z^(d-1)
where d = deg Phi_L and z is a primitive L-th root of unity).  Phi_L is
irreducible over Q, so the quotient ring is a field and every nonzero
element has an inverse.  The conductor is pinned per field instance and
operations mixing conductors are rejected rather than coerced.

No floating point enters anywhere; equality against zero is decidable and
is the basis of every verification residual in this package.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ConductorMismatch(ValueError):
    """Two elements from cyclotomic fields of different conductor were combined."""


class ScalarSyntaxError(ValueError):
    """A scalar string failed to parse."""


def _divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Long division of integer polynomials; den is monic and the division
    # is exact by construction (used only for products of cyclotomics).
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    assert not any(num[:dn]), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Coefficients of Phi_order, constant term first, always monic."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if order == 1:
        return (-1, 1)
    poly = [-1] + [0] * (order - 1) + [1]  # x^order - 1
    for d in range(1, order):
        if order % d == 0:
            poly = _divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _poly_divmod(num, den):
    # num, den lists of Fractions, den nonzero; returns (quot, rem).
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    dden = len(den) - 1
    while den[dden] == 0:
        dden -= 1
    lead = den[dden]
    quot = [_ZERO] * max(len(num) - dden, 0)
    for i in range(len(num) - 1, dden - 1, -1):
        c = num[i]
        if c:
            q = c / lead
            quot[i - dden] = q
            for j in range(dden + 1):
                num[i - dden + j] -= q * den[j]
    while num and num[-1] == 0:
        num.pop()
    return quot, num


class CyclotomicField:
    """Q(zeta_L) for a fixed conductor L, with zeta_L = exp(2*pi*i/L)."""

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        self.conductor = conductor
        phi = cyclotomic_polynomial(conductor)
        self.degree = len(phi) - 1
        self._phi = phi
        # Reduction table: coefficients of x^j mod Phi_L.  Products of two
        # reduced elements reach degree 2d-2; zeta lookups reach L-1.
        top = max(conductor, 2 * self.degree - 1)
        rows = [None] * top
        cur = [_ONE] + [_ZERO] * (self.degree - 1)
        rows[0] = tuple(cur)
        for j in range(1, top):
            carry = cur[-1]
            cur = [_ZERO] + cur[:-1]
            if carry:
                # x^d = -(phi_0 + phi_1 x + ... + phi_{d-1} x^{d-1})
                for k in range(self.degree):
                    cur[k] -= carry * phi[k]
            rows[j] = tuple(cur)
        self._xpow = rows
        self.zero = Cyclotomic(self, (_ZERO,) * self.degree)
        one = [_ZERO] * self.degree
        one[0] = _ONE
        self.one = Cyclotomic(self, tuple(one))
        self._zeta_cache: dict[int, Cyclotomic] = {}

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("CyclotomicField", self.conductor))

    def rational(self, value) -> Cyclotomic:
        q = Fraction(value)
        coeffs = [_ZERO] * self.degree
        coeffs[0] = q
        return Cyclotomic(self, tuple(coeffs))

    def zeta(self, exponent: int = 1) -> Cyclotomic:
        """The root of unity zeta_L**exponent (exponent taken mod L)."""
        e = exponent % self.conductor
        hit = self._zeta_cache.get(e)
        if hit is None:
            hit = Cyclotomic(self, self._xpow[e])
            self._zeta_cache[e] = hit
        return hit

    def element(self, coeffs) -> Cyclotomic:
        """Element with the given coefficients in the power basis (any length)."""
        acc = [_ZERO] * self.degree
        for j, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                row = self._xpow[j % self.conductor] if j >= len(self._xpow) else self._xpow[j]
                for k in range(self.degree):
                    acc[k] += c * row[k]
        return Cyclotomic(self, tuple(acc))

    def _mul_coeffs(self, a, b):
        d = self.degree
        prod = [_ZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:d]
        for j in range(d, 2 * d - 1):
            c = prod[j]
            if c:
                row = self._xpow[j]
                for k in range(d):
                    out[k] += c * row[k]
        return tuple(out)

    def _inv_coeffs(self, a):
        # Extended Euclid in Q[x] against Phi_L; Phi_L is irreducible, so the
        # gcd with any nonzero residue is a nonzero constant.
        r0 = [Fraction(c) for c in self._phi]
        r1 = list(a)
        while r1 and r1[-1] == 0:
            r1.pop()
        if not r1:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        t0: list[Fraction] = [_ZERO]
        t1: list[Fraction] = [_ONE]
        while True:
            quot, rem = _poly_divmod(r0, r1)
            if not rem:
                break
            # t_next = t0 - quot * t1
            qt = [_ZERO] * (len(quot) + len(t1) - 1)
            for i, qi in enumerate(quot):
                if qi:
                    for j, tj in enumerate(t1):
                        if tj:
                            qt[i + j] += qi * tj
            tn = [_ZERO] * max(len(t0), len(qt))
            for i, c in enumerate(t0):
                tn[i] += c
            for i, c in enumerate(qt):
                tn[i] -= c
            r0, r1, t0, t1 = r1, rem, t1, tn
        const = r1[0]
        if len(r1) != 1:
            raise ArithmeticError("reducible modulus: gcd has positive degree")
        inv = [c / const for c in t1]
        inv += [_ZERO] * (self.degree - len(inv))
        return tuple(inv[: self.degree])

    def parse(self, text: str) -> Cyclotomic:
        """Parse a scalar string like "3/2 - z + 2*z^3" into an element.

        Grammar: sum of terms, each a rational, "z^k", or "rational*z^k";
        "z" means "z^1".  Exponents may be any integer (reduced mod L).
        """
        s = text.strip()
        if not s:
            raise ScalarSyntaxError("empty scalar string")
        total = self.zero
        pos = 0
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        while True:
            term, pos = self._parse_term(s, pos)
            total = total + term if sign > 0 else total - term
            while pos < len(s) and s[pos] == " ":
                pos += 1
            if pos == len(s):
                return total
            if s[pos] not in "+-":
                raise ScalarSyntaxError(f"expected '+' or '-' at position {pos} in {text!r}")
            sign = -1 if s[pos] == "-" else 1
            pos += 1

    def _parse_term(self, s, pos):
        while pos < len(s) and s[pos] == " ":
            pos += 1
        coef = _ONE
        seen_coef = False
        start = pos
        while pos < len(s) and (s[pos].isdigit() or s[pos] == "/"):
            pos += 1
        if pos > start:
            try:
                coef = Fraction(s[start:pos])
            except (ValueError, ZeroDivisionError) as exc:
                raise ScalarSyntaxError(f"bad rational {s[start:pos]!r} in scalar") from exc
            seen_coef = True
        while pos < len(s) and s[pos] == " ":
            pos += 1
        if pos < len(s) and s[pos] == "*":
            pos += 1
            while pos < len(s) and s[pos] == " ":
                pos += 1
        if pos < len(s) and s[pos] == "z":
            pos += 1
            exp = 1
            if pos < len(s) and s[pos] == "^":
                pos += 1
                estart = pos
                if pos < len(s) and s[pos] in "+-":
                    pos += 1
                while pos < len(s) and s[pos].isdigit():
                    pos += 1
                try:
                    exp = int(s[estart:pos])
                except ValueError as exc:
                    raise ScalarSyntaxError(f"bad exponent at position {estart}") from exc
            return self.zeta(exp) * coef, pos
        if not seen_coef:
            raise ScalarSyntaxError(f"expected term at position {start} in scalar string")
        return self.rational(coef), pos


@lru_cache(maxsize=None)
def cyclotomic_field(conductor: int) -> CyclotomicField:
    """Shared field instance per conductor."""
    return CyclotomicField(conductor)


class Cyclotomic:
    """An element of a fixed CyclotomicField, immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.field.conductor != self.field.conductor:
                raise ConductorMismatch(
                    f"conductor {other.field.conductor} vs {self.field.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyclotomic(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.field, self.field._mul_coeffs(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inv(self) -> Cyclotomic:
        return Cyclotomic(self.field, self.field._inv_coeffs(self.coeffs))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        out = self.field.one
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return (
            other.field.conductor == self.field.conductor and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.conductor, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Cyclotomic({self.field.conductor}, {format_scalar(self)!r})"


def format_scalar(x: Cyclotomic) -> str:
    """Canonical scalar string: "c0 + c1*z + ...", zero terms omitted."""
    parts = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = "z" if k == 1 else f"z^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    if not parts:
        return "0"
    return " ".join(parts)
