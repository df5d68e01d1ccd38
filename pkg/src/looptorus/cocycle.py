"""The commutation data of a rational quantum torus on the lattice Z^n.

A context is a pair (n, N) plus an integer exponent matrix K with
q_ij = zeta_N ** K[i][j], subject to K[i][i] = 0 and K[i][j] + K[j][i] = 0
mod N (so q_ji = q_ij^-1).  From it we derive:

  * the multiplication cocycle  sigma(a, b) = prod_{i > j} q_ij^(a_i b_j),
  * the alternating bicharacter f(a, b) = sigma(a, b) / sigma(b, a),
  * rad f = {a : f(a, .) = 1}, a finite-index sublattice, and
  * a square-root branch for sigma(r, r).

Scalars live in Q(zeta_2N): sigma(a, b) = zeta_2N^(2 E(a, b)) where the
integer exponent E(a, b) = sum_{i > j} K[i][j] a_i b_j, and the square
root of sigma(r, r) is pinned to zeta_2N^E(r, r).  Doubling the conductor
keeps the values and their square roots in a single exact field.
"""

from __future__ import annotations

from functools import cached_property

from .cyclotomic import Cyclotomic, cyclotomic_field
from .matrices import congruence_kernel_basis, lattice_membership


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(k, a):
    return tuple(k * x for x in a)


class ContextError(ValueError):
    """The commutation data (n, N, K) is malformed."""


class CocycleContext:
    """Fixed (n, N, K) with the cocycle, bicharacter, radical and branch."""

    def __init__(self, n: int, N: int, K):
        if n < 1:
            raise ContextError(f"rank n must be >= 1, got {n}")
        if N < 1:
            raise ContextError(f"order N must be >= 1, got {N}")
        K = [list(row) for row in K]
        if len(K) != n or any(len(row) != n for row in K):
            raise ContextError(f"K must be {n}x{n}")
        for i in range(n):
            if not all(isinstance(v, int) for v in K[i]):
                raise ContextError("K entries must be integers")
            if K[i][i] % N:
                raise ContextError(f"K[{i}][{i}] must be 0 mod N")
            for j in range(n):
                if (K[i][j] + K[j][i]) % N:
                    raise ContextError(
                        f"K[{i}][{j}] + K[{j}][{i}] must be 0 mod N (q_ji = 1/q_ij)"
                    )
        self.n = n
        self.N = N
        self.K = [[v % N for v in row] for row in K]
        self.field = cyclotomic_field(2 * N)
        # Matrix of f on basis vectors: f(a, e_k) has exponent (M a)_k with
        # M[k][i] = E-exponent asymmetry; rad f = kernel of M mod N.
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i > j:
                    M[j][i] = self.K[i][j] % N
                    M[i][j] = (-self.K[i][j]) % N
        self.skew = M

    def __repr__(self):
        return f"CocycleContext(n={self.n}, N={self.N})"

    def check_vec(self, a):
        if len(a) != self.n:
            raise ValueError(f"degree vector of length {len(a)}, expected {self.n}")
        return tuple(int(x) for x in a)

    def sigma_exponent(self, a, b) -> int:
        """Integer E(a, b) with sigma(a, b) = zeta_2N^(2 E(a, b))."""
        e = 0
        K = self.K
        for i in range(1, self.n):
            ai = a[i]
            if ai:
                Ki = K[i]
                for j in range(i):
                    if b[j]:
                        e += Ki[j] * ai * b[j]
        return e

    def sigma(self, a, b) -> Cyclotomic:
        return self.field.zeta(2 * self.sigma_exponent(a, b))

    def f(self, a, b) -> Cyclotomic:
        return self.field.zeta(2 * (self.sigma_exponent(a, b) - self.sigma_exponent(b, a)))

    def f_is_one(self, a, b) -> bool:
        return (self.sigma_exponent(a, b) - self.sigma_exponent(b, a)) % self.N == 0

    def sqrt_sigma_diag(self, r) -> Cyclotomic:
        """The pinned square root of sigma(r, r): zeta_2N^E(r, r)."""
        return self.field.zeta(self.sigma_exponent(r, r))

    def in_radf(self, a) -> bool:
        """Whether t^a is central, i.e. f(a, b) = 1 for every b."""
        return all(
            sum(self.skew[k][i] * a[i] for i in range(self.n)) % self.N == 0
            for k in range(self.n)
        )

    @cached_property
    def radf_basis(self):
        """Canonical column basis (Hermite form) of the lattice rad f."""
        return congruence_kernel_basis(self.skew, self.N)

    def radf_contains(self, a) -> bool:
        """Membership via the computed basis (cross-check for in_radf)."""
        return lattice_membership(self.radf_basis, a)

    def sqrt_branch_defect(self, r, s) -> int:
        """+1/-1 defect of the pinned square root on rad f.

        For r, s in rad f, sqrt(sigma(r,r)) sqrt(sigma(s,s)) sigma(r,s)
        differs from sqrt(sigma(r+s,r+s)) by zeta_2N^(E(s,r) - E(r,s)),
        which is a sign since N | E(s,r) - E(r,s) on the radical.
        """
        if not (self.in_radf(r) and self.in_radf(s)):
            raise ValueError("branch defect is only defined on rad f")
        d = (self.sigma_exponent(s, r) - self.sigma_exponent(r, s)) % (2 * self.N)
        if d == 0:
            return 1
        if d == self.N:
            return -1
        # unreachable: N | E(s,r)-E(r,s) whenever r is central
        raise AssertionError(f"defect exponent {d} escaped {{0, {self.N}}}")

    def branch_coherent(self) -> bool:
        """True when the pinned square root is multiplicative on rad f.

        Checked on all pairs from the radical basis, which suffices since
        the defect is biadditive in the exponents.
        """
        basis = self.radf_basis
        return all(
            self.sqrt_branch_defect(gi, gj) == 1 for gi in basis for gj in basis
        )
