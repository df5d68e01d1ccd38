"""Finite-dimensional gl_n modules given by explicit action matrices.

A module is the list of d x d matrices rho(E_ij) for the elementary
matrices E_ij, over the cyclotomic scalar field of the ambient context.
validate() checks the defining relations

    E_ij E_kl - E_kl E_ij = delta_jk E_il - delta_li E_kj

exactly; tensor, symmetric square and exterior square are built from the
Leibniz action on product bases.
"""

from __future__ import annotations

from .matrices import mat_apply, mat_eq, mat_mul, mat_scale, mat_sub, mat_zero

MAX_DIM = 512


class DimensionOverflow(ValueError):
    """A constructor would exceed the supported module dimension."""


class GlnModule:
    """Action matrices rho(E_ij), indexed E[i][j], each d x d."""

    __slots__ = ("field", "n", "dim", "E", "label")

    def __init__(self, field, n: int, E, label: str = "custom"):
        self.field = field
        self.n = n
        self.E = E
        self.dim = len(E[0][0])
        self.label = label

    def __repr__(self):
        return f"GlnModule({self.label}, n={self.n}, dim={self.dim})"

    def apply(self, i: int, j: int, vec):
        """rho(E_ij) applied to a coefficient vector."""
        return mat_apply(self.E[i][j], vec, self.field.zero)

    def weighted_apply(self, r, u, vec):
        """(sum_ij r_i u_j rho(E_ij)) vec for integer r and scalar u."""
        out = [self.field.zero] * self.dim
        for i, ri in enumerate(r):
            if not ri:
                continue
            for j, uj in enumerate(u):
                if not uj:
                    continue
                w = self.apply(i, j, vec)
                c = uj * ri
                out = [a + c * b for a, b in zip(out, w)]
        return tuple(out)

    def basis_vector(self, idx: int):
        return tuple(
            self.field.one if k == idx else self.field.zero for k in range(self.dim)
        )


def _guard(dim: int):
    if dim > MAX_DIM:
        raise DimensionOverflow(f"module dimension {dim} exceeds {MAX_DIM}")


def make_trivial(field, n: int) -> GlnModule:
    zero = [[field.zero]]
    E = [[zero for _ in range(n)] for _ in range(n)]
    return GlnModule(field, n, E, "trivial")


def make_natural(field, n: int) -> GlnModule:
    """C^n with E_ij e_k = delta_jk e_i."""
    E = []
    for i in range(n):
        row = []
        for j in range(n):
            m = mat_zero(field, n, n)
            m[i][j] = field.one
            row.append(m)
        E.append(row)
    return GlnModule(field, n, E, "natural")


def make_dual(field, n: int) -> GlnModule:
    """Dual of the natural module: E_ij acts by -e_ji (negative transpose)."""
    E = []
    for i in range(n):
        row = []
        for j in range(n):
            m = mat_zero(field, n, n)
            m[j][i] = -field.one
            row.append(m)
        E.append(row)
    return GlnModule(field, n, E, "dual")


def tensor(V: GlnModule, W: GlnModule) -> GlnModule:
    """V (x) W with the Leibniz action E(v (x) w) = Ev (x) w + v (x) Ew."""
    if V.n != W.n:
        raise ValueError("tensor factors must share n")
    d1, d2 = V.dim, W.dim
    d = d1 * d2
    _guard(d)
    field = V.field
    E = []
    for i in range(V.n):
        row = []
        for j in range(V.n):
            A, B = V.E[i][j], W.E[i][j]
            m = mat_zero(field, d, d)
            for a in range(d1):
                for b in range(d2):
                    col = a * d2 + b
                    for ap in range(d1):
                        if A[ap][a]:
                            m[ap * d2 + b][col] = m[ap * d2 + b][col] + A[ap][a]
                    for bp in range(d2):
                        if B[bp][b]:
                            m[a * d2 + bp][col] = m[a * d2 + bp][col] + B[bp][b]
            row.append(m)
        E.append(row)
    return GlnModule(field, V.n, E, f"tensor({V.label},{W.label})")


def _pair_basis(d: int, symmetric: bool):
    # index pairs (a, b) with a <= b (symmetric) or a < b (exterior)
    pairs = []
    for a in range(d):
        start = a if symmetric else a + 1
        for b in range(start, d):
            pairs.append((a, b))
    return pairs


def _square_action(V: GlnModule, symmetric: bool) -> GlnModule:
    d = V.dim
    pairs = _pair_basis(d, symmetric)
    index = {p: k for k, p in enumerate(pairs)}
    dim = len(pairs)
    _guard(dim)
    field = V.field
    sign = 1 if symmetric else -1

    def slot(a, b):
        # normalize an ordered pair to the chosen basis, with sign for wedge
        if a == b:
            return (index[(a, b)], 1) if symmetric else None
        if a < b:
            return index[(a, b)], 1
        return index[(b, a)], sign

    E = []
    for i in range(V.n):
        row = []
        for j in range(V.n):
            A = V.E[i][j]
            m = mat_zero(field, dim, dim)
            for (a, b), col in index.items():
                # E(x_a . x_b) = (E x_a) . x_b + x_a . (E x_b)
                for ap in range(d):
                    if A[ap][a]:
                        hit = slot(ap, b)
                        if hit:
                            k, s = hit
                            m[k][col] = m[k][col] + (A[ap][a] if s > 0 else -A[ap][a])
                for bp in range(d):
                    if A[bp][b]:
                        hit = slot(a, bp)
                        if hit:
                            k, s = hit
                            m[k][col] = m[k][col] + (A[bp][b] if s > 0 else -A[bp][b])
            row.append(m)
        E.append(row)
    return GlnModule(field, V.n, E, f"{'sym2' if symmetric else 'wedge2'}({V.label})")


def sym2(V: GlnModule) -> GlnModule:
    return _square_action(V, symmetric=True)


def wedge2(V: GlnModule) -> GlnModule:
    return _square_action(V, symmetric=False)


def commutation_witness(V: GlnModule):
    """First (i, j, k, l) violating the E_ij relations, or None."""
    field = V.field
    n, d = V.n, V.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = mat_sub(
                        mat_mul(V.E[i][j], V.E[k][l], field.zero),
                        mat_mul(V.E[k][l], V.E[i][j], field.zero),
                    )
                    rhs = mat_zero(field, d, d)
                    if j == k:
                        rhs = [
                            [x + y for x, y in zip(r1, r2)]
                            for r1, r2 in zip(rhs, V.E[i][l])
                        ]
                    if l == i:
                        rhs = [
                            [x - y for x, y in zip(r1, r2)]
                            for r1, r2 in zip(rhs, V.E[k][j])
                        ]
                    if not mat_eq(lhs, rhs):
                        return (i, j, k, l)
    return None


def validate(V: GlnModule) -> bool:
    """Exact check of all gl_n commutation relations."""
    return commutation_witness(V) is None


def identity_image(V: GlnModule):
    """Matrix of rho(sum_i E_ii); scalar on irreducibles by Schur."""
    field = V.field
    m = mat_zero(field, V.dim, V.dim)
    for i in range(V.n):
        m = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(m, V.E[i][i])]
    return m


_BASE = {"trivial": make_trivial, "natural": make_natural, "dual": make_dual}


def module_from_spec(field, n: int, spec) -> GlnModule:
    """Build a module from a config value.

    Strings: "trivial", "natural", "dual", "sym2", "wedge2" (squares of
    the natural module).  Dicts: {"tensor": [spec, spec]},
    {"sym2": spec}, {"wedge2": spec}.
    """
    if isinstance(spec, str):
        if spec in _BASE:
            return _BASE[spec](field, n)
        if spec == "sym2":
            return sym2(make_natural(field, n))
        if spec == "wedge2":
            return wedge2(make_natural(field, n))
        raise ValueError(f"unknown module spec {spec!r}")
    if isinstance(spec, dict) and len(spec) == 1:
        key, val = next(iter(spec.items()))
        if key == "tensor":
            if not isinstance(val, list) or len(val) != 2:
                raise ValueError("tensor spec needs a list of two factors")
            return tensor(
                module_from_spec(field, n, val[0]), module_from_spec(field, n, val[1])
            )
        if key == "sym2":
            return sym2(module_from_spec(field, n, val))
        if key == "wedge2":
            return wedge2(module_from_spec(field, n, val))
    raise ValueError(f"unknown module spec {spec!r}")
