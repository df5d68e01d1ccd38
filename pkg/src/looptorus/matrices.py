"""Integer matrix normal forms and exact linear algebra helpers.

Smith form drives kernel computations for congruence lattices; a column
Hermite form makes the resulting lattice bases canonical.  FieldSpan does
incremental fraction-free elimination over any exact field-like scalar
type (used with cyclotomic entries), so ranks are computed without ever
dividing.
"""

from __future__ import annotations


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(A):
    """Return (U, D, V) with U*A*V = D, D diagonal with d_i | d_{i+1}.

    U and V are unimodular.  Pivots are chosen by smallest absolute value,
    ties broken by lowest (row, column) index.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(row) for row in A]
    U = _identity(m)
    V = _identity(n)

    def row_op(i, j, q):  # row_i -= q * row_j
        for k in range(n):
            D[i][k] -= q * D[j][k]
        for k in range(m):
            U[i][k] -= q * U[j][k]

    def col_op(i, j, q):  # col_i -= q * col_j
        for k in range(m):
            D[k][i] -= q * D[k][j]
        for k in range(n):
            V[k][i] -= q * V[k][j]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for k in range(m):
            D[k][i], D[k][j] = D[k][j], D[k][i]
        for k in range(n):
            V[k][i], V[k][j] = V[k][j], V[k][i]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    v = D[i][j]
                    if v and (pivot is None or abs(v) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot != (t, t):
                if pivot[0] != t:
                    swap_rows(t, pivot[0])
                if pivot[1] != t:
                    swap_cols(t, pivot[1])
            if D[t][t] < 0:
                for k in range(n):
                    D[t][k] = -D[t][k]
                for k in range(m):
                    U[t][k] = -U[t][k]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    row_op(i, t, q)
                    if D[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    col_op(j, t, q)
                    if D[t][j]:
                        dirty = True
            if dirty:
                continue
            # column and row t are clear; enforce divisibility of the rest

            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % D[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_op(t, offender, -1)  # pulls the offending row up, loop again
    return U, D, V


def det_int(A) -> int:
    """Determinant of a square integer matrix (Bareiss, exact)."""
    n = len(A)
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def kernel_basis(A):
    """Columns (as tuples) spanning the integer kernel of A."""
    m = len(A)
    n = len(A[0]) if m else 0
    _, D, V = smith_normal_form(A)
    out = []
    for j in range(n):
        dj = D[j][j] if j < min(m, n) else 0
        if dj == 0:
            out.append(tuple(V[i][j] for i in range(n)))
    return out


def hermite_column_form(cols, n):
    """Canonical column Hermite form of the lattice spanned by ``cols``.

    Returns a list of columns (tuples of length n): lower triangular with
    positive pivots and entries left of each pivot reduced into [0, pivot).
    Zero columns are dropped, so the result has one column per pivot row.
    """
    work = [list(c) for c in cols if any(c)]
    placed = []
    for row in range(n):
        idx = None
        for j, c in enumerate(work):
            if c[row]:
                idx = j
                break
        if idx is None:
            continue
        # gcd the row entries of the remaining columns into one pivot column
        piv = work.pop(idx)
        rest = []
        for c in work:
            while c[row]:
                q = piv[row] // c[row]
                for k in range(n):
                    piv[k] -= q * c[k]
                piv, c = c, piv
            rest.append(c)
        work = rest
        if piv[row] < 0:
            piv = [-x for x in piv]
        for c in placed:
            if c[row]:
                q = c[row] // piv[row]
                for k in range(n):
                    c[k] -= q * piv[k]
        placed.append(piv)
    return [tuple(c) for c in placed]


def congruence_kernel_basis(M, modulus):
    """Column basis of the lattice {a in Z^n : M a = 0 (mod modulus)}.

    The lattice contains modulus * Z^n, so the basis is n columns; it is
    returned in column Hermite form, which makes it canonical.
    """
    n = len(M)
    A = [list(M[i]) + [modulus if j == i else 0 for j in range(n)] for i in range(n)]
    ker = kernel_basis(A)
    cols = [k[:n] for k in ker]
    basis = hermite_column_form(cols, n)
    assert len(basis) == n, "congruence lattice must have full rank"
    return basis


def lattice_membership(basis, vec) -> bool:
    """Whether vec lies in the lattice spanned by a Hermite-form basis."""
    n = len(vec)
    rem = list(vec)
    for i, col in enumerate(basis):
        if rem[i] % col[i]:
            return False
        q = rem[i] // col[i]
        for k in range(n):
            rem[k] -= q * col[k]
    return not any(rem)


class FieldSpan:
    """Incremental row span over an exact field, fraction-free.

    Rows are kept in echelon form.  Elimination uses cross-multiplication
    (new = new*pivot_val - pivot_row*new_val) so no inverses are taken;
    scalars only need *, -, and a truthiness test for zero.
    """

    def __init__(self, width: int):
        self.width = width
        self._rows: list[tuple[int, list]] = []  # (pivot index, row), sorted

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vec) -> bool:
        """Reduce vec against the span; absorb it if independent.

        Returns True when the rank grew.
        """
        row = list(vec)
        for pidx, prow in self._rows:
            v = row[pidx]
            if v:
                pval = prow[pidx]
                row = [a * pval - b * v for a, b in zip(row, prow)]
        lead = None
        for i, v in enumerate(row):
            if v:
                lead = i
                break
        if lead is None:
            return False
        self._rows.append((lead, row))
        self._rows.sort(key=lambda r: r[0])
        return True

    def contains(self, vec) -> bool:
        row = list(vec)
        for pidx, prow in self._rows:
            v = row[pidx]
            if v:
                pval = prow[pidx]
                row = [a * pval - b * v for a, b in zip(row, prow)]
        return not any(row)


def mat_identity(field, d):
    return [[field.one if i == j else field.zero for j in range(d)] for i in range(d)]


def mat_zero(field, rows, cols):
    return [[field.zero for _ in range(cols)] for _ in range(rows)]


def mat_mul(A, B, zero):
    rows, inner, cols = len(A), len(B), len(B[0])
    out = []
    for i in range(rows):
        Ai = A[i]
        row = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                a = Ai[k]
                if a:
                    acc = acc + a * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A):
    return [[c * a for a in row] for row in A]


def mat_eq(A, B) -> bool:
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def mat_apply(A, v, zero):
    out = []
    for row in A:
        acc = zero
        for a, x in zip(row, v):
            if a:
                acc = acc + a * x
        out.append(acc)
    return tuple(out)
