"""Exact integer linear algebra on small dense matrices.

Matrices are tuples of row tuples of Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import UsageError

IntMatrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    out = tuple(tuple(int(x) for x in r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise UsageError("matrix rows have different lengths")
    return out


def shape(A: IntMatrix) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    cols = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                 for row in A)


def matvec(A: IntMatrix, x: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def transpose(A: IntMatrix) -> IntMatrix:
    return tuple(zip(*A))


def from_columns(cols: Sequence[Sequence[int]], rows: int) -> IntMatrix:
    if not cols:
        return tuple(() for _ in range(rows))
    return as_matrix(list(zip(*cols)))


def det(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
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
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SNFResult:
    """``P @ A @ Q == D`` with ``P``, ``Q`` unimodular and ``D`` in Smith form."""

    P: IntMatrix
    Q: IntMatrix
    D: IntMatrix

    @property
    def divisors(self) -> tuple[int, ...]:
        """The non-zero diagonal entries of ``D``."""
        return tuple(d for d in (self.D[i][i] for i in range(min(shape(self.D))))
                     if d)

    @property
    def rank(self) -> int:
        return len(self.divisors)


def smith_normal_form(A: Sequence[Sequence[int]]) -> SNFResult:
    A = as_matrix(A)
    m, n = shape(A)
    D = [list(r) for r in A]
    P = [list(r) for r in identity(m)]
    Q = [list(r) for r in identity(n)]

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        P[i], P[k] = P[k], P[i]

    def swap_cols(j, k):
        for M in (D, Q):
            for row in M:
                row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):  # row dst += q * row src
        for M in (D, P):
            M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]

    def add_col(dst, src, q):  # col dst += q * col src
        for M in (D, Q):
            for row in M:
                row[dst] += q * row[src]

    for k in range(min(m, n)):
        while True:
            pivot = None
            for i in range(k, m):
                for j in range(k, n):
                    if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(k, pivot[0])
            swap_cols(k, pivot[1])
            p = D[k][k]
            clean = True
            for i in range(k + 1, m):
                if D[i][k]:
                    add_row(i, k, -(D[i][k] // p))
                    clean = clean and D[i][k] == 0
            for j in range(k + 1, n):
                if D[k][j]:
                    add_col(j, k, -(D[k][j] // p))
                    clean = clean and D[k][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(k + 1, m)
                        if any(D[i][j] % p for j in range(k + 1, n))), None)
            if bad is None:
                break
            # pull the offending row up so the pivot is replaced by a gcd
            add_row(k, bad, 1)
        if D[k][k] < 0:
            D[k] = [-x for x in D[k]]
            P[k] = [-x for x in P[k]]
    return SNFResult(as_matrix(P), as_matrix(Q), as_matrix(D))


def hermite_normal_form(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite form: returns ``(H, U)`` with ``A @ U == H``.

    ``H`` is in column echelon form: pivot rows strictly increase from left
    to right, pivots are positive, entries left of a pivot lie in
    ``[0, pivot)`` and every column after the last pivot is zero.
    """
    A = as_matrix(A)
    m, n = shape(A)
    H = [list(r) for r in A]
    U = [list(r) for r in identity(n)]

    def col_op(dst, src, q):  # col dst += q * col src
        for M in (H, U):
            for row in M:
                row[dst] += q * row[src]

    def swap(j, k):
        for M in (H, U):
            for row in M:
                row[j], row[k] = row[k], row[j]

    def negate(j):
        for M in (H, U):
            for row in M:
                row[j] = -row[j]

    col = 0
    for i in range(m):
        if col >= n:
            break
        for j in range(col + 1, n):
            while H[i][j]:
                col_op(col, j, -(H[i][col] // H[i][j]))
                swap(col, j)
        if H[i][col] == 0:
            continue
        if H[i][col] < 0:
            negate(col)
        p = H[i][col]
        for j in range(col):
            q = H[i][j] // p
            if q:
                col_op(j, col, -q)
        col += 1
    return as_matrix(H), as_matrix(U)


@dataclass(frozen=True)
class DioSolution:
    particular: tuple[int, ...]
    kernel_basis: tuple[tuple[int, ...], ...]


def kernel_basis(A: Sequence[Sequence[int]], snf: Optional[SNFResult] = None) -> tuple[tuple[int, ...], ...]:
    """A lattice basis of the integer kernel ``{x : A x = 0}``."""
    A = as_matrix(A)
    snf = snf or smith_normal_form(A)
    n = shape(A)[1]
    return tuple(tuple(snf.Q[i][j] for i in range(n)) for j in range(snf.rank, n))


def solve_diophantine(A: Sequence[Sequence[int]], b: Sequence[int],
                      snf: Optional[SNFResult] = None) -> Optional[DioSolution]:
    """Solve ``A x = b`` over the integers; ``None`` when there is no solution."""
    A = as_matrix(A)
    m, n = shape(A)
    b = tuple(int(x) for x in b)
    if len(b) != m:
        raise UsageError(f"right-hand side has {len(b)} entries, matrix has {m} rows")
    snf = snf or smith_normal_form(A)
    pb = matvec(snf.P, b)
    r = snf.rank
    y = [0] * n
    for i in range(m):
        d = snf.D[i][i] if i < min(m, n) else 0
        if i < r:
            if pb[i] % d:
                return None
            y[i] = pb[i] // d
        elif pb[i]:
            return None
    return DioSolution(matvec(snf.Q, y), kernel_basis(A, snf))


def lattice_reduce(v: Sequence[int], gens: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], bool]:
    """Canonical representative of ``v`` modulo the lattice spanned by ``gens``.

    Returns ``(representative, v_is_in_lattice)``.
    """
    v = [int(x) for x in v]
    gens = [tuple(g) for g in gens]
    if any(len(g) != len(v) for g in gens):
        raise UsageError("generators and vector have different dimensions")
    if not gens:
        return tuple(v), not any(v)
    H, _ = hermite_normal_form(from_columns(gens, len(v)))
    _reduce_against(v, H)
    return tuple(v), not any(v)


def _reduce_against(v: list[int], H: IntMatrix) -> None:
    m, n = shape(H)
    col = 0
    for i in range(m):
        if col >= n:
            break
        p = H[i][col]
        if p == 0:
            continue
        q = v[i] // p
        if q:
            for r in range(m):
                v[r] -= q * H[r][col]
        col += 1


def pivot_columns(H: IntMatrix) -> list[tuple[int, ...]]:
    """Non-zero columns of a Hermite form, i.e. a basis of its column lattice."""
    return [c for c in transpose(H) if any(c)] if H and H[0] else []


__all__ = [
    "IntMatrix", "SNFResult", "DioSolution", "as_matrix", "shape", "identity",
    "matmul", "matvec", "transpose", "from_columns", "det",
    "smith_normal_form", "hermite_normal_form", "kernel_basis",
    "solve_diophantine", "lattice_reduce", "pivot_columns",
]
