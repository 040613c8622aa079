"""Exact integer matrix arithmetic on tuples of tuples.

Matrices are immutable row-major tuples of Python ints, so products of
transvections can grow without bound. Rational steps (inverses, kernels,
column-space intersections) go through fractions.Fraction and are converted
back to integers only when exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple((0,) * m for _ in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError("matrix dimensions do not match")
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_scale(a: Matrix, c: int) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def outer(u: Vector, v: Vector) -> Matrix:
    return tuple(tuple(x * y for y in v) for x in u)


def int_inverse(a: Matrix) -> Matrix | None:
    """Inverse of a square matrix when it exists over the integers, else None."""
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        return None
    return tuple(tuple(int(x) for x in row) for row in inv)


def rank(a: Matrix) -> int:
    rows = [[Fraction(x) for x in row] for row in a]
    m = len(rows[0]) if rows else 0
    r = 0
    for col in range(m):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def primitive(v: Sequence[int]) -> Vector:
    """Divide out the gcd; the zero vector stays zero."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(0 for _ in v)
    return tuple(x // g for x in v)


def sign_normalized(v: Sequence[int]) -> Vector:
    """Flip signs so the first nonzero coordinate is positive."""
    for x in v:
        if x != 0:
            return tuple(y for y in v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def column_space_basis(a: Matrix) -> list[Vector]:
    """Primitive integer vectors spanning the column space over Q."""
    cols = [[Fraction(a[i][j]) for i in range(len(a))] for j in range(len(a[0]))]
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for col in cols:
        vec = col[:]
        for b, p in zip(basis, pivots):
            if vec[p] != 0:
                f = vec[p] / b[p]
                vec = [x - f * y for x, y in zip(vec, b)]
        pivot = next((i for i, x in enumerate(vec) if x != 0), None)
        if pivot is not None:
            basis.append(vec)
            pivots.append(pivot)
    out = []
    for vec in basis:
        denom = 1
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        out.append(primitive([int(x * denom) for x in vec]))
    return out


def intersect_spans(us: list[Vector], vs: list[Vector]) -> list[Vector]:
    """Primitive basis of span(us) ∩ span(vs) over Q."""
    if not us or not vs:
        return []
    dim = len(us[0])
    cols = [list(u) for u in us] + [list(v) for v in vs]
    rows = [[Fraction(cols[j][i]) for j in range(len(cols))] for i in range(dim)]
    ker = _rational_kernel(rows)
    out = []
    for k in ker:
        vec = [Fraction(0)] * dim
        for coef, u in zip(k[: len(us)], us):
            for i in range(dim):
                vec[i] += coef * u[i]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        w = primitive([int(x * denom) for x in vec])
        if any(w):
            out.append(w)
    return _independent(out)


def kernel_basis(a: Matrix) -> list[Vector]:
    """Primitive integer basis of the rational kernel of a."""
    rows = [[Fraction(x) for x in row] for row in a]
    ker = _rational_kernel(rows)
    out = []
    for k in ker:
        denom = 1
        for x in k:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        out.append(primitive([int(x * denom) for x in k]))
    return out


def _rational_kernel(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    if not rows:
        return []
    m = len(rows[0])
    work = [row[:] for row in rows]
    pivots: dict[int, int] = {}
    r = 0
    for col in range(m):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        pv = work[r][col]
        work[r] = [x / pv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots[col] = r
        r += 1
        if r == len(work):
            break
    free_cols = [c for c in range(m) if c not in pivots]
    ker = []
    for fc in free_cols:
        vec = [Fraction(0)] * m
        vec[fc] = Fraction(1)
        for pc, pr in pivots.items():
            vec[pc] = -work[pr][fc]
        ker.append(vec)
    return ker


def _independent(vecs: list[Vector]) -> list[Vector]:
    out: list[Vector] = []
    for v in vecs:
        if rank(tuple(out) + (v,)) > len(out):
            out.append(v)
    return out
