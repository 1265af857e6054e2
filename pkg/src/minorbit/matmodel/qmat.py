"""Small dense matrices over Gaussian rationals."""

from __future__ import annotations

from fractions import Fraction

from ..exactla import QI, QI_ZERO

Mat = list[list[QI]]


def zeros(n: int, m: int | None = None) -> Mat:
    m = n if m is None else m
    return [[QI_ZERO for _ in range(m)] for _ in range(n)]


def eye(n: int) -> Mat:
    out = zeros(n)
    for i in range(n):
        out[i][i] = QI(1)
    return out


def unit(n: int, i: int, j: int, value=1) -> Mat:
    out = zeros(n)
    out[i][j] = QI.of(value)
    return out


def add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: Mat, s) -> Mat:
    s = QI.of(s)
    return [[x * s for x in row] for row in a]


def matmul(a: Mat, b: Mat) -> Mat:
    n, k, m = len(a), len(b), len(b[0])
    bt = [[b[r][c] for r in range(k)] for c in range(m)]
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        row = out[i]
        for j in range(m):
            bj = bt[j]
            acc = QI_ZERO
            for t in range(k):
                x = ai[t]
                if x:
                    acc = acc + x * bj[t]
            row[j] = acc
    return out


def commutator(a: Mat, b: Mat) -> Mat:
    return sub(matmul(a, b), matmul(b, a))


def trace(a: Mat) -> QI:
    acc = QI_ZERO
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def trace_product(a: Mat, b: Mat) -> QI:
    """trace(a @ b) without forming the product."""
    acc = QI_ZERO
    n = len(a)
    for i in range(n):
        for k in range(n):
            x = a[i][k]
            if x:
                acc = acc + x * b[k][i]
    return acc


def transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)]


def conj(a: Mat) -> Mat:
    return [[x.conjugate() for x in row] for row in a]


def conj_transpose(a: Mat) -> Mat:
    return conj(transpose(a))


def neg(a: Mat) -> Mat:
    return [[-x for x in row] for row in a]


def is_zero(a: Mat) -> bool:
    return all(not x for row in a for x in row)


def equal(a: Mat, b: Mat) -> bool:
    return is_zero(sub(a, b))


def lincomb(coeffs, mats) -> Mat:
    out = zeros(len(mats[0]), len(mats[0][0]))
    for c, m in zip(coeffs, mats):
        c = QI.of(c)
        if not c:
            continue
        for i, row in enumerate(m):
            orow = out[i]
            for j, x in enumerate(row):
                if x:
                    orow[j] = orow[j] + c * x
    return out


def to_complex(a: Mat) -> list[list[complex]]:
    return [[complex(x) for x in row] for row in a]


def frac(p, q=1) -> Fraction:
    return Fraction(p, q)
