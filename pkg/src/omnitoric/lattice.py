"""Exact integer linear algebra built around Smith and Hermite forms.

Matrices are lists of rows of Python ints. Nothing here depends on the rest of
the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def content(v) -> int:
    """gcd of the entries; 0 for the zero vector."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def det(a) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a) -> int:
    return len(hermite_rows(a))


def hermite_rows(a) -> list[list[int]]:
    """Row-style Hermite normal form of the row lattice of ``a``.

    Zero rows are dropped. Pivots are positive and entries above a pivot lie
    in ``[0, pivot)``, so two matrices span the same lattice iff their
    results are equal.
    """
    rows = [list(r) for r in a if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    out: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not live:
            col += 1
            continue
        # Euclid on the column until a single row is left with a nonzero entry
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        rows = rest
        col += 1
    # reduce entries above pivots
    for i in range(len(out)):
        pc = next(j for j, x in enumerate(out[i]) if x)
        p = out[i][pc]
        for k in range(i):
            q = out[k][pc] // p
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], out[i])]
    return out


def same_lattice(a, b) -> bool:
    return hermite_rows(a) == hermite_rows(b)


def smith_decomp(a):
    """Return ``(d, u, v)`` with ``u @ a @ v == d`` and ``u``, ``v`` unimodular.

    ``d`` is diagonal with nonnegative entries, each dividing the next. The
    pivot is always the smallest nonzero entry in absolute value, first in
    row-major order, so the output is deterministic.
    """
    nr = len(a)
    nc = len(a[0]) if nr else 0
    d = [list(r) for r in a]
    u = identity(nr)
    v = identity(nc)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(nr, nc):
        entries = [(abs(d[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if d[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        swap_rows(t, pi)
        swap_cols(t, pj)
        done = False
        while not done:
            done = True
            for i in range(t + 1, nr):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // d[t][t]))
                    if d[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, nc):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // d[t][t]))
                    if d[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # divisibility: fold a bad entry of the remaining block into row t
                bad = next(
                    (i for i in range(t + 1, nr) for j in range(t + 1, nc) if d[i][j] % d[t][t]),
                    None,
                )
                if bad is not None:
                    add_row(t, bad, 1)
                    done = False
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def invariant_factors(a) -> list[int]:
    """Nonzero diagonal of the Smith form."""
    if not a or not a[0]:
        return []
    d, _, _ = smith_decomp(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i]]


def is_saturated(rows) -> bool:
    """True iff the row lattice is primitive (all invariant factors are 1)."""
    return all(f == 1 for f in invariant_factors(rows))


def integer_kernel(a, ncols: int | None = None) -> list[list[int]]:
    """Basis of ``{x in Z^m : a x = 0}`` as rows in Hermite normal form."""
    if ncols is None:
        ncols = len(a[0])
    if not a:
        return identity(ncols)
    d, _, v = smith_decomp(a)
    r = sum(1 for i in range(min(len(d), ncols)) if d[i][i])
    basis = [[v[i][j] for i in range(ncols)] for j in range(r, ncols)]
    return hermite_rows(basis)


def inverse_unimodular(a) -> list[list[int]]:
    """Integer inverse of a square matrix with determinant +-1."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    out = [row[n:] for row in m]
    if any(x.denominator != 1 for row in out for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]
