"""Integer linear algebra over Z/nZ.

Gaussian elimination does not work over a residue ring with zero
divisors, so linear systems are handled by diagonalizing the constraint
matrix over the integers and reading solutions off the invariant
factors.  Matrices here are small (at most a few hundred rows), so exact
Python integers are used throughout.
"""

from __future__ import annotations

from math import gcd


def diagonalize(rows: list[list[int]]) -> tuple[list[int], list[list[int]]]:
    """Diagonalize an integer matrix with unimodular row/column operations.

    Returns ``(diag, V)`` such that ``U @ M @ V`` is diagonal with entries
    ``diag`` for some unimodular ``U`` (not tracked).  ``V`` records the
    column operations and maps new coordinates back to old ones.
    """
    a = [[int(x) for x in row] for row in rows]
    m = len(a)
    r = len(a[0]) if m else 0
    v = [[int(i == j) for j in range(r)] for i in range(r)]
    k = 0
    while k < min(m, r):
        pivot = None
        best = None
        for i in range(k, m):
            for j in range(k, r):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != k:
            a[pi], a[k] = a[k], a[pi]
        if pj != k:
            for row in a:
                row[pj], row[k] = row[k], row[pj]
            for row in v:
                row[pj], row[k] = row[k], row[pj]
        for i in range(k + 1, m):
            q = a[i][k] // a[k][k]
            if q:
                for j in range(k, r):
                    a[i][j] -= q * a[k][j]
        for j in range(k + 1, r):
            q = a[k][j] // a[k][k]
            if q:
                for i in range(m):
                    a[i][j] -= q * a[i][k]
                for i in range(r):
                    v[i][j] -= q * v[i][k]
        if any(a[i][k] for i in range(k + 1, m)) or any(a[k][j] for j in range(k + 1, r)):
            continue  # division left remainders; re-run elimination at this pivot
        k += 1
    diag = [a[i][i] for i in range(min(m, r))]
    return diag, v


def kernel_mod(rows: list[list[int]], width: int, n: int) -> tuple[list[tuple[int, ...]], int]:
    """Solve ``M x = 0 (mod n)`` for x in (Z/n)^width.

    Returns additive generators of the solution subgroup together with its
    exact size.  An empty constraint list means everything is a solution.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    rows = [row for row in rows if any(x % n for x in row)]
    if not rows:
        gens = [tuple(int(i == j) for i in range(width)) for j in range(width)]
        return gens, n ** width
    diag, v = diagonalize(rows)
    gens = []
    size = 1
    for j in range(width):
        d = diag[j] if j < len(diag) else 0
        g = gcd(d, n)
        size *= g
        if g > 1:
            t = n // g
            col = tuple((t * v[i][j]) % n for i in range(width))
            if any(col):
                gens.append(col)
    return gens, size


def invertible_mod(square: list[list[int]], n: int) -> bool:
    """Whether an integer matrix is invertible as a map on (Z/n)^r."""
    r = len(square)
    if any(len(row) != r for row in square):
        raise ValueError("matrix must be square")
    diag, _ = diagonalize(square)
    if len(diag) < r:
        return False
    return all(gcd(d, n) == 1 for d in diag)


def inverse_mod(a: int, n: int) -> int | None:
    """Multiplicative inverse of a modulo n, or None when gcd(a, n) > 1."""
    a %= n
    g, x = _egcd(a, n)
    if g != 1:
        return None
    return x % n


def _egcd(a: int, b: int) -> tuple[int, int]:
    """Return (g, x) with g = gcd(a, b) and a*x = g (mod b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
    return old_r, old_x
