"""Jit-compiled hot loops: triple checks over product tables and dense
Gaussian elimination mod ell.

All tables and matrices are int64 ndarrays with entries already reduced
into [0, ell). The kernels are compiled once per process and cached on
disk, so repeated runs and worker processes skip compilation.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def triple_index_ok(idx):
    """Check idx[idx[g,h],w] == idx[g,idx[h,w]] for all basis triples."""
    n = idx.shape[0]
    for g in range(n):
        for h in range(n):
            gh = idx[g, h]
            for w in range(n):
                if idx[gh, w] != idx[g, idx[h, w]]:
                    return False
    return True


@njit(cache=True)
def triple_scalar_ok(idx, val, ell):
    """Check val[g,h]*val[gh,w] == val[h,w]*val[g,hw] mod ell for all triples."""
    n = idx.shape[0]
    for g in range(n):
        for h in range(n):
            gh = idx[g, h]
            s = val[g, h]
            for w in range(n):
                hw = idx[h, w]
                if (s * val[gh, w]) % ell != (val[h, w] * val[g, hw]) % ell:
                    return False
    return True


@njit(cache=True)
def table_mul(idx, scal, x, y, ell):
    """Product of coordinate vectors x, y in the monomial algebra."""
    n = idx.shape[0]
    out = np.zeros(n, dtype=np.int64)
    for h in range(n):
        xh = x[h]
        if xh == 0:
            continue
        for w in range(n):
            yw = y[w]
            if yw == 0:
                continue
            out[idx[h, w]] += xh * yw % ell * scal[h, w]
    for i in range(n):
        out[i] %= ell
    return out


@njit(cache=True)
def left_products(idx, scal, x, ell):
    """Matrix whose row g is x * u_g."""
    n = idx.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for h in range(n):
        xh = x[h]
        if xh == 0:
            continue
        for g in range(n):
            out[g, idx[h, g]] += xh * scal[h, g] % ell
    for g in range(n):
        for i in range(n):
            out[g, i] %= ell
    return out


@njit(cache=True)
def rref_mod(a, ell, inv):
    """In-place reduced row echelon form mod ell.

    `inv` is the inverse table for GF(ell). Returns (rank, pivot columns).
    """
    rows, cols = a.shape
    piv = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        pr = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(cols):
                t = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = t
        s = inv[a[r, c]]
        if s != 1:
            for j in range(c, cols):
                a[r, j] = a[r, j] * s % ell
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(c, cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % ell
        piv[r] = c
        r += 1
        if r == rows:
            break
    return r, piv[:r]


@njit(cache=True)
def rank_mod(a, ell, inv):
    """Rank via in-place forward elimination mod ell (rows above untouched)."""
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        pr = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                t = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = t
        s = inv[a[r, c]]
        if s != 1:
            for j in range(c, cols):
                a[r, j] = a[r, j] * s % ell
        for i in range(r + 1, rows):
            if a[i, c] != 0:
                f = a[i, c]
                for j in range(c, cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % ell
        r += 1
        if r == rows:
            break
    return r
