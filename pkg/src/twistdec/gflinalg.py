"""Dense linear algebra over GF(ell) on int64 ndarrays."""

from __future__ import annotations

import numpy as np

from ._kernels import rank_mod, rref_mod
from .errors import ConsistencyError


def inverse_table(ell: int) -> np.ndarray:
    """inv[x] = x**-1 in GF(ell), with inv[0] = 0 as a placeholder."""
    return np.array([0] + [pow(x, ell - 2, ell) for x in range(1, ell)], dtype=np.int64)


def rref(matrix: np.ndarray, ell: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form of a copy; returns (reduced rows, pivot cols)."""
    a = np.array(matrix, dtype=np.int64) % ell
    r, piv = rref_mod(a, ell, inverse_table(ell))
    return a[:r], piv


def rank(matrix: np.ndarray, ell: int) -> int:
    a = np.array(matrix, dtype=np.int64) % ell
    return int(rank_mod(a, ell, inverse_table(ell)))


def nullspace(matrix: np.ndarray, ell: int) -> np.ndarray:
    """Canonical basis (rows, in reduced echelon form) of the right nullspace."""
    rows, piv = rref(matrix, ell)
    cols = matrix.shape[1]
    pivset = set(int(c) for c in piv)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(piv):
            basis[bi, pc] = -rows[ri, fc] % ell
    if len(free) == 0:
        return basis
    reduced, _ = rref(basis, ell)
    if reduced.shape[0] != len(free):
        raise ConsistencyError("nullspace basis lost rank during reduction")
    return reduced


def coords_in_rref_basis(vector: np.ndarray, basis: np.ndarray, piv: np.ndarray, ell: int) -> np.ndarray:
    """Coordinates of a vector in the span of an rref basis.

    For a basis in reduced echelon form the coordinates are just the entries
    at the pivot columns; membership is verified and failure raises.
    """
    coords = vector[piv] % ell
    if not np.array_equal(coords @ basis % ell, vector % ell):
        raise ConsistencyError("vector does not lie in the claimed span")
    return coords
