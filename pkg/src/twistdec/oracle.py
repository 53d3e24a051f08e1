"""Brute-force verifier built from explicit structure constants.

The twisted group algebra is monomial: the product of two basis elements
is a scalar times a basis element, so the whole algebra fits in two
(pm x pm) tables. From those tables alone this module finds the simple
blocks by linear algebra over GF(ell):

  1. the center, as the nullspace of the commutator maps with the two
     generating basis elements;
  2. the primitive central idempotents, by splitting along the Berlekamp
     subalgebra (the fixed points of z -> z^ell inside the center);
  3. each block's matrix size n and field degree d, from the ranks of
     e*A and e*Z(A).

Nothing here touches the orbit-parameter theory, so agreement with the
closed-form engine is a genuine two-sided check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import _kernels, gflinalg, gfpoly
from ._kernels import triple_index_ok, triple_scalar_ok
from .arith import exact_integer_sqrt
from .cohomology import CocycleClass, GroupSpec, group_table, validate_coefficient_field
from .errors import ConsistencyError, ParameterError


@dataclass(frozen=True, eq=False)
class ExplicitAlgebra:
    """Monomial product table of the twisted group algebra.

    Basis index i*m + j stands for u(a^i b^j); the product of basis g and
    basis h is scal[g, h] * u(idx[g, h]).
    """

    p: int
    m: int
    ell: int
    r: int
    lam: int
    idx: np.ndarray
    scal: np.ndarray

    @property
    def dim(self) -> int:
        return self.p * self.m

    def unit(self) -> np.ndarray:
        e = np.zeros(self.dim, dtype=np.int64)
        e[0] = 1
        return e

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product of two coordinate vectors."""
        return _kernels.table_mul(self.idx, self.scal, x, y, self.ell)

    def pow(self, x: np.ndarray, e: int) -> np.ndarray:
        """x**e by square-and-multiply (e >= 1)."""
        result = None
        acc = x
        while e:
            if e & 1:
                result = acc if result is None else self.mul(result, acc)
            e >>= 1
            if e:
                acc = self.mul(acc, acc)
        if result is None:
            raise ParameterError("exponent must be at least 1")
        return result

    def left_products(self, x: np.ndarray) -> np.ndarray:
        """Matrix whose row g is x * u_g, for every basis element g."""
        return _kernels.left_products(self.idx, self.scal, x, self.ell)

    def left_mul_matrix(self, g: int) -> np.ndarray:
        """Matrix of z -> u_g * z on coordinates."""
        n = self.dim
        mat = np.zeros((n, n), dtype=np.int64)
        mat[self.idx[g, :], np.arange(n)] = self.scal[g, :]
        return mat

    def right_mul_matrix(self, g: int) -> np.ndarray:
        """Matrix of z -> z * u_g on coordinates."""
        n = self.dim
        mat = np.zeros((n, n), dtype=np.int64)
        mat[self.idx[:, g], np.arange(n)] = self.scal[:, g]
        return mat

    def perturbed(self, g: int, h: int, scalar: int) -> ExplicitAlgebra:
        """Copy with one product scalar replaced (for fault-injection tests)."""
        scal = self.scal.copy()
        scal[g, h] = scalar % self.ell
        return ExplicitAlgebra(self.p, self.m, self.ell, self.r, self.lam, self.idx.copy(), scal)


def build_algebra(spec: GroupSpec, cls: CocycleClass) -> ExplicitAlgebra:
    """Structure constants of the twisted group algebra for the raw lambda.

    idx comes from the semidirect-product law, scal from the inflated
    cocycle: scal[(i,j),(k,l)] = lam when j + l wraps past m, else 1.
    """
    validate_coefficient_field(spec, cls.ell)
    idx = group_table(spec)
    n = spec.order
    _, j = np.divmod(np.arange(n), spec.m)
    wraps = (j[:, None] + j[None, :]) >= spec.m
    scal = np.where(wraps, cls.lam % cls.ell, 1).astype(np.int64)
    return ExplicitAlgebra(spec.p, spec.m, cls.ell, spec.r, cls.lam % cls.ell, idx, scal)


def verify_associativity(algebra: ExplicitAlgebra) -> bool:
    """Check (uv)w == u(vw) over all dim^3 basis triples."""
    if not triple_index_ok(algebra.idx):
        return False
    if np.all(algebra.scal == 1):
        return True
    return bool(triple_scalar_ok(algebra.idx, algebra.scal, algebra.ell))


def center(algebra: ExplicitAlgebra) -> np.ndarray:
    """Basis of the center, rows in reduced echelon form.

    Commuting with the generators u(a) and u(b) suffices: they generate the
    algebra, so the nullspace of the two stacked commutator maps is exactly
    the center.
    """
    gen_a = algebra.m  # index of (1, 0)
    gen_b = 1  # index of (0, 1)
    blocks = []
    for g in (gen_a, gen_b):
        blocks.append(algebra.left_mul_matrix(g) - algebra.right_mul_matrix(g))
    stacked = np.vstack(blocks) % algebra.ell
    return gflinalg.nullspace(stacked, algebra.ell)


def _min_poly(algebra: ExplicitAlgebra, z_basis: np.ndarray, gamma: np.ndarray, e: np.ndarray) -> gfpoly.Poly:
    """Minimal polynomial of gamma in the corner algebra e*Z, with unit e.

    Krylov sequence e, gamma, gamma^2, ... expressed in center coordinates;
    the first linear dependence gives the coefficients.
    """
    ell = algebra.ell
    pivots = np.array([int(np.flatnonzero(row)[0]) for row in z_basis], dtype=np.int64)
    k = z_basis.shape[0]
    powers = [gflinalg.coords_in_rref_basis(e, z_basis, pivots, ell)]
    cur = e
    for _ in range(k + 1):
        cur = algebra.mul(cur, gamma)
        powers.append(gflinalg.coords_in_rref_basis(cur, z_basis, pivots, ell))
        mat = np.array(powers, dtype=np.int64).T  # coords as columns
        ns = gflinalg.nullspace(mat, ell)
        if ns.shape[0] > 0:
            rel = ns[0]
            lead = int(np.flatnonzero(rel)[::-1][0])
            inv = pow(int(rel[lead]), ell - 2, ell)
            coeffs = [int(c) * inv % ell for c in rel[: lead + 1]]
            return gfpoly.Poly.make(ell, coeffs)
    raise ConsistencyError("no minimal polynomial found inside the center")


def central_idempotents(algebra: ExplicitAlgebra, z_basis: np.ndarray) -> list[np.ndarray]:
    """All primitive central idempotents, canonically ordered.

    The Berlekamp subalgebra {z in Z : z^ell = z} has one dimension per
    simple block; splitting the current idempotents along the roots of the
    minimal polynomial of each of its basis elements refines the unit into
    the full primitive system.
    """
    ell = algebra.ell
    k = z_basis.shape[0]
    pivots = np.array([int(np.flatnonzero(row)[0]) for row in z_basis], dtype=np.int64)
    # matrix of the (linear) Frobenius z -> z^ell on center coordinates
    frob_cols = []
    for row in z_basis:
        power = algebra.pow(row, ell)
        frob_cols.append(gflinalg.coords_in_rref_basis(power, z_basis, pivots, ell))
    frob = np.array(frob_cols, dtype=np.int64).T
    fixed = gflinalg.nullspace((frob - np.eye(k, dtype=np.int64)) % ell, ell)
    n_blocks = fixed.shape[0]
    berlekamp = fixed @ z_basis % ell

    idempotents = [algebra.unit()]
    for beta in berlekamp:
        if len(idempotents) == n_blocks:
            break
        refined = []
        for e in idempotents:
            gamma = algebra.mul(e, beta)
            q = _min_poly(algebra, z_basis, gamma, e)
            if q.degree <= 1:
                refined.append(e)
                continue
            factors = gfpoly.factor_squarefree(q, random.Random(0))
            roots = []
            for fac in factors:
                if fac.degree != 1:
                    raise ConsistencyError("Berlekamp element has a nonlinear factor")
                roots.append(-fac.coeffs[0] % ell)
            for c in roots:
                # Lagrange projector: prod over other roots of (gamma - c')/(c - c')
                proj = e
                for c2 in roots:
                    if c2 == c:
                        continue
                    shifted = (gamma - c2 * e) % ell
                    proj = algebra.mul(proj, shifted)
                    proj = proj * pow((c - c2) % ell, ell - 2, ell) % ell
                if not np.any(proj):
                    raise ConsistencyError("spectral projector vanished during splitting")
                refined.append(proj)
        idempotents = refined
    if len(idempotents) != n_blocks:
        raise ConsistencyError(
            f"idempotent splitting stalled at {len(idempotents)} of {n_blocks} blocks"
        )
    idempotents.sort(key=lambda v: tuple(v.tolist()))
    return idempotents


@dataclass(frozen=True, eq=False)
class BlockReport:
    """One simple block cut out by a primitive central idempotent."""

    idempotent: np.ndarray
    block_dim: int
    d: int
    n: int


def block_report(algebra: ExplicitAlgebra, z_basis: np.ndarray, e: np.ndarray) -> BlockReport:
    """Measure one block: block_dim = dim e*A, d = dim e*Z, n = sqrt(dim/d)."""
    ell = algebra.ell
    block_dim = gflinalg.rank(algebra.left_products(e), ell)
    ez = np.array([algebra.mul(e, z) for z in z_basis], dtype=np.int64)
    d = gflinalg.rank(ez, ell)
    if d == 0 or block_dim % d != 0:
        raise ConsistencyError(f"block dimension {block_dim} not a multiple of center part {d}")
    n = exact_integer_sqrt(block_dim // d)
    if n is None:
        raise ConsistencyError(f"block of dimension {block_dim} over degree {d} is not square")
    return BlockReport(e, block_dim, d, n)


def oracle_decomposition(
    spec: GroupSpec, cls: CocycleClass, algebra: ExplicitAlgebra | None = None
) -> list[tuple[int, int]]:
    """Fully independent block multiset [(n, d), ...] of the twisted algebra.

    Builds the structure constants, verifies associativity exhaustively,
    then reads the blocks off the central idempotents. All the defining
    properties of the idempotent system are asserted on the way. A prebuilt
    (possibly perturbed) table may be passed in for fault injection.
    """
    if algebra is None:
        algebra = build_algebra(spec, cls)
    if not verify_associativity(algebra):
        raise ConsistencyError("structure constants fail associativity")
    z_basis = center(algebra)
    idempotents = central_idempotents(algebra, z_basis)
    total = np.zeros(algebra.dim, dtype=np.int64)
    for i, e in enumerate(idempotents):
        if np.any(algebra.mul(e, e) != e):
            raise ConsistencyError("idempotent is not idempotent")
        for e2 in idempotents[i + 1 :]:
            if np.any(algebra.mul(e, e2)):
                raise ConsistencyError("idempotents are not orthogonal")
        total = (total + e) % algebra.ell
    if np.any(total != algebra.unit()):
        raise ConsistencyError("idempotents do not sum to the unit")
    reports = [block_report(algebra, z_basis, e) for e in idempotents]
    if sum(rep.block_dim for rep in reports) != algebra.dim:
        raise ConsistencyError("block dimensions do not sum to the algebra dimension")
    if sum(rep.d for rep in reports) != z_basis.shape[0]:
        raise ConsistencyError("block center parts do not sum to the center dimension")
    return sorted((rep.n, rep.d) for rep in reports)
