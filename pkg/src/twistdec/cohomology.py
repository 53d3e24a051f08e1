"""Group presentation checks, second-cohomology classes, and 2-cocycles.

The group is G = <a, b | a^p = 1, b^m = 1, b a b^-1 = a^r> with p an odd
prime, m | p-1, m >= 2, and r of multiplicative order exactly m mod p.
Elements are encoded as pairs (i, j) for a^i b^j and flattened to the
basis index i*m + j. Multiplication follows

    (i, j) * (k, l) = (i + k*r^j mod p, j + l mod m).

Every cohomology class of G with values in GF(ell)^x is the inflation of a
class on the C_m quotient, represented by a unit lambda; the inflated
cocycle only sees the b-exponents:

    alpha((i, j), (k, l)) = lambda   if j + l >= m, else 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import arith
from ._kernels import triple_scalar_ok
from .errors import ParameterError


@dataclass(frozen=True)
class GroupSpec:
    """Validated presentation data (p, m, r); build via validate_spec."""

    p: int
    m: int
    r: int

    @property
    def order(self) -> int:
        return self.p * self.m


def validate_spec(p: int, m: int, r: int) -> GroupSpec:
    """Check the presentation invariants and return a GroupSpec.

    Rejections name the violated condition: p must be an odd prime, m a
    divisor of p-1 with m >= 2, and r a unit of order exactly m mod p.
    """
    if not arith.is_prime(p) or p == 2:
        raise ParameterError(f"p = {p} is not an odd prime")
    if m < 2:
        raise ParameterError(f"m = {m} must be at least 2 (the abelian case is out of scope)")
    if (p - 1) % m != 0:
        raise ParameterError(f"m = {m} does not divide p - 1 = {p - 1}")
    r_red = r % p
    if r_red == 0:
        raise ParameterError(f"r = {r} is not a unit modulo {p}")
    order = arith.mul_order(r_red, p)
    if order != m:
        raise ParameterError(f"r = {r} has order {order} modulo {p}, expected {m}")
    return GroupSpec(p, m, r_red)


def validate_coefficient_field(spec: GroupSpec, ell: int) -> None:
    """Require ell prime with gcd(ell, p*m) = 1 so the algebra is semisimple."""
    if not arith.is_prime(ell):
        raise ParameterError(f"ell = {ell} is not prime")
    if ell == spec.p:
        raise ParameterError(f"ell = p = {ell} is excluded")
    if spec.m % ell == 0:
        raise ParameterError(
            f"ell = {ell} divides m = {spec.m}; the decomposition needs gcd(ell, p*m) = 1"
        )


def least_primitive_root(ell: int) -> int:
    """Smallest generator of GF(ell)^x (1 for ell = 2)."""
    if not arith.is_prime(ell):
        raise ParameterError(f"ell = {ell} is not prime")
    if ell == 2:
        return 1
    for g in range(2, ell):
        if arith.mul_order(g, ell) == ell - 1:
            return g
    raise ParameterError(f"no primitive root found modulo {ell}")  # pragma: no cover


def h2_structure(ell: int, m: int) -> tuple[int, list[int]]:
    """Order and canonical coset representatives of GF(ell)^x / (GF(ell)^x)^m.

    The quotient is cyclic of order gcd(m, ell - 1); the representatives are
    the first powers of the least primitive root, one per coset.
    """
    if m < 2:
        raise ParameterError(f"m = {m} must be at least 2")
    g = least_primitive_root(ell)
    order = math.gcd(m, ell - 1)
    return order, [pow(g, i, ell) for i in range(order)]


@dataclass(frozen=True)
class CocycleClass:
    """A unit lambda together with its class in GF(ell)^x / (GF(ell)^x)^m."""

    ell: int
    lam: int
    class_index: int
    num_classes: int

    @property
    def canonical_lambda(self) -> int:
        """The fixed coset representative g**class_index."""
        return pow(least_primitive_root(self.ell), self.class_index, self.ell)

    @property
    def is_trivial(self) -> bool:
        return self.class_index == 0


def classify_lambda(ell: int, m: int, lam: int) -> CocycleClass:
    """Compute the class index of lambda: its discrete log to the least
    primitive root, reduced mod gcd(m, ell - 1). Index 0 means lambda is an
    m-th power and the twist is trivial."""
    if m < 2:
        raise ParameterError(f"m = {m} must be at least 2")
    if not arith.is_prime(ell):
        raise ParameterError(f"ell = {ell} is not prime")
    lam_red = lam % ell
    if lam_red == 0:
        raise ParameterError("lambda must be a nonzero field element")
    g = least_primitive_root(ell)
    e = arith.discrete_log_in_subgroup(g, lam_red, ell, ell - 1)
    if e is None:  # pragma: no cover - g generates the full unit group
        raise ParameterError(f"{lam_red} has no discrete log base {g} modulo {ell}")
    return CocycleClass(ell, lam_red, e % math.gcd(m, ell - 1), math.gcd(m, ell - 1))


def group_table(spec: GroupSpec) -> np.ndarray:
    """The (pm x pm) multiplication table of G on flattened indices."""
    p, m, r = spec.p, spec.m, spec.r
    n = p * m
    i, j = np.divmod(np.arange(n), m)
    rj = np.array([pow(r, e, p) for e in range(m)], dtype=np.int64)
    gi, gj = i[:, None], j[:, None]
    hk, hl = i[None, :], j[None, :]
    return ((gi + hk * rj[gj]) % p) * m + (gj + hl) % m


class Cocycle:
    """A normalized 2-cocycle on G x G as a dense table of field units.

    `values[g, h]` is alpha(g, h) on flattened indices. Instances produced
    by build_cocycle are inflations from the C_m quotient, but the table
    representation admits arbitrary perturbations for testing.
    """

    def __init__(self, spec: GroupSpec, ell: int, lam: int, values: np.ndarray):
        self.spec = spec
        self.ell = ell
        self.lam = lam
        self.values = values

    def __call__(self, g: tuple[int, int], h: tuple[int, int]) -> int:
        m = self.spec.m
        gi = (g[0] % self.spec.p) * m + g[1] % m
        hi = (h[0] % self.spec.p) * m + h[1] % m
        return int(self.values[gi, hi])

    def copy(self) -> Cocycle:
        return Cocycle(self.spec, self.ell, self.lam, self.values.copy())


def build_cocycle(spec: GroupSpec, cls: CocycleClass) -> Cocycle:
    """The inflated cocycle alpha(a^i b^j, a^k b^l) = lam^floor((j+l)/m)."""
    validate_coefficient_field(spec, cls.ell)
    n = spec.order
    _, j = np.divmod(np.arange(n), spec.m)
    wraps = (j[:, None] + j[None, :]) >= spec.m
    values = np.where(wraps, cls.lam % cls.ell, 1).astype(np.int64)
    return Cocycle(spec, cls.ell, cls.lam % cls.ell, values)


def is_cocycle(alpha: Cocycle, spec: GroupSpec) -> bool:
    """Exhaustively verify normalization and the cocycle identity.

    Checks alpha(x,1) = alpha(1,x) = 1 and, over all (pm)^3 triples,
    alpha(x,y) alpha(xy,z) = alpha(y,z) alpha(x,yz) in GF(ell)^x.
    """
    values = alpha.values
    if values.shape != (spec.order, spec.order):
        return False
    if np.any(values % alpha.ell == 0):
        return False
    if np.any(values[0, :] % alpha.ell != 1) or np.any(values[:, 0] % alpha.ell != 1):
        return False
    idx = group_table(spec)
    return bool(triple_scalar_ok(idx, values % alpha.ell, alpha.ell))
