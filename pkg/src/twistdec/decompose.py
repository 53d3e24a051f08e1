"""Assembly of the full Wedderburn decomposition and the parameter tables.

The algebra splits as a commutative part (the twisted algebra of the C_m
quotient, isomorphic to GF(ell)[X]/(X^m - lambda)) plus one matrix block
M_{t*r_mat}(GF(ell^d)) per C_m-orbit of Frobenius orbits. Only the
commutative part depends on the cohomology class.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import arith, gfpoly
from .cohomology import CocycleClass, GroupSpec, validate_coefficient_field
from .errors import ConsistencyError, ParameterError
from .orbits import CmOrbitData, orbit_data


@dataclass(frozen=True)
class SimpleBlock:
    """An n x n matrix algebra over the degree-d extension of GF(ell)."""

    n: int
    d: int

    @property
    def dim(self) -> int:
        return self.n * self.n * self.d


@dataclass(frozen=True)
class Decomposition:
    """Complete block data for one (p, m, ell, r, lambda) input.

    `blocks` is parallel to `orbits`; `commutative` holds the field degrees
    of the commutative component in increasing order.
    """

    p: int
    m: int
    ell: int
    r: int
    lam: int
    class_index: int
    f: int
    orbits: tuple[CmOrbitData, ...]
    commutative: tuple[int, ...]
    blocks: tuple[SimpleBlock, ...]

    @property
    def dimension(self) -> int:
        return self.p * self.m

    def sorted_blocks(self) -> list[SimpleBlock]:
        """Matrix blocks in the canonical display order (by d, then n)."""
        return sorted(self.blocks, key=lambda b: (b.d, b.n))

    def block_multiset(self) -> list[tuple[int, int]]:
        """All blocks as sorted (n, d) pairs, commutative ones as n = 1."""
        pairs = [(1, d) for d in self.commutative]
        pairs.extend((b.n, b.d) for b in self.blocks)
        return sorted(pairs)


def commutative_component(
    ell: int, m: int, cls: CocycleClass, rng: random.Random | None = None
) -> list[int]:
    """Field degrees of the commutative component, in increasing order.

    These are the degrees of the irreducible factors of X^m - lambda over
    GF(ell), computed for the canonical representative of the class so that
    equivalent lambdas give identical output.
    """
    if m < 2:
        raise ParameterError(f"m = {m} must be at least 2")
    if m % ell == 0:
        raise ParameterError(f"gcd(ell, m) must be 1, got ell = {ell}, m = {m}")
    poly = gfpoly.Poly.binomial(ell, m, cls.canonical_lambda)
    factors = gfpoly.factor_squarefree(poly, rng)
    return sorted(q.degree for q in factors)


def wedderburn(
    spec: GroupSpec, cls: CocycleClass, rng: random.Random | None = None
) -> Decomposition:
    """The complete Wedderburn decomposition of the twisted group algebra."""
    validate_coefficient_field(spec, cls.ell)
    f, orbit_list = orbit_data(spec, cls.ell)
    blocks = tuple(SimpleBlock(o.t * o.r_mat, o.d) for o in orbit_list)
    commutative = tuple(commutative_component(cls.ell, spec.m, cls, rng))
    dec = Decomposition(
        p=spec.p,
        m=spec.m,
        ell=cls.ell,
        r=spec.r,
        lam=cls.lam,
        class_index=cls.class_index,
        f=f,
        orbits=tuple(orbit_list),
        commutative=commutative,
        blocks=blocks,
    )
    if not dimension_check(dec):
        raise ConsistencyError(f"decomposition of ({spec.p},{spec.m},{cls.ell}) has wrong dimension")
    return dec


def dimension_check(dec: Decomposition) -> bool:
    """True iff all dimension identities hold.

    The commutative degrees sum to m, each matrix block has dimension
    t*m*f, and everything together sums to p*m.
    """
    if sum(dec.commutative) != dec.m:
        return False
    for orbit, block in zip(dec.orbits, dec.blocks):
        if block.dim != orbit.t * dec.m * dec.f:
            return False
    total = sum(dec.commutative) + sum(b.dim for b in dec.blocks)
    return total == dec.p * dec.m


def irreducible_projective_degrees(dec: Decomposition) -> list[tuple[int, int]]:
    """(dimension over GF(ell), field degree) of the irreducible module of
    each simple block: M_n(GF(ell^d)) has a unique irreducible of dimension
    n*d."""
    out = [(d, d) for d in dec.commutative]
    out.extend((b.n * b.d, b.d) for b in dec.blocks)
    return sorted(out)


@dataclass(frozen=True)
class TableRow:
    """One observed parameter pattern with a witness (p, r, f)."""

    condition: str
    t: int
    h: int
    s: int
    d: str
    r_mat: int
    component: str
    witness_p: int
    witness_r: int
    witness_f: int
    count: int


# Parameter patterns (t, h, s) that can arise for small m, with the
# matching condition text. h*s must be a perfect square and s must divide
# gcd(h, f), which eliminates everything else.
REFERENCE_PATTERNS: dict[int, dict[tuple[int, int, int], str]] = {
    2: {
        (2, 1, 1): "f odd (orbits swapped in pairs)",
        (1, 2, 2): "f even (orbits fixed, involution acts)",
    },
    3: {
        (1, 3, 3): "3 | f (orbits fixed, full stabilizer action)",
        (3, 1, 1): "orbits permuted transitively",
    },
    4: {
        (1, 4, 4): "4 | f (orbits fixed, full stabilizer action)",
        (2, 2, 2): "f even (orbits paired, involution acts)",
        (4, 1, 1): "orbits permuted transitively",
    },
}


def _component_text(t: int, h: int, s: int) -> str:
    size = t * math.isqrt(h * s)
    field = "F_ell^f" if s == 1 else f"F_ell^(f/{s})"
    return f"M{size}({field})"


def table_report(m: int, ell: int, max_p: int) -> list[TableRow]:
    """Sweep all valid (p, r) with p <= max_p and tabulate orbit patterns.

    One row is emitted per distinct (t, h, s) pattern, with the first
    witness found and the number of occurrences. For m in {2, 3, 4} every
    observed pattern must be a known one; anything else raises.
    """
    if m < 2:
        raise ParameterError(f"m = {m} must be at least 2")
    if not arith.is_prime(ell):
        raise ParameterError(f"ell = {ell} is not prime")
    if m % ell == 0:
        raise ParameterError(f"ell = {ell} divides m = {m}; no semisimple table to sweep")
    observed: dict[tuple[int, int, int], list] = {}
    for p in range(3, max_p + 1):
        if not arith.is_prime(p) or (p - 1) % m != 0 or p == ell:
            continue
        for r in range(2, p):
            if arith.mul_order(r, p) != m:
                continue
            spec = GroupSpec(p, m, r)
            f, orbit_list = orbit_data(spec, ell)
            for o in orbit_list:
                key = (o.t, o.h, o.s)
                if key in observed:
                    observed[key][3] += 1
                else:
                    observed[key] = [p, r, f, 1]
    rows = []
    known = REFERENCE_PATTERNS.get(m)
    for key in sorted(observed):
        t, h, s = key
        wp, wr, wf, count = observed[key]
        if known is not None:
            if key not in known:
                raise ConsistencyError(f"pattern (t,h,s) = {key} is not in the m = {m} table")
            condition = known[key]
        else:
            condition = f"t = {t}, s = {s}"
        rows.append(
            TableRow(
                condition=condition,
                t=t,
                h=h,
                s=s,
                d="f" if s == 1 else f"f/{s}",
                r_mat=math.isqrt(h * s),
                component=_component_text(t, h, s),
                witness_p=wp,
                witness_r=wr,
                witness_f=wf,
                count=count,
            )
        )
    return rows
