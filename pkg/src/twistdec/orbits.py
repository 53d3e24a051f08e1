"""Frobenius orbits of nontrivial character exponents and their C_m action.

Nontrivial characters of C_p are identified with exponents x in [1, p-1].
The Frobenius automorphism acts by x -> ell*x mod p, cutting the exponents
into (p-1)/f orbits of size f = ord_p(ell); conjugation by b acts by
x -> r*x mod p and permutes those orbits. Each C_m-orbit of Frobenius
orbits determines one simple block through the parameters computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import arith
from .cohomology import GroupSpec
from .errors import ConsistencyError, ParameterError

FrobeniusOrbit = tuple[int, ...]


@dataclass(frozen=True)
class CmOrbitData:
    """Block parameters of one C_m-orbit of Frobenius orbits.

    t: number of Frobenius orbits in the C_m-orbit
    h: stabilizer size m/t
    k: exponent with r^t = ell^k mod p (the stabilizer generator acts on
       the degree-f extension as the k-th Frobenius power)
    s: order of that automorphism, f / gcd(f, k)
    d: degree of its fixed field, f/s
    r_mat: sqrt(h*s), the matrix-size factor
    """

    member_orbits: tuple[FrobeniusOrbit, ...]
    t: int
    h: int
    k: int
    s: int
    d: int
    r_mat: int

    @property
    def f(self) -> int:
        return len(self.member_orbits[0])


def frobenius_orbits(p: int, ell: int) -> list[FrobeniusOrbit]:
    """Partition {1, ..., p-1} into orbits of x -> ell*x mod p.

    Orbits are sorted tuples, listed in increasing order of their least
    exponent, so the output is canonical.
    """
    if not arith.is_prime(p):
        raise ParameterError(f"p = {p} is not prime")
    if not arith.is_prime(ell):
        raise ParameterError(f"ell = {ell} is not prime")
    if ell == p:
        raise ParameterError("ell = p has no Frobenius orbit structure")
    seen = [False] * p
    out = []
    for x in range(1, p):
        if seen[x]:
            continue
        orbit = []
        y = x
        while not seen[y]:
            seen[y] = True
            orbit.append(y)
            y = y * ell % p
        out.append(tuple(sorted(orbit)))
    return out


def cm_orbits(frob: list[FrobeniusOrbit], spec: GroupSpec) -> list[list[FrobeniusOrbit]]:
    """Group Frobenius orbits into orbits of the induced x -> r*x action.

    Within a group the member orbits are sorted by least exponent, and the
    groups themselves are sorted by the least exponent they contain.
    """
    by_member: dict[int, int] = {}
    for oi, orbit in enumerate(frob):
        for x in orbit:
            if x in by_member:
                raise ParameterError("orbit list is not a partition")
            by_member[x] = oi
    if set(by_member) != set(range(1, spec.p)):
        raise ParameterError(f"orbit list does not cover 1..{spec.p - 1}")
    visited = [False] * len(frob)
    groups = []
    for oi, orbit in enumerate(frob):
        if visited[oi]:
            continue
        cycle = []
        cur = oi
        while not visited[cur]:
            visited[cur] = True
            cycle.append(frob[cur])
            cur = by_member[frob[cur][0] * spec.r % spec.p]
        if cur != oi:
            raise ConsistencyError("r-action walk left its own cycle")
        cycle.sort(key=lambda o: o[0])
        groups.append(cycle)
    groups.sort(key=lambda grp: grp[0][0])
    return groups


def stabilizer_params(cm_orbit: list[FrobeniusOrbit], spec: GroupSpec, ell: int) -> CmOrbitData:
    """Compute (t, h, k, s, d, r_mat) for one C_m-orbit of Frobenius orbits.

    The consistency conditions (the discrete log exists, s divides
    gcd(h, f), h*s is a perfect square) are guaranteed for genuine orbits;
    a failure means the input was not one, or there is a bug.
    """
    if not cm_orbit:
        raise ParameterError("empty orbit group")
    f = len(cm_orbit[0])
    t = len(cm_orbit)
    if spec.m % t != 0:
        raise ConsistencyError(f"orbit count t = {t} does not divide m = {spec.m}")
    h = spec.m // t
    k = arith.discrete_log_in_subgroup(ell, pow(spec.r, t, spec.p), spec.p, f)
    if k is None:
        raise ConsistencyError(
            f"r^t = {pow(spec.r, t, spec.p)} is not a power of ell = {ell} mod {spec.p}; "
            "the given orbits are not stabilized as claimed"
        )
    s = f // math.gcd(f, k)
    if math.gcd(h, f) % s != 0:
        raise ConsistencyError(f"s = {s} does not divide gcd(h, f) = gcd({h}, {f})")
    d = f // s
    r_mat = arith.exact_integer_sqrt(h * s)
    if r_mat is None:
        raise ConsistencyError(f"h*s = {h * s} is not a perfect square")
    return CmOrbitData(tuple(cm_orbit), t, h, k, s, d, r_mat)


def classify_case(data: CmOrbitData, m: int) -> str:
    """Name the special case of the block formula (for reporting only)."""
    if data.h == 1:
        return "transitive"
    if data.t == 1:
        return "fixed"
    if data.s == 1:
        return "trivial-galois"
    return "general"


def orbit_data(spec: GroupSpec, ell: int) -> tuple[int, list[CmOrbitData]]:
    """All per-orbit parameters for (spec, ell): returns (f, orbit list)."""
    frob = frobenius_orbits(spec.p, ell)
    f = len(frob[0])
    groups = cm_orbits(frob, spec)
    data = [stabilizer_params(grp, spec, ell) for grp in groups]
    if sum(o.t for o in data) != (spec.p - 1) // f:
        raise ConsistencyError("orbit sizes do not sum to the Frobenius orbit count")
    return f, data
