"""Univariate polynomial arithmetic over prime fields GF(ell).

Coefficients are stored lowest degree first, as plain ints in [0, ell).
The zero polynomial has an empty coefficient tuple. Factorization only
supports squarefree inputs: distinct-degree splitting via gcds with
X**(ell**d) - X, then randomized equal-degree splitting (Cantor-Zassenhaus
for odd ell, trace maps for ell = 2).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import is_prime
from .errors import ParameterError


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over GF(ell)."""

    ell: int
    coeffs: tuple[int, ...]

    @staticmethod
    def make(ell: int, coeffs) -> Poly:
        """Build a polynomial, reducing coefficients and trimming zeros."""
        if not is_prime(ell):
            raise ParameterError(f"coefficient characteristic {ell} is not prime")
        cs = [c % ell for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(ell, tuple(cs))

    @staticmethod
    def zero(ell: int) -> Poly:
        return Poly.make(ell, ())

    @staticmethod
    def one(ell: int) -> Poly:
        return Poly.make(ell, (1,))

    @staticmethod
    def x(ell: int) -> Poly:
        return Poly.make(ell, (0, 1))

    @staticmethod
    def binomial(ell: int, n: int, c: int) -> Poly:
        """X**n - c over GF(ell)."""
        if n < 1:
            raise ParameterError(f"binomial degree must be positive, got {n}")
        coeffs = [-c % ell] + [0] * (n - 1) + [1]
        return Poly.make(ell, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _check(self, other: Poly) -> None:
        if self.ell != other.ell:
            raise ParameterError(f"mixed characteristics {self.ell} and {other.ell}")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.ell
        return Poly.make(self.ell, out)

    def __neg__(self) -> Poly:
        return Poly.make(self.ell, [-c for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.ell)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % self.ell
        return Poly.make(self.ell, out)

    def scale(self, c: int) -> Poly:
        return Poly.make(self.ell, [c * a for a in self.coeffs])

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(pow(lead, self.ell - 2, self.ell))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._check(other)
        if other.is_zero:
            raise ParameterError("polynomial division by zero")
        ell = self.ell
        inv_lead = pow(other.coeffs[-1], ell - 2, ell)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(ell), self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top == 0:
                continue
            q = top * inv_lead % ell
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] = (rem[k + j] - q * b) % ell
        return Poly.make(ell, quot), Poly.make(ell, rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def derivative(self) -> Poly:
        return Poly.make(self.ell, [i * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.ell
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{'' if c == 1 else c}X")
            else:
                terms.append(f"{'' if c == 1 else c}X^{i}")
        return " + ".join(reversed(terms))


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Product in GF(ell)[X]."""
    return a * b


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ParameterError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def poly_powmod(base: Poly, exponent: int, modulus: Poly) -> Poly:
    """base**exponent reduced modulo modulus, by square-and-multiply."""
    if modulus.degree < 1:
        raise ParameterError("power modulus must be nonconstant")
    if exponent < 0:
        raise ParameterError(f"exponent must be nonnegative, got {exponent}")
    result = Poly.one(base.ell)
    acc = base % modulus
    e = exponent
    while e:
        if e & 1:
            result = result * acc % modulus
        acc = acc * acc % modulus
        e >>= 1
    return result


def is_squarefree(poly: Poly) -> bool:
    """True when gcd(poly, poly') is constant."""
    if poly.degree < 1:
        return True
    d = poly.derivative()
    if d.is_zero:
        return False
    return poly_gcd(poly, d).degree == 0


def factor_squarefree(poly: Poly, rng: random.Random | None = None) -> list[Poly]:
    """Factor a squarefree polynomial into distinct monic irreducibles.

    Returns the factors sorted by (degree, coefficients); their product is
    the monic normalization of the input. The random stream only steers the
    equal-degree splitter, never the result, and defaults to a fixed seed so
    runs are reproducible.
    """
    if poly.degree < 1:
        raise ParameterError("cannot factor a constant polynomial")
    if not is_squarefree(poly):
        raise ParameterError("input polynomial is not squarefree")
    if rng is None:
        rng = random.Random(0)
    ell = poly.ell
    g = poly.monic()
    x = Poly.x(ell)
    out: list[Poly] = []
    h = x
    d = 1
    while g.degree >= 2 * d:
        h = poly_powmod(h, ell, g)
        same_degree = poly_gcd(g, h - x) if (h - x) else g
        if same_degree.degree > 0:
            out.extend(_equal_degree_split(same_degree, d, rng))
            g = g // same_degree
            if g.degree == 0:
                break
            h = h % g
        d += 1
    if g.degree > 0:
        out.append(g)
    out.sort(key=lambda q: (q.degree, q.coeffs))
    return out


def _equal_degree_split(c: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a product of distinct irreducibles that all have degree d."""
    if c.degree == d:
        return [c]
    ell = c.ell
    while True:
        a = Poly.make(ell, [rng.randrange(ell) for _ in range(c.degree)])
        if a.degree < 1:
            continue
        g = poly_gcd(c, a)
        if 0 < g.degree < c.degree:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(c // g, d, rng)
        if ell == 2:
            # trace map of a into GF(2)
            b = a
            t = a
            for _ in range(d - 1):
                t = t * t % c
                b = b + t
        else:
            b = poly_powmod(a, (ell**d - 1) // 2, c) - Poly.one(ell)
        if b.is_zero:
            continue
        g = poly_gcd(c, b)
        if 0 < g.degree < c.degree:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(c // g, d, rng)
