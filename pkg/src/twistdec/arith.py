"""Exact integer and modular arithmetic primitives.

Everything here is desk-scale (moduli of a few hundred), so the simple
deterministic algorithms win: trial division, linear discrete-log scans.
"""

from __future__ import annotations

import math

from .errors import ParameterError


def is_prime(n: int) -> bool:
    """Deterministic primality check by trial division; exact for n < 2**32."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def mul_order(x: int, n: int) -> int:
    """Least f >= 1 with x**f == 1 (mod n); requires gcd(x, n) == 1."""
    if n < 2:
        raise ParameterError(f"modulus must be at least 2, got {n}")
    x %= n
    if math.gcd(x, n) != 1:
        raise ParameterError(f"{x} is not a unit modulo {n}")
    order = 1
    y = x
    while y != 1:
        y = y * x % n
        order += 1
    return order


def discrete_log_in_subgroup(base: int, target: int, modulus: int, order: int) -> int | None:
    """Least k in [0, order) with base**k == target (mod modulus), or None.

    A plain linear scan; `order` is at most modulus - 1 here, so nothing
    fancier is warranted.
    """
    base %= modulus
    target %= modulus
    y = 1 % modulus
    for k in range(order):
        if y == target:
            return k
        y = y * base % modulus
    return None


def euler_totient(n: int) -> int:
    """Count of units modulo n, via the prime factorization of n."""
    if n < 1:
        raise ParameterError(f"totient needs n >= 1, got {n}")
    result = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def exact_integer_sqrt(n: int) -> int | None:
    """The integer s with s*s == n, or None when n is not a perfect square."""
    if n < 0:
        raise ParameterError(f"square root of negative {n}")
    s = math.isqrt(n)
    return s if s * s == n else None
