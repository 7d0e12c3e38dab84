"""Rational integer helpers: primality, Legendre symbol, two-square data.

Everything here is exact; factoring is trial division, which is ample for
the desk-scale arguments the package handles.
"""
from __future__ import annotations

from math import isqrt


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
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


def require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


def legendre_symbol(j: int, p: int) -> int:
    """Quadratic character of j mod p: +1 for residues, -1 for
    non-residues, 0 when p divides j (Euler's criterion)."""
    require_odd_prime(p)
    j %= p
    if j == 0:
        return 0
    e = pow(j, (p - 1) // 2, p)
    return 1 if e == 1 else -1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(n: int) -> int:
    """Product of the primes dividing n to an odd power (n >= 1)."""
    out = 1
    for p, e in factorize(n).items():
        if e % 2 == 1:
            out *= p
    return out


def is_sum_of_two_squares(n: int) -> bool:
    """Whether n = a^2 + b^2 has an integer solution.

    Holds exactly when no prime congruent to 3 mod 4 divides the
    squarefree part of n.  0 and 1 qualify trivially.
    """
    if n < 0:
        return False
    if n <= 1:
        return True
    for p in factorize(squarefree_part(n)):
        if p % 4 == 3:
            return False
    return True


def two_square_reps(n: int) -> list[tuple[int, int]]:
    """All ordered pairs (a, b) with a^2 + b^2 = n, signs included,
    sorted by a then b."""
    if n < 0:
        raise ValueError(f"two_square_reps needs n >= 0, got {n}")
    reps = []
    for a in range(-isqrt(n), isqrt(n) + 1):
        rest = n - a * a
        b = isqrt(rest)
        if b * b == rest:
            if b == 0:
                reps.append((a, 0))
            else:
                reps.append((a, -b))
                reps.append((a, b))
    reps.sort()
    return reps
