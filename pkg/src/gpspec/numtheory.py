"""Small exact number theory helpers (trial division scale)."""

from __future__ import annotations


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division.

    >>> factorize(360)
    {2: 3, 3: 2, 5: 1}
    >>> factorize(1)
    {}
    """
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def radical_int(n: int) -> int:
    """Product of the distinct primes dividing n; radical_int(0) = 0,
    radical_int(1) = 1.

    >>> radical_int(12), radical_int(8), radical_int(0)
    (6, 2, 0)
    """
    if n == 0:
        return 0
    r = 1
    for p in factorize(abs(n)):
        r *= p
    return r


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError(f"divisors expects n >= 1, got {n}")
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def divides(d: int, n: int) -> bool:
    """Integer divisibility with the 0 | n convention: 0 divides only 0."""
    if d == 0:
        return n == 0
    return n % d == 0
