"""Divisor sums, valuations and factorization at desk scale."""

from __future__ import annotations

import enum
from dataclasses import dataclass

__all__ = [
    "Factorization",
    "QR",
    "is_prime",
    "factorize",
    "sigma",
    "vp",
    "is_qr",
    "crit_mod3",
    "crit_mod5",
]

# deterministic Miller-Rabin witnesses, valid for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((p, e), ...) with strictly increasing p."""

    pairs: tuple = ()

    def __post_init__(self):
        pairs = tuple((int(p), int(e)) for p, e in self.pairs)
        prev = 1
        for p, e in pairs:
            if p <= prev or e < 1 or not is_prime(p):
                raise ValueError(f"invalid factorization pairs {pairs}")
            prev = p
        object.__setattr__(self, "pairs", pairs)

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p ** e
        return out

    def as_dict(self) -> dict:
        return dict(self.pairs)

    def __str__(self):
        if not self.pairs:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.pairs)


def factorize(n: int) -> Factorization:
    """Trial division by 2, 3 and then 6k +- 1."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    pairs = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
    p, step = 5, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def sigma(n: int) -> int:
    """Sum of the positive divisors of n."""
    if n < 1:
        raise ValueError(f"sigma is defined for positive integers, got {n}")
    out = 1
    for p, e in factorize(n).pairs:
        out *= (p ** (e + 1) - 1) // (p - 1)
    return out


def vp(n: int, p: int) -> int:
    if n < 1:
        raise ValueError(f"valuation needs a positive integer, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


class QR(enum.Enum):
    RESIDUE = "residue"
    NONRESIDUE = "non-residue"
    ZERO = "zero"


def is_qr(a: int, p: int) -> QR:
    """Euler's criterion.  Multiples of p get their own verdict."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return QR.ZERO
    return QR.RESIDUE if pow(a, (p - 1) // 2, p) == 1 else QR.NONRESIDUE


def crit_mod3(n: int) -> bool:
    """True iff 3 divides sigma(2n+1), read off the factorization of 2n+1.

    A prime p = 1 (mod 3) contributes a factor 3 when v_p = 2 (mod 3); a
    prime p = 2 (mod 3) does when v_p is odd.
    """
    for p, e in factorize(2 * n + 1).pairs:
        if p % 3 == 1 and e % 3 == 2:
            return True
        if p % 3 == 2 and e % 2 == 1:
            return True
    return False


def crit_mod5(n: int) -> bool:
    """True iff 5 divides sigma(2n+1), read off the factorization of 2n+1.

    1 + p + ... + p^e vanishes mod 5 exactly when p^(e+1) = 1 with p != 1,
    or e = 4 (mod 5) with p = 1.  So the valuation condition depends on the
    multiplicative order of p mod 5: order 4 for p = 2, 3 and order 2 for
    p = 4.
    """
    for p, e in factorize(2 * n + 1).pairs:
        r = p % 5
        if r == 1 and e % 5 == 4:
            return True
        if r in (2, 3) and e % 4 == 3:
            return True
        if r == 4 and e % 2 == 1:
            return True
    return False
