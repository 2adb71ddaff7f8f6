"""q-Pochhammer products and theta series as truncated series.

Products are written as ProductSpec values: a list of factors
(sign*q^offset; q^step)_inf ** exponent, an integer prefactor and a power of
q in front.  Theta-type series (psi, the dissection pieces, Jacobi's cube)
are built here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from . import pseries as ps
from .pseries import Series

__all__ = [
    "PochhammerFactor",
    "ProductSpec",
    "EngineMismatch",
    "qq",
    "pochhammer",
    "eval_product",
    "euler",
    "psi",
    "a3",
    "a5",
    "b5",
    "bilateral_theta",
    "jacobi_cube",
    "A3_SPEC",
    "PSI_SPEC",
]


class EngineMismatch(RuntimeError):
    """Two independent constructions of the same series disagree."""


@dataclass(frozen=True)
class PochhammerFactor:
    """(sign * q^offset; q^step)_inf raised to ``exponent``."""

    sign: int = 1
    offset: int = 1
    step: int = 1
    exponent: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.offset < 1 or self.step < 1:
            raise ValueError("offset and step must be positive")
        if self.exponent == 0:
            raise ValueError("exponent must be nonzero")


def qq(step: int, exponent: int = 1) -> PochhammerFactor:
    """(q^step; q^step)_inf ** exponent, the common eta-type factor."""
    return PochhammerFactor(1, step, step, exponent)


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple = ()
    prefactor: int = 1
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.shift < 0:
            raise ValueError("shift must be nonnegative")


@lru_cache(maxsize=512)
def _base_product(sign: int, offset: int, step: int, N: int) -> Series:
    coeffs = [0] * N
    coeffs[0] = 1
    j = offset
    while j < N:
        # multiply in place by (1 - sign*q^j)
        for i in range(N - 1, j - 1, -1):
            if coeffs[i - j]:
                coeffs[i] -= sign * coeffs[i - j]
        j += step
    return ps.make(coeffs)


@lru_cache(maxsize=512)
def pochhammer(f: PochhammerFactor, N: int) -> Series:
    if N < 1:
        raise ValueError("precision must be positive")
    base = _base_product(f.sign, f.offset, f.step, N)
    if f.exponent == 1:
        return base
    return ps.miller_power(base, f.exponent)


def eval_product(spec: ProductSpec, N: int) -> Series:
    if spec.shift >= N:
        return ps.zero(N)
    inner = N - spec.shift
    acc = ps.one(inner)
    for f in spec.factors:
        acc = ps.mul(acc, pochhammer(f, inner))
    coeffs = [0] * spec.shift + [spec.prefactor * c for c in acc.coeffs]
    return ps.make(coeffs)


PSI_SPEC = ProductSpec((qq(2, 2), qq(1, -1)))
A3_SPEC = ProductSpec((qq(2, 1), qq(3, 2), qq(1, -1), qq(6, -1)))
A5_SPEC = ProductSpec((PochhammerFactor(-1, 2, 5), PochhammerFactor(-1, 3, 5), qq(5)))
B5_SPEC = ProductSpec((PochhammerFactor(-1, 1, 5), PochhammerFactor(-1, 4, 5), qq(5)))


def euler(N: int) -> Series:
    """(q; q)_inf."""
    return pochhammer(qq(1), N)


def _triangular_sum(N: int) -> Series:
    coeffs = [0] * N
    k = 0
    while k * (k + 1) // 2 < N:
        coeffs[k * (k + 1) // 2] = 1
        k += 1
    return ps.make(coeffs)


@lru_cache(maxsize=64)
def psi(N: int) -> Series:
    """Ramanujan's psi(q) = sum q^(n(n+1)/2), built both ways and compared."""
    by_sum = _triangular_sum(N)
    by_product = eval_product(PSI_SPEC, N)
    if by_sum != by_product:
        v = ps.eq_upto(by_sum, by_product, N)
        raise EngineMismatch(f"psi product/sum routes differ at q^{v.exponent}")
    return by_sum


def a3(N: int) -> Series:
    """Component A(q) of the 3-dissection psi(q) = A(q^3) + q psi(q^9)."""
    return eval_product(A3_SPEC, N)


def a5(N: int) -> Series:
    """(-q^2, -q^3, q^5; q^5)_inf."""
    return eval_product(A5_SPEC, N)


def b5(N: int) -> Series:
    """(-q, -q^4, q^5; q^5)_inf."""
    return eval_product(B5_SPEC, N)


def bilateral_theta(a_num: int, b_num: int, N: int) -> Series:
    """sum over all integers n of q^(a*n^2 + b*n), with a = a_num/2, b = b_num/2.

    Every contributing exponent must be a nonnegative integer.
    """
    if a_num < 1:
        raise ValueError("quadratic coefficient must be positive")
    coeffs = [0] * N
    bound = isqrt(2 * N // a_num + 1) + abs(b_num) // a_num + 2
    for n in range(-bound, bound + 1):
        twice = a_num * n * n + b_num * n
        if twice >= 2 * N:
            continue
        if twice % 2:
            raise ValueError(f"exponent {twice}/2 at n={n} is not an integer")
        if twice < 0:
            raise ValueError(f"negative exponent {twice // 2} at n={n}")
        coeffs[twice // 2] += 1
    return ps.make(coeffs)


def jacobi_cube(N: int) -> Series:
    """sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)), which equals (q^2; q^2)_inf^3."""
    coeffs = [0] * N
    k = 0
    while k * (k + 1) < N:
        coeffs[k * (k + 1)] = (-1) ** k * (2 * k + 1)
        k += 1
    return ps.make(coeffs)
