"""pod_{-k}(n): k-tuples of partitions of n with distinct odd parts.

Three independent routes to the same numbers:

* ``pod_series``: the generating function, either as the product
  (-q; q^2)^k / (q^2; q^2)^k or as 1/psi(-q)^k.
* ``pod_dp``: a knapsack table (odd parts 0/1, even parts unbounded)
  convolved k times.
* ``pod_enum``: explicit generation of every partition with distinct odd
  parts, summed over all size compositions of n.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian

from . import pseries as ps
from .pseries import Series
from .qproducts import PochhammerFactor, ProductSpec, eval_product, psi, qq

__all__ = [
    "ENUM_LIMIT",
    "pod_series",
    "pod_values",
    "pod_dp",
    "pod_dp_table",
    "pod_enum",
    "distinct_odd_partitions",
    "t4",
    "t4_table",
]

ENUM_LIMIT = 40


def pod_spec(k: int) -> ProductSpec:
    return ProductSpec((PochhammerFactor(-1, 1, 2, k), qq(2, -k)))


@lru_cache(maxsize=32)
def pod_series(k: int, N: int, method: str = "theta") -> Series:
    """Coefficients pod_{-k}(0..N-1).

    ``method="theta"`` inverts psi(-q)^k with a sparse recurrence
    (O(N^1.5) for fixed k); ``method="product"`` multiplies out the
    Pochhammer quotient.  Both give the same series.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if method == "theta":
        return ps.miller_power(ps.negate_q(psi(N)), -k)
    if method == "product":
        return eval_product(pod_spec(k), N)
    raise ValueError(f"unknown method {method!r}")


def pod_values(k: int, n_max: int) -> tuple:
    return pod_series(k, n_max + 1).coeffs


@lru_cache(maxsize=8)
def _single_table(n_max: int) -> tuple:
    table = [0] * (n_max + 1)
    table[0] = 1
    for part in range(1, n_max + 1):
        if part % 2:
            for s in range(n_max, part - 1, -1):
                table[s] += table[s - part]
        else:
            for s in range(part, n_max + 1):
                table[s] += table[s - part]
    return tuple(table)


@lru_cache(maxsize=16)
def pod_dp_table(k: int, n_max: int) -> tuple:
    """pod_{-k}(0..n_max) from the knapsack table and k-fold convolution."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    single = _single_table(n_max)
    acc = single
    for _ in range(k - 1):
        acc = tuple(
            sum(acc[i] * single[s - i] for i in range(s + 1)) for s in range(n_max + 1)
        )
    return acc


def pod_dp(k: int, n: int) -> int:
    return pod_dp_table(k, n)[n]


def distinct_odd_partitions(n: int, max_part: int | None = None):
    """Yield partitions of n (non-increasing tuples) with distinct odd parts."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        # an odd part may not repeat, so the next part must be strictly smaller
        nxt = part - 1 if part % 2 else part
        for rest in distinct_odd_partitions(n - part, nxt):
            yield (part,) + rest


def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def pod_enum(k: int, n: int) -> int:
    """Brute-force count, walking every size split (n_1, ..., n_k) of n."""
    if n > ENUM_LIMIT:
        raise ValueError(f"enumeration is capped at n <= {ENUM_LIMIT}, got {n}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    lists = [sum(1 for _ in distinct_odd_partitions(m)) for m in range(n + 1)]
    total = 0
    for sizes in _compositions(n, k):
        count = 1
        for m in sizes:
            count *= lists[m]
        total += count
    return total


def _pair_counts(n_max: int) -> list:
    tri = []
    j = 0
    while j * (j + 1) // 2 <= n_max:
        tri.append(j * (j + 1) // 2)
        j += 1
    pairs = [0] * (n_max + 1)
    for x, y in cartesian(tri, tri):
        if x + y <= n_max:
            pairs[x + y] += 1
    return pairs


@lru_cache(maxsize=8)
def t4_table(n_max: int) -> tuple:
    """Ordered representations of 0..n_max as four triangular numbers."""
    pairs = _pair_counts(n_max)
    return tuple(
        sum(pairs[m] * pairs[n - m] for m in range(n + 1)) for n in range(n_max + 1)
    )


def t4(n: int) -> int:
    return t4_table(n)[n]
