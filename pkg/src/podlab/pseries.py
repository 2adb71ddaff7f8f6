"""Truncated power series in q with exact integer coefficients.

A :class:`Series` holds the coefficients of q^0 .. q^(N-1).  When a modulus
is attached, every coefficient is kept in the canonical range [0, m).
Operations never raise precision; binary operations truncate to the smaller
of the two inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "Series",
    "Verdict",
    "ModulusError",
    "make",
    "zero",
    "one",
    "monomial",
    "add",
    "sub",
    "neg",
    "scale",
    "shift",
    "truncate",
    "mul",
    "power",
    "miller_power",
    "invert",
    "subst_qk",
    "unsubst_qk",
    "negate_q",
    "extract",
    "section",
    "reduce",
    "eq_upto",
    "dumps",
    "loads",
]


class ModulusError(ValueError):
    """Two series live in incompatible coefficient rings."""


@dataclass(frozen=True)
class Series:
    coeffs: tuple
    modulus: Optional[int] = None

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least one coefficient")
        m = self.modulus
        if m is not None:
            if m < 2:
                raise ValueError(f"modulus must be >= 2, got {m}")
            coeffs = tuple(c % m for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def support(self) -> list:
        return [i for i, c in enumerate(self.coeffs) if c]

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        if self.precision > 8:
            shown += ", ..."
        mod = "" if self.modulus is None else f", mod {self.modulus}"
        return f"Series([{shown}], N={self.precision}{mod})"

    def __add__(self, other):
        if isinstance(other, int):
            other = _const_like(self, other)
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = _const_like(self, other)
        return sub(self, other)

    def __rsub__(self, other):
        return sub(_const_like(self, other), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __pow__(self, e):
        return power(self, e)


def _const_like(a: Series, c: int) -> Series:
    return Series((c,) + (0,) * (a.precision - 1), a.modulus)


def _raw(coeffs: list, modulus: Optional[int]) -> Series:
    # skip re-validation when the caller already produced canonical residues
    s = object.__new__(Series)
    object.__setattr__(s, "coeffs", tuple(coeffs))
    object.__setattr__(s, "modulus", modulus)
    return s


def make(coeffs: Iterable[int], modulus: Optional[int] = None) -> Series:
    """Build a series whose precision is the number of coefficients given."""
    return Series(tuple(int(c) for c in coeffs), modulus)


def zero(N: int, modulus: Optional[int] = None) -> Series:
    return make([0] * N, modulus)


def one(N: int, modulus: Optional[int] = None) -> Series:
    return make([1] + [0] * (N - 1), modulus)


def monomial(k: int, N: int, c: int = 1, modulus: Optional[int] = None) -> Series:
    """c*q^k truncated at N (zero when k >= N)."""
    coeffs = [0] * N
    if k < N:
        coeffs[k] = c
    return make(coeffs, modulus)


def _ring(a: Series, b: Series) -> Optional[int]:
    if a.modulus is None:
        return b.modulus
    if b.modulus is None or b.modulus == a.modulus:
        return a.modulus
    raise ModulusError(f"cannot combine modulus {a.modulus} with modulus {b.modulus}")


def _finish(coeffs: list, m: Optional[int]) -> Series:
    if m is not None:
        coeffs = [c % m for c in coeffs]
    return _raw(coeffs, m)


def add(a: Series, b: Series) -> Series:
    m = _ring(a, b)
    n = min(a.precision, b.precision)
    return _finish([x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n])], m)


def sub(a: Series, b: Series) -> Series:
    m = _ring(a, b)
    n = min(a.precision, b.precision)
    return _finish([x - y for x, y in zip(a.coeffs[:n], b.coeffs[:n])], m)


def neg(a: Series) -> Series:
    return _finish([-c for c in a.coeffs], a.modulus)


def scale(a: Series, c: int) -> Series:
    return _finish([c * x for x in a.coeffs], a.modulus)


def shift(a: Series, k: int) -> Series:
    """Multiply by q^k, keeping the precision of ``a``."""
    if k < 0:
        raise ValueError("negative shifts would need Laurent series")
    n = a.precision
    return _raw(([0] * k + list(a.coeffs))[:n], a.modulus)


def truncate(a: Series, N: int) -> Series:
    if not 1 <= N <= a.precision:
        raise ValueError(f"cannot truncate precision {a.precision} to {N}")
    return _raw(a.coeffs[:N], a.modulus)


# -- multiplication ---------------------------------------------------------

def _schoolbook(x: Sequence[int], y: Sequence[int], n: int) -> list:
    # outer loop over the sparser factor
    if sum(1 for c in x if c) > sum(1 for c in y if c):
        x, y = y, x
    out = [0] * n
    for i, xi in enumerate(x):
        if xi and i < n:
            for j, yj in enumerate(y[: n - i]):
                if yj:
                    out[i + j] += xi * yj
    return out


def _pack(values: Sequence[int], width: int) -> int:
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in values), "little")


def _kronecker(x: Sequence[int], y: Sequence[int], n: int) -> list:
    """Truncated product via one big-integer multiplication.

    Coefficients are packed into fixed-width byte slots wide enough that no
    slot of the product overflows; signed inputs are split into their positive
    and negative parts.
    """
    x, y = list(x[:n]), list(y[:n])
    bx = max(abs(c) for c in x)
    by = max(abs(c) for c in y)
    if bx == 0 or by == 0:
        return [0] * n
    bound = bx * by * min(len(x), len(y))
    width = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * width

    def signed_pack(v):
        pos = _pack([c if c > 0 else 0 for c in v], width)
        negs = _pack([-c if c < 0 else 0 for c in v], width)
        return pos - negs

    prod = signed_pack(x) * signed_pack(y)
    half = 1 << (bits - 1)
    offset = int.from_bytes(half.to_bytes(width, "little") * n, "little")
    # mask, not %: big-int % is a long division; & wraps negatives like mod
    w = (prod + offset) & ((1 << (bits * n)) - 1)
    raw = w.to_bytes(width * n, "little")
    return [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(n)
    ]


def mul(a: Series, b: Series, method: str = "schoolbook") -> Series:
    """Truncated Cauchy product.

    ``method="kronecker"`` packs both operands into single integers and lets
    the big-integer multiply (Karatsuba in CPython) do the work; the result is
    identical to the schoolbook product.
    """
    m = _ring(a, b)
    n = min(a.precision, b.precision)
    x, y = a.coeffs, b.coeffs
    if m is not None:
        x = [c % m for c in x]
        y = [c % m for c in y]
    if method == "schoolbook":
        out = _schoolbook(x, y, n)
    elif method == "kronecker":
        out = _kronecker(x, y, n)
    else:
        raise ValueError(f"unknown multiplication method {method!r}")
    return _finish(out, m)


def power(a: Series, e: int) -> Series:
    """a**e for e >= 0 by repeated squaring."""
    if e < 0:
        raise ValueError("use invert() or miller_power() for negative exponents")
    result = one(a.precision, a.modulus)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def _unit_inverse(c: int, m: Optional[int]) -> int:
    if m is None:
        if c not in (1, -1):
            raise ValueError(f"constant term {c} is not a unit over the integers")
        return c
    try:
        return pow(c, -1, m)
    except ValueError:
        raise ValueError(f"constant term {c} is not a unit modulo {m}") from None


def invert(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be a unit."""
    m = a.modulus
    n = a.precision
    c0 = _unit_inverse(a.coeffs[0], m)
    terms = [(j, c) for j, c in enumerate(a.coeffs) if j and c]
    b = [0] * n
    b[0] = c0 % m if m is not None else c0
    for k in range(1, n):
        acc = 0
        for j, c in terms:
            if j > k:
                break
            acc += c * b[k - j]
        acc = -c0 * acc
        b[k] = acc % m if m is not None else acc
    return _raw(b, m)


def miller_power(a: Series, e: int) -> Series:
    """a**e for any integer e, in O(N * nnz(a)) operations.

    Uses the recurrence n*a0*g[n] = sum_j ((e+1)*j - n) * a[j] * g[n-j],
    which needs exact division and therefore only runs on exact series with
    a nonzero constant term.  Other inputs fall back to repeated squaring.
    """
    a0 = a.coeffs[0]
    if a.modulus is not None or a0 == 0:
        if e >= 0:
            return power(a, e)
        return power(invert(a), -e)
    if e < 0:
        _unit_inverse(a0, None)
    n = a.precision
    terms = [(j, c) for j, c in enumerate(a.coeffs) if j and c]
    g = [0] * n
    g[0] = a0 ** e if e >= 0 else a0 ** (-e)  # a0 is +-1 when e < 0
    for k in range(1, n):
        acc = 0
        for j, c in terms:
            if j > k:
                break
            acc += ((e + 1) * j - k) * c * g[k - j]
        q, r = divmod(acc, k * a0)
        if r:
            raise ArithmeticError("non-integral coefficient in miller_power")
        g[k] = q
    return _raw(g, None)


# -- reindexing ------------------------------------------------------------

def subst_qk(a: Series, k: int) -> Series:
    """Replace q by q^k.  The precision stays that of ``a``."""
    if k < 1:
        raise ValueError("k must be positive")
    n = a.precision
    out = [0] * n
    for i in range(0, (n - 1) // k + 1):
        out[i * k] = a.coeffs[i]
    return _raw(out, a.modulus)


def unsubst_qk(a: Series, k: int) -> Series:
    """Replace q^k by q; every exponent of ``a`` must be a multiple of k."""
    if any(c for i, c in enumerate(a.coeffs) if i % k):
        raise ValueError(f"series has exponents outside k*Z for k={k}")
    return extract(a, 0, k)


def negate_q(a: Series) -> Series:
    """Replace q by -q."""
    return _finish([-c if i & 1 else c for i, c in enumerate(a.coeffs)], a.modulus)


def extract(a: Series, r: int, m: int) -> Series:
    """Series whose n-th coefficient is a[m*n + r]."""
    if m < 1:
        raise ValueError("m must be positive")
    if not 0 <= r < m:
        raise ValueError(f"residue {r} outside [0, {m})")
    if r >= a.precision:
        raise ValueError("residue beyond the available precision")
    return _raw(a.coeffs[r::m], a.modulus)


def section(a: Series, r: int, m: int) -> Series:
    """Keep only the exponents congruent to r mod m, in place."""
    if not 0 <= r < m:
        raise ValueError(f"residue {r} outside [0, {m})")
    return _raw([c if i % m == r else 0 for i, c in enumerate(a.coeffs)], a.modulus)


def reduce(a: Series, m: int) -> Series:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if a.modulus is not None and a.modulus % m:
        raise ModulusError(f"cannot reduce a series mod {a.modulus} to mod {m}")
    return _raw([c % m for c in a.coeffs], m)


# -- comparison ------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    ok: bool
    exponent: Optional[int] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    def __bool__(self):
        return self.ok


def eq_upto(a: Series, b: Series, N: int, m: Optional[int] = None) -> Verdict:
    """Compare coefficients 0..N-1, optionally after reducing mod m.

    On mismatch the verdict carries the first differing exponent and the two
    (reduced) coefficients.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if N > a.precision or N > b.precision:
        raise ValueError(f"N={N} exceeds precision ({a.precision}, {b.precision})")
    if m is None:
        m = _ring(a, b)
    elif m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    for i in range(N):
        x, y = a.coeffs[i], b.coeffs[i]
        if m is not None:
            x, y = x % m, y % m
        if x != y:
            return Verdict(False, i, x, y)
    return Verdict(True)


# -- coefficient dump format -------------------------------------------------

def dumps(a: Series) -> str:
    mod = "none" if a.modulus is None else str(a.modulus)
    lines = [f"# precision={a.precision} modulus={mod}"]
    lines += [f"{i}\t{c}" for i, c in enumerate(a.coeffs)]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Series:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("missing '# precision=N modulus=m|none' header")
    fields = dict(tok.split("=", 1) for tok in lines[0][1:].split())
    N = int(fields["precision"])
    m = None if fields["modulus"] == "none" else int(fields["modulus"])
    coeffs = [0] * N
    for ln in lines[1:]:
        i, c = ln.split("\t")
        coeffs[int(i)] = int(c)
    return make(coeffs, m)
