"""Registry of mechanical checks C1..C16 and their reports.

Each check is a function of (ctx, k): ``ctx`` exposes the precision, ranges
and cached series, ``k`` holds the numeric constants the statement depends
on.  Overriding one constant (see ``Check.mutation``) must turn a pass into a
fail; the test-suite relies on that to show the checks are not vacuous.

Quotient identities are always compared after multiplying through by their
denominators, so every comparison happens in the polynomial ring.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from functools import cached_property
from math import isqrt
from typing import Callable, Optional

from . import pseries as ps
from .numthy import QR, crit_mod3, crit_mod5, factorize, is_prime, is_qr, sigma
from .partitions import pod_series
from .pseries import Series
from .qproducts import ProductSpec, a3, a5, b5, bilateral_theta, eval_product, jacobi_cube, psi, qq

__all__ = [
    "CheckParams",
    "Report",
    "Check",
    "REGISTRY",
    "DEFAULT_INSTANCES",
    "list_checks",
    "run_check",
    "run_all",
    "serialize",
    "deserialize",
    "mod9_progressions",
]

DEFAULT_PRECISION = 500
DEFAULT_ALPHA_MAX = 3
DEFAULT_INSTANCES = ((5, 4, 2), (5, 4, 4), (3, 2, 2), (7, 6, 2), (7, 6, 4), (7, 6, 5))


@dataclass(frozen=True)
class CheckParams:
    precision: int = DEFAULT_PRECISION
    alpha_max: int = DEFAULT_ALPHA_MAX
    prime_instances: tuple = DEFAULT_INSTANCES
    range_cap: Optional[int] = None  # pointwise checks use n < range_cap

    def __post_init__(self):
        object.__setattr__(
            self, "prime_instances", tuple(tuple(int(x) for x in t) for t in self.prime_instances)
        )

    def problem(self) -> Optional[str]:
        if self.precision < 50:
            return f"precision {self.precision} below the minimum of 50"
        if self.alpha_max < 1:
            return f"alpha_max {self.alpha_max} must be at least 1"
        if self.range_cap is not None and self.range_cap < 1:
            return f"range_cap {self.range_cap} must be positive"
        return None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["prime_instances"] = [list(t) for t in self.prime_instances]
        return d


@dataclass
class Report:
    id: str
    statement: str
    params: dict
    status: str  # pass | fail | skipped
    witness: Optional[dict] = None
    elapsed_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d["elapsed_ms"] = None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(**d)


class Failed(Exception):
    def __init__(self, witness: dict):
        super().__init__(witness)
        self.witness = witness


class Skipped(Exception):
    pass


class Context:
    """Precision, ranges and lazily built series shared by one check run."""

    def __init__(self, params: CheckParams):
        self.params = params
        self.N = params.precision

    def cap(self, limit: int) -> int:
        """Number of pointwise n values to test given a natural limit."""
        if self.params.range_cap is not None:
            return max(0, min(limit, self.params.range_cap))
        return max(0, limit)

    @cached_property
    def pod4(self) -> tuple:
        return pod_series(4, self.N).coeffs

    def pod(self, k: int) -> tuple:
        return pod_series(k, self.N).coeffs

    def span(self, a: int, b: int) -> int:
        """How many n have a*n + b below the precision."""
        return max(0, (self.N - 1 - b) // a + 1)

    def signed_section(self, a: int, b: int, sign_shift: int = 0) -> Series:
        """sum_n (-1)^(n + sign_shift) pod4(a*n + b) q^n."""
        L = self.span(a, b)
        if L < 1:
            raise Skipped(f"precision {self.N} too small to reach pod4({a}n+{b})")
        return ps.make((-1) ** ((n + sign_shift) & 1) * self.pod4[a * n + b] for n in range(L))

    @cached_property
    def psi(self) -> Series:
        return psi(self.N)

    def psi_k(self, k: int) -> Series:
        """psi(q^k) at full precision."""
        return ps.subst_qk(self.psi, k)

    @cached_property
    def s(self) -> Series:
        return ps.subst_qk(a3(self.N), 3)

    @cached_property
    def t(self) -> Series:
        return self.psi_k(9)

    def q(self, k: int = 1, c: int = 1) -> Series:
        return ps.monomial(k, self.N, c)


def expect_series(label: str, lhs: Series, rhs: Series, m: Optional[int] = None, N: Optional[int] = None):
    N = min(lhs.precision, rhs.precision) if N is None else N
    v = ps.eq_upto(lhs, rhs, N, m)
    if not v:
        raise Failed({"label": label, "exponent": v.exponent, "lhs": v.lhs, "rhs": v.rhs, "modulus": m})


def expect_value(label: str, n: int, lhs: int, rhs: int, m: Optional[int] = None):
    x, y = (lhs, rhs) if m is None else (lhs % m, rhs % m)
    if x != y:
        raise Failed({"label": label, "n": n, "lhs": x, "rhs": y, "modulus": m})


@dataclass(frozen=True)
class Check:
    id: str
    statement: str
    summary: str
    run: Callable
    constants: dict = field(default_factory=dict)
    mutation: tuple = ()  # (constant name, replacement value)


# -- individual checks -------------------------------------------------------

def _c1(ctx: Context, k: dict):
    euler = eval_product(ProductSpec((qq(1),)), ctx.N)
    for p, alpha in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2)):
        m = p ** (alpha + k["extra_power"])
        lhs = ps.power(ps.reduce(euler, m), p ** alpha)
        rhs = ps.power(ps.reduce(ps.subst_qk(euler, p), m), p ** (alpha - 1))
        expect_series(f"(q;q)^{p**alpha} vs (q^{p};q^{p})^{p**(alpha-1)}", lhs, rhs, m)
    for p in (2, 3, 5, 7):
        m = p ** (1 + k["extra_power"])
        expect_series(f"psi(q)^{p} vs psi(q^{p})", ps.power(ps.reduce(ctx.psi, m), p), ctx.psi_k(p), m)


def _c2(ctx: Context, k: dict):
    rhs = ctx.s + ps.scale(ps.shift(ctx.t, 1), k["q_coeff"])
    expect_series("psi(q) = A(q^3) + q psi(q^9)", ctx.psi, rhs)


def _c3(ctx: Context, k: dict):
    s, t = ctx.s, ctx.t
    psi3_4 = ps.power(ctx.psi_k(3), 4)
    cube_sum = s ** 3 + ps.scale(ps.shift(t ** 3, 3), k["q3_coeff"])
    expect_series("psi(q^9)(s^3 + q^3 t^3) = psi(q^3)^4", ctx.t * cube_sum, psi3_4)
    quad = s ** 2 - ps.shift(s * t, 1) + ps.shift(t ** 2, 2)
    expect_series("psi(q) psi(q^9)(s^2 - qst + q^2 t^2) = psi(q^3)^4", ctx.psi * ctx.t * quad, psi3_4)


def _c4(ctx: Context, k: dict):
    m = k["modulus"]
    psi8 = ps.power(ps.reduce(ctx.psi, m), 8)
    psi3_4 = ps.power(ps.reduce(ctx.psi_k(3), m), 4)
    for alpha in range(1, ctx.params.alpha_max + 1):
        a = 3 ** alpha
        lhs = ctx.signed_section(a, (a + 1) // 2)
        rhs = ps.scale(psi3_4, (-1) ** (alpha - 1))
        expect_series(f"alpha={alpha}: section * psi(q)^8 vs +-psi(q^3)^4", lhs * psi8, rhs, m)


def _c5(ctx: Context, k: dict):
    pod = ctx.pod4
    for n in range(ctx.cap(ctx.span(3, 2))):
        lhs = pod[3 * n + 2]
        expect_value("pod4(3n+2) vs (-1)^n sigma(2n+1)", n, lhs, k["sign"] ** n * sigma(2 * n + 1), 3)
        expect_value("3 | pod4(3n+2) vs criterion", n, int(lhs % 3 == 0), int(crit_mod3(n)))


def _c6(ctx: Context, k: dict):
    amax = ctx.params.alpha_max
    if 3 ** (amax + 1) > ctx.N:
        raise Skipped(f"3^(alpha_max+1) = {3 ** (amax + 1)} exceeds precision {ctx.N}")
    m = k["modulus"]
    pod = ctx.pod4
    for alpha in range(1, amax + 1):
        a, b = 3 ** (alpha + 1), (5 * 3 ** alpha + 1) // 2
        for n in range(ctx.cap(ctx.span(a, b))):
            expect_value(f"alpha={alpha}: pod4({a}n+{b}) mod {m}", n, pod[a * n + b], 0, m)
    # the underlying fact: q^(3n+2) coefficients of psi(q^3)^4/psi(q)^8 vanish mod 9
    quot = ps.power(ps.reduce(ctx.psi_k(3), m), 4) * ps.invert(ps.power(ps.reduce(ctx.psi, m), 8))
    expect_series("q^(3n+2) part of psi(q^3)^4/psi(q)^8", ps.extract(quot, 2, 3), ps.zero(ctx.span(3, 2)), m)


def _c7(ctx: Context, k: dict):
    pod = ctx.pod4
    for (a, b, c, d), m in (((27, 5, 9, 2), 9), ((27, 14, 9, 5), k["mod81"]), ((27, 23, 9, 8), 27)):
        for n in range(ctx.cap(ctx.span(a, b))):
            expect_value(f"pod4({a}n+{b}) + pod4({c}n+{d}) mod {m}", n, pod[a * n + b] + pod[c * n + d], 0, m)


def _quotient_terms(ctx: Context, N: int, coeffs: tuple) -> Series:
    """sum_j c_j q^j psi(q^3)^(4j+4) psi(q)^(8-4j), i.e. the quotient combination
    sum_j c_j q^j psi(q^3)^(4j+4)/psi(q)^(8+4j) multiplied by psi(q)^16."""
    psi1 = ps.truncate(ctx.psi, N)
    psi3 = ps.truncate(ctx.psi_k(3), N)
    total = ps.zero(N)
    for j, c in enumerate(coeffs):
        if c:
            term = ps.power(psi3, 4 * j + 4) * ps.power(psi1, 8 - 4 * j)
            total = total + ps.scale(ps.shift(term, j), c)
    return total


def _c8(ctx: Context, k: dict):
    first = ctx.signed_section(3, 2)
    N1 = first.precision
    psi16 = ps.power(ps.truncate(ctx.psi, N1), 16)
    rhs = _quotient_terms(ctx, N1, (10, -k["c36"], 27))
    expect_series("(-1)^n pod4(3n+2) exact identity", first * psi16, rhs)

    second = ctx.signed_section(9, 5)
    N2 = second.precision
    psi16 = ps.power(ps.truncate(ctx.psi, N2), 16)
    rhs = _quotient_terms(ctx, N2, (35, 18, -27))
    rhs = rhs - ps.scale(ps.shift(ps.power(ps.truncate(ctx.psi_k(3), N2), 4) * psi16, 1), 27)
    expect_series("(-1)^n pod4(9n+5) mod 81", second * psi16, rhs, 81)


def _c9(ctx: Context, k: dict):
    if ctx.N < 24:
        raise Skipped("precision below 24")
    pod = ctx.pod4
    golden = (
        ((5, 2), k["g1"], {2: 1, 3: 2, 7: 1}, 27),
        ((14, 5), 20736, {2: 8, 3: 4}, 243),
        ((23, 8), 1039851, {3: 3, 19: 1, 2027: 1}, 81),
    )
    values = []
    for (i, j), expected, fac, next_power in golden:
        got = pod[i] + pod[j]
        expect_value(f"pod4({i}) + pod4({j})", i, got, expected)
        if factorize(got).as_dict() != fac:
            raise Failed({"label": f"factorization of {got}", "n": i, "lhs": str(factorize(got)), "rhs": str(fac)})
        expect_value(f"{next_power} does not divide {got}", i, int(got % next_power != 0), 1)
        values.append(got)
    return {"values": values, "factorizations": [str(factorize(v)) for v in values]}


def _c10(ctx: Context, k: dict):
    N = ctx.N
    pod = ctx.pod4
    even = ps.make(pod[0::2])
    odd = ps.make(pod[1::2])
    P = lambda *factors, pre=1, shift=0: eval_product(ProductSpec(factors, pre, shift), N)  # noqa: E731
    lhs = even * P(qq(1, 10), qq(4, 4))
    expect_series("even part times (q;q)^10 (q^4;q^4)^4", lhs, P(qq(2, 10)), N=even.precision)
    lhs = odd * P(qq(1, 6), qq(2, 2))
    expect_series("odd part times (q;q)^6 (q^2;q^2)^2", lhs, P(qq(4, 4), pre=k["four"]), N=odd.precision)
    # auxiliary identity, multiplied by (q;q)^4 (q^4;q^4)^6 (q^8;q^8)^4
    lhs = P(qq(2, 14), qq(4, 2), qq(8, 4))
    rhs = P(qq(4, 16), qq(1, 4)) + P(qq(2, 4), qq(8, 8), qq(1, 4), qq(4, 4), pre=4, shift=1)
    expect_series("auxiliary 2-dissection identity", lhs, rhs)
    # and the full series assembled from the two halves
    whole = P(qq(4, 10), qq(2, -10), qq(8, -4)) + P(qq(8, 4), qq(2, -6), qq(4, -2), pre=k["four"], shift=1)
    expect_series("pod4 generating function split by parity", ps.make(pod), whole)


def _c11(ctx: Context, k: dict):
    pod = ctx.pod4
    for n in range(ctx.cap(ctx.span(4, 2))):
        expect_value("pod4(4n+2) mod 2", n, pod[4 * n + 2], 0, 2)
    for n in range(ctx.cap(ctx.span(2, 1))):
        r = isqrt(4 * n + 1)
        target = k["pronic_residue"] if r * r == 4 * n + 1 else 0
        expect_value("pod4(2n+1) mod 8", n, pod[2 * n + 1], target, 8)
    odd = ps.make(pod[1::2])
    cube = jacobi_cube(odd.precision)
    expect_series("(q^2;q^2)^3 = Jacobi sum", eval_product(ProductSpec((qq(2, 3),)), odd.precision), cube)
    expect_series("odd part = 4 (q^2;q^2)^3 mod 8", odd, ps.scale(cube, 4), 8)


def _c12(ctx: Context, k: dict):
    s, t, N = ctx.s, ctx.t, ctx.N
    q = ctx.q
    st3 = s ** 3 + q(3) * t ** 3
    quad = s ** 2 - q(1) * s * t + q(2) * t ** 2

    sec = ps.section(quad ** 4, 2, 3)
    exact = q(2) * (k["c10"] * s ** 6 * t ** 2 - 16 * q(3) * s ** 3 * t ** 5 + q(6) * t ** 8)
    expect_series("q^(3k+2) part of quad^4, exact form", sec, exact)
    expect_series("q^(3k+2) part of quad^4 mod 9", exact, q(2) * t ** 2 * st3 ** 2, 9)

    sec = ps.section(quad ** 8, 1, 3)
    exact = q(1) * (
        -8 * s ** 15 * t + 266 * q(3) * s ** 12 * t ** 4 - 1016 * q(6) * s ** 9 * t ** 7
        + 784 * q(9) * s ** 6 * t ** 10 - 112 * q(12) * s ** 3 * t ** 13 + q(15) * t ** 16
    )
    expect_series("q^(3k+1) part of quad^8, exact form", sec, exact)
    expect_series("q^(3k+1) part of quad^8 mod 9", exact, q(1) * t * st3 ** 5, 9)
    expect_series(
        "q^(3k+1) part of quad^8 mod 81", exact,
        q(1) * t * st3 ** 3 * (-8 * s ** 6 - 34 * q(3) * s ** 3 * t ** 3 + q(6) * t ** 6), 81,
    )

    sec = ps.section(quad ** 12, 0, 3)
    c = (1, -352, 8074, -43252, 73789, -43252, 8074, -352, 1)
    exact = ps.zero(N)
    for j, cj in enumerate(c):
        exact = exact + ps.scale(q(3 * j) * s ** (24 - 3 * j) * t ** (3 * j), cj)
    expect_series("q^(3k) part of quad^12, exact form", sec, exact)
    expect_series("q^(3k) part of quad^12 mod 9", exact, st3 ** 8, 9)

    # q^(3k+1) part of psi(q^3)^4/psi(q)^8 mod 81, cleared by psi(q^3)^16
    psi3, psi9 = ctx.psi_k(3), ctx.t
    quot = ps.power(psi3, 4) * ps.invert(ps.power(ctx.psi, 8))
    lhs = ps.section(quot, 1, 3) * ps.power(psi3, 16)
    rhs = (
        -8 * q(1) * psi9 ** 4 * psi3 ** 8
        - 18 * q(4) * psi9 ** 8 * psi3 ** 4
        + 27 * q(7) * psi9 ** 12
    )
    expect_series("q^(3k+1) part of psi(q^3)^4/psi(q)^8 mod 81", lhs, rhs, 81)


def _c13(ctx: Context, k: dict):
    bad = []
    for p, m, r in ctx.params.prime_instances:
        if not (p >= 3 and is_prime(p)):
            bad.append(f"({p},{m},{r}): p must be an odd prime")
        elif m < 1 or (m + 1) % p:
            bad.append(f"({p},{m},{r}): m must be positive and = -1 mod p")
        elif r < 0 or is_qr(8 * r + 1, p) is not QR.NONRESIDUE:
            bad.append(f"({p},{m},{r}): 8r+1 is not a non-residue mod p")
    if bad:
        raise Skipped("; ".join(bad))
    for p, m, r in ctx.params.prime_instances:
        pod = ctx.pod(m)
        mod = p ** k["power"]
        for n in range(ctx.cap(ctx.span(p, r))):
            expect_value(f"pod_{m}({p}n+{r}) mod {mod}", n, pod[p * n + r], 0, mod)


def _c14(ctx: Context, k: dict):
    pod = ctx.pod4
    m = k["modulus"]
    for r in (2, 4):
        for n in range(ctx.cap(ctx.span(5, r))):
            expect_value(f"pod4(5n+{r}) mod {m}", n, pod[5 * n + r], 0, m)


def _c15(ctx: Context, k: dict):
    N = ctx.N
    A, B = a5(N), b5(N)
    rhs = ps.subst_qk(A, 5) + ps.shift(ps.subst_qk(B, 5), 1) + ps.shift(ctx.psi_k(25), k["psi25_shift"])
    expect_series("psi(q) = A(q^5) + q B(q^5) + q^3 psi(q^25)", ctx.psi, rhs)
    expect_series("A(q) as a bilateral theta sum", A, bilateral_theta(5, 1, N))
    expect_series("B(q) as a bilateral theta sum", B, bilateral_theta(5, 3, N))


def _c16(ctx: Context, k: dict):
    pod = ctx.pod4
    for n in range(ctx.cap(ctx.span(5, 3))):
        lhs = pod[5 * n + 3]
        rhs = (-1) ** ((n + k["sign_shift"]) & 1) * sigma(2 * n + 1)
        expect_value("pod4(5n+3) vs (-1)^(n+1) sigma(2n+1)", n, lhs, rhs, 5)
        expect_value("5 | pod4(5n+3) vs criterion", n, int(lhs % 5 == 0), int(crit_mod5(n)))


REGISTRY = (
    Check("C1", "Lemma 2.1", "(q;q)^(p^a) = (q^p;q^p)^(p^(a-1)) mod p^a and psi(q)^p = psi(q^p) mod p",
          _c1, {"extra_power": 0}, ("extra_power", 1)),
    Check("C2", "3-dissection of psi", "psi(q) = A(q^3) + q psi(q^9)", _c2, {"q_coeff": 1}, ("q_coeff", 2)),
    Check("C3", "Lemma 2.2", "s^3 + q^3 t^3 and s^2 - qst + q^2 t^2 identities",
          _c3, {"q3_coeff": 1}, ("q3_coeff", 2)),
    Check("C4", "Theorem 2.3", "signed 3^a-sections of pod4 = +-psi(q^3)^4/psi(q)^8 mod 9",
          _c4, {"modulus": 9}, ("modulus", 27)),
    Check("C5", "Corollary 2.4", "pod4(3n+2) = (-1)^n sigma(2n+1) mod 3, with divisibility criterion",
          _c5, {"sign": -1}, ("sign", 1)),
    Check("C6", "Theorem 2.5", "pod4(3^(a+1) n + (5*3^a+1)/2) = 0 mod 9", _c6, {"modulus": 9}, ("modulus", 27)),
    Check("C7", "Theorem 3.1", "internal congruences between pod4(27n+b) and pod4(9n+d)",
          _c7, {"mod81": 81}, ("mod81", 243)),
    Check("C8", "Lemma 3.2", "pod4(3n+2) and pod4(9n+5) as psi quotients", _c8, {"c36": 36}, ("c36", 35)),
    Check("C9", "Remark after Theorem 3.1", "golden sums 126, 20736, 1039851", _c9, {"g1": 126}, ("g1", 127)),
    Check("C10", "Theorem 4.1", "2-dissection of the pod4 generating function", _c10, {"four": 4}, ("four", 5)),
    Check("C11", "Theorem 4.2", "pod4(4n+2) = 0 mod 2; pod4(2n+1) = 4 or 0 mod 8 by pronic n",
          _c11, {"pronic_residue": 4}, ("pronic_residue", 0)),
    Check("C12", "proof-internal s,t congruences", "sections of (s^2 - qst + q^2 t^2)^k and psi quotients",
          _c12, {"c10": 10}, ("c10", 11)),
    Check("C13", "Theorem 4.3", "pod_{-m}(pn+r) = 0 mod p when 8r+1 is a non-residue",
          _c13, {"power": 1}, ("power", 2)),
    Check("C14", "Corollary 4.4", "pod4(5n+2) = pod4(5n+4) = 0 mod 5", _c14, {"modulus": 5}, ("modulus", 25)),
    Check("C15", "Lemma 4.5", "psi(q) = A(q^5) + q B(q^5) + q^3 psi(q^25)",
          _c15, {"psi25_shift": 3}, ("psi25_shift", 2)),
    Check("C16", "Theorem 4.6", "pod4(5n+3) = (-1)^(n+1) sigma(2n+1) mod 5, with divisibility criterion",
          _c16, {"sign_shift": 1}, ("sign_shift", 0)),
)

_BY_ID = {c.id: c for c in REGISTRY}


def list_checks() -> list:
    """(check id, statement label, default params) in registry order."""
    defaults = CheckParams().to_dict()
    return [(c.id, c.statement, defaults) for c in REGISTRY]


def run_check(check_id: str, params: Optional[CheckParams] = None, overrides: Optional[dict] = None) -> Report:
    """Run one check.  ``overrides`` replaces entries of its constant table."""
    if check_id not in _BY_ID:
        raise KeyError(f"unknown check {check_id!r}; valid ids: {', '.join(_BY_ID)}")
    check = _BY_ID[check_id]
    params = params or CheckParams()
    consts = dict(check.constants)
    if overrides:
        unknown = set(overrides) - set(consts)
        if unknown:
            raise KeyError(f"{check_id} has no constants {sorted(unknown)}")
        consts.update(overrides)
    start = time.perf_counter()
    witness = None
    problem = params.problem()
    if problem:
        status, witness = "skipped", {"reason": problem}
    else:
        try:
            witness = check.run(Context(params), consts)
            status = "pass"
        except Failed as exc:
            status, witness = "fail", exc.witness
        except Skipped as exc:
            status, witness = "skipped", {"reason": str(exc)}
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    return Report(check.id, check.statement, params.to_dict(), status, witness, elapsed)


def run_all(params: Optional[CheckParams] = None, ids=None) -> list:
    ids = list(_BY_ID) if ids is None else list(ids)
    reports = [run_check(i, params) for i in ids]
    order = {c.id: n for n, c in enumerate(REGISTRY)}
    return sorted(reports, key=lambda r: order[r.id])


def serialize(reports, timing: bool = True) -> str:
    doc = {
        "reports": [r.to_dict(timing) for r in reports],
        "all_passed": all(r.passed for r in reports),
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def deserialize(text: str) -> list:
    return [Report.from_dict(d) for d in json.loads(text)["reports"]]


def mod9_progressions(alpha_max: int, limit: int) -> list:
    """Members below ``limit`` of {3^(a+1) n + (5*3^a+1)/2} for a = 1..alpha_max."""
    out = []
    for alpha in range(1, alpha_max + 1):
        a, b = 3 ** (alpha + 1), (5 * 3 ** alpha + 1) // 2
        out.append(set(range(b, limit, a)))
    return out
