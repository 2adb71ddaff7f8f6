"""Exit criteria.  Each test prints one [PASS]/[FAIL] line in the summary."""

import json
import time
from math import isqrt

import ring_laws
from podlab import pseries as ps
from podlab import partitions, qproducts
from podlab.cli import run
from podlab.congruences import CheckParams, run_check
from podlab.numthy import crit_mod3, crit_mod5, factorize, sigma
from podlab.partitions import pod_dp_table, pod_enum, pod_series, t4_table
from podlab.qproducts import jacobi_cube, pochhammer, qq


def _cold():
    for f in (pod_series, partitions.pod_dp_table, partitions._single_table, partitions.t4_table,
              qproducts.psi, qproducts.pochhammer, qproducts._base_product):
        f.cache_clear()


def test_ac1_golden_values(criterion):
    with criterion("AC1 golden sums 126 / 20736 / 1039851 and factorizations, < 1 s"):
        _cold()
        start = time.perf_counter()
        p = pod_series(4, 24).coeffs
        sums = (p[5] + p[2], p[14] + p[5], p[23] + p[8])
        facs = tuple(factorize(s).as_dict() for s in sums)
        elapsed = time.perf_counter() - start
        assert sums == (126, 20736, 1039851)
        assert facs == ({2: 1, 3: 2, 7: 1}, {2: 8, 3: 4}, {3: 3, 19: 1, 2027: 1})
        assert elapsed < 1.0


def test_ac2_full_check_suite(criterion):
    with criterion("AC2 verify --check all at N=500, alpha_max=3: 16/16 pass in < 60 s; mutation located"):
        _cold()
        start = time.perf_counter()
        code, out = run(["verify", "--check", "all", "--precision", "500", "--alpha-max", "3", "--format", "json"])
        elapsed = time.perf_counter() - start
        doc = json.loads(out)
        assert code == 0
        assert len(doc["reports"]) == 16
        assert doc["all_passed"] is True
        assert all(r["status"] == "pass" for r in doc["reports"])
        assert elapsed < 60
        bad = run_check("C8", CheckParams(precision=500), overrides={"c36": 35})
        assert bad.status == "fail"
        assert bad.witness["exponent"] == 1


def test_ac3_oracle_equivalence(criterion):
    with criterion("AC3 pod_enum = pod_dp = series for k<=4, n<=30; pod_dp = series for k=4, n<300"):
        for k in (1, 2, 3, 4):
            series = pod_series(k, 31).coeffs
            dp = pod_dp_table(k, 30)
            assert all(pod_enum(k, n) == dp[n] == series[n] for n in range(31))
        assert pod_dp_table(4, 299) == pod_series(4, 300).coeffs


def test_ac4_t4_is_sigma(criterion):
    with criterion("AC4 t4(n) = sigma(2n+1) for n <= 2000"):
        table = t4_table(2000)
        assert all(table[n] == sigma(2 * n + 1) for n in range(2001))


def test_ac5_jacobi_identity(criterion):
    with criterion("AC5 (q^2;q^2)^3 = sum (-1)^k (2k+1) q^(k(k+1)) to N=400"):
        assert ps.eq_upto(pochhammer(qq(2, 3), 400), jacobi_cube(400), 400)


def test_ac6_criterion_equivalences(criterion):
    with criterion("AC6 crit_mod3 <=> 3 | pod4(3n+2), crit_mod5 <=> 5 | pod4(5n+3), n <= 1500"):
        pod = pod_series(4, 5 * 1500 + 4).coeffs
        for n in range(1501):
            assert crit_mod3(n) == (pod[3 * n + 2] % 3 == 0), n
            assert crit_mod5(n) == (pod[5 * n + 3] % 5 == 0), n


def test_ac7_mod8_structure(criterion):
    with criterion("AC7 pod4(2n+1) = 4 mod 8 exactly at pronic n <= 1000, else 0"):
        pronic = set()
        k = 0
        while k * (k + 1) <= 1000:
            pronic.add(k * (k + 1))
            k += 1
        assert len(pronic) == 32
        pod = pod_series(4, 2002).coeffs
        fours = {n for n in range(1001) if pod[2 * n + 1] % 8 == 4}
        zeros = {n for n in range(1001) if pod[2 * n + 1] % 8 == 0}
        assert fours == pronic
        assert zeros == set(range(1001)) - pronic
        assert all((isqrt(4 * n + 1) ** 2 == 4 * n + 1) == (n in pronic) for n in range(1001))


def test_ac8_property_suites(criterion):
    with criterion("AC8 ring axioms, dissection round-trip, invert soundness, mul paths: >= 1000 cases each"):
        laws = (ring_laws.ring_axioms, ring_laws.dissection_roundtrip,
                ring_laws.invert_soundness, ring_laws.multiplication_paths_agree)
        ring_laws.executed.clear()
        for law in laws:
            law()
        for law in laws:
            assert ring_laws.executed[law.__name__] >= 1000, law.__name__
