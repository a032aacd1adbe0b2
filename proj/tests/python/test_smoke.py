from fractions import Fraction
import math

import pytest

import cyclocert as cc


def test_fixtures():
    assert cc.build_q(0) == [3, -5, 1]
    assert cc.build_P(1) == [1, -1, -1, -1, 1, -1, -1, -1, 1]
    m, R = cc.minimal_polys(1)
    assert m == [5, -3, -2, 1]
    assert R == [1, -2, 0, 1, 0, -2, 1]


def test_family_record():
    f = cc.build_family(4)
    assert f["consistent"]
    assert f["has_phi3"]
    assert all(f["checks"].values())
    assert len(f["digest"]) == 64


def test_big_coefficients_survive():
    q = cc.build_q(60)
    assert max(abs(c) for c in q) > 2**64
    assert cc.discriminant([3, -5, 1]) == 13
    assert cc.resultant([5, -3, -2, 1], [-3, -1, 1]) == -1


def test_cyclotomic():
    assert cc.cyclotomic_poly(12) == [1, 0, -1, 0, 1]
    entries, cofactor = cc.unity_root_indices(cc.build_P(1))
    assert entries == [(3, 1)]
    assert cofactor == cc.minimal_polys(1)[1]


def test_certificates():
    c = cc.find_certificate(2)
    assert c["verdict"] == "CertifiedNotGalois"
    assert c["certificate"]["p"] == 7
    assert c["certificate"]["pattern"] == [(1, 1), (1, 1), (4, 1)]
    assert cc.find_certificate(1, prime_bound=1000)["verdict"] == "NoCertificateWithinBound"
    assert not cc.galois_feasible([(1, 1), (1, 1), (4, 1)])
    assert cc.galois_feasible([(2, 1), (2, 1)])
    factors = cc.factor_mod_p([-7, -3, 14, 4, -7, -1, 1], 7)
    assert [f[0] for f in factors] == [[0, 1], [2, 1], [2, 6, 6, 4, 1]]


def test_pf_index():
    lo, hi = cc.pf_index(0, "1e-9")
    assert isinstance(lo, Fraction)
    assert hi - lo <= Fraction(1, 10**9)
    assert lo <= (5 + math.sqrt(13)) / 2 <= hi


def test_irreducible_and_claims():
    c = cc.certify_irreducible(3)
    assert c["proof_grade"] and c["evidence_grade"]
    assert cc.gcd_claims(1) == (5, True, True)
    assert cc.fermat_scan(5)["trace_in_base"] == 8


def test_errors():
    with pytest.raises(cc.CyclocertError):
        cc.gcd_claims(3)
    with pytest.raises(ValueError):
        cc.factor_mod_p([7, 14], 7)


def test_pipeline(tmp_path):
    records, code = cc.run_pipeline(1, 3, cache_dir=str(tmp_path))
    assert code == 0
    assert [r["j"] for r in records] == [1, 2, 3]
    assert records[0]["m"] == ["5", "-3", "-2", "1"]
    again, _ = cc.run_pipeline(1, 3, cache_dir=str(tmp_path))
    assert again == records
