import json
from fractions import Fraction

import pytest

from qlogconvex.polynomials import Poly
from qlogconvex import proofpolys
from qlogconvex.verification import (
    BOUNDARY_TABLE,
    CLAIM1_PAIRS,
    Certificate,
    ClaimRecord,
    GRID_IDENTITIES,
    SERIES_TOLERANCE,
    VerificationConfig,
    chan_partial_sum,
    factorization_check,
    factorization_sweep,
    identity_grid_check,
    run_full_verification,
    series_claim,
    verify_claims,
    verify_prop31,
    verify_prop32,
    verify_prop33,
)
from qlogconvex.criteria import op_L
from qlogconvex.families import DOMB_ARRAY

SMALL_CONFIG = dict(
    n_max_direct=12,
    n_max_factorization=8,
    n_max_sturm=10,
    series_N=100,
    series_digits=40,
    n_max_monotonicity=12,
    n_max_root_ratio=8,
)


def test_boundary_table_is_the_published_list():
    flat = [v for row in BOUNDARY_TABLE.values() for v in row]
    assert flat == [4, 4, 8, 32, 24, 40, 320, 646, 152, 280, 3808, 14296, 7772, 860]
    for n, row in BOUNDARY_TABLE.items():
        assert row == tuple(op_L(DOMB_ARRAY, n, t, 0) for t in range(n + 1))


def test_factorization_hand_checked_cell():
    check = factorization_check(2, 2, 1)
    assert check.lhs == check.rhs == -5120
    assert check.passed


def test_factorization_trivial_cell():
    check = factorization_check(1, 0, 0)
    assert check.identity_ok and check.sign_ok
    assert op_L(DOMB_ARRAY, 1, 0, 0) == 4


def test_factorization_excluded_cell_flips_sign():
    n = 5
    check = factorization_check(n, n, 0)
    assert check.identity_ok
    assert check.sign_ok  # "sign_ok" encodes the expected opposite signs there
    assert 2 * n - 2 * n + 2 * 0 - 1 == -1  # the lone negative denominator factor
    assert op_L(DOMB_ARRAY, n, n, 0) > 0
    assert proofpolys.psi_poly(n, n)(0) < 0


def test_factorization_sweep_small():
    records = factorization_sweep(10)
    assert len(records) == 10
    assert all(r.passed for r in records)


def test_factorization_sweep_parallel_matches_serial():
    assert factorization_sweep(6, jobs=2) == factorization_sweep(6, jobs=1)


def test_verify_prop31_small():
    records = verify_prop31(10)
    assert all(r.passed for r in records)
    parts = {r.params["part"] for r in records}
    assert parts == {"table", "operator", "theta"}


def test_verify_prop32_small():
    records = verify_prop32(10)
    assert len(records) == 9
    assert all(r.passed for r in records)
    # the displayed instance: psi1 positive at the axis for (n, t) = (4, 3)
    assert proofpolys.psi1_poly(4, 3)(Fraction(3, 2)) > 0


def test_verify_prop33_small():
    records = verify_prop33(10)
    assert all(r.passed for r in records)
    # n = 2 passes through its documented exception
    n2 = [r for r in records if r.params["n"] == "2"]
    assert len(n2) == 1 and n2[0].passed


def test_verify_claims_small():
    records = verify_claims(12)
    assert all(r.passed for r in records)
    assert records[0].params["part"] == "claim1"
    assert len(CLAIM1_PAIRS) == 9
    for n, t in CLAIM1_PAIRS:
        assert proofpolys.eta_poly(n)(t) < 0


@pytest.mark.parametrize("identity", GRID_IDENTITIES)
def test_identity_grid_checks_pass(identity):
    record = identity_grid_check(identity)
    assert record.passed, record.witness
    assert record.claim == "cascade"


def test_identity_grid_rejects_unknown():
    with pytest.raises(ValueError):
        identity_grid_check("nonsense")


def test_chan_partial_sums():
    assert chan_partial_sum(0) == 1
    assert chan_partial_sum(1) == Fraction(11, 8)
    with pytest.raises(ValueError):
        chan_partial_sum(-1)


def test_series_claim_passes_at_n100():
    record = series_claim(100, 40)
    assert record.passed
    bound = Fraction(record.witness["distance_bound"])
    assert bound < SERIES_TOLERANCE


def test_series_claim_fails_at_n1():
    record = series_claim(1, 40)
    assert not record.passed
    assert record.witness["partial_sum"].startswith("1.375")


def test_degenerate_bounds_give_valid_certificate():
    config = VerificationConfig(
        n_max_direct=1, n_max_factorization=1, n_max_sturm=1, series_N=1,
        n_max_monotonicity=1, n_max_root_ratio=1,
    )
    certificate = run_full_verification(config)
    claim_ids = {c.claim for c in certificate.claims}
    assert "prop32" not in claim_ids and "monotonicity" not in claim_ids
    # nothing errored: the only failure is the (honestly) unconverged series
    failing = [c for c in certificate.claims if not c.passed]
    assert [c.claim for c in failing] == ["series"]
    assert not any("error" in c.params for c in certificate.claims)
    assert Certificate.loads(certificate.dumps()) == certificate


def test_config_validation():
    VerificationConfig().validate()
    with pytest.raises(ValueError):
        VerificationConfig(n_max_direct=0).validate()
    with pytest.raises(ValueError):
        VerificationConfig(series_digits=5).validate()
    with pytest.raises(ValueError):
        VerificationConfig(output_format="yaml").validate()


def test_certificate_round_trip():
    certificate = run_full_verification(VerificationConfig(**SMALL_CONFIG))
    assert certificate.passed
    text = certificate.dumps()
    assert Certificate.loads(text) == certificate
    # numbers live as decimal strings in the serialized document
    data = json.loads(text)
    assert data["parameters"]["n_max_direct"] == "12"


def test_certificate_verdict_reflects_failures():
    failing = ClaimRecord("series", {"N": "1"}, "fail", {"reason": "tolerance"})
    passing = ClaimRecord("series", {"N": "100"}, "pass")
    assert not failing.passed and passing.passed


def test_certificate_determinism():
    first = run_full_verification(VerificationConfig(**SMALL_CONFIG))
    second = run_full_verification(VerificationConfig(**SMALL_CONFIG))
    a, b = first.to_dict(), second.to_dict()
    a.pop("timestamp"), b.pop("timestamp")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_fault_injection_flips_verdict(monkeypatch):
    original = proofpolys.psi1_poly

    def tampered(n, t):
        poly = original(n, t)
        if (n, t) == (7, 4):
            coeffs = list(poly.coeffs)
            coeffs[2] += 1
            return Poly(coeffs)
        return poly

    monkeypatch.setattr(proofpolys, "psi1_poly", tampered)
    certificate = run_full_verification(VerificationConfig(**SMALL_CONFIG))
    assert certificate.verdict == "fail"
    failing = [c for c in certificate.claims if not c.passed]
    assert failing
    pinpointed = [c for c in failing if "n=7" in str(c.witness) and "t=4" in str(c.witness)]
    assert pinpointed, [c.witness for c in failing]


def test_run_captures_executor_errors(monkeypatch):
    def explode(*args, **kwargs):
        raise RuntimeError("sweep blew up")

    monkeypatch.setattr("qlogconvex.verification.verify_prop32", explode)
    certificate = run_full_verification(VerificationConfig(**SMALL_CONFIG))
    assert certificate.verdict == "fail"
    errors = [c for c in certificate.claims if c.params.get("error") == "RuntimeError"]
    assert errors and errors[0].witness["message"] == "sweep blew up"
