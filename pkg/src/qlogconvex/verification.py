"""Machine verification sweeps and the certificate they produce.

Each checkable statement becomes a claim record; the orchestrator gathers
records from every sweep into a single certificate whose verdict is the
conjunction of all outcomes.  Partial failures are captured in the record
list, never dropped, and two runs with the same configuration produce
byte-identical certificates except for the timestamp.

A deliberate honesty rule: the underlying theorems are statements about all
n, and a certificate only ever asserts the finite instances it actually
checked plus the grid-certified polynomial identities (which are genuine
proofs, by the degree-bound argument: a polynomial identity of degree d in a
parameter that holds at more than d integer points holds identically).
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass, field, asdict
from datetime import datetime, timezone
from fractions import Fraction

from . import proofpolys
from .criteria import (
    op_L,
    q_log_convex_direct,
    root_monotonicity_check,
    single_crossing,
)
from .exactcore import binom
from .families import DOMB_ARRAY, domb_number
from .hiprec import ccl_constant_bounds, fraction_to_decimal
from .polynomials import IntervalSign, Poly, sign_constant_on, sturm_count_roots
from .proofpolys import IdentityError

TOOL_VERSION = "0.1.0"

SERIES_TOLERANCE = Fraction(1, 10**28)

CLAIM_IDS = (
    "prop31", "prop32", "prop33", "claims123", "factorization", "cascade",
    "qlc_D", "qlc_W", "qlc_V", "qlc_F", "series", "monotonicity",
)

# Explicit boundary operator values L_t(a(n,0)) for n = 1..4, checked verbatim.
BOUNDARY_TABLE = {
    1: (4, 4),
    2: (8, 32, 24),
    3: (40, 320, 646, 152),
    4: (280, 3808, 14296, 7772, 860),
}

# The nine (n, t) pairs where a positive psi2(0) is ruled out directly.
CLAIM1_PAIRS = ((2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2), (4, 3))


@dataclass(frozen=True)
class ClaimRecord:
    """One verified (or failed) claim; all values kept as decimal strings."""

    claim: str
    params: dict[str, str]
    outcome: str  # "pass" | "fail"
    witness: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"


def _record(claim: str, params: dict, failures: list[str]) -> ClaimRecord:
    str_params = {k: str(v) for k, v in params.items()}
    if failures:
        return ClaimRecord(claim, str_params, "fail", {"first_failure": failures[0],
                                                       "failure_count": str(len(failures))})
    return ClaimRecord(claim, str_params, "pass")


def _error_record(claim: str, exc: Exception) -> ClaimRecord:
    return ClaimRecord(claim, {"error": type(exc).__name__}, "fail", {"message": str(exc)})


@dataclass(frozen=True)
class Certificate:
    """Machine-readable record of a verification run."""

    version: str
    parameters: dict[str, str]
    claims: tuple[ClaimRecord, ...]
    verdict: str
    timestamp: str

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "parameters": dict(self.parameters),
            "claims": [asdict(c) for c in self.claims],
            "verdict": self.verdict,
            "timestamp": self.timestamp,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        claims = tuple(
            ClaimRecord(c["claim"], dict(c["params"]), c["outcome"], dict(c["witness"]))
            for c in data["claims"]
        )
        return cls(data["version"], dict(data["parameters"]), claims,
                   data["verdict"], data["timestamp"])

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


@dataclass
class VerificationConfig:
    """Bounds and output knobs for a full verification run."""

    n_max_direct: int = 150
    n_max_factorization: int = 60
    n_max_sturm: int = 100
    series_N: int = 100
    series_digits: int = 40
    parallelism: int = 1
    cache_path: str | None = None
    output_format: str = "json"
    n_max_monotonicity: int = 300
    n_max_root_ratio: int = 120

    def validate(self) -> None:
        bounds = (self.n_max_direct, self.n_max_factorization, self.n_max_sturm,
                  self.series_N, self.parallelism, self.n_max_monotonicity,
                  self.n_max_root_ratio)
        if any(b < 1 for b in bounds):
            raise ValueError("all verification bounds must be >= 1")
        if self.series_digits < 10:
            raise ValueError("series_digits must be at least 10")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    def as_parameters(self) -> dict[str, str]:
        out = {k: ("" if v is None else str(v)) for k, v in vars(self).items()}
        out["series_tolerance"] = "1e-28"
        return out


# --- series ------------------------------------------------------------------

def chan_partial_sum(N: int) -> Fraction:
    """Exact partial sum of sum_n (5n+1) D_n(1) / 64^n."""
    if N < 0:
        raise ValueError("partial sum needs N >= 0")
    numerator = sum((5 * n + 1) * domb_number(n) * 64 ** (N - n) for n in range(N + 1))
    return Fraction(numerator, 64**N)


def series_claim(N: int, digits: int) -> ClaimRecord:
    """|partial sum - 8/(sqrt(3) pi)| < 1e-28, with a rigorous enclosure.

    The distance is bounded above by the distance to the far end of the
    constant's enclosure, so a pass is exact even though the limit is
    irrational.
    """
    partial = chan_partial_sum(N)
    lo, hi = ccl_constant_bounds(digits)
    distance_bound = max(abs(partial - lo), abs(partial - hi))
    params = {"N": N, "digits": digits, "tolerance": "1e-28"}
    witness = {
        "partial_sum": fraction_to_decimal(partial, digits),
        "constant_low": fraction_to_decimal(lo, digits),
        "constant_high": fraction_to_decimal(hi, digits),
        "distance_bound": fraction_to_decimal(distance_bound, digits),
    }
    outcome = "pass" if distance_bound < SERIES_TOLERANCE else "fail"
    return ClaimRecord("series", {k: str(v) for k, v in params.items()}, outcome, witness)


# --- factorization -----------------------------------------------------------

@dataclass(frozen=True)
class FactorizationCheck:
    """Both sides of the operator factorization at one (n, t, k) cell."""

    n: int
    t: int
    k: int
    lhs: int
    rhs: int
    identity_ok: bool
    sign_ok: bool

    @property
    def passed(self) -> bool:
        return self.identity_ok and self.sign_ok


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def factorization_check(n: int, t: int, k: int) -> FactorizationCheck:
    """Check L_t(a(n,k)) * denominator == binomial prefactor * psi(n,t)(k).

    The denominator factors are odd or positive integers and never vanish
    on the admissible ranges; (2n-2t+2k-1) is the lone negative one, at
    t = n, k = 0, which is exactly where the signs of L and psi flip.
    """
    L = op_L(DOMB_ARRAY, n, t, k)
    denominator = (
        n**2 * (n - k + 1) ** 3 * (n - t + k + 1) ** 3
        * (2 * n - 2 * k - 1) * (2 * n - 2 * t + 2 * k - 1)
    )
    lhs = L * denominator
    psi_value = proofpolys.psi_poly(n, t)(k)
    prefactor = (
        binom(n, k) ** 2 * binom(2 * n - 2 * k, n - k)
        * binom(n, t - k) ** 2 * binom(2 * n - 2 * t + 2 * k, n - t + k)
    )
    rhs = prefactor * psi_value
    if t == n and k == 0:
        sign_ok = _sign(L) == -_sign(psi_value)
    else:
        sign_ok = _sign(L) == _sign(psi_value)
    return FactorizationCheck(n, t, k, lhs, rhs, lhs == rhs, sign_ok)


def _factorization_row(n: int) -> tuple[int, list[str]]:
    failures = []
    for t in range(n + 1):
        for k in range(t // 2 + 1):
            check = factorization_check(n, t, k)
            if not check.passed:
                kind = "identity" if not check.identity_ok else "sign"
                failures.append(
                    f"{kind} failure at (n={n}, t={t}, k={k}): lhs={check.lhs}, rhs={check.rhs}"
                )
    return n, failures


def factorization_sweep(n_max: int, jobs: int = 1) -> list[ClaimRecord]:
    """Exact factorization identity and sign coincidence for all cells up to n_max."""
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            rows = pool.map(_factorization_row, range(1, n_max + 1))
    else:
        rows = [_factorization_row(n) for n in range(1, n_max + 1)]
    return [_record("factorization", {"n": n, "t_range": f"0..{n}"}, failures)
            for n, failures in rows]


# --- boundary nonnegativity (k = 0) ------------------------------------------

def verify_prop31(n_max: int, include_sturm: bool = True) -> list[ClaimRecord]:
    """L_t(a(n,0)) >= 0: explicit table for n <= 4, sign analysis beyond.

    For n >= 5 the record certifies theta(n) < 0, theta(t) > 0 at all
    integers t < n and the operator values themselves; optionally it also
    certifies the derivative scaffolding via Sturm counts on (0, n-1):
    exactly one root for theta'''' and theta''', two for theta'' and
    theta', with the endpoint signs that pin the shape of theta.
    """
    records = []
    table_failures = []
    for n, expected_row in BOUNDARY_TABLE.items():
        if n > n_max:
            continue
        actual = tuple(op_L(DOMB_ARRAY, n, t, 0) for t in range(n + 1))
        if actual != expected_row:
            table_failures.append(f"boundary row n={n}: {actual} != {expected_row}")
    records.append(_record("prop31", {"part": "table", "n": 0}, table_failures))

    for n in range(1, n_max + 1):
        failures = []
        for t in range(n + 1):
            if op_L(DOMB_ARRAY, n, t, 0) < 0:
                failures.append(f"operator negative at (n={n}, t={t}, k=0)")
        if n >= 5:
            try:
                bundle = proofpolys.build_theta(n)
            except IdentityError as exc:
                records.append(_record("prop31", {"part": "theta", "n": n}, [str(exc)]))
                continue
            theta = bundle.theta
            if not theta(n) < 0:
                failures.append(f"theta(n) not negative at n={n}")
            for t in range(n):
                if not theta(t) > 0:
                    failures.append(f"theta({t}) not positive at n={n}")
            if include_sturm:
                th1, th2, th3, th4 = bundle.derivatives
                half_n = Fraction(n, 2)
                scaffolding = (
                    (sturm_count_roots(th4, 0, n - 1) == 1, "theta'''' root count"),
                    (sturm_count_roots(th3, 0, n - 1) == 1, "theta''' root count"),
                    (th3(0) < 0 < th3(n - 1), "theta''' endpoint signs"),
                    (sturm_count_roots(th2, 0, n - 1) == 2, "theta'' root count"),
                    (th2(0) > 0 and th2(half_n) < 0 and th2(n - 1) > 0, "theta'' sign pattern"),
                    (sturm_count_roots(th1, 0, n - 1) == 2, "theta' root count"),
                    (th1(0) < 0 and th1(1) > 0 and th1(n - 1) < 0, "theta' sign pattern"),
                )
                for ok, what in scaffolding:
                    if not ok:
                        failures.append(f"{what} failed at n={n}")
        records.append(_record("prop31", {"part": "theta" if n >= 5 else "operator", "n": n},
                               failures))
    return records


# --- interior crossing for t < n ----------------------------------------------

def verify_prop32(n_max: int) -> list[ClaimRecord]:
    """Single crossing of psi(n,t) at integer points for 0 <= t <= n - 1.

    Also certifies the midpoint values that drive the argument: psi1(t/2)
    and psi3(t/2) strictly positive, psi2(t/2) strictly negative, each
    matching its closed form (including the dedicated n = 2 and n = 3
    shapes of the psi1 form).
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    records = []
    for n in range(2, n_max + 1):
        failures = []
        for t in range(n):
            try:
                bundle = proofpolys.build_psi(n, t)
            except IdentityError as exc:
                failures.append(str(exc))
                continue
            mid = Fraction(t, 2)
            if not bundle.psi(0) >= 0:
                failures.append(f"psi(0) negative at (n={n}, t={t})")
            values = [bundle.psi(k) for k in range(1, t // 2 + 1)]
            if values and not single_crossing(values).ok:
                failures.append(f"crossing pattern broken at (n={n}, t={t})")
            p1_mid = bundle.psi1(mid)
            if p1_mid != proofpolys.psi1_half_closed(n, t):
                failures.append(f"psi1 midpoint form mismatch at (n={n}, t={t})")
            if n == 2 and p1_mid != proofpolys.psi1_half_closed_n2(t):
                failures.append(f"psi1 midpoint n=2 form mismatch at t={t}")
            if n == 3 and p1_mid != proofpolys.psi1_half_closed_n3(t):
                failures.append(f"psi1 midpoint n=3 form mismatch at t={t}")
            if not p1_mid > 0:
                failures.append(f"psi1 midpoint not positive at (n={n}, t={t})")
            p2_mid = bundle.psi2(mid)
            if p2_mid != proofpolys.psi2_half_closed(n, t):
                failures.append(f"psi2 midpoint form mismatch at (n={n}, t={t})")
            if not p2_mid < 0:
                failures.append(f"psi2 midpoint not negative at (n={n}, t={t})")
            p3_mid = bundle.psi3(mid)
            if p3_mid != proofpolys.psi3_half_closed(n, t):
                failures.append(f"psi3 midpoint form mismatch at (n={n}, t={t})")
            if not p3_mid > 0:
                failures.append(f"psi3 midpoint not positive at (n={n}, t={t})")
        records.append(_record("prop32", {"n": n, "t_range": f"0..{n - 1}"}, failures))
    return records


# --- crossing on the diagonal t = n --------------------------------------------

def verify_prop33(n_max: int) -> list[ClaimRecord]:
    """Single crossing of psi(n,n) at integer points k >= 1, with endpoint signs.

    Every displayed endpoint value is matched against its closed form for
    all n; the strict positivity of psi(n,n)(1) is asserted from n = 3 on,
    since the value at n = 2 is -80 (the all-nonpositive value list there
    still satisfies the crossing shape with an empty positive prefix).
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    records = []
    for n in range(2, n_max + 1):
        failures = []
        try:
            bundle = proofpolys.build_psi_nn(n)
        except IdentityError as exc:
            records.append(_record("prop33", {"n": n}, [str(exc)]))
            continue
        for label, builder, point, closed, sign, min_n in proofpolys.NN_ENDPOINT_FORMS:
            value = builder(n)(Fraction(point(n)))
            if value != Fraction(closed(n)):
                failures.append(f"{label} form mismatch at n={n}")
            if n >= min_n and _sign(value) != (1 if sign == "+" else -1):
                failures.append(f"{label} sign claim failed at n={n}")
        values = [bundle.psi(k) for k in range(1, n // 2 + 1)]
        if values and not single_crossing(values).ok:
            failures.append(f"diagonal crossing pattern broken at n={n}")
        records.append(_record("prop33", {"n": n}, failures))
    return records


# --- the xi / eta negativity claims --------------------------------------------

def verify_claims(n_max: int) -> list[ClaimRecord]:
    """The three negativity claims that force psi1(0) < 0 when psi2(0) > 0.

    Claim 1 rules out n = 2, 3, 4 by direct evaluation at nine pairs;
    Claim 2 certifies xi < 0 on [3n/4, n-1]; Claim 3 certifies eta < 0 on
    [0, 3n/4].  Interval negativity is Sturm-certified (no sampling), with
    exact endpoint evaluations against the displayed closed forms.
    """
    records = []
    claim1_failures = []
    for n, t in CLAIM1_PAIRS:
        if proofpolys.eta_poly(n)(t) >= 0:
            claim1_failures.append(f"psi2(0) not negative at (n={n}, t={t})")
    records.append(_record("claims123", {"part": "claim1", "n": 0}, claim1_failures))

    xi_eta_lookup = {label: (builder, order, point, closed, sign, min_n)
                     for label, builder, order, point, closed, sign, min_n
                     in proofpolys.XI_ETA_ENDPOINT_FORMS}

    for n in range(4, n_max + 1):
        failures = []
        xi = proofpolys.xi_poly(n)
        eta = proofpolys.eta_poly(n)

        for label in ("xi(n-1)", "xi(3n/4)"):
            _, order, point, closed, _sign_sym, _min_n = xi_eta_lookup[label]
            value = xi(Fraction(point(n)))
            if value != Fraction(closed(n)):
                failures.append(f"{label} form mismatch at n={n}")
            if not value < 0:
                failures.append(f"{label} not negative at n={n}")
        lo, hi = Fraction(3 * n, 4), Fraction(n - 1)
        if lo == hi:
            if not xi(lo) < 0:
                failures.append(f"xi not negative at the degenerate interval point, n={n}")
        elif sign_constant_on(xi, lo, hi) is not IntervalSign.NEGATIVE:
            failures.append(f"xi not negative on [3n/4, n-1] at n={n}")

        for label in ("eta(0)", "eta(3n/4)"):
            _, order, point, closed, _sign_sym, _min_n = xi_eta_lookup[label]
            value = eta(Fraction(point(n)))
            if value != Fraction(closed(n)):
                failures.append(f"{label} form mismatch at n={n}")
            if not value < 0:
                failures.append(f"{label} not negative at n={n}")
        if sign_constant_on(eta, 0, Fraction(3 * n, 4)) is not IntervalSign.NEGATIVE:
            failures.append(f"eta not negative on [0, 3n/4] at n={n}")
        eta2 = eta.derivative().derivative()
        axis = -Fraction(eta2.coefficient(1), 2 * eta2.coefficient(2))
        if axis != -(Fraction(n) - Fraction(3, 4)):
            failures.append(f"eta'' axis mismatch at n={n}")
        records.append(_record("claims123", {"part": "claims23", "n": n}, failures))
    return records


# --- grid-certified polynomial identities --------------------------------------

GRID_IDENTITIES = (
    "cascade",
    "specialization",
    "xi_extraction",
    "eta_extraction",
    "theta_link",
    "midpoint_forms",
    "theta_endpoint_forms",
    "xi_eta_endpoint_forms",
    "nn_endpoint_forms",
)

# Expanded degree bounds of the identities: degree <= 8 in n, <= 6 in t.
# Grids of 17 n-values and 18 t-values therefore prove the identities.
_GRID_N = range(1, 18)
_GRID_T = range(0, 18)
_FORM_GRID_N = range(1, 21)


def identity_grid_check(identity: str) -> ClaimRecord:
    """Certify one parametric identity by exhaustive exact checks on a grid.

    The grids strictly exceed the expanded degree bound in each parameter,
    so a clean sweep constitutes a proof of the identity, not merely
    evidence.  Failures report the first offending grid point.
    """
    failures: list[str] = []

    if identity == "cascade":
        for n in _GRID_N:
            for t in _GRID_T:
                psi = proofpolys.psi_poly(n, t)
                psi1 = proofpolys.psi1_poly(n, t)
                psi2 = proofpolys.psi2_poly(n, t)
                psi3 = proofpolys.psi3_poly(n, t)
                checks = (
                    (psi.derivative(), Poly([-t, 2]) * psi1, "psi'"),
                    (psi1.derivative(), Poly([-2 * t, 4]) * psi2, "psi1'"),
                    (psi2.derivative(), Poly([-6 * t, 12]) * psi3, "psi2'"),
                )
                for lhs, rhs, label in checks:
                    if lhs != rhs:
                        failures.append(f"{label} cascade fails at (n={n}, t={t})")
        params = {"identity": identity, "grid": "n=1..17, t=0..17"}

    elif identity == "specialization":
        for n in _GRID_N:
            pairs = (
                (proofpolys.psi_nn_poly(n), proofpolys.psi_poly(n, n), "psi"),
                (proofpolys.psi1_nn_poly(n), proofpolys.psi1_poly(n, n), "psi1"),
                (proofpolys.psi2_nn_poly(n), proofpolys.psi2_poly(n, n), "psi2"),
                (proofpolys.psi3_nn_poly(n), proofpolys.psi3_poly(n, n), "psi3"),
            )
            for expanded, general, label in pairs:
                if expanded != general:
                    failures.append(f"{label} specialization fails at n={n}")
        params = {"identity": identity, "grid": "n=1..17"}

    elif identity == "xi_extraction":
        for n in _GRID_N:
            xi = proofpolys.xi_poly(n)
            for t in _GRID_T:
                if (n + 1) ** 2 * xi(t) != proofpolys.psi1_poly(n, t)(0):
                    failures.append(f"xi extraction fails at (n={n}, t={t})")
        params = {"identity": identity, "grid": "n=1..17, t=0..17"}

    elif identity == "eta_extraction":
        for n in _GRID_N:
            eta = proofpolys.eta_poly(n)
            for t in _GRID_T:
                if (n + 1) * eta(t) != proofpolys.psi2_poly(n, t)(0):
                    failures.append(f"eta extraction fails at (n={n}, t={t})")
        params = {"identity": identity, "grid": "n=1..17, t=0..17"}

    elif identity == "theta_link":
        for n in _GRID_N:
            theta = proofpolys.theta_poly(n)
            for t in _GRID_T:
                if proofpolys.psi_poly(n, t)(0) != (n + 1) ** 2 * theta(t):
                    failures.append(f"psi(0) != (n+1)^2 theta(t) at (n={n}, t={t})")
        params = {"identity": identity, "grid": "n=1..17, t=0..17"}

    elif identity == "midpoint_forms":
        for n in _FORM_GRID_N:
            for t in _GRID_T:
                mid = Fraction(t, 2)
                p1 = proofpolys.psi1_poly(n, t)(mid)
                if p1 != proofpolys.psi1_half_closed(n, t):
                    failures.append(f"psi1 midpoint form fails at (n={n}, t={t})")
                if n == 2 and p1 != proofpolys.psi1_half_closed_n2(t):
                    failures.append(f"psi1 midpoint n=2 form fails at t={t}")
                if n == 3 and p1 != proofpolys.psi1_half_closed_n3(t):
                    failures.append(f"psi1 midpoint n=3 form fails at t={t}")
                if proofpolys.psi2_poly(n, t)(mid) != proofpolys.psi2_half_closed(n, t):
                    failures.append(f"psi2 midpoint form fails at (n={n}, t={t})")
                if proofpolys.psi3_poly(n, t)(mid) != proofpolys.psi3_half_closed(n, t):
                    failures.append(f"psi3 midpoint form fails at (n={n}, t={t})")
        params = {"identity": identity, "grid": "n=1..20, t=0..17"}

    elif identity == "theta_endpoint_forms":
        for n in _FORM_GRID_N:
            theta = proofpolys.theta_poly(n)
            chain = [theta]
            for _ in range(4):
                chain.append(chain[-1].derivative())
            for label, order, point, closed, _sign_sym, _min_n in proofpolys.THETA_ENDPOINT_FORMS:
                if chain[order](Fraction(point(n))) != Fraction(closed(n)):
                    failures.append(f"{label} fails at n={n}")
        params = {"identity": identity, "grid": "n=1..20"}

    elif identity == "xi_eta_endpoint_forms":
        for n in _FORM_GRID_N:
            for label, builder, order, point, closed, _sign_sym, _min_n in proofpolys.XI_ETA_ENDPOINT_FORMS:
                poly = builder(n)
                for _ in range(order):
                    poly = poly.derivative()
                if poly(Fraction(point(n))) != Fraction(closed(n)):
                    failures.append(f"{label} fails at n={n}")
        params = {"identity": identity, "grid": "n=1..20"}

    elif identity == "nn_endpoint_forms":
        for n in _FORM_GRID_N:
            for label, builder, point, closed, _sign_sym, _min_n in proofpolys.NN_ENDPOINT_FORMS:
                if builder(n)(Fraction(point(n))) != Fraction(closed(n)):
                    failures.append(f"{label} fails at n={n}")
        params = {"identity": identity, "grid": "n=1..20"}

    else:
        raise ValueError(f"unknown identity {identity!r}")

    return _record("cascade", params, failures)


# --- q-log-convexity and monotonicity claims ------------------------------------

def _qlc_claim(tag: str, n_max: int, jobs: int) -> ClaimRecord:
    witnesses = q_log_convex_direct(tag, n_max, jobs=jobs)
    failures = [
        f"negative defect coefficient {w.first_negative_coefficient_index} at n={w.n}"
        for w in witnesses if not w.passed
    ]
    return _record(f"qlc_{tag}", {"family": tag, "n_max": n_max}, failures)


def _monotonicity_claim(n_max: int, root_ratio_n_max: int) -> ClaimRecord:
    report = root_monotonicity_check(n_max, root_ratio_n_max)
    failures = []
    if report.ratio_first_failure is not None:
        failures.append(f"ratio growth fails at n={report.ratio_first_failure}")
    if report.nth_root_first_failure is not None:
        failures.append(f"nth-root growth fails at n={report.nth_root_first_failure}")
    if report.root_ratio_first_failure is not None:
        failures.append(f"root-ratio decrease fails at n={report.root_ratio_first_failure}")
    return _record("monotonicity",
                   {"n_max": n_max, "root_ratio_n_max": root_ratio_n_max}, failures)


# --- orchestration ---------------------------------------------------------------

def _sort_key(record: ClaimRecord):
    n = record.params.get("n", "")
    return (
        record.claim,
        record.params.get("part", ""),
        record.params.get("identity", ""),
        int(n) if n.lstrip("-").isdigit() else -1,
        sorted(record.params.items()),
    )


def run_full_verification(config: VerificationConfig | None = None) -> Certificate:
    """Run every sweep and assemble the certificate.

    Unexpected exceptions inside a sweep become failing claim records; the
    overall verdict is "pass" exactly when every record passed.
    """
    config = config or VerificationConfig()
    config.validate()
    jobs = config.parallelism

    # degenerate bounds leave a sweep empty rather than failing the certificate
    executors = [
        ("prop31", lambda: verify_prop31(config.n_max_sturm)),
        ("prop32", lambda: verify_prop32(config.n_max_factorization)
            if config.n_max_factorization >= 2 else []),
        ("prop33", lambda: verify_prop33(config.n_max_factorization)
            if config.n_max_factorization >= 2 else []),
        ("claims123", lambda: verify_claims(config.n_max_sturm)),
        ("factorization", lambda: factorization_sweep(config.n_max_factorization, jobs)),
        ("cascade", lambda: [identity_grid_check(i) for i in GRID_IDENTITIES]),
        ("qlc_D", lambda: [_qlc_claim("D", config.n_max_direct, jobs)]),
        ("qlc_W", lambda: [_qlc_claim("W", config.n_max_direct, jobs)]),
        ("qlc_V", lambda: [_qlc_claim("V", config.n_max_direct, jobs)]),
        ("qlc_F", lambda: [_qlc_claim("F", config.n_max_direct, jobs)]),
        ("series", lambda: [series_claim(config.series_N, config.series_digits)]),
        ("monotonicity", lambda: [_monotonicity_claim(config.n_max_monotonicity,
                                                      config.n_max_root_ratio)]
            if config.n_max_monotonicity >= 2 else []),
    ]

    claims: list[ClaimRecord] = []
    for claim_id, executor in executors:
        try:
            claims.extend(executor())
        except Exception as exc:  # a failed sweep must surface, never vanish
            claims.append(_error_record(claim_id, exc))

    claims.sort(key=_sort_key)
    verdict = "pass" if all(c.passed for c in claims) else "fail"
    return Certificate(
        version=TOOL_VERSION,
        parameters=config.as_parameters(),
        claims=tuple(claims),
        verdict=verdict,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )
