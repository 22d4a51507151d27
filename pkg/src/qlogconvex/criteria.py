"""Log-convexity and q-log-convexity checkers and the triangular-array operators.

The central object is the bilinear operator on a triangular array a(n, k)

    L_t(a(n,k)) = a(n+1,k) a(n-1,t-k) + a(n-1,k) a(n+1,t-k) - 2 a(n,k) a(n,t-k)

whose sign pattern over k = 0..floor(t/2) decides whether the weighted
assembly of the array stays q-log-convex.  The companion operator L~_t
replaces the even-t midpoint term by a(n+1,k) a(n-1,k) - a(n,k)^2.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Sequence

from .families import TriangularArray, domb_number, family_poly, weighted_assembly
from .hiprec import compare_products
from .polynomials import Poly, is_self_reciprocal


@dataclass(frozen=True)
class SignCrossing:
    """Outcome of the single-crossing test on a value sequence.

    ``crossing(k)`` certifies values[i] >= 0 for i <= k and values[i] <= 0
    for i > k (k may be -1 for an all-nonpositive sequence); ``violation``
    pinpoints the first strictly positive value that follows a strictly
    negative one.
    """

    outcome: str  # "crossing" | "all_nonnegative" | "violation"
    index: int | None = None
    value: int | None = None

    @property
    def ok(self) -> bool:
        return self.outcome != "violation"

    @classmethod
    def crossing(cls, k: int) -> "SignCrossing":
        return cls("crossing", k)

    @classmethod
    def all_nonnegative(cls) -> "SignCrossing":
        return cls("all_nonnegative")

    @classmethod
    def violation(cls, position: int, value: int) -> "SignCrossing":
        return cls("violation", position, value)


def single_crossing(values: Sequence[int]) -> SignCrossing:
    """Classify a sequence as nonneg-prefix/nonpos-tail, or find the break.

    Zeros are compatible with both signs; the crossing index is the last
    index before the first strictly negative value.
    """
    if len(values) == 0:
        raise ValueError("single_crossing needs a nonempty sequence")
    first_negative = next((i for i, v in enumerate(values) if v < 0), None)
    if first_negative is None:
        return SignCrossing.all_nonnegative()
    for j in range(first_negative + 1, len(values)):
        if values[j] > 0:
            return SignCrossing.violation(j, values[j])
    return SignCrossing.crossing(first_negative - 1)


def log_convex_check(seq: Sequence[int], strict: bool = False) -> int | None:
    """Verify a[n-1]*a[n+1] >= a[n]^2 (or > if strict) for every interior n.

    Returns None on success, else the first failing interior index.
    """
    if len(seq) < 3:
        raise ValueError("log-convexity needs at least three entries")
    if any(v <= 0 for v in seq):
        raise ValueError("log-convexity check requires positive entries")
    for i in range(1, len(seq) - 1):
        lhs = seq[i - 1] * seq[i + 1]
        rhs = seq[i] * seq[i]
        if lhs < rhs or (strict and lhs == rhs):
            return i
    return None


def _check_operator_args(n: int, t: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"operator needs n >= 1, got {n}")
    if t < 0 or t > 2 * n:
        raise ValueError(f"operator needs 0 <= t <= 2n, got t={t} for n={n}")
    if k < 0 or 2 * k > t:
        raise ValueError(f"operator needs 0 <= k <= t/2, got k={k} for t={t}")


def op_L(a: TriangularArray, n: int, t: int, k: int) -> int:
    """L_t(a(n,k)); out-of-range array entries contribute zero."""
    _check_operator_args(n, t, k)
    return (
        a(n + 1, k) * a(n - 1, t - k)
        + a(n - 1, k) * a(n + 1, t - k)
        - 2 * a(n, k) * a(n, t - k)
    )


def op_L_tilde(a: TriangularArray, n: int, t: int, k: int) -> int:
    """L~_t(a(n,k)): as op_L except at the even-t midpoint k = t/2."""
    _check_operator_args(n, t, k)
    if 2 * k == t:
        return a(n + 1, k) * a(n - 1, k) - a(n, k) ** 2
    return op_L(a, n, t, k)


def criterion_c2_sweep(
    a: TriangularArray, n: int, t_max: int | None = None
) -> list[tuple[int, SignCrossing]]:
    """Single-crossing classification of [L_t(a(n,k))]_k for each t in 0..t_max.

    t_max defaults to n, matching the hypothesis range of the
    self-reciprocal criterion (the operator itself is defined up to 2n).
    """
    if t_max is None:
        t_max = n
    if t_max > 2 * n:
        raise ValueError(f"t_max={t_max} exceeds the operator range 2n={2 * n}")
    results = []
    for t in range(t_max + 1):
        values = [op_L(a, n, t, k) for k in range(t // 2 + 1)]
        results.append((t, single_crossing(values)))
    return results


def sweep_passes(results: Sequence[tuple[int, SignCrossing]]) -> bool:
    return all(crossing.ok for _, crossing in results)


@dataclass(frozen=True)
class QlcWitness:
    """Defect polynomial f_{n+1} f_{n-1} - f_n^2 and its first negative slot."""

    n: int
    defect: Poly
    first_negative_coefficient_index: int | None

    @property
    def passed(self) -> bool:
        return self.first_negative_coefficient_index is None


def _first_negative(poly: Poly) -> int | None:
    for i, c in enumerate(poly.coeffs):
        if c < 0:
            return i
    return None


def _qlc_witness(tag: str, n: int) -> QlcWitness:
    defect = family_poly(tag, n + 1) * family_poly(tag, n - 1) - family_poly(tag, n) ** 2
    return QlcWitness(n, defect, _first_negative(defect))


def _qlc_worker(args: tuple[str, int]) -> tuple[int, tuple, int | None]:
    tag, n = args
    witness = _qlc_witness(tag, n)
    return n, witness.defect.coeffs, witness.first_negative_coefficient_index


def q_log_convex_direct(tag: str, n_max: int, jobs: int = 1) -> list[QlcWitness]:
    """Brute-force q-log-convexity witnesses for n = 1..n_max.

    The family passes iff every witness has no negative defect coefficient.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            rows = pool.map(_qlc_worker, [(tag, n) for n in range(1, n_max + 1)])
        return [QlcWitness(n, Poly(coeffs), idx) for n, coeffs, idx in rows]
    polys = [family_poly(tag, i) for i in range(n_max + 2)]
    witnesses = []
    for n in range(1, n_max + 1):
        defect = polys[n + 1] * polys[n - 1] - polys[n] * polys[n]
        witnesses.append(QlcWitness(n, defect, _first_negative(defect)))
    return witnesses


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of checking the self-reciprocal criterion's hypotheses.

    Per-n C1 results and per-(n, t) C2 outcomes are kept in full; the
    verdict asserts the hypotheses at desk scale only and never claims the
    unbounded statement.
    """

    n_max: int
    weights_log_convex: bool
    c1_results: tuple[tuple[int, bool], ...]
    c2_outcomes: tuple[tuple[int, int, SignCrossing], ...]
    scope: str

    @property
    def c1_failures(self) -> tuple[int, ...]:
        return tuple(n for n, ok in self.c1_results if not ok)

    @property
    def c2_violations(self) -> tuple[tuple[int, int], ...]:
        return tuple((n, t) for n, t, crossing in self.c2_outcomes if not crossing.ok)

    @property
    def passed(self) -> bool:
        return self.weights_log_convex and not self.c1_failures and not self.c2_violations


def criterion_verdict(
    a: TriangularArray, u: Callable[[int], int], n_max: int
) -> CriterionReport:
    """Check C1 (self-reciprocity of the assembly) and C2 (single crossing).

    C1 looks at g_n = sum_k a(n,k) u_k q^k for each n <= n_max; C2 sweeps
    L_t over 0 <= t <= n.  The weight sequence itself is checked for
    log-convexity on the prefix it contributes.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    weights_ok = log_convex_check([u(k) for k in range(n_max + 2)]) is None
    c1_results = []
    for n in range(n_max + 1):
        g = weighted_assembly(a, u, n)
        c1_results.append((n, is_self_reciprocal(g, n)))
    c2_outcomes = []
    for n in range(1, n_max + 1):
        for t, crossing in criterion_c2_sweep(a, n):
            c2_outcomes.append((n, t, crossing))
    return CriterionReport(
        n_max=n_max,
        weights_log_convex=weights_ok,
        c1_results=tuple(c1_results),
        c2_outcomes=tuple(c2_outcomes),
        scope=f"hypotheses verified for n <= {n_max}",
    )


@dataclass(frozen=True)
class MonotonicityReport:
    """Desk-scale evidence for the Domb-number growth conjectures.

    All three parts are decided by exact integer comparisons: ratio growth
    by cross-multiplication, the n-th-root and root-ratio parts by certified
    log2 enclosures with an exact-powering fallback.
    """

    n_max: int
    root_ratio_n_max: int
    ratio_first_failure: int | None
    nth_root_first_failure: int | None
    root_ratio_first_failure: int | None

    @property
    def passed(self) -> bool:
        return (
            self.ratio_first_failure is None
            and self.nth_root_first_failure is None
            and self.root_ratio_first_failure is None
        )


def root_monotonicity_check(n_max: int, root_ratio_n_max: int | None = None) -> MonotonicityReport:
    """Evidence checks: D_{n+1}/D_n increasing, D_n^{1/n} increasing,
    D_{n+1}^{1/(n+1)} / D_n^{1/n} decreasing.

    These are desk-scale observations, not proofs.  The root-ratio part is
    cubic in the exponents, so it runs over its own (smaller) range.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if root_ratio_n_max is None:
        root_ratio_n_max = min(n_max, 120)
    numbers = [domb_number(n) for n in range(max(n_max, root_ratio_n_max) + 3)]

    ratio_fail = None
    for n in range(n_max):
        # D_{n+2}/D_{n+1} > D_{n+1}/D_n, cross-multiplied
        if not numbers[n + 2] * numbers[n] > numbers[n + 1] ** 2:
            ratio_fail = n
            break

    nth_root_fail = None
    for n in range(1, n_max + 1):
        # D_{n+1}^{1/(n+1)} > D_n^{1/n}  <=>  D_{n+1}^n > D_n^{n+1}
        if compare_products([(numbers[n + 1], n)], [(numbers[n], n + 1)]) != 1:
            nth_root_fail = n
            break

    root_ratio_fail = None
    for n in range(1, root_ratio_n_max + 1):
        lhs = [(numbers[n + 1], 2 * n * (n + 2))]
        rhs = [(numbers[n], (n + 1) * (n + 2)), (numbers[n + 2], n * (n + 1))]
        if compare_products(lhs, rhs) != 1:
            root_ratio_fail = n
            break

    return MonotonicityReport(
        n_max=n_max,
        root_ratio_n_max=root_ratio_n_max,
        ratio_first_failure=ratio_fail,
        nth_root_first_failure=nth_root_fail,
        root_ratio_first_failure=root_ratio_fail,
    )
