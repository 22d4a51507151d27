"""Combinatorial polynomial families and their triangular coefficient arrays.

Four families are generated coefficient-wise from cached binomials (there is
no recurrence involved; direct summation is exact and O(n) per polynomial):

    D_n(q) = sum_k C(n,k)^2 C(2k,k) C(2n-2k,n-k) q^k   (Domb polynomials)
    W_n(q) = sum_k C(n,k)^2 q^k                        (Narayana, type B)
    V_n(q) = sum_k C(n,k)^2 C(2k,k) q^k
    f_n(q) = sum_k C(n,k)^2 C(2n-2k,n-k) q^k

D_n(1) is the n-th Domb number.
"""

from __future__ import annotations

import os
import tempfile
from typing import Callable

from .exactcore import binom, central_binom
from .polynomials import Poly

ARRAY_KINDS = ("domb_a", "narayana_a")
FAMILY_TAGS = ("D", "W", "V", "F")


class TriangularArray:
    """Memoized accessor for a triangular coefficient array a(n, k).

    Values outside 0 <= k <= n are zero; that convention makes the
    convexity operators total, since they look up a(n +/- 1, t - k) with
    t - k possibly out of range.  The memo only grows and inserts are
    idempotent, so instances are safe to share.
    """

    __slots__ = ("kind", "_memo")

    def __init__(self, kind: str):
        if kind not in ARRAY_KINDS:
            raise ValueError(f"unknown array kind {kind!r}")
        self.kind = kind
        self._memo: dict[tuple[int, int], int] = {}

    def __call__(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError(f"array row must be nonnegative, got n={n}")
        if k < 0 or k > n:
            return 0
        key = (n, k)
        value = self._memo.get(key)
        if value is None:
            if self.kind == "domb_a":
                value = binom(n, k) ** 2 * binom(2 * n - 2 * k, n - k)
            else:
                value = binom(n, k) ** 2
            self._memo[key] = value
        return value

    def __repr__(self) -> str:
        return f"TriangularArray({self.kind!r})"


DOMB_ARRAY = TriangularArray("domb_a")
NARAYANA_ARRAY = TriangularArray("narayana_a")


def get_array(kind: str) -> TriangularArray:
    if kind == "domb_a":
        return DOMB_ARRAY
    if kind == "narayana_a":
        return NARAYANA_ARRAY
    raise ValueError(f"unknown array kind {kind!r}")


def coeff_a(kind: str, n: int, k: int) -> int:
    """Array value a(n, k); zero out of range, memoized."""
    return get_array(kind)(n, k)


def family_coefficient(tag: str, n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"family index must be nonnegative, got n={n}")
    if k < 0 or k > n:
        return 0
    sq = binom(n, k) ** 2
    if tag == "D":
        return sq * central_binom(k) * binom(2 * n - 2 * k, n - k)
    if tag == "W":
        return sq
    if tag == "V":
        return sq * central_binom(k)
    if tag == "F":
        return sq * binom(2 * n - 2 * k, n - k)
    raise ValueError(f"unknown family tag {tag!r}")


def family_poly(tag: str, n: int) -> Poly:
    """Degree-n member of the chosen family, exact coefficients."""
    if n < 0:
        raise ValueError(f"family index must be nonnegative, got n={n}")
    return Poly([family_coefficient(tag, n, k) for k in range(n + 1)])


def domb_number(n: int) -> int:
    """D_n(1)."""
    if n < 0:
        raise ValueError(f"Domb index must be nonnegative, got n={n}")
    return sum(family_coefficient("D", n, k) for k in range(n + 1))


def unit_weights(k: int) -> int:
    return 1


def weighted_assembly(array: TriangularArray, weights: Callable[[int], int], n: int) -> Poly:
    """sum_k a(n,k) * u_k * q^k for the given array and weight sequence."""
    if n < 0:
        raise ValueError(f"assembly index must be nonnegative, got n={n}")
    return Poly([array(n, k) * weights(k) for k in range(n + 1)])


# ---------------------------------------------------------------------------
# On-disk coefficient cache: one record per line "tag,n,c0,c1,...", preceded
# by a header line holding the format version.  Writes are atomic
# (write-then-rename), which tolerates concurrent readers with one writer.

CACHE_FORMAT_VERSION = 1
CACHE_ENV_VAR = "QLOGCONVEX_CACHE_DIR"


class CacheError(Exception):
    """Cache file absent, unreadable or of the wrong format."""


def default_cache_path() -> str | None:
    base = os.environ.get(CACHE_ENV_VAR)
    if not base:
        return None
    return os.path.join(base, "families.cache")


def load_family_cache(path: str) -> dict[tuple[str, int], tuple[int, ...]]:
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc
    if not lines:
        raise CacheError(f"cache {path} is empty")
    try:
        version = int(lines[0])
    except ValueError as exc:
        raise CacheError(f"cache {path} has a malformed header") from exc
    if version != CACHE_FORMAT_VERSION:
        raise CacheError(f"cache {path} has version {version}, expected {CACHE_FORMAT_VERSION}")
    entries: dict[tuple[str, int], tuple[int, ...]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split(",")
        try:
            tag, n, coeffs = fields[0], int(fields[1]), tuple(int(c) for c in fields[2:])
        except (IndexError, ValueError) as exc:
            raise CacheError(f"cache {path} line {lineno} is malformed") from exc
        if tag not in FAMILY_TAGS or n < 0 or len(coeffs) != n + 1:
            raise CacheError(f"cache {path} line {lineno} is inconsistent")
        entries[(tag, n)] = coeffs
    return entries


def save_family_cache(path: str, entries: dict[tuple[str, int], tuple[int, ...]]) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".families-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(f"{CACHE_FORMAT_VERSION}\n")
            for (tag, n), coeffs in sorted(entries.items()):
                fh.write(f"{tag},{n}," + ",".join(str(c) for c in coeffs) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class FamilyStore:
    """Family polynomials with an optional persistent coefficient cache.

    Regeneration is the fallback whenever the cache is absent or corrupt;
    a corrupt file is simply ignored and overwritten on the next flush.
    """

    def __init__(self, cache_path: str | None = None):
        self.cache_path = cache_path
        self._entries: dict[tuple[str, int], tuple[int, ...]] = {}
        self._dirty = False
        if cache_path is not None:
            try:
                self._entries = load_family_cache(cache_path)
            except CacheError:
                self._entries = {}

    def poly(self, tag: str, n: int) -> Poly:
        key = (tag, n)
        coeffs = self._entries.get(key)
        if coeffs is None:
            poly = family_poly(tag, n)
            # leading coefficients are positive, so the tuple has n+1 entries
            self._entries[key] = tuple(poly.coeffs)
            self._dirty = True
            return poly
        return Poly(coeffs)

    def flush(self) -> None:
        if self.cache_path is not None and self._dirty:
            save_family_cache(self.cache_path, self._entries)
            self._dirty = False
