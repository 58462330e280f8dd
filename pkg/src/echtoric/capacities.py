"""ECH capacity sequences of ellipsoids and polydisks, exactly.

Ellipsoid capacities are the sorted multiset ``{a m + b n : m, n >= 0}``,
merged lazily with a priority queue over integer-scaled values.  Polydisk
capacities use the minimal-generator closed form
``min{a m + b n : (m+1)(n+1) >= k+1}``, guarded in the test suite by the
brute-force oracle over enumerated generators.  Ratio scans compare the two
sequences with exact rational arithmetic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .domains import ConvexPL, Ellipsoid, Polydisk, ToricDomain
from .generators import ELLIPTIC_ONLY, enumerate_generators

#: documented desk-scale ceiling for brute-force capacities
BRUTEFORCE_K_MAX = 50


def _scaled(a, b):
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError("domain parameters must be positive")
    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    return int(a * den), int(b * den), den


def ellipsoid_capacities(a, b, k_max: int) -> list[Fraction]:
    """Capacities ``c_0 .. c_k_max`` of ``E(a, b)``."""
    ia, ib, den = _scaled(a, b)
    out = []
    heap = [(0, 0, 0)]
    while len(out) <= k_max:
        val, m, n = heapq.heappop(heap)
        out.append(Fraction(val, den))
        heapq.heappush(heap, (val + ia, m + 1, n))
        if m == 0:
            heapq.heappush(heap, (val + ib, 0, n + 1))
    return out


def cap_ellipsoid(a, b, k: int) -> Fraction:
    """The k-th ECH capacity of ``E(a, b)``: the (k+1)-st smallest value of
    the multiset ``{a m + b n}``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return ellipsoid_capacities(a, b, k)[k]


def polydisk_capacities(a, b, k_max: int) -> list[Fraction]:
    """Capacities ``c_0 .. c_k_max`` of ``P(a, b)``."""
    ia, ib, den = _scaled(a, b)
    out = []
    for k in range(k_max + 1):
        need = k + 1
        best = None
        m = 0
        while True:
            cost = ia * m
            if best is not None and cost >= best:
                break
            n = -(-need // (m + 1)) - 1  # smallest n with (m+1)(n+1) >= k+1
            val = cost + ib * n
            if best is None or val < best:
                best = val
            m += 1
        out.append(Fraction(best, den))
    return out


def cap_polydisk(a, b, k: int) -> Fraction:
    """The k-th ECH capacity of ``P(a, b)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return polydisk_capacities(a, b, k)[k]


def capacities_for(domain: ToricDomain, k_max: int) -> list[Fraction]:
    """Capacity sequence for a domain; PL domains fall back to brute force
    and are limited to small ``k_max``."""
    if isinstance(domain, Ellipsoid):
        return ellipsoid_capacities(domain.a, domain.b, k_max)
    if isinstance(domain, Polydisk):
        return polydisk_capacities(domain.a, domain.b, k_max)
    if isinstance(domain, ConvexPL):
        if k_max > BRUTEFORCE_K_MAX:
            raise ValueError(
                f"PL capacities are brute force only; k_max limited to {BRUTEFORCE_K_MAX}"
            )
        return [cap_bruteforce(domain, k) for k in range(k_max + 1)]
    raise TypeError(f"unsupported domain {domain!r}")


def cap_bruteforce(domain: ToricDomain, k: int) -> Fraction:
    """Minimum action over purely elliptic generators of index ``2k``.

    Independent of the closed forms: enumerates generators under a doubling
    action bound.  Intended for small ``k`` (at most ``BRUTEFORCE_K_MAX``).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > BRUTEFORCE_K_MAX:
        raise ValueError(f"brute-force capacities support k <= {BRUTEFORCE_K_MAX}")
    if k == 0:
        return Fraction(0)
    bound = Fraction(1)
    while True:
        actions = [domain.action(g)
                   for g in enumerate_generators(2 * k, bound, domain, ELLIPTIC_ONLY)]
        if actions:
            return min(actions)
        bound *= 2


@dataclass(frozen=True)
class CapacityTable:
    """Capacities of one domain for ``k = 0 .. k_max``."""

    domain: ToricDomain
    entries: tuple[Fraction, ...]

    @property
    def k_max(self) -> int:
        return len(self.entries) - 1

    def csv(self, include_float: bool = False) -> str:
        header = "k,capacity_num,capacity_den"
        if include_float:
            header += ",capacity_float"
        lines = [header]
        for k, c in enumerate(self.entries):
            row = f"{k},{c.numerator},{c.denominator}"
            if include_float:
                row += f",{float(c):.12g}"
            lines.append(row)
        return "\n".join(lines) + "\n"

    def to_json(self, include_float: bool = False) -> dict:
        entries = []
        for k, c in enumerate(self.entries):
            item = {"k": k, "num": c.numerator, "den": c.denominator}
            if include_float:
                item["float"] = float(c)
            entries.append(item)
        return {"domain": str(self.domain), "entries": entries}


def capacity_table(domain: ToricDomain, k_max: int) -> CapacityTable:
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    return CapacityTable(domain, tuple(capacities_for(domain, k_max)))


@dataclass(frozen=True)
class RatioScanResult:
    """Exact maximum of ``c_k(num)/c_k(den)`` over ``k = 1 .. k_max``."""

    numerator_domain: ToricDomain
    denominator_domain: ToricDomain
    k_max: int
    max_ratio: Fraction
    argmax_k: int
    final_ratio: Fraction
    volume_ratio: Fraction

    def to_json(self, include_float: bool = False) -> dict:
        def frac(q):
            item = {"num": q.numerator, "den": q.denominator}
            if include_float:
                item["float"] = float(q)
            return item

        return {
            "num_domain": str(self.numerator_domain),
            "den_domain": str(self.denominator_domain),
            "kmax": self.k_max,
            "max_ratio": frac(self.max_ratio),
            "argmax_k": self.argmax_k,
            "final_ratio": frac(self.final_ratio),
            "volume_ratio": frac(self.volume_ratio),
        }


def ratio_scan(numerator: ToricDomain, denominator: ToricDomain,
               k_max: int) -> RatioScanResult:
    """Scan capacity ratios ``c_k(numerator) / c_k(denominator)``.

    Returns the exact maximum over ``k = 1 .. k_max``, the smallest k
    attaining it, the ratio at ``k_max`` and the exact volume ratio (whose
    square root is the large-k limit of the ratios).
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    top = capacities_for(numerator, k_max)
    bot = capacities_for(denominator, k_max)
    best = None
    best_k = None
    for k in range(1, k_max + 1):
        r = top[k] / bot[k]
        if best is None or r > best:
            best, best_k = r, k
    return RatioScanResult(
        numerator_domain=numerator,
        denominator_domain=denominator,
        k_max=k_max,
        max_ratio=best,
        argmax_k=best_k,
        final_ratio=top[k_max] / bot[k_max],
        volume_ratio=numerator.volume() / denominator.volume(),
    )
