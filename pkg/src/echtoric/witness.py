"""Constructions showing where the embedding criterion stops obstructing.

Three ingredients.  ``maximal_under`` turns a rational convex path into the
unique integral path enclosing exactly the same lattice set (upper hull of
per-row maxima).  ``generator_with_count`` builds a purely elliptic
generator with prescribed endpoints and an arbitrary admissible lattice
count, by selecting strip points in an exact sweep order (no rotated lines
or perturbations are ever computed).  ``build_witness`` assembles, for the
three parameter families just outside the obstruction range, an explicit
generator that passes the pairwise check against ``e(p,q)^d0`` and hence a
factorization the criterion cannot refute.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .criterion import LeCheckResult, le_check
from .domains import Ellipsoid, Polydisk
from .generators import (
    ConvexGenerator,
    ConvexPath,
    EdgeFactor,
    e,
    edge_power,
    index_edge_power,
)

VARIANT_A = "A"
VARIANT_B = "B"
VARIANT_C = "C"


# -- maximal integral path under a convex path ------------------------------

def _chain_from_row_maxima(maxima: list[int]) -> ConvexGenerator:
    # upper hull through the per-row maxima, top row first
    top = len(maxima) - 1
    pts = [(maxima[k], k) for k in range(top, -1, -1)]
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            x1, y1 = hull[-2]
            x2, y2 = hull[-1]
            # keep only strictly decreasing slopes
            if (x2 - x1) * (p[1] - y2) - (y2 - y1) * (p[0] - x2) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    if hull[0][0] > 0:
        hull.insert(0, (0, top))
    factors = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        dx, dy = x2 - x1, y1 - y2
        g = gcd(dx, dy)
        factors.append(EdgeFactor(dx // g, dy // g, g))
    if not factors:
        raise ValueError("the enclosed lattice set admits no nonempty integral path")
    return ConvexGenerator(factors)


def _segment_line_hits_lattice(p1, p2) -> bool:
    # the supporting line of the segment contains an integer point iff the
    # reduced integer normal equation has an integer right-hand side
    dx = p2[0] - p1[0]
    dy = p2[1] - p1[1]
    den = dx.denominator * dy.denominator // gcd(dx.denominator, dy.denominator)
    u, v = int(dx * den), int(dy * den)
    g = gcd(abs(u), abs(v))
    u, v = u // g, v // g
    rhs = v * p1[0] - u * p1[1]
    return rhs.denominator == 1


def maximal_under(path: ConvexPath) -> ConvexGenerator:
    """The unique convex integral path enclosing exactly the lattice points
    enclosed by ``path``.

    Requires every segment's supporting line to contain a lattice point
    (always true for integral input paths).
    """
    for p1, p2 in zip(path.vertices, path.vertices[1:]):
        if not _segment_line_hits_lattice(p1, p2):
            raise ValueError(
                f"segment {p1}-{p2} has no lattice point on its supporting line"
            )
    return _chain_from_row_maxima(path.row_maxima())


# -- prescribed endpoint and lattice count ----------------------------------

def count_bounds(x0: int, y0: int) -> tuple[int, int]:
    """Admissible lattice-count range for generators from ``(0,y0)`` to
    ``(x0,0)``: from the single-edge path to the full rectangle."""
    g = gcd(x0, y0)
    lo = ((x0 + 1) * (y0 + 1) + g + 1) // 2
    hi = (x0 + 1) * (y0 + 1)
    return lo, hi


def generator_with_count(x0: int, y0: int, count: int) -> ConvexGenerator:
    """A purely elliptic generator with ``x = x0``, ``y = y0`` and exactly
    ``count`` enclosed lattice points.

    Strip points between the single edge and the rectangle are added in an
    exact sweep order (lines parallel to the edge, advancing away from the
    origin; within a line, left to right) and the result is the maximal
    integral path over the union.
    """
    if x0 < 1 or y0 < 1:
        raise ValueError("x0 and y0 must be positive")
    lo, hi = count_bounds(x0, y0)
    if not lo <= count <= hi:
        raise ValueError(f"count {count} outside the admissible range [{lo}, {hi}]")
    quota = count - lo
    strip = sorted(
        ((x, y) for y in range(y0 + 1) for x in range(x0 + 1)
         if x * y0 + y * x0 > x0 * y0),
        key=lambda pt: (pt[0] * y0 + pt[1] * x0, pt[0]),
    )
    maxima = [x0 * (y0 - k) // y0 for k in range(y0 + 1)]
    for x, y in strip[:quota]:
        if x > maxima[y]:
            maxima[y] = x
    built = _chain_from_row_maxima(maxima)
    if built.x != x0 or built.y != y0 or built.lattice_count != count:
        raise AssertionError("prescribed-count construction failed; this is a bug")
    return built


# -- witness families --------------------------------------------------------

@dataclass(frozen=True)
class WitnessSpec:
    """One of the three no-obstruction parameter families.

    Variant A: ``a`` exceeds the obstruction range by ``epsilon`` (needs
    ``epsilon > 0`` and odd ``p > 2``).  Variant B: the largest excluded
    ``p = 4 d0 - 3`` at the top admissible ``a``.  Variant C: general
    ``b = p/q`` with coprime ``p > q > 3``.
    """

    variant: str
    d0: int
    epsilon: Fraction | None = None
    p: int | None = None
    q: int = 2

    def __post_init__(self):
        if self.variant not in (VARIANT_A, VARIANT_B, VARIANT_C):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.d0 < 2:
            raise ValueError("d0 must be at least 2")
        if self.epsilon is not None:
            object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        if self.variant == VARIANT_A:
            if self.epsilon is None or self.epsilon <= 0:
                raise ValueError("variant A needs epsilon > 0")
            if self.p is None or self.p <= 2 or self.p % 2 == 0:
                raise ValueError("variant A needs an odd p > 2")
            if self.q != 2:
                raise ValueError("variant A is a q = 2 family")
        elif self.variant == VARIANT_B:
            derived = 4 * self.d0 - 3
            if self.p is None:
                object.__setattr__(self, "p", derived)
            elif self.p != derived:
                raise ValueError(f"variant B forces p = 4 d0 - 3 = {derived}")
            if self.q != 2:
                raise ValueError("variant B is a q = 2 family")
        else:
            if self.p is None or self.q is None:
                raise ValueError("variant C needs p and q")
            if not (self.p > self.q > 3):
                raise ValueError("variant C needs p > q > 3")
            if gcd(self.p, self.q) != 1:
                raise ValueError("variant C needs coprime p, q")

    @property
    def a(self) -> Fraction:
        base = Fraction(2 * self.d0 - 1, self.d0)
        if self.variant == VARIANT_A:
            return base + self.epsilon
        return base

    @property
    def x0(self) -> int:
        if self.variant == VARIANT_A:
            return (self.p + 2) * self.d0 - 1
        if self.variant == VARIANT_B:
            return (self.p + 2) * self.d0
        return (self.p + self.q + 1) * self.d0 - 1 - self.y0

    @property
    def y0(self) -> int:
        if self.variant == VARIANT_A:
            return self.d0
        if self.variant == VARIANT_B:
            return self.d0 - 1
        return ((self.q + 1) // 2) * self.d0

    @property
    def target_index(self) -> int:
        return index_edge_power(self.p, self.q, self.d0)

    @property
    def pc_interval(self) -> tuple[Fraction, Fraction]:
        """Open interval of ``p c`` values the family certifies: strictly
        between the family's action level and the inclusion threshold."""
        hi = self.q * self.a + self.p
        if self.variant == VARIANT_A:
            lo = hi - self.epsilon / 2
        elif self.variant == VARIANT_B:
            lo = hi - Fraction(self.d0 - 1, self.d0 ** 2)
        else:
            lo = hi - Fraction((self.q - 3) * (self.d0 - 1), 2 * self.d0)
        return lo, hi

    def midpoint_c(self) -> Fraction:
        lo, hi = self.pc_interval
        return (lo + hi) / (2 * self.p)

    def to_json(self) -> dict:
        out = {"variant": self.variant, "d0": self.d0, "p": self.p, "q": self.q}
        if self.epsilon is not None:
            out["epsilon"] = {"num": self.epsilon.numerator, "den": self.epsilon.denominator}
        return out


@dataclass(frozen=True)
class WitnessResult:
    """A built witness generator together with its verification."""

    spec: WitnessSpec
    generator: ConvexGenerator
    c: Fraction
    check: LeCheckResult
    source: Polydisk
    target: Ellipsoid

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "generator": str(self.generator),
            "c": {"num": self.c.numerator, "den": self.c.denominator},
            "le_check": self.check.to_json(),
            "source": str(self.source),
            "target": str(self.target),
        }


def build_witness(spec: WitnessSpec, c: Fraction | None = None) -> WitnessResult:
    """Construct the family's witness generator and verify the pairwise
    check against ``e(p,q)^d0`` for source ``P(a,1)`` and target
    ``E(p c / q, c)``.

    ``c`` defaults to the midpoint of the family's open interval; a supplied
    ``c`` must lie in that interval.
    """
    count = spec.target_index // 2 + 1
    lo, hi = count_bounds(spec.x0, spec.y0)
    if not lo <= count <= hi:
        raise AssertionError("witness recipe leaves the admissible count range; this is a bug")
    gen = generator_with_count(spec.x0, spec.y0, count)
    if c is None:
        c = spec.midpoint_c()
    else:
        c = Fraction(c)
        pc_lo, pc_hi = spec.pc_interval
        if not pc_lo < spec.p * c < pc_hi:
            raise ValueError(
                f"c = {c} puts p*c outside the open interval ({pc_lo}, {pc_hi})"
            )
    source = Polydisk(spec.a, 1)
    target = Ellipsoid(Fraction(spec.p, spec.q) * c, c)
    check = le_check(gen, edge_power(spec.p, spec.q, spec.d0), source, target)
    return WitnessResult(spec, gen, c, check, source, target)
