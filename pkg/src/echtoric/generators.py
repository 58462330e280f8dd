"""Convex integral lattice paths with labeled edges and their combinatorics.

A convex generator is a nonempty commutative formal product of edge symbols
``e(a,b)^m`` and ``h(a,b)``, where ``(a, b)`` is a coprime pair of
nonnegative integers and axis directions never carry the ``h`` label.  The
geometric realization is a concave lattice path from ``(0, y)`` down to
``(x, 0)``; the quantities computed here (lattice counts, the index
``2(L - 1) - h``, products, decompositions, bounded enumeration) are all
exact integer or rational arithmetic, never floating point.
"""

from __future__ import annotations

import itertools
import re
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import floor, gcd

ELLIPTIC = "e"
HYPERBOLIC = "h"

#: label policies for :func:`enumerate_generators`
ELLIPTIC_ONLY = "elliptic_only"
ALL_LABELS = "all"


class InvalidGenerator(ValueError):
    """Text or factor data violating a generator invariant."""


class HyperbolicOrbitClash(InvalidGenerator):
    """A product would repeat an ``h`` factor in a single direction."""


class SearchLimitExceeded(RuntimeError):
    """An enumeration ran past its node budget."""


class SearchBudget:
    """Node counter with an optional hard limit.

    Enumerations spend one unit per search node; exceeding the limit raises
    :class:`SearchLimitExceeded` so callers can report an inconclusive run
    instead of silently truncating a supposedly exhaustive search.
    """

    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int | None = None):
        self.nodes = 0
        self.limit = limit

    def spend(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.limit is not None and self.nodes > self.limit:
            raise SearchLimitExceeded(f"enumeration exceeded {self.limit} nodes")


@dataclass(frozen=True)
class EdgeFactor:
    """One symbol of a formal product: a direction, an exponent and a label."""

    alpha: int
    beta: int
    multiplicity: int = 1
    label: str = ELLIPTIC

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0 or (self.alpha, self.beta) == (0, 0):
            raise InvalidGenerator(
                f"direction ({self.alpha},{self.beta}) must be nonnegative and nonzero"
            )
        if gcd(self.alpha, self.beta) != 1:
            raise InvalidGenerator(
                f"direction ({self.alpha},{self.beta}) must be coprime; "
                "carry the scale in the multiplicity"
            )
        if self.multiplicity < 1:
            raise InvalidGenerator("multiplicity must be a positive integer")
        if self.label not in (ELLIPTIC, HYPERBOLIC):
            raise InvalidGenerator(f"unknown label {self.label!r}")
        if self.label == HYPERBOLIC:
            if self.alpha == 0 or self.beta == 0:
                raise InvalidGenerator("horizontal and vertical edges cannot carry the h label")
            if self.multiplicity != 1:
                raise InvalidGenerator("an h factor may not be repeated")

    def __str__(self) -> str:
        base = f"{self.label}({self.alpha},{self.beta})"
        return base if self.multiplicity == 1 else f"{base}^{self.multiplicity}"


#: one geometric edge of a path: total multiplicity in a direction plus label
GeometricEdge = namedtuple("GeometricEdge", "alpha beta multiplicity label")


def _slope_key(direction):
    # decreasing edge slope -beta/alpha: horizontal first, vertical last
    a, b = direction
    return (1,) if a == 0 else (0, Fraction(b, a))


class ConvexGenerator:
    """Canonical nonempty formal product of edge factors.

    Factors are merged per direction (an ``e`` and an ``h`` factor in the
    same direction form one geometric edge labeled ``h``) and sorted by
    strictly decreasing edge slope, so structural equality decides generator
    equality.  Instances are immutable values.
    """

    def __init__(self, factors):
        merged: dict[tuple[int, int], tuple[int, bool]] = {}
        count = 0
        for f in factors:
            if not isinstance(f, EdgeFactor):
                raise TypeError(f"expected EdgeFactor, got {type(f).__name__}")
            key = (f.alpha, f.beta)
            mult, has_h = merged.get(key, (0, False))
            if f.label == HYPERBOLIC:
                if has_h:
                    raise HyperbolicOrbitClash(
                        f"repeated h factor in direction {key}"
                    )
                has_h = True
            merged[key] = (mult + f.multiplicity, has_h)
            count += 1
        if not merged:
            raise InvalidGenerator("a convex generator must contain at least one factor")
        self._edges = tuple(
            GeometricEdge(a, b, m, HYPERBOLIC if hh else ELLIPTIC)
            for (a, b), (m, hh) in sorted(merged.items(), key=lambda kv: _slope_key(kv[0]))
        )

    # -- structure ---------------------------------------------------------

    @property
    def edges(self) -> tuple[GeometricEdge, ...]:
        """Geometric edges in path order (decreasing slope)."""
        return self._edges

    @property
    def factors(self) -> tuple[EdgeFactor, ...]:
        """Formal factors, using the ``e^(m-1) h`` convention for h edges."""
        out = []
        for a, b, m, label in self._edges:
            if label == HYPERBOLIC:
                if m > 1:
                    out.append(EdgeFactor(a, b, m - 1))
                out.append(EdgeFactor(a, b, 1, HYPERBOLIC))
            else:
                out.append(EdgeFactor(a, b, m))
        return tuple(out)

    @property
    def x(self) -> int:
        return sum(m * a for a, b, m, _ in self._edges)

    @property
    def y(self) -> int:
        return sum(m * b for a, b, m, _ in self._edges)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, _, m, _ in self._edges)

    @property
    def h_count(self) -> int:
        return sum(1 for *_, label in self._edges if label == HYPERBOLIC)

    @property
    def is_elliptic(self) -> bool:
        return self.h_count == 0

    def elliptic_directions(self) -> frozenset[tuple[int, int]]:
        """Directions whose formal product contains an ``e`` factor."""
        dirs = set()
        for a, b, m, label in self._edges:
            e_exp = m - 1 if label == HYPERBOLIC else m
            if e_exp >= 1:
                dirs.add((a, b))
        return frozenset(dirs)

    def contains_elliptic(self, alpha: int, beta: int) -> bool:
        return (alpha, beta) in self.elliptic_directions()

    @cached_property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        """Lattice vertices traced from ``(0, y)`` to ``(x, 0)``."""
        cx, cy = 0, self.y
        pts = [(cx, cy)]
        for a, b, m, _ in self._edges:
            cx += m * a
            cy -= m * b
            pts.append((cx, cy))
        return tuple(pts)

    @cached_property
    def lattice_count(self) -> int:
        """Lattice points on or inside the region bounded by the path and axes."""
        return _lattice_count_of_vertices(self.vertices, self.y)

    @cached_property
    def index(self) -> int:
        """The ECH index ``2(L - 1) - h``."""
        return 2 * (self.lattice_count - 1) - self.h_count

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, ConvexGenerator) and self._edges == other._edges

    def __hash__(self):
        return hash(self._edges)

    @property
    def sort_key(self):
        return self._edges

    def __mul__(self, other):
        if not isinstance(other, ConvexGenerator):
            return NotImplemented
        return product(self, other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError("power must be a positive integer")
        if n > 1 and self.h_count:
            raise HyperbolicOrbitClash("powers of generators with h factors repeat an h factor")
        return ConvexGenerator(
            EdgeFactor(a, b, m * n, label) if label == ELLIPTIC else EdgeFactor(a, b, 1, label)
            for a, b, m, label in self._edges
        ) if n > 1 else self

    def __str__(self) -> str:
        return " ".join(str(f) for f in self.factors)

    def __repr__(self) -> str:
        return f"ConvexGenerator({str(self)!r})"


def e(alpha: int, beta: int, multiplicity: int = 1) -> ConvexGenerator:
    """Single elliptic factor ``e(alpha,beta)^multiplicity``."""
    return ConvexGenerator([EdgeFactor(alpha, beta, multiplicity)])


def h(alpha: int, beta: int) -> ConvexGenerator:
    """Single hyperbolic factor ``h(alpha,beta)``."""
    return ConvexGenerator([EdgeFactor(alpha, beta, 1, HYPERBOLIC)])


def edge_power(p: int, q: int, d: int) -> ConvexGenerator:
    """The generator ``e(p,q)^d`` (single direction, multiplicity d)."""
    return e(p, q, d)


# -- parsing and formatting ------------------------------------------------

_TERM = re.compile(r"^([eh])\((\d+),(\d+)\)(?:\^(\d+))?$")


def parse_generator(text: str) -> ConvexGenerator:
    """Parse whitespace-separated factor terms like ``e(1,0)^3 e(5,2) h(3,1)``.

    Directions must be coprime as written; the multiplicity carries any
    scale.  Raises :class:`InvalidGenerator` for syntax errors or illegal
    factors.
    """
    tokens = text.split()
    if not tokens:
        raise InvalidGenerator("empty generator text")
    factors = []
    for tok in tokens:
        m = _TERM.match(tok)
        if m is None:
            raise InvalidGenerator(f"cannot parse factor {tok!r}")
        label, a, b, exp = m.group(1), int(m.group(2)), int(m.group(3)), m.group(4)
        factors.append(EdgeFactor(a, b, 1 if exp is None else int(exp), label))
    return ConvexGenerator(factors)


def format_generator(g: ConvexGenerator) -> str:
    """Canonical text form; ``parse_generator(format_generator(g)) == g``."""
    return str(g)


# -- profiles and counts ---------------------------------------------------

@dataclass(frozen=True)
class PathProfile:
    """Endpoint data and counts of a generator's path."""

    x: int
    y: int
    total_multiplicity: int
    h_count: int
    vertices: tuple[tuple[int, int], ...]


def profile(g: ConvexGenerator) -> PathProfile:
    return PathProfile(g.x, g.y, g.total_multiplicity, g.h_count, g.vertices)


def _lattice_count_of_vertices(vertices, y: int) -> int:
    # per-row scan: for each integer row count 0..floor(x_max(row))
    total = 0
    segs = list(zip(vertices, vertices[1:]))
    if not segs:
        return 1 if y == 0 else y + 1
    for k in range(y + 1):
        best = 0
        for (x1, y1), (x2, y2) in segs:
            if y2 <= k <= y1:
                if y1 == y2:
                    cand = x2 if x2 > x1 else x1
                else:
                    cand = (x1 * (y1 - y2) + (x2 - x1) * (y1 - k)) // (y1 - y2)
                if cand > best:
                    best = cand
        total += best + 1
    return total


def lattice_count(g: ConvexGenerator) -> int:
    return g.lattice_count


def ech_index(g: ConvexGenerator) -> int:
    return g.index


# -- closed-form index families --------------------------------------------

def index_axes(k: int, m: int) -> int:
    """Index of ``e(1,0)^k e(0,1)^m``."""
    return 2 * (k * m + k + m)


def index_slant_drop(k: int, m: int) -> int:
    """Index of ``e(k,1) e(0,1)^(m-1)``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return 2 * (k * m + m)


def index_edge(k: int, m: int) -> int:
    """Index of the single-edge generator ``e(k,m)`` (scale in multiplicity)."""
    if (k, m) == (0, 0):
        raise ValueError("edge direction must be nonzero")
    return k * m + k + m + gcd(k, m)


def index_run_slant(k: int, m: int, d: int) -> int:
    """Index of ``e(1,0)^(k d) e(m,1)^d``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return (2 * k + m) * d * d + (2 * k + m + 2) * d


def index_edge_power(p: int, q: int, d: int) -> int:
    """Index of ``e(p,q)^d`` for coprime positive ``p, q``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise ValueError("p, q must be coprime positive integers")
    return p * q * d * d + (p + q + 1) * d


def _build_axes(k, m):
    fs = []
    if k:
        fs.append(EdgeFactor(1, 0, k))
    if m:
        fs.append(EdgeFactor(0, 1, m))
    return ConvexGenerator(fs)


def _build_slant_drop(k, m):
    fs = [EdgeFactor(k, 1) if k else EdgeFactor(0, 1)]
    if m > 1:
        fs.append(EdgeFactor(0, 1, m - 1))
    return ConvexGenerator(fs)


def _build_edge(k, m):
    g = gcd(k, m)
    return e(k // g, m // g, g)


def _build_run_slant(k, m, d):
    fs = []
    if k:
        fs.append(EdgeFactor(1, 0, k * d))
    fs.append(EdgeFactor(m, 1, d) if m else EdgeFactor(0, 1, d))
    return ConvexGenerator(fs)


def _build_edge_power(p, q, d):
    return e(p, q, d)


CLOSED_FORMS = {
    "axes": (index_axes, _build_axes),
    "slant_drop": (index_slant_drop, _build_slant_drop),
    "edge": (index_edge, _build_edge),
    "run_slant": (index_run_slant, _build_run_slant),
    "edge_power": (index_edge_power, _build_edge_power),
}


def index_closed_form(family: str, **params) -> int:
    """Closed-form index for one of the named generator families.

    Families: ``axes(k, m)``, ``slant_drop(k, m)``, ``edge(k, m)``,
    ``run_slant(k, m, d)``, ``edge_power(p, q, d)``.  The value always equals
    ``ech_index`` of the corresponding generator.
    """
    try:
        formula, _ = CLOSED_FORMS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return formula(**params)


def closed_form_generator(family: str, **params) -> ConvexGenerator:
    """The generator whose index :func:`index_closed_form` computes."""
    try:
        _, builder = CLOSED_FORMS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return builder(**params)


# -- products and decompositions -------------------------------------------

def product(g1: ConvexGenerator, g2: ConvexGenerator) -> ConvexGenerator:
    """Concatenate formal products; elliptic multiplicities in shared
    directions add.  Raises :class:`HyperbolicOrbitClash` if the factors
    share a hyperbolic orbit."""
    return ConvexGenerator((*g1.factors, *g2.factors))


def _compositions(total: int, n: int):
    # ordered tuples of n nonnegative integers summing to total,
    # first coordinate descending
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, n - 1):
            yield (first,) + rest


def decompositions(g: ConvexGenerator, n: int):
    """Yield every ordered ``n``-tuple of nonempty generators whose product
    is ``g``, each exactly once, in a fixed deterministic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    dirs = g.edges
    per_dir = []
    for a, b, m, label in dirs:
        opts = []
        e_exp = m - 1 if label == HYPERBOLIC else m
        for comp in _compositions(e_exp, n):
            if label == HYPERBOLIC:
                for j in range(n):
                    opts.append(tuple(
                        (comp[i] + (1 if i == j else 0), i == j) for i in range(n)
                    ))
            else:
                opts.append(tuple((comp[i], False) for i in range(n)))
        per_dir.append(opts)
    for choice in itertools.product(*per_dir):
        parts = []
        for i in range(n):
            factors = []
            for (a, b, _m, _label), alloc in zip(dirs, choice):
                mult, has_h = alloc[i]
                if has_h:
                    if mult > 1:
                        factors.append(EdgeFactor(a, b, mult - 1))
                    factors.append(EdgeFactor(a, b, 1, HYPERBOLIC))
                elif mult:
                    factors.append(EdgeFactor(a, b, mult))
            if not factors:
                parts = None
                break
            parts.append(ConvexGenerator(factors))
        if parts is not None:
            yield tuple(parts)


# -- bounded enumeration ----------------------------------------------------

def _max_affordable(budget: int, w: int, strict: bool) -> int:
    # largest n >= 0 with n*w <= budget (or < budget when strict)
    n = budget // w
    if strict and n * w == budget:
        n -= 1
    return n


def _fits(cost, budget, strict: bool) -> bool:
    return cost < budget if strict else cost <= budget


def _triangle_count(x: int, y: int) -> int:
    # lattice points under the single edge from (0, y) to (x, 0)
    if x == 0 or y == 0:
        return x + y + 1
    return ((x + 1) * (y + 1) + gcd(x, y) + 1) // 2


def _index_feasible(index: int, x: int, y: int, labels: str) -> bool:
    cap = (x + 1) * (y + 1)
    if labels == ELLIPTIC_ONLY:
        want = index // 2 + 1
        return _triangle_count(x, y) <= want <= cap
    parity = index & 1
    h_max = min(x, y)
    if (h_max & 1) != parity:
        h_max -= 1
    if h_max < 0:
        return False
    if (index + parity) // 2 + 1 > cap:
        return False
    return _triangle_count(x, y) <= (index + h_max) // 2 + 1


def _vertices_of_chain(chain, y: int):
    cx, cy = 0, y
    pts = [(cx, cy)]
    for a, b, m in chain:
        cx += m * a
        cy -= m * b
        pts.append((cx, cy))
    return pts


def _generator_from_chain(chain, h_positions=()):
    factors = []
    hset = set(h_positions)
    for i, (a, b, m) in enumerate(chain):
        if i in hset:
            if m > 1:
                factors.append(EdgeFactor(a, b, m - 1))
            factors.append(EdgeFactor(a, b, 1, HYPERBOLIC))
        else:
            factors.append(EdgeFactor(a, b, m))
    return ConvexGenerator(factors)


def _extend_chain(rx, ry, prev, left, prefix, pairs, iw, strict, budget):
    budget.spend()
    if ry == 0:
        if rx == 0:
            yield prefix
        return
    if rx == 0:
        cost = ry * iw[(0, 1)]
        if _fits(cost, left, strict):
            yield prefix + ((0, 1, ry),)
        return
    if prev is not None:
        pa, pb = prev
        # remaining displacement must be reachable with strictly steeper slopes
        if ry * pa <= rx * pb:
            return
    for a, b in pairs:
        if a > rx or b > ry:
            continue
        if prev is not None and b * prev[0] <= a * prev[1]:
            continue
        w = iw[(a, b)]
        m_cap = min(rx // a, ry // b, _max_affordable(left, w, strict))
        for m in range(m_cap, 0, -1):
            yield from _extend_chain(
                rx - m * a, ry - m * b, (a, b), left - m * w,
                prefix + ((a, b, m),), pairs, iw, strict, budget,
            )


def enumerate_generators(index, action_bound, domain, labels=ELLIPTIC_ONLY, *,
                         strict=False, profile_filter=None, budget=None):
    """Yield every generator with ECH index ``index`` and action at most
    ``action_bound`` for ``domain``, exactly once.

    The domain must price both axis directions positively (true for
    polydisks, ellipsoids and PL domains with positive intercepts), which
    makes the search finite.  Order is deterministic: endpoints ``(x, y)``
    ascending, vertex chains by decreasing slope with larger multiplicities
    first, then h-label subsets.  ``strict=True`` enforces a strict action
    inequality.  ``profile_filter(x, y)`` may cut endpoint rectangles early;
    it must only remove profiles that cannot yield admissible generators.
    """
    if labels not in (ELLIPTIC_ONLY, ALL_LABELS):
        raise ValueError(f"unknown label policy {labels!r}")
    bound = Fraction(action_bound)
    if bound <= 0 or index < 0:
        return
    if labels == ELLIPTIC_ONLY and index % 2:
        return
    if budget is None:
        budget = SearchBudget()

    w_h = Fraction(domain.edge_weight(1, 0))
    w_v = Fraction(domain.edge_weight(0, 1))
    if w_h <= 0 or w_v <= 0:
        raise ValueError("domain action does not bound the search: zero axis weight")

    # candidate non-axis directions up to the axis-derived caps
    x_hi = _max_affordable_frac(bound, w_h, strict)
    y_hi = _max_affordable_frac(bound, w_v, strict)
    weights = {(1, 0): w_h, (0, 1): w_v}
    pairs = []
    for b in range(1, y_hi + 1):
        for a in range(1, x_hi + 1):
            if gcd(a, b) == 1:
                w = Fraction(domain.edge_weight(a, b))
                weights[(a, b)] = w
                pairs.append((a, b))
    pairs.sort(key=lambda ab: Fraction(ab[1], ab[0]))

    denom = 1
    for w in weights.values():
        denom = denom * w.denominator // gcd(denom, w.denominator)
    denom = denom * bound.denominator // gcd(denom, bound.denominator)
    iw = {d: int(w * denom) for d, w in weights.items()}
    ibound = int(bound * denom)

    for gx in range(x_hi + 1):
        for gy in range(y_hi + 1):
            if gx == 0 and gy == 0:
                continue
            budget.spend()
            if profile_filter is not None and not profile_filter(gx, gy):
                continue
            if not _fits(Fraction(domain.action_lower_bound(gx, gy)), bound, strict):
                continue
            if not _index_feasible(index, gx, gy, labels):
                continue
            k_cap = min(gx, _max_affordable(ibound, iw[(1, 0)], strict))
            for k in range(k_cap, -1, -1):
                left = ibound - k * iw[(1, 0)]
                prefix = ((1, 0, k),) if k else ()
                start = (1, 0) if k else None
                for chain in _extend_chain(gx - k, gy, start, left, prefix,
                                           pairs, iw, strict, budget):
                    verts = _vertices_of_chain(chain, gy)
                    L = _lattice_count_of_vertices(verts, gy)
                    h_needed = 2 * (L - 1) - index
                    if h_needed < 0:
                        continue
                    non_axis = tuple(
                        i for i, (a, b, _m) in enumerate(chain) if a and b
                    )
                    if labels == ELLIPTIC_ONLY:
                        if h_needed == 0:
                            yield _generator_from_chain(chain)
                    elif h_needed <= len(non_axis):
                        for combo in itertools.combinations(non_axis, h_needed):
                            yield _generator_from_chain(chain, combo)


def _max_affordable_frac(bound: Fraction, w: Fraction, strict: bool) -> int:
    q = bound / w
    n = floor(q)
    if strict and n == q:
        n -= 1
    return max(n, 0)


# -- rational convex paths (inputs for PL domains and witness building) ----

class ConvexPath:
    """Concave piecewise-linear path with rational vertices.

    Starts on the y-axis, ends on the x-axis, slopes nonpositive and
    strictly decreasing (collinear points are merged); an optional vertical
    segment is allowed at the right end only.
    """

    def __init__(self, points):
        pts = [(Fraction(px), Fraction(py)) for px, py in points]
        if len(pts) < 2:
            raise ValueError("a convex path needs at least two points")
        cleaned = [pts[0]]
        for p in pts[1:]:
            if p != cleaned[-1]:
                cleaned.append(p)
        if len(cleaned) < 2:
            raise ValueError("a convex path needs a segment of positive length")
        if any(px < 0 or py < 0 for px, py in cleaned):
            raise ValueError("path vertices must lie in the first quadrant")
        if cleaned[0][0] != 0:
            raise ValueError("path must start on the y-axis")
        if cleaned[-1][1] != 0:
            raise ValueError("path must end on the x-axis")
        merged = [cleaned[0]]
        prev_delta = None
        for p in cleaned[1:]:
            dx = p[0] - merged[-1][0]
            dy = p[1] - merged[-1][1]
            if dx < 0 or dy > 0:
                raise ValueError("path must move weakly right and weakly down")
            if prev_delta is not None:
                cross = prev_delta[0] * dy - prev_delta[1] * dx
                if cross == 0:
                    # collinear: merge into the previous segment
                    merged[-1] = p
                    prev_delta = (merged[-1][0] - merged[-2][0], merged[-1][1] - merged[-2][1])
                    continue
                if cross > 0:
                    raise ValueError("path slopes must strictly decrease (concavity)")
            merged.append(p)
            prev_delta = (dx, dy)
        self._vertices = tuple(merged)

    @property
    def vertices(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return self._vertices

    @property
    def x_intercept(self) -> Fraction:
        return self._vertices[-1][0]

    @property
    def y_intercept(self) -> Fraction:
        return self._vertices[0][1]

    def row_maxima(self) -> list[int]:
        """For each integer row ``k`` from 0 up to the top enclosed row, the
        largest integer ``x`` with ``(x, k)`` on or under the path."""
        top = floor(self.y_intercept)
        out = []
        segs = list(zip(self._vertices, self._vertices[1:]))
        for k in range(top + 1):
            best = None
            for (x1, y1), (x2, y2) in segs:
                if y2 <= k <= y1:
                    if y1 == y2:
                        cand = max(x1, x2)
                    else:
                        cand = x1 + (x2 - x1) * (y1 - k) / (y1 - y2)
                    if best is None or cand > best:
                        best = cand
            out.append(floor(best))
        return out

    def __eq__(self, other):
        return isinstance(other, ConvexPath) and self._vertices == other._vertices

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        pts = ", ".join(f"({px},{py})" for px, py in self._vertices)
        return f"ConvexPath([{pts}])"


def rational_path(g: ConvexGenerator) -> ConvexPath:
    """The generator's own path as a :class:`ConvexPath`."""
    return ConvexPath(g.vertices)
