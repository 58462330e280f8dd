"""Toric domains over the first quadrant and their symplectic action.

Three variants: the polydisk ``P(a,b)`` (moment image a rectangle), the
ellipsoid ``E(a,b)`` (a right triangle) and a general convex PL region with
strictly positive axis intercepts.  The action of a generator is the sum
over its edges of the cross product of the displacement vector with a
support point of the region, which reduces to ``b x + a y`` for polydisks
and to the tangent-line value for ellipsoids.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .generators import (
    ELLIPTIC_ONLY,
    ConvexGenerator,
    ConvexPath,
    enumerate_generators,
)


class InvalidDomain(ValueError):
    """Text or parameters that do not describe a valid toric domain."""


def _frac(value) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InvalidDomain(f"bad rational {value!r}") from exc


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class ToricDomain:
    """Shared action machinery; concrete variants supply support candidates."""

    def _support_candidates(self):
        raise NotImplementedError

    def support_point(self, alpha: int, beta: int) -> tuple[Fraction, Fraction]:
        """A point of the region maximizing ``beta*x + alpha*y``; ties are
        broken toward the smallest x, then the smallest y."""
        if alpha < 0 or beta < 0 or (alpha, beta) == (0, 0):
            raise ValueError("direction must be nonnegative and nonzero")
        best = None
        best_val = None
        for p in self._support_candidates():
            val = beta * p[0] + alpha * p[1]
            if best is None or val > best_val or (val == best_val and p < best):
                best, best_val = p, val
        return best

    def edge_weight(self, alpha: int, beta: int) -> Fraction:
        """Action contribution of one unit of multiplicity in a direction."""
        px, py = self.support_point(alpha, beta)
        return alpha * py + beta * px

    def action(self, g: ConvexGenerator) -> Fraction:
        """Symplectic action of a generator with respect to this domain."""
        total = Fraction(0)
        for a, b, m, _label in g.edges:
            total += m * self.edge_weight(a, b)
        return total

    def action_lower_bound(self, x: int, y: int) -> Fraction:
        """A lower bound for the action of any path from ``(0,y)`` to ``(x,0)``."""
        return max(x * py + y * px for px, py in self._support_candidates())

    def volume(self) -> Fraction:
        raise NotImplementedError


@dataclass(frozen=True)
class Polydisk(ToricDomain):
    """P(a, b): moment image the rectangle [0,a] x [0,b]."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if self.a <= 0 or self.b <= 0:
            raise InvalidDomain("polydisk parameters must be positive")

    def _support_candidates(self):
        return ((Fraction(0), Fraction(0)), (self.a, Fraction(0)),
                (Fraction(0), self.b), (self.a, self.b))

    def volume(self) -> Fraction:
        return self.a * self.b

    def __str__(self):
        return f"P({_fmt(self.a)},{_fmt(self.b)})"


@dataclass(frozen=True)
class Ellipsoid(ToricDomain):
    """E(a, b): moment image the triangle with legs a and b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if self.a <= 0 or self.b <= 0:
            raise InvalidDomain("ellipsoid parameters must be positive")

    def _support_candidates(self):
        return ((Fraction(0), Fraction(0)), (self.a, Fraction(0)), (Fraction(0), self.b))

    def volume(self) -> Fraction:
        return self.a * self.b / 2

    def __str__(self):
        return f"E({_fmt(self.a)},{_fmt(self.b)})"


@dataclass(frozen=True)
class ConvexPL(ToricDomain):
    """Convex toric domain bounded by a PL path with positive intercepts."""

    boundary: ConvexPath

    def __post_init__(self):
        if not isinstance(self.boundary, ConvexPath):
            object.__setattr__(self, "boundary", ConvexPath(self.boundary))
        if self.boundary.x_intercept <= 0 or self.boundary.y_intercept <= 0:
            raise InvalidDomain("PL domain needs strictly positive axis intercepts")

    def _support_candidates(self):
        return ((Fraction(0), Fraction(0)),) + self.boundary.vertices

    def volume(self) -> Fraction:
        verts = ((Fraction(0), Fraction(0)),) + self.boundary.vertices
        twice = Fraction(0)
        for (x1, y1), (x2, y2) in zip(verts, verts[1:] + verts[:1]):
            twice += x1 * y2 - x2 * y1
        return abs(twice) / 2

    def __str__(self):
        pts = ",".join(f"({_fmt(px)},{_fmt(py)})" for px, py in self.boundary.vertices)
        return f"PL[{pts}]"


def trivial_inclusion(a, b, c) -> bool:
    """Whether ``P(a,1)`` sits inside ``E(b*c, c)`` by inclusion: a + b <= b*c."""
    a, b, c = _frac(a), _frac(b), _frac(c)
    if b <= 0 or c <= 0:
        raise ValueError("b and c must be positive")
    return a + b <= b * c


def is_minimal(domain: ToricDomain, g: ConvexGenerator) -> bool:
    """Whether ``g`` uniquely minimizes the action among purely elliptic
    generators of its (even) index."""
    if not g.is_elliptic:
        raise ValueError("minimality is defined for purely elliptic generators")
    target = domain.action(g)
    seen_self = False
    for cand in enumerate_generators(g.index, target, domain, ELLIPTIC_ONLY):
        if cand == g:
            seen_self = True
        else:
            return False
    if not seen_self:
        raise AssertionError("generator missing from its own enumeration")
    return True


# -- parsing ----------------------------------------------------------------

def parse_domain(text: str) -> ToricDomain:
    """Parse ``P(a,b)``, ``E(a,b)`` or ``PL[(x0,y0),(x1,y1),...]`` with
    rational coordinates written as ``num/den`` or integers."""
    s = text.strip()
    if s.startswith("PL[") and s.endswith("]"):
        body = s[3:-1].strip()
        pts = []
        while body:
            if not body.startswith("("):
                raise InvalidDomain(f"bad PL point list in {text!r}")
            close = body.find(")")
            if close < 0:
                raise InvalidDomain(f"unclosed point in {text!r}")
            coords = body[1:close].split(",")
            if len(coords) != 2:
                raise InvalidDomain(f"bad point {body[:close + 1]!r}")
            pts.append((_frac(coords[0]), _frac(coords[1])))
            body = body[close + 1:].lstrip().lstrip(",").lstrip()
        if len(pts) < 2:
            raise InvalidDomain("PL domain needs at least two boundary points")
        try:
            return ConvexPL(ConvexPath(pts))
        except ValueError as exc:
            raise InvalidDomain(str(exc)) from exc
    for head, cls in (("P(", Polydisk), ("E(", Ellipsoid)):
        if s.startswith(head) and s.endswith(")"):
            parts = s[len(head):-1].split(",")
            if len(parts) != 2:
                raise InvalidDomain(f"expected two parameters in {text!r}")
            return cls(_frac(parts[0]), _frac(parts[1]))
    raise InvalidDomain(f"cannot parse domain {text!r}")
