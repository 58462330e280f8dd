"""Mechanical embedding obstructions for ``P(a,1)`` into ``E(p c / q, c)``.

The target's reference generator is ``e(p,q)^d0``, which is minimal for the
ellipsoid when ``q = 2``.  A candidate factorization pairs parts of some
generator with parts ``e(p,q)^(d_i)`` and must satisfy three conditions:
a pairwise check (index equality, action inequality, genus inequality),
pairwise elliptic-orbit disjointness for distinct pairs, and index equality
of products over every subset.  Exhaustively refuting every candidate
certifies the obstruction ``c >= (q a + p) / p``; a surviving candidate is
returned as an explicit witness.

Two action regimes are supported.  ``Exact`` mode checks ``A <= p c d`` for
one concrete ``c``.  Supremum-strict mode (``c = None``) checks the strict
inequality ``A < (q a + p) d``, which certifies the obstruction for every
``c`` with ``p c < q a + p`` in a single run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .domains import Ellipsoid, Polydisk, ToricDomain
from .generators import (
    ALL_LABELS,
    ConvexGenerator,
    HyperbolicOrbitClash,
    SearchBudget,
    SearchLimitExceeded,
    edge_power,
    enumerate_generators,
    index_edge_power,
)

DEFAULT_NODE_LIMIT = 10**8


@dataclass(frozen=True)
class EmbeddingProblem:
    """Parameters of one embedding question ``P(a,1) -> E(p c / q, c)``.

    ``c=None`` selects supremum-strict mode: one run certifies all ``c``
    below the inclusion threshold ``(q a + p)/p``.
    """

    a: Fraction
    p: int
    d0: int
    q: int = 2
    c: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        if self.c is not None:
            object.__setattr__(self, "c", Fraction(self.c))
            if self.c <= 0:
                raise ValueError("c must be positive")
        if self.a < 1:
            raise ValueError("a must be at least 1")
        if self.p < 1 or self.q < 1 or gcd(self.p, self.q) != 1:
            raise ValueError("p, q must be coprime positive integers")
        if self.d0 < 1:
            raise ValueError("d0 must be a positive integer")

    @property
    def strict_mode(self) -> bool:
        return self.c is None

    @property
    def inclusion_threshold(self) -> Fraction:
        """The value of ``p c`` at which inclusion starts: ``q a + p``."""
        return self.q * self.a + self.p

    @property
    def nontrivial_regime(self) -> bool:
        """True when every admissible ``c`` satisfies ``p c < q a + p``."""
        if self.strict_mode:
            return True
        return self.p * self.c < self.inclusion_threshold

    def action_threshold(self, d: int) -> tuple[Fraction, bool]:
        """Per-factor action bound and strictness for a part of size ``d``."""
        if self.strict_mode:
            return self.inclusion_threshold * d, True
        return self.p * self.c * d, False

    def source_domain(self) -> Polydisk:
        return Polydisk(self.a, 1)

    def target_domain(self) -> Ellipsoid:
        if self.strict_mode:
            raise ValueError("no concrete target in supremum-strict mode")
        return Ellipsoid(Fraction(self.p, self.q) * self.c, self.c)

    def reference_generator(self, d: int | None = None) -> ConvexGenerator:
        return edge_power(self.p, self.q, self.d0 if d is None else d)

    def to_json(self) -> dict:
        out = {
            "a": _frac_json(self.a),
            "p": self.p,
            "q": self.q,
            "d0": self.d0,
            "mode": "supremum_strict" if self.strict_mode else "exact",
        }
        out["c"] = None if self.c is None else _frac_json(self.c)
        return out


def _frac_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


@dataclass(frozen=True)
class LeCheckResult:
    """Outcome of the three-part pairwise check, with exact sides."""

    index_ok: bool
    action_ok: bool
    genus_ok: bool
    index_lhs: int
    index_rhs: int
    action_lhs: Fraction
    action_rhs: Fraction
    genus_lhs: Fraction
    genus_rhs: Fraction
    action_strict: bool = False

    @property
    def passed(self) -> bool:
        return self.index_ok and self.action_ok and self.genus_ok

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "index": {"ok": self.index_ok, "lhs": self.index_lhs, "rhs": self.index_rhs},
            "action": {
                "ok": self.action_ok,
                "lhs": _frac_json(self.action_lhs),
                "rhs": _frac_json(self.action_rhs),
                "strict": self.action_strict,
            },
            "genus": {
                "ok": self.genus_ok,
                "lhs": _frac_json(self.genus_lhs),
                "rhs": _frac_json(self.genus_rhs),
            },
        }


def le_check(g: ConvexGenerator, gp: ConvexGenerator,
             source: ToricDomain, target: ToricDomain) -> LeCheckResult:
    """Evaluate the pairwise relation between ``g`` and the purely elliptic
    reference ``gp``: equal index, source action at most target action, and
    the holomorphic-curve genus inequality."""
    if not gp.is_elliptic:
        raise ValueError("the reference generator must be purely elliptic")
    a_lhs = source.action(g)
    a_rhs = target.action(gp)
    g_lhs = Fraction(2 * (g.x + g.y) - g.h_count, 2)
    g_rhs = Fraction(gp.x + gp.y + gp.total_multiplicity - 1)
    return LeCheckResult(
        index_ok=g.index == gp.index,
        action_ok=a_lhs <= a_rhs,
        genus_ok=g_lhs >= g_rhs,
        index_lhs=g.index,
        index_rhs=gp.index,
        action_lhs=a_lhs,
        action_rhs=a_rhs,
        genus_lhs=g_lhs,
        genus_rhs=g_rhs,
    )


def _pair_check(g: ConvexGenerator, d: int, prob: EmbeddingProblem) -> LeCheckResult:
    # same three conditions, with the mode-dependent action threshold
    bound, strict = prob.action_threshold(d)
    a_lhs = prob.source_domain().action(g)
    g_lhs = Fraction(2 * (g.x + g.y) - g.h_count, 2)
    g_rhs = Fraction((prob.p + prob.q + 1) * d - 1)
    target_index = index_edge_power(prob.p, prob.q, d)
    return LeCheckResult(
        index_ok=g.index == target_index,
        action_ok=(a_lhs < bound) if strict else (a_lhs <= bound),
        genus_ok=g_lhs >= g_rhs,
        index_lhs=g.index,
        index_rhs=target_index,
        action_lhs=a_lhs,
        action_rhs=bound,
        genus_lhs=g_lhs,
        genus_rhs=g_rhs,
        action_strict=strict,
    )


# -- candidate pruning -------------------------------------------------------

@dataclass(frozen=True)
class CandidateWindow:
    """Admissible endpoint profiles for candidates against ``e(p,q)^d``.

    Valid only in the nontrivial regime ``p c < q a + p``: there ``y < q d``
    always holds, and for ``q = 2`` two further strict inequalities refute
    profiles directly.
    """

    a: Fraction
    p: int
    q: int
    d: int

    @property
    def y_max(self) -> int:
        return self.q * self.d - 1

    def admits_y(self, y: int) -> bool:
        if y > self.y_max:
            return False
        if self.q == 2:
            # a > (3d - 1 - y) / (2d - y), cross-multiplied (2d - y > 0)
            if self.a * (2 * self.d - y) <= 3 * self.d - 1 - y:
                return False
        return True

    def admits(self, x: int, y: int) -> bool:
        if not self.admits_y(y):
            return False
        if self.q == 2:
            # a > (x - p d) / (2d - y)
            if self.a * (2 * self.d - y) <= x - self.p * self.d:
                return False
        return True


def prune_candidates(prob: EmbeddingProblem, d: int) -> CandidateWindow:
    """Profile constraints for candidates paired with ``e(p,q)^d``; assumes
    the nontrivial regime."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    return CandidateWindow(prob.a, prob.p, prob.q, d)


def candidate_generators(prob: EmbeddingProblem, d: int, *, pruning: bool = True,
                         budget: SearchBudget | None = None) -> tuple[ConvexGenerator, ...]:
    """All generators that pass the pairwise check against ``e(p,q)^d``.

    Enumerated with the mode-dependent action bound; the genus inequality is
    part of the candidate definition.  ``pruning`` additionally cuts endpoint
    profiles with the nontrivial-regime inequalities (sound: it removes only
    profiles the action and genus constraints already refute).
    """
    target_index = index_edge_power(prob.p, prob.q, d)
    bound, strict = prob.action_threshold(d)
    genus_rhs = (prob.p + prob.q + 1) * d - 1
    window = prune_candidates(prob, d) if (pruning and prob.nontrivial_regime) else None

    def admit(x, y):
        if x + y < genus_rhs:
            return False
        return window is None or window.admits(x, y)

    out = []
    for g in enumerate_generators(target_index, bound, prob.source_domain(),
                                  ALL_LABELS, strict=strict,
                                  profile_filter=admit, budget=budget):
        if 2 * (g.x + g.y) - g.h_count >= 2 * genus_rhs:
            out.append(g)
    return tuple(out)


# -- factorizations -----------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """Parts of a candidate paired with reference powers ``d_i`` summing to d0."""

    parts: tuple[ConvexGenerator, ...]
    d_parts: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.d_parts) or not self.parts:
            raise ValueError("parts and d_parts must be nonempty and aligned")
        if any(d < 1 for d in self.d_parts):
            raise ValueError("every d_i must be positive")

    @property
    def n(self) -> int:
        return len(self.parts)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "parts": [str(g) for g in self.parts],
            "d_parts": list(self.d_parts),
        }


@dataclass(frozen=True)
class FactorizationReport:
    """Per-condition outcome of checking one factorization."""

    pair_checks: tuple[LeCheckResult, ...]
    pairs_ok: bool
    disjointness_ok: bool
    subsets_ok: bool
    failing_subsets: tuple[tuple[int, ...], ...]
    product_wellformed: bool

    @property
    def passed(self) -> bool:
        return self.pairs_ok and self.disjointness_ok and self.subsets_ok

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "pairs_ok": self.pairs_ok,
            "disjointness_ok": self.disjointness_ok,
            "subsets_ok": self.subsets_ok,
            "failing_subsets": [list(s) for s in self.failing_subsets],
            "product_wellformed": self.product_wellformed,
            "pair_checks": [r.to_json() for r in self.pair_checks],
        }


def factorization_check(fact: Factorization, prob: EmbeddingProblem) -> FactorizationReport:
    """Verify the three criterion conditions for one factorization.

    A subset whose product is ill-formed (repeated hyperbolic orbit) is
    reported as a failure, not raised.
    """
    if sum(fact.d_parts) != prob.d0:
        raise ValueError("d_parts must sum to d0")
    n = fact.n
    pair_checks = tuple(
        _pair_check(g, d, prob) for g, d in zip(fact.parts, fact.d_parts)
    )
    pairs_ok = all(r.passed for r in pair_checks)

    disjoint = True
    for i in range(n):
        for j in range(i + 1, n):
            same_pair = (fact.parts[i] == fact.parts[j]
                         and fact.d_parts[i] == fact.d_parts[j])
            if same_pair:
                continue
            if fact.parts[i].elliptic_directions() & fact.parts[j].elliptic_directions():
                disjoint = False
                break
        if not disjoint:
            break

    subsets_ok = True
    wellformed = True
    failing = []
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            prod = fact.parts[subset[0]]
            try:
                for i in subset[1:]:
                    prod = prod * fact.parts[i]
            except HyperbolicOrbitClash:
                wellformed = False
                subsets_ok = False
                failing.append(subset)
                continue
            d_sum = sum(fact.d_parts[i] for i in subset)
            ok = prod.index == index_edge_power(prob.p, prob.q, d_sum)
            if size == 1:
                # singleton subsets repeat the pairwise index condition
                assert ok == pair_checks[subset[0]].index_ok
            if not ok:
                subsets_ok = False
                failing.append(subset)
    return FactorizationReport(
        pair_checks=pair_checks,
        pairs_ok=pairs_ok,
        disjointness_ok=disjoint,
        subsets_ok=subsets_ok,
        failing_subsets=tuple(failing),
        product_wellformed=wellformed,
    )


# -- search -------------------------------------------------------------------

@dataclass
class SearchStats:
    """Counters reported with every obstruction run."""

    nodes: int = 0
    candidates: dict = field(default_factory=dict)
    factorizations_checked: int = 0
    factorizations_passed: int = 0

    def to_json(self) -> dict:
        return {
            "nodes": self.nodes,
            "candidates": {str(d): c for d, c in sorted(self.candidates.items())},
            "factorizations_checked": self.factorizations_checked,
            "factorizations_passed": self.factorizations_passed,
        }


def _partitions_descending(total: int, cap: int | None = None):
    # partitions of `total` into nonincreasing positive parts, largest-first
    if cap is None:
        cap = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, cap), 0, -1):
        for rest in _partitions_descending(total - first, first):
            yield (first,) + rest


def criterion_search(prob: EmbeddingProblem, *, n_values=None, pruning: bool = True,
                     node_limit: int | None = DEFAULT_NODE_LIMIT,
                     stats: SearchStats | None = None):
    """Yield every factorization satisfying all criterion conditions.

    Covers every part count ``n`` from 1 to ``d0`` (restrictable through
    ``n_values``), every partition of ``d0`` and every assignment of
    candidate parts, normalized up to order.  Deterministic; raises
    :class:`SearchLimitExceeded` past the node limit.
    """
    if stats is None:
        stats = SearchStats()
    budget = SearchBudget(node_limit)
    wanted = None if n_values is None else set(n_values)
    cache: dict[int, tuple[ConvexGenerator, ...]] = {}

    def cands(d):
        if d not in cache:
            cache[d] = candidate_generators(prob, d, pruning=pruning, budget=budget)
            stats.candidates[d] = len(cache[d])
            stats.nodes = budget.nodes
        return cache[d]

    try:
        for partition in _partitions_descending(prob.d0):
            n = len(partition)
            if wanted is not None and n not in wanted:
                continue
            groups = [(d, sum(1 for x in partition if x == d))
                      for d in sorted(set(partition), reverse=True)]
            pools = []
            feasible = True
            for d, count in groups:
                cd = cands(d)
                if not cd:
                    feasible = False
                    break
                pools.append(list(itertools.combinations_with_replacement(range(len(cd)), count)))
            if not feasible:
                continue
            for picks in itertools.product(*pools):
                parts = []
                d_parts = []
                for (d, _count), idxs in zip(groups, picks):
                    for i in idxs:
                        parts.append(cands(d)[i])
                        d_parts.append(d)
                fact = Factorization(tuple(parts), tuple(d_parts))
                stats.factorizations_checked += 1
                budget.spend()
                if factorization_check(fact, prob).passed:
                    stats.factorizations_passed += 1
                    stats.nodes = budget.nodes
                    yield fact
    finally:
        stats.nodes = budget.nodes


# -- reports ------------------------------------------------------------------

OBSTRUCTED = "obstructed"
NOT_OBSTRUCTED = "not_obstructed"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of an exhaustive criterion run."""

    problem: EmbeddingProblem
    outcome: str
    bound: Fraction | None = None
    witness: Factorization | None = None
    reason: str | None = None
    stats: SearchStats | None = None

    def to_json(self) -> dict:
        return {
            "problem": self.problem.to_json(),
            "outcome": self.outcome,
            "bound": None if self.bound is None else _frac_json(self.bound),
            "witness": None if self.witness is None else self.witness.to_json(),
            "reason": self.reason,
            "stats": None if self.stats is None else self.stats.to_json(),
        }


def obstruct(prob: EmbeddingProblem, *, pruning: bool = True,
             node_limit: int | None = DEFAULT_NODE_LIMIT) -> ObstructionReport:
    """Run the criterion search to completion.

    Supremum-strict mode: an empty search is an obstruction certificate with
    the exact bound ``c >= (q a + p) / p``.  Exact mode: an empty search
    refutes the criterion at that single ``c``; a surviving factorization is
    returned as the witness either way.  Exceeding the node limit yields an
    inconclusive report, never a false obstruction.
    """
    stats = SearchStats()
    try:
        for fact in criterion_search(prob, node_limit=node_limit,
                                     pruning=pruning, stats=stats):
            return ObstructionReport(prob, NOT_OBSTRUCTED, witness=fact, stats=stats)
    except SearchLimitExceeded as exc:
        return ObstructionReport(prob, INCONCLUSIVE, reason=str(exc), stats=stats)
    bound = None
    if prob.strict_mode:
        bound = prob.inclusion_threshold / prob.p
    return ObstructionReport(prob, OBSTRUCTED, bound=bound, stats=stats)
