"""Exact transversal, independence and clique numbers.

The transversal number is the one optimized kernel: a branch and bound over
uncovered edges.  Independence and clique numbers are read off it through the
complementation identities ``alpha(H) = n - tau(H)`` and
``omega(H) = alpha(complement(H))``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hypercore import Hypergraph, complement, edge_key, full_mask, members

DEFAULT_ENUMERATION_CAP = 10 ** 6
ORACLE_MAX_VERTICES = 20


class EnumerationOverflow(RuntimeError):
    """More optimal sets exist than the enumeration cap allows."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"enumeration exceeded cap of {cap} optimal sets")


class Infeasible(ValueError):
    """No transversal exists under the given forced/forbidden constraints."""


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: int
    all_optima: tuple[int, ...] | None = None

    @property
    def witness_vertices(self) -> list[int]:
        return members(self.witness)


def set_order_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), edge_key(mask))


# -- core kernel -------------------------------------------------------------

def _pick_edge(sets, chosen, forbidden):
    """Uncovered set with the fewest undecided vertices (first in order on ties).

    Returns ``None`` when everything is covered and ``0`` when some uncovered
    set has no usable vertex left.
    """
    best = None
    best_size = None
    for s in sets:
        if s & chosen:
            continue
        free = s & ~forbidden
        size = free.bit_count()
        if size == 0:
            return 0
        if best_size is None or size < best_size:
            best, best_size = free, size
            if size == 1:
                break
    return best


def _packing_bound(sets, chosen, forbidden):
    """Size of a greedy family of pairwise disjoint uncovered sets; every
    transversal extension needs one new vertex per member."""
    used = 0
    count = 0
    for s in sets:
        if s & chosen:
            continue
        free = s & ~forbidden
        if not free & used:
            used |= free
            count += 1
    return count


def _greedy(sets, chosen, forbidden):
    while True:
        pending = [s & ~forbidden for s in sets if not s & chosen]
        if not pending:
            return chosen
        if any(p == 0 for p in pending):
            return None
        counts: dict[int, int] = {}
        for p in pending:
            for v in members(p):
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda u: (-counts[u], u))
        chosen |= 1 << v


def min_hitting_set(sets, forced: int = 0, forbidden: int = 0, limit: int | None = None):
    """Smallest ``T`` with ``forced <= T``, ``T & forbidden == 0`` meeting every set.

    ``sets`` is a sequence of bit masks.  With ``limit`` the search only looks
    for solutions of size at most ``limit`` and returns ``None`` if there is
    none.  Raises :class:`Infeasible` when no solution exists at all.
    """
    if forced & forbidden:
        raise Infeasible("a vertex is both forced and forbidden")
    sets = sorted(set(sets), key=lambda s: (s.bit_count(), edge_key(s)))
    for s in sets:
        if not s & forced and not s & ~forbidden:
            raise Infeasible(f"set {edge_key(s)} has only forbidden vertices")
    start = _greedy(sets, forced, forbidden)
    best = start
    best_size = start.bit_count()
    if limit is not None and best_size > limit:
        best, best_size = None, limit + 1

    def branch(chosen, excluded):
        nonlocal best, best_size
        size = chosen.bit_count()
        if size + _packing_bound(sets, chosen, excluded) >= best_size:
            return
        edge = _pick_edge(sets, chosen, excluded)
        if edge is None:
            best, best_size = chosen, size
            return
        if edge == 0:
            return
        for v in members(edge):
            bit = 1 << v
            branch(chosen | bit, excluded)
            excluded |= bit

    branch(forced, forbidden)
    return best


def enumerate_hitting_sets(sets, size: int, forced: int = 0, forbidden: int = 0,
                           cap: int = DEFAULT_ENUMERATION_CAP) -> list[int]:
    """Every hitting set of exactly ``size`` vertices under the constraints.

    Include/exclude branching on an uncovered set reaches each solution once.
    Only meaningful when ``size`` is the optimum, where all solutions are
    minimal; larger sizes would also need padding with free vertices.
    """
    sets = sorted(set(sets), key=lambda s: (s.bit_count(), edge_key(s)))
    found: list[int] = []

    def branch(chosen, excluded):
        count = chosen.bit_count()
        if count + _packing_bound(sets, chosen, excluded) > size:
            return
        edge = _pick_edge(sets, chosen, excluded)
        if edge is None:
            if count == size:
                found.append(chosen)
                if len(found) > cap:
                    raise EnumerationOverflow(cap)
            return
        if edge == 0 or count == size:
            return
        for v in members(edge):
            bit = 1 << v
            branch(chosen | bit, excluded)
            excluded |= bit

    if not forced & forbidden:
        branch(forced, forbidden)
    found.sort(key=set_order_key)
    return found


# -- public solvers ----------------------------------------------------------

def transversal_number(h: Hypergraph, forced: int = 0, forbidden: int = 0) -> SolveResult:
    """Minimum transversal of ``h``, optionally containing ``forced`` and
    avoiding ``forbidden``."""
    t = min_hitting_set(h.edges, forced, forbidden)
    return SolveResult(t.bit_count(), t)


def independence_number(h: Hypergraph) -> SolveResult:
    tau = transversal_number(h)
    return SolveResult(h.n - tau.value, h.vertex_mask & ~tau.witness)


def clique_number(h: Hypergraph) -> SolveResult:
    """Largest vertex set all of whose ``r``-subsets are edges.

    Sets with fewer than ``r`` vertices count as cliques, so the value is
    never below ``min(n, r - 1)``.
    """
    return independence_number(complement(h))


def enumerate_min_transversals(h: Hypergraph, cap: int = DEFAULT_ENUMERATION_CAP) -> list[int]:
    tau = transversal_number(h).value
    return enumerate_hitting_sets(h.edges, tau, cap=cap)


def enumerate_max_cliques(h: Hypergraph, cap: int = DEFAULT_ENUMERATION_CAP) -> list[int]:
    full = full_mask(h.n)
    cliques = [full & ~t for t in enumerate_min_transversals(complement(h), cap=cap)]
    cliques.sort(key=set_order_key)
    return cliques


# -- independent checks (tests and verification only) ------------------------

def is_transversal(h: Hypergraph, t: int) -> bool:
    return all(e & t for e in h.edges)


def is_independent(h: Hypergraph, s: int) -> bool:
    return not any(e & s == e for e in h.edges)


def is_clique(h: Hypergraph, s: int) -> bool:
    return all(c in h for c in itertools.combinations(members(s), h.r))


def brute_oracle_tau(h: Hypergraph) -> int:
    """Transversal number by scanning vertex subsets in increasing size."""
    if h.n > ORACLE_MAX_VERTICES:
        raise ValueError(f"brute-force oracle refuses n > {ORACLE_MAX_VERTICES}")
    for k in range(h.n + 1):
        for combo in itertools.combinations(range(h.n), k):
            t = 0
            for v in combo:
                t |= 1 << v
            if all(e & t for e in h.edges):
                return k
    raise AssertionError("the full vertex set is always a transversal")


def brute_oracle_alpha(h: Hypergraph) -> int:
    if h.n > ORACLE_MAX_VERTICES:
        raise ValueError(f"brute-force oracle refuses n > {ORACLE_MAX_VERTICES}")
    for k in range(h.n, -1, -1):
        for combo in itertools.combinations(range(h.n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            if is_independent(h, s):
                return k
    return 0


def brute_oracle_omega(h: Hypergraph) -> int:
    if h.n > ORACLE_MAX_VERTICES:
        raise ValueError(f"brute-force oracle refuses n > {ORACLE_MAX_VERTICES}")
    for k in range(h.n, -1, -1):
        for combo in itertools.combinations(range(h.n), k):
            if all(c in h for c in itertools.combinations(combo, h.r)):
                return k
    return 0
