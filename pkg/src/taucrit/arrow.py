"""Clique families, the hypergraphs they generate, and negative arrow checks.

A family transversal meets every *set* of the family; a hypergraph
transversal meets every *edge*.  The two are kept apart on purpose.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from math import comb

from .hypercore import (Hypergraph, HypergraphError, ParseError, _int_tokens, _parse_header,
                        edge_key, format_set, full_mask, mask_of, members)
from .solvers import (DEFAULT_ENUMERATION_CAP, SolveResult, clique_number, enumerate_max_cliques,
                      min_hitting_set)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CliqueFamily:
    """Sets ``N_1..N_l`` of at least ``k`` vertices whose union is ``0..n-1``."""

    r: int
    k: int
    sets: tuple[int, ...]

    def __post_init__(self):
        if self.r < 2:
            raise HypergraphError(f"uniformity must be >= 2, got {self.r}")
        if not self.sets:
            raise HypergraphError("a clique family needs at least one set")
        for s in self.sets:
            if s.bit_count() < self.k:
                raise HypergraphError(f"set {format_set(s)} has fewer than k={self.k} elements")
        union = 0
        for s in self.sets:
            union |= s
        if union != full_mask(union.bit_length()):
            raise HypergraphError("the union of the sets must be 0..n-1")

    @classmethod
    def from_sets(cls, r: int, k: int, sets) -> "CliqueFamily":
        return cls(r, k, tuple(mask_of(s) for s in sets))

    @property
    def n(self) -> int:
        union = 0
        for s in self.sets:
            union |= s
        return union.bit_length()

    @property
    def relaxed(self) -> bool:
        """True when the family sits outside ``3 <= r <= k <= n``."""
        return not (3 <= self.r <= self.k <= self.n)


def generate(family: CliqueFamily) -> Hypergraph:
    """Every ``r``-subset of some member set is an edge."""
    edges = set()
    for s in family.sets:
        for c in itertools.combinations(members(s), family.r):
            edges.add(mask_of(c))
    return Hypergraph(family.r, family.n, tuple(edges))


def family_transversal_number(family: CliqueFamily) -> SolveResult:
    t = min_hitting_set(family.sets)
    return SolveResult(t.bit_count(), t)


@dataclass
class ArrowReport:
    n: int
    k: int
    t: int
    u: int
    r: int
    relaxed: bool
    clauses: dict[str, tuple[bool, str]] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(ok for ok, _ in self.clauses.values())

    def lines(self) -> list[tuple[str, str]]:
        out = [("claim", f"({self.n},{self.k},{self.t})^{self.r} -/-> {self.u}")]
        if self.relaxed:
            out.append(("note", "outside 3 <= r <= k <= n"))
        for name, (ok, detail) in self.clauses.items():
            out.append((f"clause {name}", f"{'pass' if ok else 'fail'} {detail}"))
        out.append(("verdict", "pass" if self.holds else "fail"))
        return out


def verify_negative_arrow(family: CliqueFamily, n: int, k: int, t: int, u: int) -> ArrowReport:
    """Check that ``family`` witnesses ``(n, k, t)^r -/-> u`` clause by clause."""
    report = ArrowReport(n, k, t, u, family.r, family.relaxed)
    small = [format_set(s) for s in family.sets if s.bit_count() < k]
    report.clauses["set_sizes"] = (not small, f"min_size={min(s.bit_count() for s in family.sets)} k={k}")
    h = generate(family)
    report.clauses["order"] = (h.n == n, f"generated_n={h.n}")
    ft = family_transversal_number(family)
    report.clauses["no_t_transversal"] = (ft.value > t, f"family_tau={ft.value} witness={format_set(ft.witness)}")
    om = clique_number(h)
    report.clauses["no_u_clique"] = (om.value < u, f"omega={om.value} clique={format_set(om.witness)}")
    return report


def max_clique_intersection(h: Hypergraph, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    inter = h.vertex_mask
    for c in enumerate_max_cliques(h, cap=cap):
        inter &= c
    return inter


@dataclass
class IntersectionReport:
    n: int
    k: int
    r: int
    intersection: int
    bound: int

    @property
    def m(self) -> int:
        return self.n - self.k

    @property
    def size(self) -> int:
        return self.intersection.bit_count()

    @property
    def holds(self) -> bool:
        return self.size >= self.bound

    def lines(self) -> list[tuple[str, str]]:
        return [("n", str(self.n)), ("k", str(self.k)), ("m", str(self.m)), ("r", str(self.r)),
                ("intersection", format_set(self.intersection)),
                ("lhs", str(self.size)), ("rhs", str(self.bound)),
                ("verdict", "holds" if self.holds else "violated")]


def hajnal_folkman_check(h: Hypergraph, cap: int = DEFAULT_ENUMERATION_CAP) -> IntersectionReport:
    """Maximum cliques of a graph share at least ``2k - n`` vertices."""
    if h.r != 2:
        raise ValueError("the Hajnal-Folkman check applies to graphs (r = 2); use problem2_check")
    k = clique_number(h).value
    return IntersectionReport(h.n, k, 2, max_clique_intersection(h, cap), 2 * k - h.n)


def problem2_bound(n: int, k: int, r: int) -> int:
    m = n - k
    return n - (comb(m + r - 2, r - 1) + (m + r - 2))


def problem2_check(h: Hypergraph, cap: int = DEFAULT_ENUMERATION_CAP) -> IntersectionReport:
    """Conjectured lower bound on the common part of the maximum cliques.

    A violation would be a counterexample to an open problem.  It is logged
    with the full hypergraph and returned, never raised.
    """
    k = clique_number(h).value
    report = IntersectionReport(h.n, k, h.r, max_clique_intersection(h, cap), problem2_bound(h.n, k, h.r))
    if not report.holds:
        log.warning("problem2 counterexample candidate: r=%d n=%d k=%d |I|=%d rhs=%d edges=%s",
                    h.r, h.n, k, report.size, report.bound, h.edge_tuples())
    return report


# -- family text format --------------------------------------------------------

def serialize_family(family: CliqueFamily) -> str:
    lines = [f"family r={family.r} k={family.k}"]
    lines += [" ".join(map(str, edge_key(s))) for s in family.sets]
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> CliqueFamily:
    header = None
    sets: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            if not line and header is not None and sets:
                break
            continue
        if header is None:
            header = _parse_header(line, lineno, ("r", "k"), prefix="family")
            continue
        vs = _int_tokens(line, lineno)
        if any(v < 0 for v in vs):
            raise ParseError("negative vertex", lineno)
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ParseError("set members must be strictly increasing", lineno)
        s = mask_of(vs)
        if s in sets:
            raise ParseError("duplicate set", lineno)
        sets.append(s)
    if header is None:
        raise ParseError("missing 'family' header")
    try:
        return CliqueFamily(header["r"], header["k"], tuple(sets))
    except HypergraphError as exc:
        raise ParseError(str(exc)) from None
