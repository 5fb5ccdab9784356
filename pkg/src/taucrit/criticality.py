"""Tau-criticality, vertex-criticality and witness checks."""
from __future__ import annotations

from dataclasses import dataclass, field

from .hypercore import (Hypergraph, delete_edge, delete_vertex, edge_key, format_set,
                        isolated_vertices, members, spanned_subhypergraph)
from .solvers import (DEFAULT_ENUMERATION_CAP, Infeasible, clique_number, enumerate_max_cliques,
                      transversal_number)


class PreconditionError(ValueError):
    """An operation was applied to an input outside its domain.

    ``clause`` names the failing condition.
    """

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        super().__init__(f"{clause}: {detail}" if detail else clause)


@dataclass
class VertexStatus:
    in_some_minimum: bool
    avoided_by_some_minimum: bool
    containing: int | None = None
    avoiding: int | None = None


@dataclass
class CriticalityReport:
    tau: int
    per_edge: dict[tuple[int, ...], int] = field(default_factory=dict)
    per_vertex: dict[int, VertexStatus] = field(default_factory=dict)
    isolated: int = 0
    is_tau_critical: bool | None = None
    is_vertex_critical: bool | None = None
    extraction_order: list[tuple[int, ...]] = field(default_factory=list)
    spanned: int | None = None

    def non_dropping_edges(self) -> list[tuple[int, ...]]:
        return [e for e, v in self.per_edge.items() if v != self.tau - 1]

    def lines(self) -> list[tuple[str, str]]:
        out = [("tau", str(self.tau)), ("isolated", format_set(self.isolated))]
        if self.is_tau_critical is not None:
            out.append(("tau_critical", str(self.is_tau_critical).lower()))
        if self.is_vertex_critical is not None:
            out.append(("vertex_critical", str(self.is_vertex_critical).lower()))
        for e, v in self.per_edge.items():
            out.append((f"edge {','.join(map(str, e))}", f"tau_minus_edge {v}"))
        for v, st in self.per_vertex.items():
            desc = f"in_min {str(st.in_some_minimum).lower()} avoided {str(st.avoided_by_some_minimum).lower()}"
            if st.containing is not None:
                desc += f" containing {format_set(st.containing)}"
            if st.avoiding is not None:
                desc += f" avoiding {format_set(st.avoiding)}"
            out.append((f"vertex {v}", desc))
        return out


@dataclass
class WitnessReport:
    k: int
    cliques: list[int]
    intersection: int
    union: int
    n: int

    @property
    def is_witness(self) -> bool:
        return self.intersection == 0

    @property
    def covers(self) -> bool:
        return self.union == (1 << self.n) - 1

    def lines(self) -> list[tuple[str, str]]:
        out = [("n", str(self.n)), ("k", str(self.k)), ("t", str(self.n - self.k)),
               ("max_cliques", str(len(self.cliques))),
               ("intersection", format_set(self.intersection)),
               ("union", format_set(self.union)),
               ("covers", str(self.covers).lower()),
               ("witness", str(self.is_witness).lower())]
        out += [("clique", format_set(c)) for c in self.cliques]
        return out


def tau_after_deletions(h: Hypergraph) -> dict[tuple[int, ...], int]:
    """``tau(H - e)`` for every edge ``e``, keyed by the edge's vertex tuple."""
    return {edge_key(e): transversal_number(delete_edge(h, e)).value for e in h.edges}


def is_tau_critical(h: Hypergraph) -> CriticalityReport:
    tau = transversal_number(h).value
    report = CriticalityReport(tau=tau, per_edge=tau_after_deletions(h), isolated=isolated_vertices(h))
    report.is_tau_critical = report.isolated == 0 and all(v == tau - 1 for v in report.per_edge.values())
    return report


def is_vertex_critical(h: Hypergraph) -> CriticalityReport:
    """Every vertex in some minimum transversal?

    ``v`` lies in a minimum transversal exactly when deleting ``v`` (with its
    edges) lowers the transversal number by one: drop ``v`` from such a
    transversal, or add ``v`` back to a smaller one.
    """
    tau = transversal_number(h).value
    report = CriticalityReport(tau=tau, isolated=isolated_vertices(h))
    for v in range(h.n):
        reduced, _ = delete_vertex(h, v)
        inside = transversal_number(reduced).value == tau - 1
        try:
            avoided = transversal_number(h, forbidden=1 << v).value == tau
        except Infeasible:
            avoided = False
        report.per_vertex[v] = VertexStatus(inside, avoided)
    report.is_vertex_critical = all(st.in_some_minimum for st in report.per_vertex.values())
    return report


def check_observation2(h: Hypergraph) -> CriticalityReport:
    """For a tau-critical ``h``, exhibit for each vertex one minimum
    transversal containing it and one avoiding it."""
    report = is_tau_critical(h)
    if not report.is_tau_critical:
        bad = report.non_dropping_edges()
        detail = f"edge {bad[0]} does not lower tau" if bad else f"isolated {format_set(report.isolated)}"
        raise PreconditionError("not tau-critical", detail)
    tau = report.tau
    for v in range(h.n):
        bit = 1 << v
        with_v = transversal_number(h, forced=bit)
        try:
            without_v = transversal_number(h, forbidden=bit)
        except Infeasible:
            without_v = None
        inside = with_v.value == tau
        avoided = without_v is not None and without_v.value == tau
        report.per_vertex[v] = VertexStatus(inside, avoided,
                                            with_v.witness if inside else None,
                                            without_v.witness if avoided else None)
    report.is_vertex_critical = all(st.in_some_minimum for st in report.per_vertex.values())
    return report


def extract_tau_critical(h: Hypergraph) -> tuple[Hypergraph, CriticalityReport]:
    """Delete removable edges until none is left, then drop isolated vertices.

    An edge is removable when deleting it keeps the transversal number.  Each
    pass removes the lexicographically first removable edge; the removal
    order and the spanned original vertices are recorded in the report.
    Returns the spanned tau-critical partial hypergraph (relabeled onto
    ``0..n'-1``) and its criticality report.
    """
    if not h.edges:
        raise PreconditionError("no edges", "extraction needs at least one edge")
    tau = transversal_number(h).value
    current = h
    removed = []
    while True:
        for e in current.edges:
            if transversal_number(delete_edge(current, e)).value == tau:
                removed.append(edge_key(e))
                current = delete_edge(current, e)
                break
        else:
            break
    result, _ = spanned_subhypergraph(current, current.edges)
    report = is_tau_critical(result)
    report.extraction_order = removed
    report.spanned = h.vertex_mask & ~isolated_vertices(current)
    return result, report


def is_witness(h: Hypergraph, cap: int = DEFAULT_ENUMERATION_CAP) -> WitnessReport:
    """Clique number and the common part of all maximum cliques.

    ``h`` is a witness when its maximum cliques share no vertex.  Coverage of
    the vertex set is reported but not required.
    """
    k = clique_number(h).value
    cliques = enumerate_max_cliques(h, cap=cap)
    inter = (1 << h.n) - 1
    union = 0
    for c in cliques:
        inter &= c
        union |= c
    return WitnessReport(k=k, cliques=cliques, intersection=inter, union=union, n=h.n)


def clique_family(h: Hypergraph, cap: int = DEFAULT_ENUMERATION_CAP) -> list[list[int]]:
    return [members(c) for c in enumerate_max_cliques(h, cap=cap)]
