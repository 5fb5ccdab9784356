"""Complementation identities and the witness <-> tau-critical correspondence.

Both transforms re-verify every claim with the exact solvers instead of
trusting the construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .criticality import (PreconditionError, extract_tau_critical, is_tau_critical,
                          is_vertex_critical, is_witness)
from .hypercore import Hypergraph, canonical_form, complement, format_set, serialize
from .solvers import independence_number, transversal_number, clique_number


class IdentityViolation(AssertionError):
    """A complementation identity failed; this is a solver bug."""


@dataclass
class GallaiReport:
    n: int
    alpha: int
    tau: int
    omega: int
    omega_complement: int
    tau_complement: int

    @property
    def identities(self) -> dict[str, bool]:
        return {
            "n = alpha + tau": self.n == self.alpha + self.tau,
            "n = omega(complement) + tau": self.n == self.omega_complement + self.tau,
            "n = omega + tau(complement)": self.n == self.omega + self.tau_complement,
        }

    @property
    def holds(self) -> bool:
        return all(self.identities.values())

    def lines(self) -> list[tuple[str, str]]:
        out = [("n", str(self.n)), ("alpha", str(self.alpha)), ("tau", str(self.tau)),
               ("omega", str(self.omega)), ("omega_complement", str(self.omega_complement)),
               ("tau_complement", str(self.tau_complement))]
        out += [(f"identity {k}", "ok" if v else "VIOLATED") for k, v in self.identities.items()]
        return out


def gallai_check(h: Hypergraph, strict: bool = True) -> GallaiReport:
    """Compute alpha, tau, omega and their complement counterparts separately
    and compare.  With ``strict`` a violation raises."""
    hc = complement(h)
    report = GallaiReport(
        n=h.n,
        alpha=independence_number(h).value,
        tau=transversal_number(h).value,
        omega=clique_number(h).value,
        omega_complement=clique_number(hc).value,
        tau_complement=transversal_number(hc).value,
    )
    if strict and not report.holds:
        failed = [k for k, v in report.identities.items() if not v]
        raise IdentityViolation(f"identity failed on {h}: {failed}")
    return report


@dataclass
class EquivalenceTrace:
    direction: str
    n: int
    k: int
    t: int
    source: Hypergraph
    complement: Hypergraph
    output: Hypergraph
    transcript: list[tuple[str, str]] = field(default_factory=list)

    def check(self, key: str, value) -> None:
        if isinstance(value, bool):
            value = str(value).lower()
        self.transcript.append((key, str(value)))

    def to_text(self) -> str:
        head = [("direction", self.direction), ("n", str(self.n)), ("k", str(self.k)), ("t", str(self.t))]
        return "".join(f"{k}: {v}\n" for k, v in head + self.transcript)

    def output_block(self) -> str:
        return serialize(self.output)


def witness_to_critical(h: Hypergraph) -> EquivalenceTrace:
    """From an ``(n, k)``-witness ``h`` to a spanning tau-critical partial
    hypergraph of its complement with transversal number ``t = n - k``."""
    w = is_witness(h)
    if not w.is_witness:
        raise PreconditionError("not a witness", f"maximum cliques share {format_set(w.intersection)}")
    n, k = h.n, w.k
    t = n - k
    hc = complement(h)
    trace = EquivalenceTrace("to-critical", n, k, t, h, hc, hc)
    trace.check("omega", k)
    tau_c = transversal_number(hc).value
    trace.check("tau_complement", tau_c)
    if tau_c != t:
        raise IdentityViolation(f"tau(complement) = {tau_c}, expected n - k = {t}")
    vc = is_vertex_critical(hc)
    trace.check("complement_vertex_critical", vc.is_vertex_critical)
    if not vc.is_vertex_critical:
        raise IdentityViolation("complement of a witness is not vertex-critical")
    if not hc.edges:
        raise PreconditionError("empty complement", "k = n leaves nothing to extract")
    out, report = extract_tau_critical(hc)
    trace.output = out
    trace.check("removed_edges", len(report.extraction_order))
    trace.check("output_n", out.n)
    trace.check("output_tau", report.tau)
    trace.check("output_tau_critical", report.is_tau_critical)
    trace.check("spanning", out.n == n)
    if not (report.is_tau_critical and report.tau == t and out.n == n):
        raise IdentityViolation("extraction did not yield a spanning tau-critical hypergraph")
    return trace


def critical_to_witness(h: Hypergraph) -> EquivalenceTrace:
    """From a tau-critical ``h`` with ``tau = t`` to its complement, an
    ``(n, n - t)``-witness whose maximum cliques also cover every vertex."""
    report = is_tau_critical(h)
    if not report.is_tau_critical:
        bad = report.non_dropping_edges()
        detail = f"edge {bad[0]} does not lower tau" if bad else f"isolated {format_set(report.isolated)}"
        raise PreconditionError("not tau-critical", detail)
    n, t = h.n, report.tau
    hc = complement(h)
    trace = EquivalenceTrace("to-witness", n, n - t, t, h, hc, hc)
    trace.check("tau", t)
    w = is_witness(hc)
    trace.check("omega_complement", w.k)
    trace.check("max_cliques", len(w.cliques))
    trace.check("intersection", format_set(w.intersection))
    trace.check("union_covers", w.covers)
    trace.check("witness", w.is_witness)
    if w.k != n - t or not w.is_witness or not w.covers:
        raise IdentityViolation("complement of a tau-critical hypergraph failed the witness checks")
    return trace


@dataclass
class RoundTripReport:
    n: int
    t: int
    returned_n: int
    returned_t: int
    same_class: bool
    forward: EquivalenceTrace
    backward: EquivalenceTrace

    @property
    def ok(self) -> bool:
        return self.n == self.returned_n and self.t == self.returned_t


def round_trip_check(h: Hypergraph) -> RoundTripReport:
    forward = critical_to_witness(h)
    backward = witness_to_critical(forward.output)
    out = backward.output
    return RoundTripReport(
        n=h.n, t=forward.t, returned_n=out.n, returned_t=backward.t,
        same_class=canonical_form(out) == canonical_form(h),
        forward=forward, backward=backward)
