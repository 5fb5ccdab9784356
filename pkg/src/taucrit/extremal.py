"""Order bounds for tau-critical hypergraphs, search for the largest ones, and
certificates for what the search finds.

Search soundness
----------------
Let ``H`` be ``r``-uniform and tau-critical with ``tau(H) = t``.  For every
edge ``e`` there is a set ``T_e`` of ``t - 1`` vertices meeting every edge of
``H - e``; ``T_e`` misses ``e``, otherwise it would be a transversal of ``H``.
Call a hypergraph *admissible* for ``t`` when every edge ``e`` has a set of at
most ``t - 1`` vertices, disjoint from ``e``, meeting all other edges.

* Admissibility is hereditary: for any subset ``F`` of the edges, ``T_e``
  still avoids ``e`` and meets every other edge of ``F``.  So every edge
  subset of a tau-critical hypergraph is admissible, and dropping
  admissibility failures never loses a tau-critical descendant.
* Admissible implies ``tau <= t`` (add any vertex of ``e`` to ``T_e``).
* An admissible hypergraph without isolated vertices is tau-critical with
  ``tau = t`` as soon as ``tau = t``: each ``H - e`` is met by ``T_e``, so
  ``tau(H - e) <= t - 1``, and deleting one edge lowers tau by at most one.
* The pairs ``(e, T_e)`` form a cross-intersecting set-pair system, so by
  Bollobas's theorem an admissible hypergraph has at most
  ``C(r + t - 1, r)`` edges; the search tree is finite.

The exhaustive search grows admissible hypergraphs one edge at a time (a new
edge may bring up to ``r`` fresh vertices), keeping one canonical
representative per isomorphism class at each edge count.  Every admissible
class with ``m + 1`` edges has an admissible parent with ``m`` edges (delete
any edge, then drop isolated vertices), so all classes are visited.
"""
from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path

from .criticality import is_tau_critical
from .hypercore import (Hypergraph, ParseError, canonical_form, canonical_hypergraph,
                        isolated_vertices, mask_of, parse_blocks, serialize)
from .solvers import min_hitting_set, transversal_number

DEFAULT_BUDGET = 10 ** 8
EXHAUSTIVE_LIMITS = {2: 5, 3: 2}


class InfeasibleSearch(ValueError):
    """Exhaustive mode requested outside the supported (r, t) range."""


class SearchIncomplete(RuntimeError):
    """The node budget ran out before an exhaustive search finished."""

    def __init__(self, record: "SearchRecord"):
        self.record = record
        super().__init__(f"exhaustive search for r={record.r} t={record.t} exceeded "
                         f"its budget after {record.nodes} nodes")


# -- bounds -------------------------------------------------------------------

@dataclass(frozen=True)
class BoundsTable:
    r: int
    t: int
    lower_gylt: int
    upper_gylt: int
    sp_upper3: int | None = None
    gylt_upper3: int | None = None
    tuza_upper3: Fraction | None = None
    conjecture3: int | None = None

    def columns(self) -> list[tuple[str, str]]:
        cols = [("r", str(self.r)), ("t", str(self.t)),
                ("lower_gylt", str(self.lower_gylt)), ("upper_gylt", str(self.upper_gylt))]
        if self.r == 3:
            cols += [("conjecture3", str(self.conjecture3)), ("tuza_upper3", str(self.tuza_upper3)),
                     ("gylt_upper3", str(self.gylt_upper3)), ("sp_upper3", str(self.sp_upper3))]
        return cols


def lower_gylt(r: int, t: int) -> int:
    return comb(t + r - 2, r - 1) + (t + r - 2)


def upper_gylt(r: int, t: int) -> int:
    return t ** (r - 1) + t * comb(t + r - 2, r - 2)


def bounds(r: int, t: int) -> BoundsTable:
    if r < 2 or t < 1:
        raise ValueError("bounds need r >= 2 and t >= 1")
    if r != 3:
        return BoundsTable(r, t, lower_gylt(r, t), upper_gylt(r, t))
    return BoundsTable(
        r, t, lower_gylt(r, t), upper_gylt(r, t),
        sp_upper3=8 * t * t + 3 * t,
        gylt_upper3=2 * t * t + t,
        tuza_upper3=Fraction(3, 4) * t * t + t + 1,
        conjecture3=comb(t + 2, 2),
    )


def edge_bound(r: int, t: int) -> int:
    """Most edges an admissible (hence any tau-critical) hypergraph can have."""
    return comb(r + t - 1, r)


# -- certificates ------------------------------------------------------------

@dataclass(frozen=True)
class ExtremalCertificate:
    hypergraph: Hypergraph
    r: int
    t: int
    n: int
    transcript: tuple[tuple[tuple[int, ...], int], ...]
    code: bytes | None = None

    def to_text(self) -> str:
        lines = [serialize(self.hypergraph), f"claim r={self.r} t={self.t} n={self.n}"]
        lines += [f"edge {','.join(map(str, e))} tau_drop {d}" for e, d in self.transcript]
        if self.code is not None:
            lines.append(f"code {self.code.hex()}")
        return "\n".join(lines) + "\n"

    @property
    def filename(self) -> str:
        code = self.code if self.code is not None else canonical_form(self.hypergraph)
        return f"r{self.r}_t{self.t}_n{self.n}_{code.hex()}.cert"


def make_certificate(h: Hypergraph) -> ExtremalCertificate:
    tau = transversal_number(h).value
    drops = is_tau_critical(h).per_edge
    transcript = tuple((e, tau - v) for e, v in drops.items())
    return ExtremalCertificate(h, h.r, tau, h.n, transcript, canonical_form(h))


def parse_certificate(text: str) -> ExtremalCertificate:
    lines = text.splitlines()
    split = next((i for i, ln in enumerate(lines) if ln.strip().startswith("claim")), None)
    if split is None:
        raise ParseError("certificate has no 'claim' line")
    blocks = parse_blocks("\n".join(lines[:split]))
    if len(blocks) != 1:
        raise ParseError(f"certificate must hold one hypergraph block, found {len(blocks)}")
    claim = None
    transcript = []
    code = None
    for lineno, raw in enumerate(lines[split:], start=split + 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            if tokens[0] == "claim" and claim is None:
                claim = {}
                for tok in tokens[1:]:
                    key, _, val = tok.partition("=")
                    claim[key] = int(val)
                if set(claim) != {"r", "t", "n"}:
                    raise ValueError
            elif tokens[0] == "edge" and len(tokens) == 4 and tokens[2] == "tau_drop":
                transcript.append((tuple(int(v) for v in tokens[1].split(",")), int(tokens[3])))
            elif tokens[0] == "code" and len(tokens) == 2:
                code = bytes.fromhex(tokens[1])
            else:
                raise ValueError
        except ValueError:
            raise ParseError(f"malformed certificate line '{line}'", lineno) from None
    return ExtremalCertificate(blocks[0], claim["r"], claim["t"], claim["n"], tuple(transcript), code)


@dataclass
class CertificateReport:
    accepted: bool
    failing_clause: str | None
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def lines(self) -> list[tuple[str, str]]:
        out = [(f"check {name}", f"{'ok' if ok else 'FAIL'} {detail}") for name, ok, detail in self.checks]
        out.append(("verdict", "accepted" if self.accepted else f"rejected {self.failing_clause}"))
        return out


def verify_certificate(c: ExtremalCertificate) -> CertificateReport:
    """Recompute everything the certificate claims.

    Clauses are checked in order ``uniformity``, ``order``, ``tau``,
    ``isolated``, ``critical``, ``transcript``, ``canonical_code``; the
    first failing one is reported.
    """
    h = c.hypergraph
    checks: list[tuple[str, bool, str]] = []
    checks.append(("uniformity", h.r == c.r, f"claimed {c.r} actual {h.r}"))
    checks.append(("order", h.n == c.n, f"claimed {c.n} actual {h.n}"))
    tau = transversal_number(h).value
    checks.append(("tau", tau == c.t, f"claimed {c.t} actual {tau}"))
    iso = isolated_vertices(h)
    checks.append(("isolated", iso == 0, f"{iso.bit_count()} isolated"))
    report = is_tau_critical(h)
    actual = {e: tau - v for e, v in report.per_edge.items()}
    bad = [e for e, d in actual.items() if d != 1]
    checks.append(("critical", not bad, f"non-dropping edges {bad}" if bad else "every edge drops tau by 1"))
    claimed = dict(c.transcript)
    diverging = sorted(set(claimed) ^ set(actual)) + sorted(
        e for e in set(claimed) & set(actual) if claimed[e] != actual[e])
    checks.append(("transcript", not diverging and len(claimed) == len(c.transcript),
                   f"diverging lines {diverging}" if diverging else f"{len(actual)} lines reproduced"))
    if c.code is not None:
        code_ok = canonical_form(h) == c.code
        checks.append(("canonical_code", code_ok, "matches" if code_ok else "differs"))
    failing = next((name for name, ok, _ in checks if not ok), None)
    return CertificateReport(failing is None, failing, checks)


class CertificateStore:
    """Append-only directory of certificate files keyed by canonical code."""

    def __init__(self, path):
        self.path = Path(path)

    def add(self, c: ExtremalCertificate) -> bool:
        self.path.mkdir(parents=True, exist_ok=True)
        target = self.path / c.filename
        if target.exists():
            return False
        tmp = target.with_suffix(".tmp")
        tmp.write_text(c.to_text())
        os.replace(tmp, target)
        return True

    def certificates(self, r: int | None = None, t: int | None = None) -> list[ExtremalCertificate]:
        if not self.path.is_dir():
            return []
        out = []
        for f in sorted(self.path.glob("*.cert")):
            c = parse_certificate(f.read_text())
            if (r is None or c.r == r) and (t is None or c.t == t):
                out.append(c)
        return out

    def best_order(self, r: int, t: int) -> int | None:
        orders = [c.n for c in self.certificates(r, t) if verify_certificate(c).accepted]
        return max(orders, default=None)


# -- search ------------------------------------------------------------------

def is_admissible(h: Hypergraph, t: int) -> bool:
    """Every edge has at most ``t - 1`` vertices avoiding it and meeting
    every other edge (see the module docstring)."""
    edges = h.edges
    for i, e in enumerate(edges):
        others = edges[:i] + edges[i + 1:]
        if min_hitting_set(others, forbidden=e, limit=t - 1) is None:
            return False
    return True


def candidate_edges(h: Hypergraph):
    """New edges for ``h``: ``r - j`` existing vertices plus ``j`` fresh ones
    numbered ``n..n+j-1``.  Yields ``(j, mask)``."""
    r, n = h.r, h.n
    for j in range(r + 1):
        fresh = mask_of(range(n, n + j))
        for combo in itertools.combinations(range(n), r - j):
            e = mask_of(combo) | fresh
            if e not in h:
                yield j, e


def _expand(parent: Hypergraph, t: int):
    """Admissible children of ``parent`` as ``(code, child)`` in candidate
    order, plus the number of candidates examined."""
    out = []
    tried = 0
    for j, e in candidate_edges(parent):
        tried += 1
        child = Hypergraph(parent.r, parent.n + j, parent.edges + (e,))
        if is_admissible(child, t):
            out.append((canonical_form(child), child))
    return out, tried


def _expand_many(args):
    parents, t = args
    return [_expand(p, t) for p in parents]


@dataclass
class SearchRecord:
    r: int
    t: int
    mode: str
    best_n: int
    certificate: ExtremalCertificate | None
    exhaustive: bool
    nodes: int = 0
    isomorph_rejections: int = 0
    classes_by_edges: dict[int, int] = field(default_factory=dict)
    critical: list[Hypergraph] = field(default_factory=list)
    space_exhausted: bool = False

    def critical_by_order(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for h in self.critical:
            out[h.n] = out.get(h.n, 0) + 1
        return dict(sorted(out.items()))

    def lines(self) -> list[tuple[str, str]]:
        out = [("r", str(self.r)), ("t", str(self.t)), ("mode", self.mode),
               ("best_n", str(self.best_n)), ("exhaustive", str(self.exhaustive).lower()),
               ("nodes", str(self.nodes)), ("isomorph_rejections", str(self.isomorph_rejections)),
               ("critical_classes", str(len(self.critical)))]
        if self.mode == "budgeted":
            out.append(("space_exhausted", str(self.space_exhausted).lower()))
        out += [(f"classes_with_{m}_edges", str(c)) for m, c in sorted(self.classes_by_edges.items())]
        out += [(f"critical_order_{n}", str(c)) for n, c in self.critical_by_order().items()]
        if self.certificate is not None:
            out.append(("certificate_code", self.certificate.code.hex()))
            out += [("certificate_edge", " ".join(map(str, e))) for e in self.certificate.hypergraph.edge_tuples()]
        return out


def _better(h: Hypergraph, code: bytes, best) -> bool:
    if best is None:
        return True
    return h.n > best[0].n or (h.n == best[0].n and code < best[1])


def check_exhaustive_feasible(r: int, t: int) -> None:
    if r < 2 or t < 1:
        raise InfeasibleSearch("search needs r >= 2 and t >= 1")
    if t > EXHAUSTIVE_LIMITS.get(r, 0):
        raise InfeasibleSearch(
            f"exhaustive search at r={r} t={t} is beyond desk scale; use budgeted mode")


def search_v_max(r: int, t: int, mode: str = "exhaustive", budget: int = DEFAULT_BUDGET,
                 workers: int = 1, seed: int | None = None) -> SearchRecord:
    """Largest tau-critical ``r``-uniform hypergraphs with ``tau = t``.

    ``exhaustive`` visits every admissible isomorphism class and proves the
    maximum; ``budgeted`` runs a depth-first dive favouring fresh vertices
    and stops after ``budget`` candidate nodes.  ``seed`` relabels each
    parent randomly before expansion, which must not change the outcome of
    an exhaustive run.
    """
    if mode == "exhaustive":
        check_exhaustive_feasible(r, t)
        return _search_exhaustive(r, t, budget, workers, seed)
    if mode == "budgeted":
        if r < 2 or t < 1:
            raise InfeasibleSearch("search needs r >= 2 and t >= 1")
        return _search_budgeted(r, t, budget, seed)
    raise ValueError(f"unknown search mode {mode!r}")


def _scramble(h: Hypergraph, rng: random.Random | None) -> Hypergraph:
    if rng is None:
        return h
    perm = list(range(h.n))
    rng.shuffle(perm)
    return h.relabel(perm)


def _search_exhaustive(r, t, budget, workers, seed) -> SearchRecord:
    rng = random.Random(seed) if seed is not None else None
    record = SearchRecord(r, t, "exhaustive", 0, None, False)
    empty = Hypergraph(r, 0)
    level = {canonical_form(empty): empty}
    best = None
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        m = 0
        while level:
            record.classes_by_edges[m] = len(level)
            parents = [_scramble(level[code], rng) for code in sorted(level)]
            if pool is None:
                results = (_expand(p, t) for p in parents)
            else:
                chunks = [parents[i::workers] for i in range(workers)]
                parts = list(pool.map(_expand_many, [(c, t) for c in chunks]))
                results = (parts[i % workers][i // workers] for i in range(len(parents)))
            nxt: dict[bytes, Hypergraph] = {}
            for children, tried in results:
                record.nodes += tried
                for code, child in children:
                    if code in nxt:
                        record.isomorph_rejections += 1
                    else:
                        nxt[code] = canonical_hypergraph(child)
                if record.nodes > budget:
                    raise SearchIncomplete(record)
            for code in sorted(nxt):
                h = nxt[code]
                if transversal_number(h).value == t:
                    record.critical.append(h)
                    if _better(h, code, best):
                        best = (h, code)
            level = nxt
            m += 1
            if m > edge_bound(r, t) + 1:
                raise AssertionError("admissible hypergraphs exceeded the set-pair edge bound")
    finally:
        if pool is not None:
            pool.shutdown()
    record.exhaustive = True
    if best is not None:
        record.best_n = best[0].n
        record.certificate = make_certificate(best[0])
    return record


def _search_budgeted(r, t, budget, seed) -> SearchRecord:
    rng = random.Random(seed if seed is not None else 0)
    record = SearchRecord(r, t, "budgeted", 0, None, False)
    seen: set[bytes] = set()
    best = None
    empty = Hypergraph(r, 0)
    stack = [empty]
    seen.add(canonical_form(empty))
    cut = False
    while stack and not cut:
        parent = stack.pop()
        groups: dict[int, list[int]] = {}
        for j, e in candidate_edges(parent):
            groups.setdefault(j, []).append(e)
        # push fewest-fresh first so the dive pops the most fresh vertices next
        ordered = []
        for j in sorted(groups, reverse=True):
            es = groups[j]
            rng.shuffle(es)
            ordered.extend((j, e) for e in es)
        children = []
        for j, e in ordered:
            if record.nodes >= budget:
                cut = True
                break
            record.nodes += 1
            child = Hypergraph(r, parent.n + j, parent.edges + (e,))
            if not is_admissible(child, t):
                continue
            code = canonical_form(child)
            if code in seen:
                record.isomorph_rejections += 1
                continue
            seen.add(code)
            children.append(child)
            if transversal_number(child).value == t:
                record.critical.append(canonical_hypergraph(child))
                if _better(child, code, best):
                    best = (canonical_hypergraph(child), code)
        stack.extend(reversed(children))
    # with the visited set, an emptied stack means every admissible class was seen
    record.space_exhausted = not stack and not cut
    if best is not None:
        record.best_n = best[0].n
        record.certificate = make_certificate(best[0])
    return record


# -- reporting -----------------------------------------------------------------

@dataclass
class GapReport:
    r: int
    t: int
    table: BoundsTable
    best_known: int | None
    status: str
    basis: str

    def lines(self) -> list[tuple[str, str]]:
        out = self.table.columns()
        out += [("best_known", "-" if self.best_known is None else str(self.best_known)),
                ("problem1", self.status), ("basis", self.basis)]
        if self.t < self.r:
            out.append(("note", "t < r lies outside the range of the question"))
        return out


def lower_bound_gap_report(r: int, t: int, records=(), store: CertificateStore | None = None) -> GapReport:
    """Does the largest order equal ``lower_gylt(r, t)`` at this cell?

    ``confirmed``: an exhaustive record or an upper bound meets the lower
    bound.  ``refuted``: a verified certificate exceeds it (``exceeded``
    when ``t < r``, where equality is not expected).  ``open`` otherwise.
    """
    table = bounds(r, t)
    lower = table.lower_gylt
    known = [rec.best_n for rec in records if rec.r == r and rec.t == t and rec.certificate is not None]
    if store is not None:
        stored = store.best_order(r, t)
        if stored is not None:
            known.append(stored)
    best = max(known, default=None)
    uppers = [("upper_gylt", table.upper_gylt)]
    if r == 3:
        uppers.append(("tuza_upper3", table.tuza_upper3))
    tight = [name for name, value in uppers if value <= lower]
    exhaustive = [rec for rec in records if rec.r == r and rec.t == t and rec.exhaustive]
    if best is not None and best > lower:
        # the equality is only asked for t >= r
        status = "refuted" if t >= r else "exceeded"
        return GapReport(r, t, table, best, status, f"certificate of order {best} exceeds {lower}")
    if exhaustive and exhaustive[0].best_n == lower:
        return GapReport(r, t, table, best, "confirmed", f"exhaustive search reached {lower}")
    if tight:
        return GapReport(r, t, table, best, "confirmed", f"{tight[0]} meets lower bound {lower}")
    return GapReport(r, t, table, best, "open", f"lower {lower} < upper {min(v for _, v in uppers)}")
