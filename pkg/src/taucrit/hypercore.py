"""Uniform hypergraphs over bit-set vertex masks.

A vertex set is a plain ``int`` whose bit ``i`` marks vertex ``i``.  Edges are
stored as such masks, sorted lexicographically by their vertex tuples, so that
every iteration order and every serialization is deterministic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128


class HypergraphError(ValueError):
    """Invalid hypergraph construction or edit."""


class ParseError(HypergraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# -- vertex-set helpers -------------------------------------------------------

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def edge_key(mask: int) -> tuple[int, ...]:
    return tuple(members(mask))


def format_set(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


# -- the hypergraph ----------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    """An ``r``-uniform hypergraph on vertices ``0..n-1``.

    ``edges`` is a tuple of bit masks in lexicographic order of their vertex
    tuples.  Use :meth:`from_edges` to build one from vertex lists.
    """

    r: int
    n: int
    edges: tuple[int, ...] = ()
    _edge_set: frozenset = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.r < 2:
            raise HypergraphError(f"uniformity must be >= 2, got {self.r}")
        if not 0 <= self.n <= MAX_VERTICES:
            raise HypergraphError(f"vertex count must lie in [0, {MAX_VERTICES}], got {self.n}")
        edges = tuple(self.edges)
        limit = full_mask(self.n)
        for e in edges:
            if e.bit_count() != self.r:
                raise HypergraphError(f"edge {format_set(e)} does not have {self.r} vertices")
            if e & ~limit:
                raise HypergraphError(f"edge {format_set(e)} leaves vertex range 0..{self.n - 1}")
        es = frozenset(edges)
        if len(es) != len(edges):
            raise HypergraphError("duplicate edge")
        object.__setattr__(self, "edges", tuple(sorted(edges, key=edge_key)))
        object.__setattr__(self, "_edge_set", es)

    @classmethod
    def from_edges(cls, r: int, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        masks = []
        for e in edges:
            vs = list(e)
            if len(set(vs)) != len(vs):
                raise HypergraphError(f"edge {vs} repeats a vertex")
            if any(v < 0 or v >= n for v in vs):
                raise HypergraphError(f"edge {vs} leaves vertex range 0..{n - 1}")
            masks.append(mask_of(vs))
        return cls(r, n, tuple(masks))

    @classmethod
    def complete(cls, r: int, n: int) -> "Hypergraph":
        return cls(r, n, tuple(mask_of(c) for c in itertools.combinations(range(n), r)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> int:
        return full_mask(self.n)

    def __contains__(self, edge) -> bool:
        if not isinstance(edge, int):
            edge = mask_of(edge)
        return edge in self._edge_set

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def edge_tuples(self) -> list[tuple[int, ...]]:
        return [edge_key(e) for e in self.edges]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in members(e):
                deg[v] += 1
        return deg

    def add_edge(self, e) -> "Hypergraph":
        if not isinstance(e, int):
            e = mask_of(e)
        if e in self._edge_set:
            raise HypergraphError(f"{format_set(e)} is already an edge")
        return Hypergraph(self.r, self.n, self.edges + (e,))

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex map ``v -> perm[v]`` (a permutation of 0..n-1)."""
        if sorted(perm) != list(range(self.n)):
            raise HypergraphError("relabeling must be a permutation of the vertices")
        return Hypergraph(self.r, self.n, tuple(mask_of(perm[v] for v in members(e)) for e in self.edges))

    def __str__(self) -> str:
        return serialize(self).strip().replace("\n", "; ")


# -- structural operations ---------------------------------------------------

def complement(h: Hypergraph) -> Hypergraph:
    """All ``r``-subsets of the vertex set that are not edges of ``h``."""
    present = h._edge_set
    return Hypergraph(h.r, h.n, tuple(
        m for m in (mask_of(c) for c in itertools.combinations(range(h.n), h.r))
        if m not in present))


def delete_edge(h: Hypergraph, e) -> Hypergraph:
    if not isinstance(e, int):
        e = mask_of(e)
    if e not in h._edge_set:
        raise HypergraphError(f"{format_set(e)} is not an edge")
    return Hypergraph(h.r, h.n, tuple(f for f in h.edges if f != e))


def _compress(h: Hypergraph, keep: int, edges: Iterable[int]) -> tuple[Hypergraph, dict[int, int]]:
    mapping = {v: i for i, v in enumerate(members(keep))}
    new_edges = tuple(mask_of(mapping[v] for v in members(e)) for e in edges)
    return Hypergraph(h.r, len(mapping), new_edges), mapping


def delete_vertex(h: Hypergraph, v: int) -> tuple[Hypergraph, dict[int, int]]:
    """Remove ``v`` and its edges; the survivors shift down to stay contiguous.

    Returns the new hypergraph and the old-to-new vertex map.
    """
    if not 0 <= v < h.n:
        raise HypergraphError(f"vertex {v} out of range 0..{h.n - 1}")
    bit = 1 << v
    return _compress(h, h.vertex_mask & ~bit, (e for e in h.edges if not e & bit))


def spanned_subhypergraph(h: Hypergraph, edges: Iterable) -> tuple[Hypergraph, dict[int, int]]:
    """The partial hypergraph on ``edges`` restricted to the vertices they cover."""
    chosen = [e if isinstance(e, int) else mask_of(e) for e in edges]
    for e in chosen:
        if e not in h._edge_set:
            raise HypergraphError(f"{format_set(e)} is not an edge")
    union = 0
    for e in chosen:
        union |= e
    return _compress(h, union, chosen)


def isolated_vertices(h: Hypergraph) -> int:
    union = 0
    for e in h.edges:
        union |= e
    return h.vertex_mask & ~union


def drop_isolated(h: Hypergraph) -> Hypergraph:
    return spanned_subhypergraph(h, h.edges)[0]


# -- canonical form ----------------------------------------------------------

def _refine(colors: list[int], edge_lists: list[list[int]], edge_vertices: list[list[int]]) -> list[int]:
    """Equitable-style refinement: split color classes by the multiset of
    colour patterns of incident edges until stable."""
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            pats = []
            for ei in edge_lists[v]:
                others = sorted(colors[u] for u in edge_vertices[ei] if u != v)
                pats.append(tuple(others))
            pats.sort()
            sigs.append((colors[v], tuple(pats)))
        order = sorted(set(sigs))
        index = {s: i for i, s in enumerate(order)}
        new = [index[s] for s in sigs]
        if len(order) == len(set(colors)):
            return new
        colors = new


def _orbit_rep(v: int, gens: list[list[int]]) -> int:
    """Smallest vertex in the orbit of ``v`` under the group generated by ``gens``."""
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for g in gens:
            w = g[u]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return min(seen)


def canonical_labeling(h: Hypergraph) -> list[int]:
    """Permutation ``perm`` such that ``h.relabel(perm)`` is the canonical
    representative of the isomorphism class of ``h``.

    Individualization-refinement: refine vertex colours, individualize each
    vertex of the first non-singleton cell in turn, keep the least leaf code.
    Automorphisms discovered at equal leaves prune branches that lie in an
    already explored orbit of the pointwise stabilizer of the current prefix.
    """
    n = h.n
    edge_vertices = [members(e) for e in h.edges]
    edge_lists: list[list[int]] = [[] for _ in range(n)]
    for i, vs in enumerate(edge_vertices):
        for v in vs:
            edge_lists[v].append(i)

    best_code = None
    best_perm: list[int] | None = None
    automorphisms: list[list[int]] = []

    def leaf_code(colors):
        return tuple(sorted(tuple(sorted(colors[v] for v in vs)) for vs in edge_vertices))

    def search(colors, prefix):
        nonlocal best_code, best_perm
        colors = _refine(colors, edge_lists, edge_vertices)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            code = leaf_code(colors)
            if best_code is None or code < best_code:
                best_code, best_perm = code, list(colors)
            elif code == best_code:
                inverse = [0] * n
                for v, pos in enumerate(best_perm):
                    inverse[pos] = v
                automorphisms.append([inverse[colors[v]] for v in range(n)])
            return
        explored: list[int] = []
        for v in range(n):
            if colors[v] != target:
                continue
            if explored:
                stab = [g for g in automorphisms if all(g[p] == p for p in prefix)]
                if stab:
                    rep = _orbit_rep(v, stab)
                    if any(_orbit_rep(u, stab) == rep for u in explored):
                        continue
            explored.append(v)
            # v takes the lowest colour of the split cell
            child = [2 * c + (1 if c >= target and u != v else 0) for u, c in enumerate(colors)]
            search(child, prefix + (v,))

    search([0] * n, ())
    return best_perm if best_perm is not None else []


def canonical_form(h: Hypergraph) -> bytes:
    """Byte string equal for two hypergraphs exactly when they are isomorphic.

    Layout: ``n``, ``r``, edge count (two bytes), then the canonically
    relabeled edges as sorted vertex tuples in lexicographic order.
    """
    perm = canonical_labeling(h)
    edges = sorted(tuple(sorted(perm[v] for v in members(e))) for e in h.edges)
    out = bytearray((h.n, h.r))
    out += len(edges).to_bytes(2, "big")
    for e in edges:
        out += bytes(e)
    return bytes(out)


def canonical_hypergraph(h: Hypergraph) -> Hypergraph:
    return h.relabel(canonical_labeling(h))


def from_canonical_form(code: bytes) -> Hypergraph:
    n, r = code[0], code[1]
    m = int.from_bytes(code[2:4], "big")
    body = code[4:]
    return Hypergraph.from_edges(r, n, [body[i * r:(i + 1) * r] for i in range(m)])


def all_hypergraphs(r: int, n: int) -> Iterator[Hypergraph]:
    """One representative of every isomorphism class of ``r``-uniform
    hypergraphs on exactly ``n`` vertices (isolated vertices allowed),
    generated edge by edge with canonical deduplication."""
    candidates = [mask_of(c) for c in itertools.combinations(range(n), r)]
    level = {canonical_form(Hypergraph(r, n)): Hypergraph(r, n)}
    while level:
        nxt: dict[bytes, Hypergraph] = {}
        for code in sorted(level):
            g = level[code]
            yield g
            for e in candidates:
                if e in g._edge_set:
                    continue
                child = Hypergraph(r, n, g.edges + (e,))
                c = canonical_form(child)
                if c not in nxt:
                    nxt[c] = canonical_hypergraph(child)
        level = nxt


def edge_count_bound(r: int, n: int) -> int:
    return comb(n, r)


# -- text format -------------------------------------------------------------

def serialize(h: Hypergraph) -> str:
    lines = [f"r={h.r} n={h.n}"]
    lines += [" ".join(map(str, edge_key(e))) for e in h.edges]
    return "\n".join(lines) + "\n"


def _parse_header(line: str, lineno: int, expect: tuple[str, ...], prefix: str | None = None) -> dict[str, int]:
    tokens = line.split()
    if prefix is not None:
        if not tokens or tokens[0] != prefix:
            raise ParseError(f"expected header starting with '{prefix}'", lineno)
        tokens = tokens[1:]
    values = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep or key not in expect or key in values:
            raise ParseError(f"malformed header token '{tok}'", lineno)
        try:
            values[key] = int(val)
        except ValueError:
            raise ParseError(f"non-integer value in '{tok}'", lineno) from None
    missing = [k for k in expect if k not in values]
    if missing:
        raise ParseError(f"header missing {', '.join(missing)}", lineno)
    return values


def _int_tokens(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"non-integer vertex in '{line.strip()}'", lineno) from None


def parse_blocks(text: str, start_line: int = 1) -> list[Hypergraph]:
    """Parse every hypergraph block in ``text`` (blocks end at a blank line)."""
    blocks = []
    header = None
    edges: list[int] = []
    seen: set[int] = set()

    def finish():
        nonlocal header, edges, seen
        if header is not None:
            blocks.append(Hypergraph(header["r"], header["n"], tuple(edges)))
        header, edges, seen = None, [], set()

    for lineno, raw in enumerate(text.splitlines(), start=start_line):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            finish()
            continue
        if header is None:
            header = _parse_header(line, lineno, ("r", "n"))
            if header["r"] < 2:
                raise ParseError("uniformity must be >= 2", lineno)
            if not 0 <= header["n"] <= MAX_VERTICES:
                raise ParseError(f"n must lie in [0, {MAX_VERTICES}]", lineno)
            continue
        vs = _int_tokens(line, lineno)
        r, n = header["r"], header["n"]
        if len(vs) != r:
            raise ParseError(f"edge has {len(vs)} vertices, expected {r}", lineno)
        if any(v < 0 or v >= n for v in vs):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ParseError("edge vertices must be strictly increasing", lineno)
        e = mask_of(vs)
        if e in seen:
            raise ParseError("duplicate edge", lineno)
        seen.add(e)
        edges.append(e)
    finish()
    return blocks


def parse(text: str) -> Hypergraph:
    blocks = parse_blocks(text)
    if len(blocks) != 1:
        raise ParseError(f"expected exactly one hypergraph block, found {len(blocks)}")
    return blocks[0]
