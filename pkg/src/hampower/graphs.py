"""Undirected simple graphs on vertices 0..n-1 with bitmask adjacency rows.

Every neighborhood is stored as a Python int used as a bitset, so the hot
operation everywhere else in the package (intersecting neighborhoods during
clique counting and cycle-power search) is a single word-parallel AND.
Graphs are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

Edge = tuple[int, int]

_MASK128 = (1 << 128) - 1


class Graph:
    """Immutable simple graph: a vertex count plus a frozenset of edges (u, v), u < v."""

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            es.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(es)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def adj(self) -> list[int]:
        """Per-vertex neighbor bitmasks; bit j of row i is set iff ij is an edge."""
        rows = self.__dict__.get("_adj")
        if rows is None:
            rows = [0] * self.n
            for u, v in self.edges:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            self.__dict__["_adj"] = rows
        return rows

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no degrees")
        return min(self.adj[v].bit_count() for v in range(self.n))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"


# ---------------------------------------------------------------------------
# Deterministic constructors


def complete_graph(n: int) -> Graph:
    """All C(n, 2) edges on n >= 1 vertices."""
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def path_power(v: int, m: int) -> Graph:
    """m-th power of the path on v vertices: i ~ j iff 0 < |i - j| <= m.

    For v >= m + 1 the edge count is v*m - C(m+1, 2).
    """
    if v < 1 or m < 1:
        raise ValueError("path_power needs v >= 1 and m >= 1")
    edges = [(i, j) for i in range(v) for j in range(i + 1, min(i + m, v - 1) + 1)]
    return Graph(v, edges)


def cycle_power(v: int, m: int) -> Graph:
    """m-th power of the cycle on v vertices: i ~ j iff cyclic distance <= m.

    For v >= 2m + 1 the edge count is v*m (the graph is 2m-regular).
    """
    if v < 3 or m < 1:
        raise ValueError("cycle_power needs v >= 3 and m >= 1")
    edges = set()
    for i in range(v):
        for d in range(1, min(m, v - 1) + 1):
            j = (i + d) % v
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return Graph(v, edges)


def eps_patch_size(n: int, eps: Fraction) -> int:
    """floor(eps * n) for the patched bipartite construction."""
    eps = Fraction(eps)
    return (eps.numerator * n) // eps.denominator


def patched_bipartite(n: int, eps) -> Graph:
    """Complete bipartite K_{n/2,n/2} plus one patch on each side.

    The sides are X = {0..n/2-1} and Y = {n/2..n-1}.  The patches join the
    first floor(eps*n) vertices of each side (U in X, W in Y) completely to
    the rest of their own side.  U and W sit at fixed canonical positions so
    the output is reproducible.  Minimum degree is n/2 + floor(eps*n)
    (attained on X\\U and Y\\W whenever floor(eps*n) <= n/2 - floor(eps*n)).
    """
    eps = Fraction(eps)
    if n < 2 or n % 2 != 0:
        raise ValueError(f"patched_bipartite needs even n >= 2, got {n}")
    if not (0 < eps <= Fraction(1, 4)):
        raise ValueError(f"eps must lie in (0, 1/4], got {eps}")
    k = eps_patch_size(n, eps)
    if k < 1:
        raise ValueError(f"floor(eps*n) = {k}; patches would be empty (n={n}, eps={eps})")
    half = n // 2
    edges = [(x, y) for x in range(half) for y in range(half, n)]
    edges += [(u, x) for u in range(k) for x in range(k, half)]
    edges += [(w, y) for w in range(half, half + k) for y in range(half + k, n)]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Random graphs

# The sampler is counter-based (Philox): the k-th pair always consumes the
# k-th draw of the stream, independent of evaluation order.  Thresholding one
# fixed uniform per pair is also the coupling device used by the sweep module.


def pair_uniforms(n: int, seed: int) -> np.ndarray:
    """One uniform per unordered pair, in row-major upper-triangle order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    bg = np.random.Philox(key=int(seed) & _MASK128)
    return np.random.Generator(bg).random(n * (n - 1) // 2)


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """Binomial random graph: each pair kept independently with probability p.

    Identical (n, p, seed) triples give identical edge sets.  For a fixed
    seed the edge set at p' <= p is a subset of the edge set at p.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 2 or p == 0.0:
        return Graph(n)
    u = pair_uniforms(n, seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = u < p
    return Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def union(g: Graph, h: Graph) -> Graph:
    """Edge-set union of two graphs on the same vertex set."""
    if g.n != h.n:
        raise ValueError(f"vertex counts differ: {g.n} vs {h.n}")
    return Graph(g.n, g.edges | h.edges)


# ---------------------------------------------------------------------------
# Subgraph machinery


def count_cliques(g: Graph, s: int) -> int:
    """Exact number of s-vertex cliques, by pruned recursion on neighborhood masks.

    Vertices are extended in ascending index order, so every clique is counted
    once; candidate sets shrink via bitmask intersection.
    """
    if s < 1:
        raise ValueError("clique size must be >= 1")
    if s == 1:
        return g.n
    if s > g.n:
        return 0
    adj = g.adj

    def extend(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        if cand.bit_count() < need:
            return 0
        total = 0
        rest = cand
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            total += extend(rest & adj[v], need - 1)
        return total

    return extend((1 << g.n) - 1, s)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Relabeled induced subgraph; vertex i of the result is vertices[i]."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise ValueError("duplicate vertices in subset")
    for v in vs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    edges = [
        (i, j)
        for i, j in combinations(range(len(vs)), 2)
        if g.has_edge(vs[i], vs[j])
    ]
    return Graph(len(vs), edges)


def induced_edge_count(g: Graph, vertices) -> int:
    """Number of edges of g with both endpoints in the given vertex set."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    adj = g.adj
    total = 0
    rest = mask
    while rest:
        bit = rest & -rest
        rest ^= bit
        total += (adj[bit.bit_length() - 1] & mask).bit_count()
    return total // 2


# ---------------------------------------------------------------------------
# I/O: edge-list text format and DOT export (both byte-stable)


def to_edge_list(g: Graph) -> str:
    """Text form: first line "n m", then one "u v" line per edge, u < v, sorted."""
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise ValueError(f"edge lines must satisfy u < v, got {ln!r}")
        edges.append((u, v))
    g = Graph(n, edges)
    if g.num_edges != m:
        raise ValueError(f"header claims {m} edges but {g.num_edges} parsed")
    return g


def save_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as f:
        f.write(to_edge_list(g))


def load_edge_list(path) -> Graph:
    with open(path, "r", encoding="ascii") as f:
        return parse_edge_list(f.read())


def to_dot(g: Graph) -> str:
    """Undirected DOT form for visual inspection; byte-stable for a fixed graph."""
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
