"""Simple undirected graphs: generators, Laplacian spectra, complement, blow-up.

Vertices are the dense integers 0..n-1.  Graphs are immutable once built;
adjacency is kept both as a frozenset of sorted pairs and as per-vertex
bitmasks (arbitrary-precision ints), which the clique enumeration and the
exact domination searches rely on.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Sequence

import numpy as np

from .errors import InputFormatError
from .linalg import symmetric_eigenvalues

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudo-random generator.

    Uses the reference constants 0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9 and
    0x94D049BB133111EB, so the stream for a given seed is identical on every
    platform.  All seeded corpus generation goes through this class to keep
    outputs bit-reproducible.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound); bias is negligible for desk-scale bounds."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def next_gauss(self) -> float:
        """Standard normal via Box-Muller (two uniforms per call)."""
        u1 = self.next_float()
        while u1 == 0.0:
            u1 = self.next_float()
        u2 = self.next_float()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)


class Graph:
    """Immutable simple undirected graph on the vertex set {0..n-1}.

    Self-loops are rejected; duplicate edges collapse (edges form a set).
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = frozenset(canon)
        self._adj = tuple(adj)

    # -- queries ---------------------------------------------------------

    def adjacency_mask(self, v: int) -> int:
        """Neighbors of v as a bitmask."""
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> v & 1)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self._adj[v] == 0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- generators ------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    """The n-cycle 0-1-...-(n-1)-0; requires n >= 3."""
    if n < 3:
        raise ValueError("cycle graph needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def turan_graph(r: int, ell: int) -> Graph:
    """Complete r-partite graph with r blocks of ell consecutive vertices each."""
    if r < 1 or ell < 1:
        raise ValueError("block count and block size must be positive")
    n = r * ell
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if u // ell != v // ell]
    return Graph(n, edges)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with each pair drawn independently from a SplitMix64 stream.

    Pairs are scanned in lexicographic order, one uniform draw per pair, so
    the edge set is a pure function of (n, p, seed).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_float() < p:
                edges.append((u, v))
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    return Graph(g.n, edges)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled 0..k-1 in sorted order."""
    verts = sorted(set(vertices))
    if verts and not (0 <= verts[0] and verts[-1] < g.n):
        raise ValueError("vertex out of range")
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(verts), edges)


def blow_up(g: Graph, weights: Sequence[int]) -> Graph:
    """Replace each vertex v by an independent set of size weights[v].

    Copy (v, i) gets the index offset(v) + i where offset(v) = sum of the
    weights of vertices below v (lexicographic (v, i) ordering).  Copies of
    adjacent vertices are joined completely; copies of one vertex stay
    non-adjacent.
    """
    if len(weights) != g.n:
        raise ValueError("need one weight per vertex")
    if any(w <= 0 for w in weights):
        raise ValueError("blow-up weights must be positive")
    offsets = [0] * g.n
    total = 0
    for v in range(g.n):
        offsets[v] = total
        total += weights[v]
    edges = []
    for u, v in g.sorted_edges():
        for i in range(weights[u]):
            for j in range(weights[v]):
                edges.append((offsets[u] + i, offsets[v] + j))
    return Graph(total, edges)


# -- Laplacian spectra -------------------------------------------------------


def laplacian_matrix(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian as an exact int64 matrix: deg on the diagonal, -1 on edges."""
    if g.n == 0:
        raise ValueError("empty graph")
    lap = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        lap[u, v] = -1
        lap[v, u] = -1
    for v in range(g.n):
        lap[v, v] = g.degree(v)
    return lap


def laplacian_spectrum(g: Graph) -> np.ndarray:
    return symmetric_eigenvalues(laplacian_matrix(g))


def spectral_gap(g: Graph) -> float:
    """Second smallest Laplacian eigenvalue."""
    if g.n < 2:
        raise ValueError("spectral gap needs at least 2 vertices")
    return float(laplacian_spectrum(g)[1])


def lambda_max(g: Graph) -> float:
    """Largest Laplacian eigenvalue."""
    if g.n < 1:
        raise ValueError("empty graph")
    return float(laplacian_spectrum(g)[-1])


# -- text / JSON interchange -------------------------------------------------


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_json_dict(data: dict) -> Graph:
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad graph JSON: {exc}") from exc
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Parse the 'n m' / edge-list text form; raises InputFormatError with the bad line."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise InputFormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise InputFormatError(f"line 1: expected 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise InputFormatError(f"line 1: expected integers, got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise InputFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise InputFormatError(f"line {i}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputFormatError(f"line {i}: expected integers, got {ln!r}") from None
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def load_graph(path: str) -> Graph:
    """Load either the JSON or the text form, sniffing on the leading character."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"{path}: {exc}") from exc
        return graph_from_json_dict(data)
    return parse_graph_text(text)
