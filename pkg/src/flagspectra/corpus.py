"""Seeded instance corpora used by the verification sweeps.

Everything here is a pure function of the master seed (via SplitMix64), so a
corpus run is reproducible down to the byte.
"""

from __future__ import annotations

from .graphs import Graph, SplitMix64, cycle_graph, random_gnp, turan_graph
from .hypergraphs import Hypergraph, HypergraphFamily

GNP_SIZES = tuple(range(4, 11))
GNP_PROBS = (0.3, 0.5, 0.7)
TURAN_SHAPES = ((2, 2), (2, 3), (3, 2), (3, 3), (4, 2))
CYCLE_SIZES = tuple(range(3, 13))


def gnp_corpus(count: int = 200, seed: int = 42, sizes=GNP_SIZES, probs=GNP_PROBS) -> list[tuple[str, Graph]]:
    """Seeded random graphs cycling through the size and density grids."""
    rng = SplitMix64(seed)
    out = []
    for i in range(count):
        n = sizes[i % len(sizes)]
        p = probs[(i // len(sizes)) % len(probs)]
        sub_seed = rng.next_u64()
        out.append((f"gnp(n={n},p={p},seed={sub_seed})", random_gnp(n, p, sub_seed)))
    return out


def turan_corpus(shapes=TURAN_SHAPES) -> list[tuple[str, Graph]]:
    return [(f"turan({r},{ell})", turan_graph(r, ell)) for r, ell in shapes]


def cycle_corpus(sizes=CYCLE_SIZES) -> list[tuple[str, Graph]]:
    return [(f"cycle({n})", cycle_graph(n)) for n in sizes]


def family_corpus(
    count: int = 100,
    seed: int = 42,
    max_members: int = 4,
    ground_range: tuple[int, int] = (4, 9),
    max_edges: int = 3,
    max_edge_size: int = 3,
) -> list[tuple[str, HypergraphFamily]]:
    """Seeded random hypergraph families for the representative sweeps."""
    rng = SplitMix64(seed)
    out = []
    lo, hi = ground_range
    for i in range(count):
        m = 1 + rng.next_below(max_members)
        ground = lo + rng.next_below(hi - lo + 1)
        members = []
        for _ in range(m):
            edges = []
            for _ in range(1 + rng.next_below(max_edges)):
                size = 1 + rng.next_below(max_edge_size)
                edge = set()
                while len(edge) < size:
                    edge.add(rng.next_below(ground))
                edges.append(sorted(edge))
            members.append(Hypergraph(ground, edges))
        out.append((f"family(i={i},m={m},ground={ground},seed={seed})", HypergraphFamily(ground, members)))
    return out


def planted_sdr_family(seed: int, members: int = 3, ground: int = 6) -> tuple[HypergraphFamily, list[tuple[int, ...]]]:
    """A family built around a planted system of disjoint representatives.

    Each member receives one edge from a partition of the ground set (the
    plant) plus random clutter, so a representative system is guaranteed.
    """
    if members > ground:
        raise ValueError("need at least one ground vertex per member")
    rng = SplitMix64(seed)
    verts = list(range(ground))
    for i in range(ground - 1, 0, -1):
        j = rng.next_below(i + 1)
        verts[i], verts[j] = verts[j], verts[i]
    block = ground // members
    plants = []
    hgs = []
    for i in range(members):
        chunk = sorted(verts[i * block : (i + 1) * block][: 1 + rng.next_below(2)])
        plants.append(tuple(chunk))
        edges = [list(chunk)]
        for _ in range(rng.next_below(3)):
            size = 1 + rng.next_below(2)
            extra = set()
            while len(extra) < size:
                extra.add(rng.next_below(ground))
            edges.append(sorted(extra))
        hgs.append(Hypergraph(ground, edges))
    return HypergraphFamily(ground, hgs), plants
