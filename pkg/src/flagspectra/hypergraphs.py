"""Hypergraphs over a shared ground set: line graphs, widths, and disjoint
representatives.

Widths come in an exact flavor (smallest set of edges meeting every edge,
by subset search) and a fractional flavor (a covering LP over pairwise
intersection sizes).  Families of hypergraphs get an exhaustive backtracking
search for a system of disjoint representatives, and the two sufficient
conditions for one to exist (fractional width over every subfamily union,
and the classical integral-width condition) are checked subset by subset.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .complexes import DEFAULT_SIMPLEX_CAP, build_flag_complex
from .domination import VectorRepresentation
from .errors import CapExceeded, InputFormatError
from .graphs import Graph, induced_subgraph
from .lp import LinearProgram, solve_covering_lp
from .reports import CheckRecord
from .spectral import betti_profile

WIDTH_SEARCH_CAP = 20
SDR_FAMILY_CAP = 8
STRICT_TOL = 1e-7


@dataclass(frozen=True)
class Hypergraph:
    """Edges (nonempty vertex sets, duplicates allowed) over ground set {0..ground-1}."""

    ground: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, ground: int, edges: Sequence[Sequence[int]]):
        if ground < 0:
            raise ValueError("ground set size must be nonnegative")
        canon = []
        for e in edges:
            vs = tuple(sorted(set(e)))
            if not vs:
                raise ValueError("hypergraph edge must be nonempty")
            if vs[0] < 0 or vs[-1] >= ground:
                raise ValueError(f"edge {vs} out of range for ground set of size {ground}")
            canon.append(vs)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_masks(self) -> list[int]:
        out = []
        for e in self.edges:
            m = 0
            for v in e:
                m |= 1 << v
            out.append(m)
        return out


@dataclass(frozen=True)
class HypergraphFamily:
    """An ordered family of hypergraphs over one shared ground set."""

    ground: int
    members: tuple[Hypergraph, ...]

    def __init__(self, ground: int, members: Sequence[Hypergraph]):
        members = tuple(members)
        if not members:
            raise ValueError("family must contain at least one hypergraph")
        for h in members:
            if h.ground != ground:
                raise ValueError("all members must share the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "members", members)

    @property
    def size(self) -> int:
        return len(self.members)

    def union(self, indices: Sequence[int]) -> Hypergraph:
        """Concatenated edge lists of the selected members, multiplicity kept."""
        edges = []
        for i in indices:
            edges.extend(self.members[i].edges)
        return Hypergraph(self.ground, edges)


def hypergraph_from_json_dict(data: dict) -> Hypergraph:
    try:
        ground = int(data["ground"])
        edges = [[int(v) for v in e] for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad hypergraph JSON: {exc}") from exc
    try:
        return Hypergraph(ground, edges)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def family_from_json_dict(data: dict) -> HypergraphFamily:
    try:
        ground = int(data["ground"])
        lists = data["hypergraphs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad family JSON: {exc}") from exc
    members = []
    for lst in lists:
        try:
            members.append(Hypergraph(ground, [[int(v) for v in e] for e in lst]))
        except (TypeError, ValueError) as exc:
            raise InputFormatError(f"bad family member: {exc}") from exc
    if not members:
        raise InputFormatError("family must contain at least one hypergraph")
    return HypergraphFamily(ground, members)


def line_graph(h: Hypergraph) -> Graph:
    """One vertex per edge occurrence; adjacent iff the edges intersect.

    Duplicate occurrences of an edge intersect each other, hence are
    adjacent, and matchings of the hypergraph are exactly the independent
    sets of this graph.
    """
    if h.num_edges == 0:
        raise ValueError("empty hypergraph")
    masks = h.edge_masks()
    m = len(masks)
    edges = [(i, j) for i in range(m) for j in range(i + 1, m) if masks[i] & masks[j]]
    return Graph(m, edges)


def width(h: Hypergraph, cap: int = WIDTH_SEARCH_CAP) -> tuple[int, tuple[int, ...]]:
    """Smallest number of edges meeting every edge, with a witness index tuple."""
    m = h.num_edges
    if m == 0:
        raise ValueError("empty hypergraph")
    if m > cap:
        raise CapExceeded(f"width search capped at {cap} edges (got {m})")
    masks = h.edge_masks()
    for t in range(1, m + 1):
        for combo in combinations(range(m), t):
            if all(any(masks[i] & masks[j] for j in combo) for i in range(m)):
                return t, combo
    raise AssertionError("unreachable: the full edge set always covers")


def fractional_width_lp(h: Hypergraph) -> LinearProgram:
    """Covering LP: weight edges so each edge sees total weighted intersection >= 1."""
    if h.num_edges == 0:
        raise ValueError("empty hypergraph")
    masks = h.edge_masks()
    m = len(masks)
    a = np.zeros((m, m))
    for i in range(m):
        for j in range(m):
            a[i, j] = (masks[i] & masks[j]).bit_count()
    return LinearProgram(np.ones(m), a, np.ones(m))


def fractional_width(h: Hypergraph) -> float:
    solution = solve_covering_lp(fractional_width_lp(h))
    assert solution.optimal  # diagonal entries |E| >= 1 make large weights feasible
    return float(solution.value)


def incidence_representation(h: Hypergraph) -> VectorRepresentation:
    """Ground-set incidence vectors of the edges, as a representation of the line graph.

    The Gram entries are the pairwise intersection sizes, so the value of
    this representation equals the fractional width of the hypergraph.
    """
    g = line_graph(h)
    mat = np.zeros((h.num_edges, h.ground), dtype=np.int64)
    for i, e in enumerate(h.edges):
        for v in e:
            mat[i, v] = 1
    return VectorRepresentation(g, mat)


@dataclass(frozen=True)
class SdrSearch:
    """Outcome of the exhaustive representative search.

    `transcript_hash` digests the visit order (member index, edge index,
    enter/prune events), so a reported absence is reproducible.
    """

    representatives: tuple[tuple[int, ...], ...] | None
    choices: tuple[int, ...] | None
    nodes_visited: int
    transcript_hash: str


def sdr_search(fam: HypergraphFamily, family_cap: int = SDR_FAMILY_CAP) -> SdrSearch:
    """Exhaustive backtracking for one pairwise-disjoint edge per member."""
    if fam.size > family_cap:
        raise CapExceeded(f"representative search capped at {family_cap} members (got {fam.size})")
    member_masks = [h.edge_masks() for h in fam.members]
    transcript = hashlib.sha256()
    nodes = 0
    chosen: list[int] = []

    def recurse(i: int, used: int) -> bool:
        nonlocal nodes
        if i == fam.size:
            return True
        for j, mask in enumerate(member_masks[i]):
            nodes += 1
            if mask & used:
                transcript.update(f"p{i}.{j};".encode())
                continue
            transcript.update(f"e{i}.{j};".encode())
            chosen.append(j)
            if recurse(i + 1, used | mask):
                return True
            chosen.pop()
        transcript.update(f"b{i};".encode())
        return False

    found = recurse(0, 0)
    if found:
        reps = tuple(fam.members[i].edges[j] for i, j in enumerate(chosen))
        used = 0
        for i, j in enumerate(chosen):
            mask = member_masks[i][j]
            assert mask & used == 0  # witness re-check: pairwise disjoint
            used |= mask
        return SdrSearch(reps, tuple(chosen), nodes, transcript.hexdigest())
    return SdrSearch(None, None, nodes, transcript.hexdigest())


def find_sdr(fam: HypergraphFamily, family_cap: int = SDR_FAMILY_CAP):
    """The representatives when they exist, else None (search is exhaustive)."""
    return sdr_search(fam, family_cap=family_cap).representatives


def _nonempty_subsets(m: int):
    for mask in range(1, 1 << m):
        yield mask, [i for i in range(m) if mask >> i & 1]


def verify_fractional_width_condition(
    fam: HypergraphFamily,
    instance: str = "",
    tol: float = STRICT_TOL,
    family_cap: int = SDR_FAMILY_CAP,
) -> list[CheckRecord]:
    """Fractional width above |I|-1 on every subfamily union forces representatives.

    Margins within tol of zero leave the strict hypothesis undecidable from
    floating point, so such families are reported inconclusive rather than
    asserted either way.
    """
    if fam.size > family_cap:
        raise CapExceeded(f"subset sweep capped at {family_cap} members (got {fam.size})")
    records = []
    worst_margin = None
    borderline = False
    violated = None
    for mask, indices in _nonempty_subsets(fam.size):
        value = fractional_width(fam.union(indices))
        margin = value - (len(indices) - 1)
        if worst_margin is None or margin < worst_margin:
            worst_margin = margin
        if margin < -tol and violated is None:
            violated = indices
        if abs(margin) <= tol:
            borderline = True
        if margin > tol:
            note = "hypothesis margin met"
        elif margin < -tol:
            note = "hypothesis not met"
        else:
            note = "borderline (within tolerance)"
        records.append(
            CheckRecord(
                check="fractional_width_margin",
                claim="margin of w*(union of subfamily) against |I| - 1",
                instance=f"{instance} I={tuple(i + 1 for i in indices)}",
                k=len(indices),
                lhs=value,
                rhs=float(len(indices) - 1),
                slack=margin,
                passed=True,
                detail=note,
            )
        )
    if violated is not None or (worst_margin is not None and worst_margin < -tol):
        records.append(
            CheckRecord(
                check="fractional_width_sdr",
                claim="w* margins all positive imply a system of disjoint representatives",
                instance=instance,
                slack=worst_margin,
                passed=True,
                detail=f"hypothesis not satisfied at I={tuple(i + 1 for i in violated)}",
            )
        )
        return records
    if borderline:
        records.append(
            CheckRecord(
                check="fractional_width_sdr",
                claim="w* margins all positive imply a system of disjoint representatives",
                instance=instance,
                slack=worst_margin,
                passed=None,
                detail="borderline margin within tolerance; strict hypothesis undecided",
            )
        )
        return records
    search = sdr_search(fam, family_cap=family_cap)
    ok = search.representatives is not None
    records.append(
        CheckRecord(
            check="fractional_width_sdr",
            claim="w* margins all positive imply a system of disjoint representatives",
            instance=instance,
            slack=worst_margin,
            passed=ok,
            detail=(
                f"representatives {search.representatives}"
                if ok
                else f"COUNTEREXAMPLE: no representatives (search hash {search.transcript_hash[:16]})"
            ),
        )
    )
    return records


def verify_integral_width_condition(
    fam: HypergraphFamily,
    instance: str = "",
    width_cap: int = WIDTH_SEARCH_CAP,
    family_cap: int = SDR_FAMILY_CAP,
) -> list[CheckRecord]:
    """Integral width at least 2|I|-1 on every subfamily union forces representatives."""
    if fam.size > family_cap:
        raise CapExceeded(f"subset sweep capped at {family_cap} members (got {fam.size})")
    records = []
    holds = True
    violated = None
    for mask, indices in _nonempty_subsets(fam.size):
        value, _ = width(fam.union(indices), cap=width_cap)
        need = 2 * len(indices) - 1
        if value < need and violated is None:
            violated = indices
            holds = False
        records.append(
            CheckRecord(
                check="integral_width_margin",
                claim="margin of w(union of subfamily) against 2|I| - 1",
                instance=f"{instance} I={tuple(i + 1 for i in indices)}",
                k=len(indices),
                lhs=float(value),
                rhs=float(need),
                slack=float(value - need),
                passed=True,
                detail="hypothesis margin met" if value >= need else "hypothesis not met",
            )
        )
    if not holds:
        records.append(
            CheckRecord(
                check="integral_width_sdr",
                claim="w(union) >= 2|I|-1 for all I implies a system of disjoint representatives",
                instance=instance,
                passed=True,
                detail=f"hypothesis not satisfied at I={tuple(i + 1 for i in violated)}",
            )
        )
        return records
    search = sdr_search(fam, family_cap=family_cap)
    ok = search.representatives is not None
    records.append(
        CheckRecord(
            check="integral_width_sdr",
            claim="w(union) >= 2|I|-1 for all I implies a system of disjoint representatives",
            instance=instance,
            passed=ok,
            detail=(
                f"representatives {search.representatives}"
                if ok
                else f"COUNTEREXAMPLE: no representatives (search hash {search.transcript_hash[:16]})"
            ),
        )
    )
    return records


def compare_width_conditions(
    fam: HypergraphFamily,
    instance: str = "",
    tol: float = STRICT_TOL,
    width_cap: int = WIDTH_SEARCH_CAP,
    family_cap: int = SDR_FAMILY_CAP,
) -> list[CheckRecord]:
    """Side-by-side report of the two sufficient conditions on one family."""
    fractional = verify_fractional_width_condition(fam, instance=instance, tol=tol, family_cap=family_cap)
    integral = verify_integral_width_condition(
        fam, instance=instance, width_cap=width_cap, family_cap=family_cap
    )
    frac_final = fractional[-1]
    int_final = integral[-1]
    frac_holds = "hypothesis not satisfied" not in frac_final.detail and frac_final.passed is not None
    int_holds = "hypothesis not satisfied" not in int_final.detail
    detail = f"fractional condition: {'met' if frac_holds else 'not met'}; integral condition: {'met' if int_holds else 'not met'}"
    if frac_holds and not int_holds:
        detail += " (separation instance)"
    records = fractional + integral
    records.append(
        CheckRecord(
            check="width_condition_comparison",
            claim="which sufficient condition for representatives the family meets",
            instance=instance,
            passed=True,
            detail=detail,
        )
    )
    return records


# -- colorful simplices ------------------------------------------------------


@dataclass(frozen=True)
class PartitionedComplex:
    """A clique complex (via its base graph) with a partition of the vertices.

    For independent-set semantics pass the complement graph as the base, so
    colorful simplices here become colorful independent sets there.
    """

    graph: Graph
    classes: tuple[tuple[int, ...], ...]

    def __init__(self, graph: Graph, classes: Sequence[Sequence[int]]):
        canon = tuple(tuple(sorted(c)) for c in classes)
        if not canon or any(not c for c in canon):
            raise ValueError("classes must be nonempty")
        seen: set[int] = set()
        for c in canon:
            for v in c:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two classes")
                if not 0 <= v < graph.n:
                    raise ValueError(f"vertex {v} out of range")
                seen.add(v)
        if len(seen) != graph.n:
            raise ValueError("classes must cover every vertex")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "classes", canon)

    @property
    def num_classes(self) -> int:
        return len(self.classes)


def find_colorful_simplex(pc: PartitionedComplex) -> tuple[int, ...] | None:
    """One vertex per class forming a clique of the base graph, or None."""
    g = pc.graph
    order = sorted(range(pc.num_classes), key=lambda i: len(pc.classes[i]))
    chosen: list[int] = []

    def recurse(level: int) -> bool:
        if level == len(order):
            return True
        for v in pc.classes[order[level]]:
            if all(g.has_edge(v, u) for u in chosen):
                chosen.append(v)
                if recurse(level + 1):
                    return True
                chosen.pop()
        return False

    if recurse(0):
        return tuple(sorted(chosen))
    return None


def verify_colorful_condition(
    pc: PartitionedComplex,
    instance: str = "",
    family_cap: int = SDR_FAMILY_CAP,
    simplex_cap: int = DEFAULT_SIMPLEX_CAP,
) -> list[CheckRecord]:
    """Connectivity at least |I| on every class-union subcomplex forces a
    colorful simplex (one vertex from each class, spanning a clique)."""
    m = pc.num_classes
    if m > family_cap:
        raise CapExceeded(f"subset sweep capped at {family_cap} classes (got {m})")
    records = []
    hypothesis = True
    inconclusive = False
    for mask, indices in _nonempty_subsets(m):
        verts = sorted(v for i in indices for v in pc.classes[i])
        sub = induced_subgraph(pc.graph, verts)
        eta = betti_profile(
            build_flag_complex(sub, max_dim=sub.n - 1, simplex_cap=simplex_cap)
        ).connectivity
        ok = eta.at_least(len(indices))
        if ok is False:
            hypothesis = False
            note = "hypothesis not met"
        elif ok is None:
            inconclusive = True
            note = "undecided on truncated enumeration"
        else:
            note = "hypothesis margin met"
        records.append(
            CheckRecord(
                check="colorful_connectivity_margin",
                claim="margin of eta(induced subcomplex on class union) against |I|",
                instance=f"{instance} I={tuple(i + 1 for i in indices)}",
                k=len(indices),
                lhs=float(eta.floor),
                rhs=float(len(indices)),
                slack=float(eta.floor - len(indices)),
                passed=True if ok is not None else None,
                detail=note,
            )
        )
    if not hypothesis:
        records.append(
            CheckRecord(
                check="colorful_simplex",
                claim="connectivity >= |I| on all class unions implies a colorful simplex",
                instance=instance,
                passed=True,
                detail="hypothesis not satisfied",
            )
        )
        return records
    if inconclusive:
        records.append(
            CheckRecord(
                check="colorful_simplex",
                claim="connectivity >= |I| on all class unions implies a colorful simplex",
                instance=instance,
                passed=None,
                detail="connectivity inconclusive on a truncated subcomplex",
            )
        )
        return records
    simplex = find_colorful_simplex(pc)
    records.append(
        CheckRecord(
            check="colorful_simplex",
            claim="connectivity >= |I| on all class unions implies a colorful simplex",
            instance=instance,
            passed=simplex is not None,
            detail=f"colorful simplex {simplex}" if simplex else "COUNTEREXAMPLE: none found",
        )
    )
    return records
