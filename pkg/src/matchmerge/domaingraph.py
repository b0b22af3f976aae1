"""The domain graph of a partial groupoid and partiality-reducing covers.

Nodes are the carrier and directed edges are exactly the defined pairs, so
the graph is a faithful picture of where the composition is defined.
Connected components split a groupoid into independent parts; clique covers
of the symmetric view carve out locally total sub-tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainNotSymmetricError, InternalInvariantError
from .groupoid import ElementId, FiniteGroupoid, Pair


@dataclass(frozen=True)
class DomainGraph:
    groupoid: FiniteGroupoid
    nodes: tuple[ElementId, ...]
    edges: frozenset[Pair]

    @property
    def symmetric_view(self) -> frozenset[Pair]:
        """Undirected edges: each defined pair collapsed to carrier-index order."""
        index = {e: i for i, e in enumerate(self.nodes)}
        out = set()
        for p, q in self.edges:
            out.add((p, q) if index[p] <= index[q] else (q, p))
        return frozenset(out)


@dataclass(frozen=True)
class Component:
    nodes: tuple[ElementId, ...]
    groupoid: FiniteGroupoid


@dataclass(frozen=True)
class Clique:
    """A mutually-composable node set plus the induced sub-table.

    ``is_total``: every ordered pair inside (loops included) is defined and
    no composition leaks outside.  ``leaks`` lists defined internal pairs
    whose value escapes the clique; such restrictions are kept but flagged
    as non-closed rather than forbidden.
    """

    nodes: tuple[ElementId, ...]
    groupoid: FiniteGroupoid
    is_total: bool
    leaks: tuple[Pair, ...]


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple[Clique, ...]

    def covered_nodes(self) -> frozenset[ElementId]:
        return frozenset(n for c in self.cliques for n in c.nodes)


def domain_graph(g: FiniteGroupoid) -> DomainGraph:
    """Directed graph with an edge p1 -> p2 for each defined (p1, p2)."""
    return DomainGraph(g, g.elements, frozenset(g.table))


def connected_components(dg: DomainGraph) -> list[Component]:
    """Components of the symmetric view, each with its restricted sub-table.

    Also re-checks that no composition crosses components; a crossing pair
    would contradict the graph construction itself.
    """
    parent = {n: n for n in dg.nodes}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for p, q in dg.edges:
        union(p, q)

    groups: dict[ElementId, list[ElementId]] = {}
    for n in dg.nodes:
        groups.setdefault(find(n), []).append(n)
    components = [
        Component(tuple(nodes), dg.groupoid.restrict(nodes))
        for nodes in sorted(groups.values(), key=lambda ns: dg.groupoid.position(ns[0]))
    ]

    root_of = {n: find(n) for n in dg.nodes}
    for x, y in dg.groupoid.defined_pairs():
        if root_of[x] != root_of[y]:  # pragma: no cover - structurally impossible
            raise InternalInvariantError(
                f"composition ({x!r}, {y!r}) crosses components"
            )
    return components


@dataclass(frozen=True)
class TotalityReport:
    total: bool
    missing: Pair | None
    graph_complete: bool
    loops_complete: bool


def is_total(g: FiniteGroupoid) -> TotalityReport:
    """Is every ordered pair defined?  Requires a symmetric domain.

    Cross-checks the graph criterion: with a symmetric domain, totality is
    the same as the symmetric view being complete with a loop on every node.
    """
    for x, y in g.pairs():
        if ((x, y) in g.table) != ((y, x) in g.table):
            raise DomainNotSymmetricError(
                f"domain is not symmetric: ({x!r}, {y!r}) vs ({y!r}, {x!r})",
                witness=(x, y),
            )
    missing = None
    for x, y in g.pairs():
        if (x, y) not in g.table:
            missing = (x, y)
            break
    dg = domain_graph(g)
    undirected = dg.symmetric_view
    index = {e: i for i, e in enumerate(g.elements)}
    graph_complete = all(
        (x, y) in undirected
        for i, x in enumerate(g.elements)
        for y in g.elements[i + 1 :]
    )
    loops_complete = all((x, x) in undirected for x in g.elements)
    total = missing is None
    if total != (graph_complete and loops_complete):  # pragma: no cover
        raise InternalInvariantError("totality and graph completeness disagree")
    return TotalityReport(total, missing, graph_complete, loops_complete)


def _mutual(g: FiniteGroupoid, a: ElementId, b: ElementId) -> bool:
    return (a, b) in g.table and (b, a) in g.table


def _grow_clique(g: FiniteGroupoid, start: list[ElementId]) -> tuple[ElementId, ...]:
    clique = list(start)
    inside = set(clique)
    for w in g.elements:
        if w in inside:
            continue
        if all(_mutual(g, w, s) for s in clique):
            clique.append(w)
            inside.add(w)
    return tuple(sorted(clique, key=g.position))


def _build_clique(g: FiniteGroupoid, nodes: tuple[ElementId, ...]) -> Clique:
    inside = set(nodes)
    leaks = []
    total = True
    for x in nodes:
        for y in nodes:
            v = g.table.get((x, y))
            if v is None:
                total = False
            elif v not in inside:
                leaks.append((x, y))
    if leaks:
        total = False
    return Clique(nodes, g.restrict(nodes), total, tuple(leaks))


def clique_cover(dg: DomainGraph) -> CliqueCover:
    """Greedy clique cover of the mutual-definedness view.

    Seeds a maximal clique at the lowest-index uncovered node, then sweeps
    up any mutual edges still uncovered (overlapping cliques are allowed),
    and finally emits singletons for isolated nodes.  Minimum covers are
    intractable in general; any cover whose cliques catch every node and
    every mutual edge is acceptable.
    """
    g = dg.groupoid
    index = {e: i for i, e in enumerate(dg.nodes)}
    mutual_edges = sorted(
        {
            (x, y) if index[x] <= index[y] else (y, x)
            for (x, y) in dg.edges
            if x != y and (y, x) in dg.edges
        },
        key=lambda pq: (index[pq[0]], index[pq[1]]),
    )
    cliques: list[tuple[ElementId, ...]] = []
    covered_nodes: set[ElementId] = set()
    covered_edges: set[Pair] = set()

    def mark(clique: tuple[ElementId, ...]):
        cliques.append(clique)
        covered_nodes.update(clique)
        for a in clique:
            for b in clique:
                if index[a] <= index[b]:
                    covered_edges.add((a, b))

    while True:
        seed_node = next((n for n in dg.nodes if n not in covered_nodes), None)
        if seed_node is not None:
            mark(_grow_clique(g, [seed_node]))
            continue
        pending = next((e for e in mutual_edges if e not in covered_edges), None)
        if pending is not None:
            mark(_grow_clique(g, list(pending)))
            continue
        break
    return CliqueCover(tuple(_build_clique(g, c) for c in cliques))


def _dot_identifier(name: str) -> str:
    if name and (name.isalnum() or name.replace("_", "").isalnum()) and not name[0].isdigit():
        return name
    if name.isdigit():
        return name
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def to_dot(dg: DomainGraph) -> str:
    """Deterministic dot rendering: nodes then edges, each sorted by name."""
    lines = ["digraph domain {"]
    for n in sorted(dg.nodes):
        lines.append(f"  {_dot_identifier(n)};")
    for p, q in sorted(dg.edges):
        lines.append(f"  {_dot_identifier(p)} -> {_dot_identifier(q)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
