"""Typed, weighted relationship graph over program entities.

Thirteen relationship types with fixed integer costs connect declarations;
minimum-cost distances from the renamed identifier drive the
relationship-based priority.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import GraphError
from .sourcemodel.model import FIELD, LOCAL_VARIABLE, METHOD, SourceModel

RELATIONSHIP_COSTS: dict[str, int] = {
    "assignmentEquation": 1,
    "siblingMembers": 1,
    "parameterOverload": 1,
    "argument": 2,
    "parameter": 3,
    "enclosingMethod": 3,
    "pass": 3,
    "parent": 3,
    "ancestor": 3,
    "type": 3,
    "field": 4,
    "method": 4,
    "enclosingClass": 4,
}

# Relations the sources describe with a double-headed arrow; stored as two
# opposed directed edges.
SYMMETRIC_RELATIONSHIPS = frozenset(
    {
        "parent",
        "ancestor",
        "assignmentEquation",
        "argument",
        "type",
        "siblingMembers",
        "parameterOverload",
    }
)

RELATIONSHIP_NAMES = tuple(sorted(RELATIONSHIP_COSTS))


def edge_cost(relationship: str) -> int:
    """Fixed traversal cost of one relationship type."""
    try:
        return RELATIONSHIP_COSTS[relationship]
    except KeyError:
        raise GraphError(f"unknown relationship {relationship!r}") from None


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    relationship: str
    cost: int


@dataclass
class DistanceResult:
    entity: str
    distance: int
    path: tuple[str, ...]  # relationship names along one minimum-cost path


class RelationshipGraph:
    def __init__(self) -> None:
        self.nodes: set[str] = set()
        self._edge_set: set[Edge] = set()
        self._adjacency: dict[str, list[tuple[int, str, str]]] = {}
        self._sorted = True

    def add_node(self, node: str) -> None:
        self.nodes.add(node)

    def add_edge(
        self, source: str, target: str, relationship: str, cost: int | None = None
    ) -> None:
        """Add a directed edge; self-loops are silently dropped."""
        if source == target:
            return
        if cost is None:
            cost = edge_cost(relationship)
        edge = Edge(source, target, relationship, cost)
        if edge in self._edge_set:
            return
        self._edge_set.add(edge)
        self.nodes.add(source)
        self.nodes.add(target)
        self._adjacency.setdefault(source, []).append((cost, relationship, target))
        self._sorted = False

    def add_symmetric(
        self, a: str, b: str, relationship: str, cost: int | None = None
    ) -> None:
        self.add_edge(a, b, relationship, cost)
        self.add_edge(b, a, relationship, cost)

    @property
    def edges(self) -> list[Edge]:
        return sorted(
            self._edge_set, key=lambda e: (e.source, e.relationship, e.target, e.cost)
        )

    def neighbors(self, node: str) -> list[tuple[int, str, str]]:
        if not self._sorted:
            for bucket in self._adjacency.values():
                bucket.sort()
            self._sorted = True
        return self._adjacency.get(node, [])


def build_graph(model: SourceModel) -> RelationshipGraph:
    """Derive every relationship instance from the model's facts."""
    graph = RelationshipGraph()
    for entity_id in model.entities:
        graph.add_node(entity_id)

    for type_entity in model.type_entities():
        members = model.members_of(type_entity.id)
        for member in members:
            relationship = "field" if member.kind == FIELD else "method"
            graph.add_edge(type_entity.id, member.id, relationship)
            graph.add_edge(member.id, type_entity.id, "enclosingClass")
        for i, first in enumerate(members):
            for second in members[i + 1 :]:
                graph.add_symmetric(first.id, second.id, "siblingMembers")

    for entity in model.entities.values():
        if entity.kind == METHOD:
            for param in model.params_of(entity.id):
                graph.add_edge(entity.id, param.id, "parameter")
                graph.add_edge(param.id, entity.id, "enclosingMethod")
            for child in model.children_of(entity.id):
                if child.kind == LOCAL_VARIABLE:
                    graph.add_edge(child.id, entity.id, "enclosingMethod")

    for entity_id, class_id in model.typed_as:
        graph.add_symmetric(entity_id, class_id, "type")

    _add_inheritance(model, graph)

    for lhs, rhs_ids in model.assignments:
        for rhs in rhs_ids:
            graph.add_symmetric(lhs, rhs, "assignmentEquation")

    for invocation in model.invocations:
        params = model.params_of(invocation.method)
        for position, arg in enumerate(invocation.args):
            if arg is None:
                continue
            graph.add_edge(arg, invocation.method, "pass")
            if position < len(params):
                graph.add_symmetric(arg, params[position].id, "argument")

    for group in model.overload_groups():
        for i, first in enumerate(group):
            for second in group[i + 1 :]:
                for param_a in model.params_of(first):
                    for param_b in model.params_of(second):
                        graph.add_symmetric(
                            param_a.id, param_b.id, "parameterOverload"
                        )

    return graph


def _add_inheritance(model: SourceModel, graph: RelationshipGraph) -> None:
    supers: dict[str, list[str]] = {}
    for sub, sup in model.extends:
        graph.add_symmetric(sub, sup, "parent")
        supers.setdefault(sub, []).append(sup)

    # ancestor: transitive super at depth >= 2 along extends/implements
    for start in sorted(supers):
        frontier = list(supers[start])
        seen = set(frontier)
        depth = 1
        while frontier:
            depth += 1
            frontier = [
                nxt
                for node in frontier
                for nxt in supers.get(node, [])
                if nxt not in seen
            ]
            for node in frontier:
                seen.add(node)
                graph.add_symmetric(start, node, "ancestor")


def shortest_distances(
    graph: RelationshipGraph, origin: str, cap: int | float
) -> dict[str, DistanceResult]:
    """Single-source minimum-cost distances with one witness path per entity.

    Exact for every entity within cap; entities farther away are omitted.
    Ties between equal-cost paths resolve to the lexicographically smallest
    sequence of (cost, relationship, target) triples.
    """
    if origin not in graph.nodes:
        raise GraphError(f"unknown origin entity {origin!r}")
    if cap <= 0:
        raise GraphError("cap must be positive")

    best: dict[str, tuple[int, tuple]] = {origin: (0, ())}
    finalized: dict[str, DistanceResult] = {}
    heap: list[tuple[int, tuple, str]] = [(0, (), origin)]
    while heap:
        dist, key, node = heapq.heappop(heap)
        if node in finalized:
            continue
        finalized[node] = DistanceResult(
            entity=node,
            distance=dist,
            path=tuple(step[1] for step in key),
        )
        for cost, relationship, target in graph.neighbors(node):
            if target in finalized:
                continue
            next_dist = dist + cost
            if next_dist > cap:
                continue
            next_key = key + ((cost, relationship, target),)
            current = best.get(target)
            if current is None or (next_dist, next_key) < current:
                best[target] = (next_dist, next_key)
                heapq.heappush(heap, (next_dist, next_key, target))
    return finalized


def dump_edges(graph: RelationshipGraph) -> str:
    """Edge list export: fromId, relationship, toId, cost (tab-separated)."""
    lines = [
        f"{e.source}\t{e.relationship}\t{e.target}\t{e.cost}" for e in graph.edges
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def graph_to_payload(graph: RelationshipGraph) -> dict:
    return {
        "nodes": sorted(graph.nodes),
        "edges": [[e.source, e.relationship, e.target, e.cost] for e in graph.edges],
    }


def graph_from_payload(payload: dict) -> RelationshipGraph:
    graph = RelationshipGraph()
    for node in payload["nodes"]:
        graph.add_node(node)
    for source, relationship, target, cost in payload["edges"]:
        graph.add_edge(source, target, relationship, cost)
    return graph
