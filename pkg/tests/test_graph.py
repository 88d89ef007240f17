from __future__ import annotations

import random
from pathlib import Path

import pytest

from renas.errors import GraphError
from renas.graph import (
    RELATIONSHIP_COSTS,
    SYMMETRIC_RELATIONSHIPS,
    RelationshipGraph,
    build_graph,
    dump_edges,
    edge_cost,
    shortest_distances,
)
from renas.sourcemodel.project import parse_project

FIXTURES = Path(__file__).parent / "fixtures"

TABLE_COSTS = {
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


def brute_force_shortest(graph: RelationshipGraph, origin: str, cap: float):
    """Enumerate every simple path and keep the minimum-cost, smallest-key
    one per node. Exponential; only usable on tiny graphs."""
    best: dict[str, tuple[int, tuple]] = {origin: (0, ())}

    def walk(node: str, dist: int, key: tuple, visited: frozenset) -> None:
        for cost, relationship, target in graph.neighbors(node):
            if target in visited:
                continue
            next_dist = dist + cost
            if next_dist > cap:
                continue
            next_key = key + ((cost, relationship, target),)
            current = best.get(target)
            if current is None or (next_dist, next_key) < current:
                best[target] = (next_dist, next_key)
            walk(target, next_dist, next_key, visited | {target})

    walk(origin, 0, (), frozenset({origin}))
    return {
        node: (dist, tuple(step[1] for step in key))
        for node, (dist, key) in best.items()
    }


def random_graph(rng: random.Random, max_nodes: int = 12) -> RelationshipGraph:
    graph = RelationshipGraph()
    node_count = rng.randint(2, max_nodes)
    nodes = [f"n{i:02d}" for i in range(node_count)]
    for node in nodes:
        graph.add_node(node)
    relationships = sorted(RELATIONSHIP_COSTS)
    for _ in range(rng.randint(1, 3 * node_count)):
        a, b = rng.sample(nodes, 2)
        relationship = rng.choice(relationships)
        if relationship in SYMMETRIC_RELATIONSHIPS:
            graph.add_symmetric(a, b, relationship)
        else:
            graph.add_edge(a, b, relationship)
    return graph


class TestTableCosts:
    @pytest.mark.parametrize("relationship, cost", sorted(TABLE_COSTS.items()))
    def test_cost_table(self, relationship, cost):
        assert edge_cost(relationship) == cost

    def test_exactly_thirteen_relationships(self):
        assert len(RELATIONSHIP_COSTS) == 13
        assert RELATIONSHIP_COSTS == TABLE_COSTS

    def test_unknown_relationship_rejected(self):
        with pytest.raises(GraphError):
            edge_cost("friendship")


def short_name(entity_id: str) -> str:
    cuts = []
    for kind in ("class", "interface", "method", "field", "parameter",
                 "localVariable"):
        marker = f":{kind}:"
        idx = entity_id.rfind(marker)
        if idx >= 0:
            cuts.append(idx + len(marker))
    return entity_id[max(cuts):] if cuts else entity_id


def edge_triples(graph: RelationshipGraph) -> set[tuple[str, str, str]]:
    return {
        (short_name(e.source), e.relationship, short_name(e.target))
        for e in graph.edges
    }


@pytest.fixture(scope="module")
def relationship_zoo(tmp_path_factory):
    """One project exercising all thirteen relationship types."""
    root = tmp_path_factory.mktemp("zoo")
    (root / "Top.java").write_text(
        """
class Top {
    Helper buddy;
    void work(int amount) {
        int stash = amount;
        consume(stash, amount);
    }
    void consume(int first, int second) { }
    void consume(int first, int second, int third) { }
}
""",
        encoding="utf-8",
    )
    (root / "Helper.java").write_text("class Helper extends Mid { }", "utf-8")
    (root / "Mid.java").write_text("class Mid extends Base { }", "utf-8")
    (root / "Base.java").write_text("class Base { }", "utf-8")
    return build_graph(parse_project(root))


class TestBuildGraph:
    @pytest.mark.parametrize(
        "source, relationship, target",
        [
            ("Top", "field", "buddy"),
            ("Top", "method", "work(int)"),
            ("buddy", "enclosingClass", "Top"),
            ("work(int)", "enclosingClass", "Top"),
            ("work(int)", "parameter", "amount"),
            ("amount", "enclosingMethod", "work(int)"),
            ("stash@5:13", "enclosingMethod", "work(int)"),
            ("stash@5:13", "pass", "consume(int,int)"),
            ("Helper", "parent", "Mid"),
            ("Mid", "parent", "Helper"),
            ("Helper", "ancestor", "Base"),
            ("Base", "ancestor", "Helper"),
            ("stash@5:13", "assignmentEquation", "amount"),
            ("amount", "assignmentEquation", "stash@5:13"),
            ("stash@5:13", "argument", "first"),
            ("first", "argument", "stash@5:13"),
            ("buddy", "type", "Helper"),
            ("Helper", "type", "buddy"),
            ("buddy", "siblingMembers", "work(int)"),
            ("work(int)", "siblingMembers", "buddy"),
            ("first", "parameterOverload", "first"),
        ],
    )
    def test_relationship_instances_and_directions(
        self, relationship_zoo, source, relationship, target
    ):
        triples = edge_triples(relationship_zoo)
        assert (source, relationship, target) in triples

    @pytest.mark.parametrize(
        "source, relationship, target",
        [
            ("buddy", "field", "Top"),          # container->member only
            ("work(int)", "method", "Top"),
            ("Top", "enclosingClass", "buddy"),
            ("amount", "parameter", "work(int)"),
            ("work(int)", "enclosingMethod", "amount"),
            ("consume(int,int)", "pass", "stash@5:13"),  # pass is one-way
            ("work(int)", "enclosingMethod", "stash@5:13"),  # no method->local
        ],
    )
    def test_absent_directions(self, relationship_zoo, source, relationship, target):
        assert (source, relationship, target) not in edge_triples(relationship_zoo)

    def test_symmetric_relations_stored_both_ways(self, relationship_zoo):
        triples = edge_triples(relationship_zoo)
        for source, relationship, target in triples:
            if relationship in SYMMETRIC_RELATIONSHIPS:
                assert (target, relationship, source) in triples

    def test_class_with_field_and_method_example(self, tmp_path):
        (tmp_path / "K.java").write_text(
            "class K { int f; void m() { } }", encoding="utf-8"
        )
        graph = build_graph(parse_project(tmp_path))
        expected = {
            ("K", "field", "f"),
            ("K", "method", "m()"),
            ("f", "enclosingClass", "K"),
            ("m()", "enclosingClass", "K"),
            ("f", "siblingMembers", "m()"),
            ("m()", "siblingMembers", "f"),
        }
        assert edge_triples(graph) == expected
        costs = {e.relationship: e.cost for e in graph.edges}
        assert costs == {"field": 4, "method": 4, "enclosingClass": 4,
                         "siblingMembers": 1}

    def test_parameter_overload_all_pairs(self, tmp_path):
        (tmp_path / "O.java").write_text(
            "class O { void g(int a) { } void g(int a, int b) { } }",
            encoding="utf-8",
        )
        graph = build_graph(parse_project(tmp_path))
        overload_pairs = {
            (e.source.rsplit(":", 2)[0].rsplit(":", 1)[-1], e.target)
            for e in graph.edges
            if e.relationship == "parameterOverload"
        }
        # two pairs, each stored in both directions
        raw = [e for e in graph.edges if e.relationship == "parameterOverload"]
        assert len(raw) == 4
        assert all(e.cost == 1 for e in raw)

    def test_empty_model_gives_empty_graph(self, tmp_path):
        graph = build_graph(parse_project(tmp_path))
        assert graph.edges == []

    def test_no_self_loops(self, relationship_zoo):
        assert all(e.source != e.target for e in relationship_zoo.edges)

    def test_ancestor_depth_two_or_more_only(self, tmp_path):
        (tmp_path / "A.java").write_text("class A extends B { }", "utf-8")
        (tmp_path / "B.java").write_text("class B { }", "utf-8")
        graph = build_graph(parse_project(tmp_path))
        assert not [e for e in graph.edges if e.relationship == "ancestor"]


class TestShortestDistances:
    def test_worked_example_distance_and_witness(self):
        model = parse_project(FIXTURES / "fig2_project")
        graph = build_graph(model)
        origin = model.resolve("CallContext.java", 3, "getAncestorResources").id
        target = model.resolve(
            "ThreadLocalizedUriInfo.java", 7, "getAncestorResources"
        ).id
        results = shortest_distances(graph, origin, 30)
        assert results[target].distance == 8
        assert results[target].path == ("enclosingClass", "type", "siblingMembers")

    def test_origin_itself(self):
        graph = RelationshipGraph()
        graph.add_edge("a", "b", "siblingMembers")
        results = shortest_distances(graph, "a", 10)
        assert results["a"].distance == 0
        assert results["a"].path == ()

    def test_disconnected_node_absent(self):
        graph = RelationshipGraph()
        graph.add_edge("a", "b", "siblingMembers")
        graph.add_node("island")
        results = shortest_distances(graph, "a", 10)
        assert "island" not in results

    def test_unknown_origin(self):
        graph = RelationshipGraph()
        graph.add_node("a")
        with pytest.raises(GraphError):
            shortest_distances(graph, "ghost", 10)
        with pytest.raises(GraphError):
            shortest_distances(graph, "a", 0)

    def test_matches_brute_force_on_random_graphs(self):
        rng = random.Random(20240215)
        for round_no in range(200):
            graph = random_graph(rng)
            origin = sorted(graph.nodes)[0]
            cap = rng.choice([4, 9, 100])
            fast = shortest_distances(graph, origin, cap)
            slow = brute_force_shortest(graph, origin, cap)
            assert {n: (r.distance, r.path) for n, r in fast.items()} == slow, (
                round_no
            )

    def test_cap_monotonicity(self):
        rng = random.Random(7)
        for _ in range(40):
            graph = random_graph(rng)
            origin = sorted(graph.nodes)[0]
            small = shortest_distances(graph, origin, 5)
            large = shortest_distances(graph, origin, 50)
            for node, result in small.items():
                assert large[node].distance == result.distance

    def test_path_cost_sum_equals_distance(self):
        rng = random.Random(13)
        for _ in range(40):
            graph = random_graph(rng)
            origin = sorted(graph.nodes)[0]
            for result in shortest_distances(graph, origin, 50).values():
                assert sum(edge_cost(r) for r in result.path) == result.distance

    def test_symmetric_edges_cost_the_same_both_ways(self):
        rng = random.Random(99)
        for _ in range(30):
            graph = RelationshipGraph()
            nodes = [f"n{i}" for i in range(rng.randint(2, 8))]
            for node in nodes:
                graph.add_node(node)
            symmetric = sorted(SYMMETRIC_RELATIONSHIPS)
            for _ in range(rng.randint(1, 12)):
                a, b = rng.sample(nodes, 2)
                graph.add_symmetric(a, b, rng.choice(symmetric))
            for a in nodes:
                from_a = shortest_distances(graph, a, 100)
                for b in nodes:
                    if b in from_a:
                        from_b = shortest_distances(graph, b, 100)
                        assert from_b[a].distance == from_a[b].distance


class TestDump:
    def test_dump_format(self, tmp_path):
        (tmp_path / "K.java").write_text("class K { int f; void m() { } }", "utf-8")
        graph = build_graph(parse_project(tmp_path))
        text = dump_edges(graph)
        lines = text.strip().split("\n")
        assert len(lines) == len(graph.edges)
        for line in lines:
            source, relationship, target, cost = line.split("\t")
            assert relationship in RELATIONSHIP_COSTS
            assert int(cost) == RELATIONSHIP_COSTS[relationship]
        assert lines == sorted(lines)
