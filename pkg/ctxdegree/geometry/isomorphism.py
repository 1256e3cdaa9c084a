import networkx as nx
from networkx.algorithms import isomorphism as nx_iso

from .models import Geometry


def incidence_graph(g: Geometry, signed: bool = True) -> nx.Graph:
    """Bipartite point/line graph; line nodes carry their sign when ``signed``"""
    graph = nx.Graph()
    for p in range(g.num_points):
        graph.add_node(("p", p), kind="point")
    for i, line in enumerate(g.lines):
        kind = f"line{g.line_signs[i]}" if signed else "line"
        graph.add_node(("l", i), kind=kind)
        for p in line:
            graph.add_edge(("p", p), ("l", i))
    return graph


def canonical_hash(g: Geometry, signed: bool = False) -> str:
    """Labelling-independent Weisfeiler-Lehman hash of the incidence graph"""
    return nx.weisfeiler_lehman_graph_hash(
        incidence_graph(g, signed=signed), node_attr="kind", iterations=4
    )


def are_isomorphic(a: Geometry, b: Geometry, signed: bool = False) -> bool:
    """Exact incidence isomorphism; with ``signed`` the map must also preserve line signs.

    Hashes are compared first and a full VF2 match only runs when they agree.
    """
    if (a.num_points, a.num_lines) != (b.num_points, b.num_lines):
        return False
    if signed and a.negative_lines != b.negative_lines:
        return False
    if canonical_hash(a, signed) != canonical_hash(b, signed):
        return False
    matcher = nx_iso.GraphMatcher(
        incidence_graph(a, signed),
        incidence_graph(b, signed),
        node_match=nx_iso.categorical_node_match("kind", None),
    )
    return matcher.is_isomorphic()
