import networkx as nx


def incidence_graph(p):
    g = nx.Graph()
    for i in range(p.m):
        g.add_node(("f", i), kind="facet")
    for k, v in enumerate(p.vertices):
        g.add_node(("v", k), kind="vertex")
        for i in v:
            g.add_edge(("f", i), ("v", k))
    return g


def brute_equivalent(p, q) -> bool:
    """Independent oracle: bipartite incidence-graph isomorphism respecting node kinds."""
    if p.dim != q.dim:
        return False
    return nx.is_isomorphic(
        incidence_graph(p), incidence_graph(q), node_match=lambda a, b: a["kind"] == b["kind"]
    )
