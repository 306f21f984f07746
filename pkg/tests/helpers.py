"""Small constructors shared by the test modules."""

from encounternet.graph import EncounterGraph


def graph_from_edges(edges, nodes=(), location="test"):
    g = EncounterGraph(location=location)
    for node in nodes:
        g.presence.setdefault(node, 0.0)
    for a, b in edges:
        g.add_edge(a, b)
    return g


def star(n, center="c"):
    """Star with n-1 leaves; node ids sort with the center first."""
    leaves = [f"x{i}" for i in range(n - 1)]
    return graph_from_edges([(center, leaf) for leaf in leaves])


def cycle(n):
    ids = [f"v{i:03d}" for i in range(n)]
    return graph_from_edges([(ids[i], ids[(i + 1) % n]) for i in range(n)])


def complete(n):
    ids = [f"v{i:03d}" for i in range(n)]
    return graph_from_edges(
        [(ids[i], ids[j]) for i in range(n) for j in range(i + 1, n)]
    )


def path_graph(labels):
    return graph_from_edges(list(zip(labels, labels[1:])))
