"""Shared graph factories for dsi-bounds tests."""

from dsi_bounds.generators import complete, complete_split, cycle, empty, path, star, union_split
from dsi_bounds.graph import Graph, from_edge_list, from_networkx, to_networkx

__all__ = ["from_networkx", "to_networkx"]


def make_k4():
    """Return K_4."""
    return complete(4)


def make_c5():
    """Return C_5 with edges 01, 12, 23, 34, 40."""
    return cycle(5)


def make_empty(n):
    """Return E_n."""
    return empty(n)


def make_claw():
    """Return K_{1,3} with center 0."""
    return star(3)


def make_p4():
    """Return P_4."""
    return path(4)


def make_e2_k6():
    """Return E_2 u K_6."""
    return union_split(2, 6)


def make_e4_plus_k2():
    """Return E_4 + K_2."""
    return complete_split(4, 2)


def relabel(graph: Graph, order):
    """Return graph with vertex v renamed to order[v]."""
    return from_edge_list(graph.n, ((order[u], order[v]) for u, v in graph.edges()))
