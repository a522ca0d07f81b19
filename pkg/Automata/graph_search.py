"""
Cycle searches on labelled state graphs. Edges carry the list of
letters that realize them under the attribute 'letters'.
"""

from typing import Callable
from typing import Optional

import networkx as nx

from Words.LassoWord import LassoWord


def is_cyclic_component(graph: nx.DiGraph, component) -> bool:
    if len(component) > 1:
        return True
    node = next(iter(component))
    return graph.has_edge(node, node)


def cyclic_components(graph: nx.DiGraph):
    for component in nx.strongly_connected_components(graph):
        if is_cyclic_component(graph, component):
            yield component


def path_letters(graph: nx.DiGraph, path):
    return tuple(graph[source][target]["letters"][0] for source, target in zip(path, path[1:]))


def lasso_through(graph: nx.DiGraph, initial, target, component) -> LassoWord:
    """
    Stem from initial to target, then a cycle from target back to
    itself staying inside component.
    """
    stem = path_letters(graph, nx.shortest_path(graph, initial, target))
    inside = graph.subgraph(component)
    if inside.has_edge(target, target):
        return LassoWord(stem, (graph[target][target]["letters"][0],))
    successor = next(node for node in inside.successors(target))
    back = nx.shortest_path(inside, successor, target)
    cycle = (graph[target][successor]["letters"][0],) + path_letters(inside, back)
    return LassoWord(stem, cycle)


def find_accepting_lasso(graph: nx.DiGraph,
                         initial,
                         is_accepting: Callable,
                         is_allowed: Optional[Callable] = None) -> Optional[LassoWord]:
    """
    Shortest-stem lasso whose cycle visits a node satisfying is_accepting
    and only nodes satisfying is_allowed. The stem is unrestricted.
    Returns None when no such cycle is reachable from initial.
    """
    if initial is None or initial not in graph:
        return None
    distances = nx.single_source_shortest_path_length(graph, initial)
    if is_allowed is None:
        candidate_graph = graph.subgraph(distances.keys())
    else:
        candidate_graph = graph.subgraph([node for node in distances if is_allowed(node)])
    best = None
    for component in cyclic_components(candidate_graph):
        for node in component:
            if is_accepting(node):
                key = (distances[node], repr(node))
                if best is None or key < best[0]:
                    best = (key, node, component)
    if best is None:
        return None
    _, target, component = best
    return lasso_through(graph, initial, target, component)
