from typing import Iterable

import networkx as nx

Relation = frozenset[tuple[int, int]]


def frame_graph(worlds: Iterable[int], relation: Iterable[tuple[int, int]]) -> nx.DiGraph:
    """Build the directed graph of a frame"""
    graph = nx.DiGraph()
    graph.add_nodes_from(worlds)
    graph.add_edges_from(relation)
    return graph


def transitive_closure(relation: Iterable[tuple[int, int]]) -> Relation:
    """Get the least transitive relation containing 'relation'"""
    graph = frame_graph((), relation)
    # Self loops only appear for elements on a cycle
    closure = nx.transitive_closure(graph, reflexive=False)
    return frozenset(closure.edges())


def reflexive_transitive_closure(
    relation: Iterable[tuple[int, int]], elements: Iterable[int] = ()
) -> Relation:
    """Get the least reflexive and transitive relation containing 'relation' over the 'elements'
    and the elements of the pairs"""
    graph = frame_graph(elements, relation)
    closure = nx.transitive_closure(graph, reflexive=True)
    return frozenset(closure.edges())


def is_transitive(relation: Iterable[tuple[int, int]]) -> bool:
    pairs = frozenset(relation)
    return transitive_closure(pairs) == pairs


def is_conversely_well_founded(
    worlds: Iterable[int], relation: Iterable[tuple[int, int]]
) -> bool:
    """Check there are no infinite ascending chains. On a finite frame this means there are no
    cycles, loops included"""
    return nx.is_directed_acyclic_graph(frame_graph(worlds, relation))


def reachable(worlds: Iterable[int], relation: Iterable[tuple[int, int]], world: int) -> set[int]:
    """Get the worlds reachable from 'world' in zero or more steps"""
    graph = frame_graph(worlds, relation)
    return {world} | nx.descendants(graph, world)
