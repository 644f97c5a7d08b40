"""Combinatorial equivalence of incidence structures.

Two polytopes are combinatorially equivalent exactly when their
vertex-facet incidence matrices agree up to row and column permutation.
Structures are hashed by a canonical colouring: vertices and facets start
coloured by side, and colours are refined by the multiset of neighbour
colours until stable. The exact decision refines the disjoint union of
both incidence graphs, then individualizes one node of the smallest
ambiguous cell at a time, backtracking over its possible images.
"""
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from polylb.polylb_polytope import IncidenceStructure, VPolytope, incidence_structure

Signature = Tuple[int, int, int, Tuple[int, ...], Tuple[int, ...]]
Certificate = Tuple[Signature, Tuple[int, ...]]
Adjacency = List[List[int]]


def incidence_graph(structure: IncidenceStructure) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from((("v", i) for i in range(structure.n_vertices)), side=0)
    g.add_nodes_from((("f", j) for j in range(structure.n_facets)), side=1)
    for i, j in zip(*structure.incidence.nonzero()):
        g.add_edge(("v", int(i)), ("f", int(j)))
    return g


def signature(structure: IncidenceStructure) -> Signature:
    rows = structure.incidence.sum(axis=1)
    cols = structure.incidence.sum(axis=0)
    return (
        structure.dim,
        structure.n_vertices,
        structure.n_facets,
        tuple(sorted(int(x) for x in rows)),
        tuple(sorted(int(x) for x in cols)),
    )


def _adjacency(g: nx.Graph) -> Tuple[Adjacency, List[int]]:
    """Integer-labelled adjacency lists and side colours of g."""
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    adj = [sorted(g.adj[u]) for u in range(g.number_of_nodes())]
    return adj, [g.nodes[u]["side"] for u in range(g.number_of_nodes())]


def refine(adj: Adjacency, colours: Sequence[int]) -> List[int]:
    """Stable colouring: split classes by neighbour-colour multisets.

    New colour names are ranks of sorted signatures, so equal inputs up to
    relabelling give equal colour names.
    """
    current = list(colours)
    n_classes = len(set(current))
    while True:
        sigs: List[Tuple[int, Tuple[int, ...]]] = [
            (current[u], tuple(sorted(current[w] for w in adj[u]))) for u in range(len(adj))
        ]
        names = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        current = [names[sig] for sig in sigs]
        if len(names) == n_classes:
            return current
        n_classes = len(names)


def certificate(structure: IncidenceStructure) -> Certificate:
    """Isomorphism-invariant hash key: signature plus stable colour histogram."""
    adj, sides = _adjacency(incidence_graph(structure))
    return signature(structure), tuple(sorted(refine(adj, sides)))


def _is_mapping(adj: Adjacency, colours: List[int], n_left: int) -> bool:
    image = {colours[y]: y for y in range(n_left, len(adj))}
    mapping = [image[colours[x]] for x in range(n_left)]
    return all(
        sorted(mapping[w] for w in adj[x]) == adj[mapping[x]]
        for x in range(n_left)
    )


def _search(adj: Adjacency, colours: List[int], n_left: int) -> bool:
    colours = refine(adj, colours)
    left = Counter(colours[:n_left])
    if left != Counter(colours[n_left:]):
        return False
    cell: Optional[int] = min(
        (c for c, size in left.items() if size > 1), key=lambda c: (left[c], c), default=None
    )
    if cell is None:
        return _is_mapping(adj, colours, n_left)
    x = colours.index(cell)
    fresh = max(colours) + 1
    for y in range(n_left, len(adj)):
        if colours[y] == cell:
            trial = list(colours)
            trial[x] = trial[y] = fresh
            if _search(adj, trial, n_left):
                return True
    return False


def isomorphic(a: IncidenceStructure, b: IncidenceStructure) -> bool:
    if signature(a) != signature(b):
        return False
    union = nx.disjoint_union(incidence_graph(a), incidence_graph(b))
    adj = [sorted(union.adj[u]) for u in range(union.number_of_nodes())]
    sides = [union.nodes[u]["side"] for u in range(union.number_of_nodes())]
    return _search(adj, sides, a.n_vertices + a.n_facets)


def combinatorially_equivalent(P: VPolytope, Q: VPolytope) -> bool:
    return P.ambient_dim == Q.ambient_dim and isomorphic(
        incidence_structure(P), incidence_structure(Q)
    )


def isomorphism_classes(structures: Sequence[IncidenceStructure]) -> List[List[int]]:
    """Partition indices into combinatorial types, in first-seen order."""
    buckets: Dict[Certificate, List[List[int]]] = {}
    order: List[List[int]] = []
    for idx, s in enumerate(structures):
        classes = buckets.setdefault(certificate(s), [])
        for cls in classes:
            if isomorphic(structures[cls[0]], s):
                cls.append(idx)
                break
        else:
            cls = [idx]
            classes.append(cls)
            order.append(cls)
    return order
