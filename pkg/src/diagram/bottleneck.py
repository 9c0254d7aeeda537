"""
Bottleneck distance and hemidistance between diagrams, relative to the
boundary of the strip.

Both are found by a threshold search: the candidate costs are all pairwise
distances and all boundary distances, and a threshold is feasible when a
bipartite graph of the edges it allows has a large enough matching.
Points of different cells are infinitely far apart, so only interior points
of L and A can ever be sent to the boundary.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms import bipartite

from ..errors import LambdaMismatchError
from ..strip import INF, Homeomorphism, d_boundary, d_int
from .points import Diagram

logger = logging.getLogger(__name__)

Embedding = Dict[int, Optional[int]]


@dataclass
class Matching:
    """Matched index pairs; unmatched points of either side go to the boundary."""

    pairs: List[Tuple[int, int]] = field(default_factory=list)
    unmatched_1: List[int] = field(default_factory=list)
    unmatched_2: List[int] = field(default_factory=list)
    cost: float = 0

    def __str__(self) -> str:
        lines = [f"match {i} {j}" for i, j in self.pairs]
        lines += [f"boundary 1 {i}" for i in self.unmatched_1]
        lines += [f"boundary 2 {j}" for j in self.unmatched_2]
        return "\n".join(lines)


class _Costs:
    """Pairwise and boundary distances of two diagrams."""

    def __init__(self, d1: Diagram, d2: Diagram, phi: Homeomorphism):
        if d1.lam != d2.lam:
            raise LambdaMismatchError(f"diagrams have bounds {d1.lam} and {d2.lam}")
        p1, p2 = d1.strip_points, d2.strip_points
        self.n1, self.n2 = len(p1), len(p2)
        self.pair = [[d_int(v, w, phi) for w in p2] for v in p1]
        self.bd1 = [d_boundary(v, phi) for v in p1]
        self.bd2 = [d_boundary(w, phi) for w in p2]

    def candidates(self, with_second_boundary: bool = True) -> List:
        values = {0}
        for row in self.pair:
            values.update(c for c in row if c != INF)
        values.update(c for c in self.bd1 if c != INF)
        if with_second_boundary:
            values.update(c for c in self.bd2 if c != INF)
        return sorted(values)


def _matching_graph(costs: _Costs, eps) -> Tuple[nx.Graph, List]:
    g = nx.Graph()
    left = [("p", i) for i in range(costs.n1)] + [("q", j) for j in range(costs.n2)]
    right = [("P", j) for j in range(costs.n2)] + [("Q", i) for i in range(costs.n1)]
    g.add_nodes_from(left, bipartite=0)
    g.add_nodes_from(right, bipartite=1)
    for i in range(costs.n1):
        for j in range(costs.n2):
            if costs.pair[i][j] <= eps:
                g.add_edge(("p", i), ("P", j))
        if costs.bd1[i] <= eps:
            g.add_edge(("p", i), ("Q", i))
    for j in range(costs.n2):
        if costs.bd2[j] <= eps:
            g.add_edge(("q", j), ("P", j))
        # boundary copies pair off freely
        for i in range(costs.n1):
            g.add_edge(("q", j), ("Q", i))
    return g, left


def _perfect(costs: _Costs, eps) -> Optional[Dict]:
    g, left = _matching_graph(costs, eps)
    m = bipartite.hopcroft_karp_matching(g, top_nodes=left)
    if sum(1 for node in left if node in m) < len(left):
        return None
    return m


def _least_feasible(candidates: Sequence, feasible):
    """Binary search for the least candidate whose result is not None."""
    lo, hi = 0, len(candidates) - 1
    best = None
    while lo <= hi:
        mid = (lo + hi) // 2
        found = feasible(candidates[mid])
        if found is not None:
            best = (candidates[mid], found)
            hi = mid - 1
        else:
            lo = mid + 1
    return best


def matching_cost(d1: Diagram, d2: Diagram, m: Matching, phi: Homeomorphism):
    """Largest distance a matching moves any point, boundary disposals included."""
    p1, p2 = d1.strip_points, d2.strip_points
    costs = [d_int(p1[i], p2[j], phi) for i, j in m.pairs]
    costs += [d_boundary(p1[i], phi) for i in m.unmatched_1]
    costs += [d_boundary(p2[j], phi) for j in m.unmatched_2]
    return max(costs, default=0)


def bottleneck(d1: Diagram, d2: Diagram, phi: Homeomorphism) -> Tuple[object, Matching]:
    """
    Bottleneck distance relative to the boundary, with an optimal matching.

    Args:
        d1: First diagram
        d2: Second diagram
        phi: Homeomorphism defining the distances

    Returns:
        (distance, matching); distance is inf when no matching has finite cost
    """
    costs = _Costs(d1, d2, phi)
    if costs.n1 == costs.n2 == 0:
        return 0, Matching()
    found = _least_feasible(costs.candidates(), lambda eps: _perfect(costs, eps))
    if found is None:
        logger.debug("no finite matching between %r and %r", d1, d2)
        return INF, Matching([], list(range(costs.n1)), list(range(costs.n2)), INF)
    _, m = found
    pairs, gone_1, gone_2 = [], [], []
    for i in range(costs.n1):
        mate = m[("p", i)]
        if mate[0] == "P":
            pairs.append((i, mate[1]))
        else:
            gone_1.append(i)
    for j in range(costs.n2):
        if m[("P", j)][0] == "q":
            gone_2.append(j)
    matching = Matching(pairs, gone_1, gone_2)
    matching.cost = matching_cost(d1, d2, matching, phi)
    return matching.cost, matching


def embedding(d1: Diagram, d2: Diagram, phi: Homeomorphism) -> Tuple[object, Embedding]:
    """
    Cheapest embedding of d1 into d2 relative to the boundary.

    Returns:
        (cost, embedding) where embedding[i] is the index in d2 that point i
        of d1 goes to, or None when it goes to the boundary
    """
    costs = _Costs(d1, d2, phi)

    def saturating(eps):
        g = nx.Graph()
        left = [("p", i) for i in range(costs.n1)]
        g.add_nodes_from(left, bipartite=0)
        g.add_nodes_from([("P", j) for j in range(costs.n2)], bipartite=1)
        g.add_nodes_from([("Q", i) for i in range(costs.n1)], bipartite=1)
        for i in range(costs.n1):
            for j in range(costs.n2):
                if costs.pair[i][j] <= eps:
                    g.add_edge(("p", i), ("P", j))
            if costs.bd1[i] <= eps:
                g.add_edge(("p", i), ("Q", i))
        m = bipartite.hopcroft_karp_matching(g, top_nodes=left)
        if any(node not in m for node in left):
            return None
        return m

    if costs.n1 == 0:
        return 0, {}
    found = _least_feasible(costs.candidates(with_second_boundary=False), saturating)
    if found is None:
        return INF, {}
    eps, m = found
    emb = {}
    for i in range(costs.n1):
        mate = m[("p", i)]
        emb[i] = mate[1] if mate[0] == "P" else None
    return eps, emb


def hemidistance(d1: Diagram, d2: Diagram, phi: Homeomorphism):
    """Least eps admitting an eps-embedding of d1 into d2 relative to the boundary."""
    return embedding(d1, d2, phi)[0]


def symmetrize(f: Embedding, g: Embedding, n1: int, n2: int) -> Matching:
    """
    Combine an embedding f of the first diagram into the second and an
    embedding g of the second into the first into one matching whose cost
    is at most the larger of their costs.

    The graph with edges i -> f(i) and j -> g(j) is a union of paths and
    cycles. Cycles and paths starting on the first side use f, paths
    starting on the second side use g.
    """
    f_inv = {j: i for i, j in f.items() if j is not None}
    g_inv = {i: j for j, i in g.items() if i is not None}
    pairs: Dict[int, int] = {}
    gone_1, gone_2 = [], []
    seen_1, seen_2 = set(), set()

    def walk(side: int, start: int) -> List[Tuple[int, int]]:
        """Nodes along the forward path from a start node, stopping on a repeat."""
        path, node, visited = [], (side, start), set()
        while node is not None and node not in visited:
            visited.add(node)
            path.append(node)
            s, idx = node
            nxt = f.get(idx) if s == 1 else g.get(idx)
            node = None if nxt is None else (2 if s == 1 else 1, nxt)
        return path

    def use(path, by_f: bool) -> None:
        for s, idx in path:
            (seen_1 if s == 1 else seen_2).add(idx)
        for s, idx in path:
            if by_f and s == 1:
                j = f.get(idx)
                if j is None:
                    gone_1.append(idx)
                else:
                    pairs[idx] = j
            if not by_f and s == 2:
                i = g.get(idx)
                if i is None:
                    gone_2.append(idx)
                else:
                    pairs[i] = idx

    for i in range(n1):
        if i not in g_inv and i not in seen_1:
            use(walk(1, i), True)
    for j in range(n2):
        if j not in f_inv and j not in seen_2:
            use(walk(2, j), False)
    # what is left lies on cycles
    for i in range(n1):
        if i not in seen_1:
            use(walk(1, i), True)
    return Matching(sorted(pairs.items()), sorted(gone_1), sorted(gone_2))
