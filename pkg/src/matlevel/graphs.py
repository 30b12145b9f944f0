"""Undirected multigraphs, graphic matroids, biconnectivity, cones,
wheels, and enumeration of minimally biconnected graphs.

Edge index i in a Graph is matroid element i of its graphic matroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import ParseError, SizeLimit
from .matroid import Matroid, mask_of


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) outside 0..{self.vertex_count - 1}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def graph(vertex_count: int, edges) -> Graph:
    return Graph(vertex_count, tuple((min(u, v), max(u, v)) for u, v in edges))


def parse_edge_list(text: str) -> Graph:
    """First line ``n m``, then m lines ``u v`` (0-indexed)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty graph input")
    try:
        n, m = map(int, lines[0].split())
        edges = [tuple(map(int, ln.split())) for ln in lines[1 : m + 1]]
        if len(edges) != m or any(len(e) != 2 for e in edges):
            raise ValueError
        return graph(n, edges)
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad edge list: {exc or lines[0]!r}") from exc


def format_edge_list(g: Graph) -> str:
    head = f"{g.vertex_count} {g.edge_count}"
    return "\n".join([head] + [f"{u} {v}" for u, v in g.edges])


def cycle_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph(n, list(combinations(range(n), 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cone(g: Graph) -> Graph:
    """New apex vertex adjacent to every vertex; apex edges come last."""
    apex = g.vertex_count
    return graph(apex + 1, list(g.edges) + [(v, apex) for v in range(apex)])


def path_graph(n: int) -> Graph:
    return graph(n, [(i, i + 1) for i in range(n - 1)])


# -- spanning forests --------------------------------------------------


def _vertex_components(n: int, edges) -> int:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comp = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comp -= 1
    return comp


def graphic_matroid(g: Graph) -> Matroid:
    """Bases are the maximum spanning forests; element i = edge i."""
    n, m = g.vertex_count, g.edge_count
    base_comp = _vertex_components(n, g.edges)
    rank = n - base_comp
    if rank == 0:
        return Matroid._unchecked(max(m, 0), [0])
    bases = []
    for comb in combinations(range(m), rank):
        sel = [g.edges[i] for i in comb]
        if _vertex_components(n, sel) == base_comp:
            bases.append(mask_of(comb))
    return Matroid._unchecked(m, bases)


# -- connectivity ------------------------------------------------------


def is_connected_graph(g: Graph) -> bool:
    active = [v for v in range(g.vertex_count) if any(v in e for e in g.edges)]
    if g.vertex_count <= 1:
        return True
    return _vertex_components(g.vertex_count, g.edges) == 1


def is_biconnected(g: Graph) -> bool:
    """2-vertex-connectivity; K2 and smaller count as biconnected."""
    n = g.vertex_count
    if n <= 2:
        return is_connected_graph(g)
    if not is_connected_graph(g):
        return False
    for cut in range(n):
        rest = [v for v in range(n) if v != cut]
        sub = [e for e in g.edges if cut not in e]
        remap = {v: i for i, v in enumerate(rest)}
        if _vertex_components(n - 1, [(remap[u], remap[v]) for u, v in sub]) != 1:
            return False
    return True


def is_minimally_biconnected(g: Graph) -> bool:
    if not is_biconnected(g):
        return False
    for i in range(g.edge_count):
        rest = g.edges[:i] + g.edges[i + 1 :]
        if is_biconnected(Graph(g.vertex_count, rest)):
            return False
    return True


def _graph_isomorphic(g: Graph, h: Graph) -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    gset = sorted(g.edges)
    degs_g = sorted(sum(1 for e in g.edges if v in e) for v in range(g.vertex_count))
    degs_h = sorted(sum(1 for e in h.edges if v in e) for v in range(h.vertex_count))
    if degs_g != degs_h:
        return False
    for perm in permutations(range(h.vertex_count)):
        mapped = sorted(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in h.edges
        )
        if mapped == gset:
            return True
    return False


def minimally_biconnected_graphs(k: int) -> list[Graph]:
    """All minimally biconnected simple graphs on k vertices, one per
    isomorphism class. Brute force over adjacency masks; k <= 7.
    """
    if k > 7:
        raise SizeLimit(f"minimally biconnected enumeration capped at 7 vertices, got {k}")
    if k < 3:
        return []
    pairs = list(combinations(range(k), 2))
    found: list[Graph] = []
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
        # minimally biconnected graphs on k >= 3 vertices have <= 2k-3 edges
        if not k <= len(edges) <= 2 * k - 3:
            continue
        g = Graph(k, tuple(edges))
        if min(sum(1 for e in edges if v in e) for v in range(k)) < 2:
            continue
        if not is_minimally_biconnected(g):
            continue
        if any(_graph_isomorphic(g, h) for h in found):
            continue
        found.append(g)
    return found


def is_series_parallel(g: Graph) -> bool:
    """True iff the graphic matroid has no MK4 minor."""
    from .enumeration import has_minor
    from .matroid import catalog

    return has_minor(graphic_matroid(g), catalog("MK4")) is None


def biconnected_graphs_up_to_edges(max_edges: int) -> list[Graph]:
    """Biconnected simple graphs with 3..max_edges edges, up to
    isomorphism, over all vertex counts that can carry them.
    """
    out: list[Graph] = []
    for n in range(3, max_edges + 1):
        pairs = list(combinations(range(n), 2))
        if len(pairs) > 21:
            raise SizeLimit(f"too many vertex pairs for n={n}")
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
            if not n <= len(edges) <= max_edges:
                continue
            if min((sum(1 for e in edges if v in e) for v in range(n)), default=0) < 2:
                continue
            g = Graph(n, tuple(edges))
            if not is_biconnected(g):
                continue
            if any(_graph_isomorphic(g, h) for h in out):
                continue
            out.append(g)
    return out
