"""Graph families, distances, Laplacians, and the block-level recognizer for
completely positive graphs.

All vertex labels are 1-based.  Family constructors follow a fixed canonical
indexing: the triangle fan ``tn`` puts its two base vertices first, and the
book family ``tn_book`` numbers each block's base pair then its local
non-base vertices, with the shared hub last (label b*(n-1)+1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .linalg import RationalMatrix


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class TnSingle:
    """Fan of n-2 triangles over a shared base edge; vertices 1,2 are the base."""

    n: int


@dataclass(frozen=True)
class TnBook:
    """b copies of the n-vertex triangle fan glued at one shared non-base hub."""

    n: int
    b: int


@dataclass(frozen=True)
class CompleteBipartite:
    """K_{m,n} with parts {1..m} and {m+1..m+n}."""

    m: int
    n: int


@dataclass(frozen=True)
class Star:
    """K_{n,1}: n leaves 1..n and hub n+1."""

    n: int


@dataclass(frozen=True)
class Tree:
    """Arbitrary tree given by its edge list on vertices 1..max(label)."""

    edges: tuple


@dataclass(frozen=True)
class K4:
    pass


FamilySpec = Union[TnSingle, TnBook, CompleteBipartite, Star, Tree, K4]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are normalized (u, v) pairs with u < v."""

    vertex_count: int
    edges: frozenset
    family: Optional[FamilySpec] = None

    @classmethod
    def from_edges(cls, vertex_count: int, edges, family: Optional[FamilySpec] = None) -> "Graph":
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise GraphError(f"edge ({u}, {v}) outside 1..{vertex_count}")
            normalized.add((min(u, v), max(u, v)))
        return cls(vertex_count, frozenset(normalized), family)

    def adjacency(self) -> dict:
        adj: dict = {v: [] for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for neighbors in adj.values():
            neighbors.sort()
        return adj

    def degrees(self) -> list:
        adj = self.adjacency()
        return [len(adj[v]) for v in range(1, self.vertex_count + 1)]

    @property
    def edge_count(self) -> int:
        return len(self.edges)


class BlockClass(Enum):
    BIPARTITE = "bipartite"
    K4 = "k4"
    TN = "tn"
    OTHER = "other"


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components (as sorted vertex tuples, in DFS completion
    order) and the cut vertices of a connected graph."""

    blocks: tuple
    cut_vertices: frozenset


@dataclass(frozen=True)
class VertexPartition:
    """Base / non-base / hub split of the book family's vertex set."""

    base: tuple
    nonbase: tuple
    cut: int


def build_family(spec: FamilySpec) -> Graph:
    """Construct a family graph with its canonical vertex labels."""
    if isinstance(spec, TnSingle):
        if spec.n < 3:
            raise GraphError("triangle fan requires n >= 3")
        return Graph.from_edges(spec.n, _tn_edges(spec.n, offset=0, hub=None), spec)
    if isinstance(spec, TnBook):
        if spec.n < 3:
            raise GraphError("book family requires n >= 3")
        if spec.b < 2:
            raise GraphError("book family requires b >= 2")
        n, b = spec.n, spec.b
        hub = b * (n - 1) + 1
        edges: list = []
        for k in range(b):
            edges.extend(_tn_edges(n, offset=k * (n - 1), hub=hub))
        return Graph.from_edges(hub, edges, spec)
    if isinstance(spec, CompleteBipartite):
        if spec.m < 1 or spec.n < 1:
            raise GraphError("complete bipartite parts must be nonempty")
        edges = [(i, spec.m + j) for i in range(1, spec.m + 1) for j in range(1, spec.n + 1)]
        return Graph.from_edges(spec.m + spec.n, edges, spec)
    if isinstance(spec, Star):
        if spec.n < 1:
            raise GraphError("star needs at least one leaf")
        hub = spec.n + 1
        return Graph.from_edges(hub, [(leaf, hub) for leaf in range(1, hub)], spec)
    if isinstance(spec, Tree):
        return _build_tree(spec)
    if isinstance(spec, K4):
        return Graph.from_edges(4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)], spec)
    raise GraphError(f"unknown family spec {spec!r}")


def _tn_edges(n: int, offset: int, hub: Optional[int]) -> list:
    """Edges of one triangle fan block; the hub, when given, joins the
    non-base side in place of vertex n."""
    base1, base2 = offset + 1, offset + 2
    nonbase = [offset + i for i in range(3, n if hub is not None else n + 1)]
    if hub is not None:
        nonbase.append(hub)
    edges = [(base1, base2)]
    for w in nonbase:
        edges.append((base1, w))
        edges.append((base2, w))
    return edges


def _build_tree(spec: Tree) -> Graph:
    if not spec.edges:
        raise GraphError("tree edge list is empty")
    n = max(max(u, v) for u, v in spec.edges)
    g = Graph.from_edges(n, spec.edges, spec)
    if not is_connected(g):
        raise GraphError("tree edge list is disconnected")
    if g.edge_count != n - 1:
        raise GraphError("tree edge list contains a cycle")
    return g


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return False
    adj = g.adjacency()
    seen = {1}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.vertex_count


def is_tree(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - 1 and is_connected(g)


def all_pairs_distances(g: Graph) -> RationalMatrix:
    """Shortest-path distance matrix by BFS from every vertex."""
    adj = g.adjacency()
    n = g.vertex_count
    rows = []
    for source in range(1, n + 1):
        dist = [-1] * (n + 1)
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = du
                    queue.append(v)
        if min(dist[1:]) < 0:
            raise GraphError("graph not connected")
        rows.append([Fraction(dist[v]) for v in range(1, n + 1)])
    return RationalMatrix(n, n, rows)


def laplacian(g: Graph) -> RationalMatrix:
    """Degree diagonal minus adjacency."""
    n = g.vertex_count
    zero = Fraction(0)
    rows = [[zero] * n for _ in range(n)]
    for u, v in g.edges:
        rows[u - 1][v - 1] = Fraction(-1)
        rows[v - 1][u - 1] = Fraction(-1)
        rows[u - 1][u - 1] += 1
        rows[v - 1][v - 1] += 1
    return RationalMatrix(n, n, rows)


def biconnected_blocks(g: Graph) -> BlockDecomposition:
    """DFS lowpoint decomposition into biconnected components.

    Iterative so deep books do not hit the recursion limit.  Neighbors are
    visited in ascending order and blocks are emitted in completion order,
    which makes the output deterministic.
    """
    adj = g.adjacency()
    visited: set = set()
    discovery: dict = {}
    low: dict = {}
    blocks: list = []
    cuts: set = set()

    for start in range(1, g.vertex_count + 1):
        if start in visited:
            continue
        discovery[start] = low[start] = len(discovery)
        visited.add(start)
        root_children = 0
        edge_stack: list = []
        stack = [(start, start, iter(adj[start]))]
        while stack:
            parent, current, children = stack[-1]
            advanced = False
            for child in children:
                if child == parent:
                    continue
                if child in visited:
                    if discovery[child] < discovery[current]:
                        low[current] = min(low[current], discovery[child])
                        edge_stack.append((current, child))
                    continue
                discovery[child] = low[child] = len(discovery)
                visited.add(child)
                edge_stack.append((current, child))
                stack.append((current, child, iter(adj[child])))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if len(stack) > 1:
                low[parent] = min(low[parent], low[current])
                if low[current] >= discovery[parent]:
                    cuts.add(parent)
                    blocks.append(_pop_block(edge_stack, (parent, current)))
            elif stack:
                root_children += 1
                blocks.append(_pop_block(edge_stack, (parent, current)))
        if root_children > 1:
            cuts.add(start)
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def _pop_block(edge_stack: list, marker: tuple) -> tuple:
    idx = len(edge_stack) - 1
    while edge_stack[idx] != marker:
        idx -= 1
    members: set = set()
    for u, v in edge_stack[idx:]:
        members.add(u)
        members.add(v)
    del edge_stack[idx:]
    return tuple(sorted(members))


def classify_block(g: Graph, block) -> BlockClass:
    """Classify one block as bipartite, K4, a triangle fan, or other.

    Checks run in that fixed order so certificates are deterministic; a
    single edge counts as bipartite.
    """
    members = set(block)
    if not members:
        raise GraphError("empty block")
    if any(v < 1 or v > g.vertex_count for v in members):
        raise GraphError("block is not a subset of the vertex set")
    induced = [(u, v) for u, v in g.edges if u in members and v in members]
    if _is_bipartite(members, induced):
        return BlockClass.BIPARTITE
    if len(members) == 4 and len(induced) == 6:
        return BlockClass.K4
    if _is_triangle_fan(members, induced):
        return BlockClass.TN
    return BlockClass.OTHER


def _is_bipartite(members: set, induced: list) -> bool:
    adj: dict = {v: [] for v in members}
    for u, v in induced:
        adj[u].append(v)
        adj[v].append(u)
    color: dict = {}
    for root in sorted(members):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def _is_triangle_fan(members: set, induced: list) -> bool:
    """True iff some adjacent pair is joined to everything and all remaining
    vertices have degree exactly 2 (hence meet only that pair)."""
    size = len(members)
    if size < 3:
        return False
    degree = {v: 0 for v in members}
    edge_set = set(induced)
    for u, v in induced:
        degree[u] += 1
        degree[v] += 1
    full = [v for v in sorted(members) if degree[v] == size - 1]
    for i, u in enumerate(full):
        for v in full[i + 1:]:
            if (min(u, v), max(u, v)) not in edge_set:
                continue
            if all(degree[w] == 2 for w in members if w != u and w != v):
                return True
    return False


def is_cp_graph(g: Graph):
    """Recognize a completely positive graph block by block.

    Returns (verdict, certificate) where the certificate lists every block
    with its class; the verdict is true iff no block classifies as OTHER.
    """
    if not is_connected(g):
        raise GraphError("graph not connected")
    decomposition = biconnected_blocks(g)
    certificate = [
        (block, classify_block(g, block)) for block in decomposition.blocks
    ]
    verdict = all(cls is not BlockClass.OTHER for _, cls in certificate)
    return verdict, certificate


def tnb_partition(n: int, b: int) -> VertexPartition:
    """Base set, non-base set and hub of the book family's vertices."""
    if n < 3 or b < 2:
        raise GraphError("partition defined for n >= 3, b >= 2")
    base = tuple(
        (k - 1) * (n - 1) + i for k in range(1, b + 1) for i in (1, 2)
    )
    nonbase = tuple(
        (k - 1) * (n - 1) + i for k in range(1, b + 1) for i in range(3, n)
    )
    return VertexPartition(base, nonbase, b * (n - 1) + 1)
