"""Generic finite digraph engine.

Strong connectivity, neighbor sets, exact vertex/edge connectivity via
unit-capacity max-flow (Dinic), and brute-force atom / e-atom enumeration.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, CompleteDigraphError, CrossCheckError, NotStronglyConnected

DEFAULT_BRUTEFORCE_CAP = 18
DEFAULT_SUBSET_BUDGET = 2_000_000


class Digraph:
    """Immutable digraph on vertices 0..n-1; no loops, no parallel edges."""

    __slots__ = ("adj", "adj_sets")

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        n = len(adjacency)
        adj = []
        for u, row in enumerate(adjacency):
            row = tuple(row)
            if len(set(row)) != len(row):
                raise ValueError(f"duplicate out-neighbors at vertex {u}")
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} out of range at vertex {u}")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
            adj.append(row)
        self.adj = tuple(adj)
        self.adj_sets = tuple(frozenset(row) for row in adj)

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in row:
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def is_complete(self) -> bool:
        n = self.vertex_count
        return all(len(row) == n - 1 for row in self.adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Digraph) and \
            tuple(map(frozenset, self.adj)) == tuple(map(frozenset, other.adj))

    def __hash__(self) -> int:
        return hash(tuple(map(frozenset, self.adj)))

    def __repr__(self) -> str:
        return f"<digraph n={self.vertex_count} m={self.edge_count}>"


@dataclass(frozen=True)
class CutCertificate:
    """A witnessing minimum separator.  ``separator`` is a vertex set for
    kind 'vertex' and an edge set for kind 'edge'."""
    kind: str
    size: int
    separator: tuple
    separated_pair: tuple[int, int]


@dataclass(frozen=True)
class AtomSet:
    kind: str                      # "atom" | "e-atom"
    side: str                      # "forward" | "transpose"
    members: tuple[frozenset[int], ...]
    boundary: int                  # kappa for atoms, lambda for e-atoms

    @property
    def size(self) -> int | None:
        return len(self.members[0]) if self.members else None


def transpose(g: Digraph) -> Digraph:
    rows: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges():
        rows[v].append(u)
    return Digraph([sorted(r) for r in rows])


def strongly_connected_components(g: Digraph) -> list[list[int]]:
    """Kosaraju's algorithm, iterative.  Components are returned sorted by
    their minimum vertex, members ascending."""
    n = g.vertex_count
    order: list[int] = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        seen[root] = True
        while stack:
            u, i = stack[-1]
            if i < len(g.adj[u]):
                stack[-1] = (u, i + 1)
                v = g.adj[u][i]
                if not seen[v]:
                    seen[v] = True
                    stack.append((v, 0))
            else:
                order.append(u)
                stack.pop()
    gt = transpose(g)
    comp = [-1] * n
    comps: list[list[int]] = []
    for u in reversed(order):
        if comp[u] >= 0:
            continue
        members = [u]
        comp[u] = len(comps)
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for v in gt.adj[x]:
                if comp[v] < 0:
                    comp[v] = len(comps)
                    members.append(v)
                    queue.append(v)
        comps.append(sorted(members))
    return sorted(comps, key=lambda c: c[0])


def is_strongly_connected(g: Digraph) -> bool:
    if g.vertex_count <= 1:
        return True
    return len(strongly_connected_components(g)) == 1


def neighbor_set(g: Digraph, vertices: Iterable[int]) -> tuple[frozenset[int], bool]:
    """Out-neighbors of the set (excluding the set itself) and whether the
    set is a part, i.e. V minus (A and its neighbors) is non-empty."""
    a = frozenset(vertices)
    nbrs: set[int] = set()
    for v in a:
        nbrs.update(g.adj_sets[v])
    nbrs -= a
    return frozenset(nbrs), len(a) + len(nbrs) < g.vertex_count


class _UnitFlow:
    """Dinic max-flow for small integer-capacity networks, reusable across
    source/sink pairs via cap snapshot/reset."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self._cap0: list[int] | None = None

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def freeze(self) -> None:
        self._cap0 = list(self.cap)

    def reset(self) -> None:
        self.cap[:] = self._cap0

    def maxflow(self, s: int, t: int, limit: int | None = None) -> int:
        """Max flow from s to t; stops early once ``limit`` is reached (the
        true value is then known to be >= limit)."""
        to, cap, head = self.to, self.cap, self.head
        flow = 0
        while limit is None or flow < limit:
            level = [-1] * self.n
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for e in head[u]:
                    v = to[e]
                    if cap[e] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                break
            it = [0] * self.n
            while limit is None or flow < limit:
                stack = [s]
                parent: dict[int, int] = {}
                reached = False
                while stack:
                    u = stack[-1]
                    if u == t:
                        reached = True
                        break
                    advanced = False
                    while it[u] < len(head[u]):
                        e = head[u][it[u]]
                        v = to[e]
                        if cap[e] > 0 and level[v] == level[u] + 1:
                            parent[v] = e
                            stack.append(v)
                            advanced = True
                            break
                        it[u] += 1
                    if not advanced:
                        level[u] = -2
                        stack.pop()
                        if stack:
                            it[stack[-1]] += 1
                if not reached:
                    break
                bottleneck = min(cap[parent[v]] for v in _path_vertices(parent, s, t, to))
                v = t
                while v != s:
                    e = parent[v]
                    cap[e] -= bottleneck
                    cap[e ^ 1] += bottleneck
                    v = to[e ^ 1]
                flow += bottleneck
        return flow

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def _path_vertices(parent: dict[int, int], s: int, t: int, to: list[int]) -> Iterator[int]:
    v = t
    while v != s:
        yield v
        v = to[parent[v] ^ 1]


def _vertex_split_network(g: Digraph) -> _UnitFlow:
    # node 2v = v_in, 2v+1 = v_out; split arcs carry capacity 1
    n = g.vertex_count
    net = _UnitFlow(2 * n)
    for v in range(n):
        net.add_edge(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        net.add_edge(2 * u + 1, 2 * v, n)
    net.freeze()
    return net


def _edge_network(g: Digraph) -> _UnitFlow:
    net = _UnitFlow(g.vertex_count)
    for u, v in g.edges():
        net.add_edge(u, v, 1)
    net.freeze()
    return net


def _require_strongly_connected(g: Digraph) -> None:
    if not is_strongly_connected(g):
        raise NotStronglyConnected("digraph is not strongly connected")


def vertex_connectivity(g: Digraph) -> tuple[int, CutCertificate | None]:
    """Exact vertex connectivity by vertex-split max-flow over all ordered
    non-adjacent pairs.  Complete digraphs yield n-1 with no certificate."""
    _require_strongly_connected(g)
    n = g.vertex_count
    if g.is_complete():
        return n - 1, None
    net = _vertex_split_network(g)
    # every non-adjacent pair has local connectivity <= n-2, so the first
    # pair scanned already improves on the initial bound
    best = n - 1
    best_pair: tuple[int, int] | None = None
    for s in range(n):
        for t in range(n):
            if s == t or g.has_edge(s, t):
                continue
            net.reset()
            f = net.maxflow(2 * s + 1, 2 * t, limit=best)
            if f < best:
                best, best_pair = f, (s, t)
    s, t = best_pair
    net.reset()
    flow = net.maxflow(2 * s + 1, 2 * t)
    reach = net.residual_reachable(2 * s + 1)
    separator = tuple(v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach)
    if len(separator) != flow or flow != best:
        raise CrossCheckError("vertex min-cut extraction disagrees with max-flow value")
    return best, CutCertificate("vertex", best, separator, (s, t))


def vertex_connectivity_transitive(g: Digraph, base: int) -> int:
    """Vertex connectivity under the assumption that g is vertex transitive:
    the minimum over all targets of the local connectivity base -> v.  Must
    agree with vertex_connectivity on every instance (tested, not assumed)."""
    _require_strongly_connected(g)
    n = g.vertex_count
    if g.is_complete():
        return n - 1
    net = _vertex_split_network(g)
    best = n - 1
    for t in range(n):
        if t == base or g.has_edge(base, t):
            continue
        net.reset()
        best = min(best, net.maxflow(2 * base + 1, 2 * t, limit=best))
    return best


def edge_connectivity(g: Digraph) -> tuple[int, CutCertificate | None]:
    """Exact edge connectivity via unit-capacity max-flow.  Uses a fixed
    source s and minimizes flow(s, t) and flow(t, s) over all other t,
    which is exact for every strongly connected digraph."""
    _require_strongly_connected(g)
    n = g.vertex_count
    if n <= 1:
        return 0, None
    net = _edge_network(g)
    # some scanned pair always attains lambda <= min out-degree, so f <= best
    # fires at least once and best_pair ends on a pair achieving the minimum
    best = min(len(row) for row in g.adj)
    best_pair: tuple[int, int] | None = None
    for t in range(1, n):
        for pair in ((0, t), (t, 0)):
            net.reset()
            f = net.maxflow(pair[0], pair[1], limit=best + 1)
            if f <= best:
                best, best_pair = f, pair
    s, t = best_pair
    net.reset()
    flow = net.maxflow(s, t)
    reach = net.residual_reachable(s)
    cut = tuple((u, v) for u, v in g.edges() if u in reach and v not in reach)
    if len(cut) != flow or flow != best:
        raise CrossCheckError("edge min-cut extraction disagrees with max-flow value")
    return best, CutCertificate("edge", best, cut, (s, t))


def _scan_minimum_subsets(g: Digraph, accept, max_size: int,
                          budget: int) -> tuple[tuple[frozenset[int], ...], int]:
    """Scan subsets by increasing size; return all hits of the first size
    with any, along with that size.  Equivalent to a full subset scan for
    minimum-cardinality targets, but stops as soon as the minimum is known."""
    n = g.vertex_count
    examined = 0
    for k in range(1, max_size + 1):
        hits = []
        for combo in combinations(range(n), k):
            examined += 1
            if examined > budget:
                raise CapExceeded(
                    f"subset scan exceeded budget {budget} at size {k}",
                    count=examined)
            if accept(combo):
                hits.append(frozenset(combo))
        if hits:
            return tuple(hits), k
    return (), max_size


def atoms_bruteforce(g: Digraph, kappa: int | None = None,
                     cap: int = DEFAULT_BRUTEFORCE_CAP,
                     max_size: int | None = None,
                     side: str = "forward",
                     budget: int = DEFAULT_SUBSET_BUDGET) -> AtomSet:
    """All minimum-cardinality parts A with |N(A)| = kappa.

    ``max_size``, when given, bounds the search: an empty AtomSet means no
    atom of size <= max_size exists (used for the two-sided size-assumption
    scan); with the default bound atoms always exist for a non-complete
    strongly connected digraph.
    """
    _require_strongly_connected(g)
    if g.is_complete():
        raise CompleteDigraphError("complete digraphs have no atoms")
    n = g.vertex_count
    if n > cap:
        raise CapExceeded(f"digraph has {n} vertices, brute-force cap is {cap}")
    if kappa is None:
        kappa = vertex_connectivity(g)[0]
    adj_sets = g.adj_sets
    limit = n - kappa - 1 if max_size is None else min(max_size, n - kappa - 1)

    def accept(combo: tuple[int, ...]) -> bool:
        nbrs: set[int] = set()
        for v in combo:
            nbrs.update(adj_sets[v])
        nbrs.difference_update(combo)
        return len(nbrs) == kappa and len(combo) + kappa < n

    members, _ = _scan_minimum_subsets(g, accept, limit, budget)
    if not members and max_size is None:
        raise CrossCheckError("no atom found in a non-complete digraph")
    return AtomSet("atom", side, members, kappa)


def e_atoms_bruteforce(g: Digraph, lam: int | None = None,
                       cap: int = DEFAULT_BRUTEFORCE_CAP,
                       side: str = "forward",
                       budget: int = DEFAULT_SUBSET_BUDGET) -> AtomSet:
    """All minimum-cardinality proper nonempty subsets with exactly lambda
    outgoing edges."""
    _require_strongly_connected(g)
    n = g.vertex_count
    if n > cap:
        raise CapExceeded(f"digraph has {n} vertices, brute-force cap is {cap}")
    if lam is None:
        lam = edge_connectivity(g)[0]
    adj_sets = g.adj_sets

    def accept(combo: tuple[int, ...]) -> bool:
        inside = set(combo)
        out_edges = sum(len(adj_sets[v] - inside) for v in combo)
        return out_edges == lam

    members, _ = _scan_minimum_subsets(g, accept, n - 1, budget)
    if not members:
        raise CrossCheckError("no e-atom found in a strongly connected digraph")
    return AtomSet("e-atom", side, members, lam)


def out_edge_count(g: Digraph, vertices: Iterable[int]) -> int:
    """Number of edges leaving the vertex set."""
    inside = set(vertices)
    return sum(len(g.adj_sets[v] - inside) for v in inside)
