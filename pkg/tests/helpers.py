"""Independent test-side oracles.

These deliberately re-derive results through different code paths than the
package: plain index-wise permutation application, Edmonds-Karp max-flow
over dict-based residual graphs, and a full 2^n subset scan for atoms.
"""

from __future__ import annotations

from collections import deque


def apply_then(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Index-wise oracle for the product 'apply p first, then q' on
    1-based image tuples."""
    return tuple(q[v - 1] for v in p)


def reachable(adj, start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def edmonds_karp(n: int, arcs: list[tuple[int, int, int]], s: int, t: int) -> int:
    """Independent max-flow: BFS augmenting paths over a dict residual."""
    residual = [dict() for _ in range(n)]
    for u, v, cap in arcs:
        residual[u][v] = residual[u].get(v, 0) + cap
        residual[v].setdefault(u, 0)
    flow = 0
    while True:
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for v, cap in residual[u].items():
                if cap > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if t not in parent:
            return flow
        path = []
        v = t
        while parent[v] is not None:
            path.append((parent[v], v))
            v = parent[v]
        push = min(residual[u][v] for u, v in path)
        for u, v in path:
            residual[u][v] -= push
            residual[v][u] += push
        flow += push


def local_vertex_connectivity_oracle(g, s: int, t: int) -> int:
    """Menger via Edmonds-Karp on an independently built split network."""
    n = g.vertex_count
    arcs = [(2 * v, 2 * v + 1, 1) for v in range(n)]
    arcs += [(2 * u + 1, 2 * v, n) for u, v in g.edges()]
    return edmonds_karp(2 * n, arcs, 2 * s + 1, 2 * t)


def vertex_connectivity_oracle(g) -> int:
    n = g.vertex_count
    best = n - 1
    for s in range(n):
        for t in range(n):
            if s != t and not g.has_edge(s, t):
                best = min(best, local_vertex_connectivity_oracle(g, s, t))
    return best


def edge_connectivity_oracle(g) -> int:
    n = g.vertex_count
    arcs = [(u, v, 1) for u, v in g.edges()]
    best = min(len(row) for row in g.adj)
    for t in range(1, n):
        best = min(best, edmonds_karp(n, arcs, 0, t), edmonds_karp(n, arcs, t, 0))
    return best


def atoms_fullscan_oracle(g, kappa: int) -> set[frozenset[int]]:
    """All minimum parts with |N(A)| = kappa by scanning every subset."""
    n = g.vertex_count
    best_size = None
    hits: set[frozenset[int]] = set()
    for mask in range(1, 2 ** n):
        members = [v for v in range(n) if mask >> v & 1]
        nbrs = set()
        for v in members:
            nbrs.update(g.adj_sets[v])
        nbrs.difference_update(members)
        if len(nbrs) != kappa or len(members) + len(nbrs) >= n:
            continue
        if best_size is None or len(members) < best_size:
            best_size = len(members)
            hits = {frozenset(members)}
        elif len(members) == best_size:
            hits.add(frozenset(members))
    return hits


def e_atoms_fullscan_oracle(g, lam: int) -> set[frozenset[int]]:
    n = g.vertex_count
    best_size = None
    hits: set[frozenset[int]] = set()
    for mask in range(1, 2 ** n - 1):
        members = {v for v in range(n) if mask >> v & 1}
        out_edges = sum(1 for u, v in g.edges() if u in members and v not in members)
        if out_edges != lam:
            continue
        if best_size is None or len(members) < best_size:
            best_size = len(members)
            hits = {frozenset(members)}
        elif len(members) == best_size:
            hits.add(frozenset(members))
    return hits


def is_strongly_connected_oracle(adj) -> bool:
    n = len(adj)
    if n <= 1:
        return True
    radj = [[] for _ in range(n)]
    for u, row in enumerate(adj):
        for v in row:
            radj[v].append(u)
    return len(reachable(adj, 0)) == n and len(reachable(radj, 0)) == n
