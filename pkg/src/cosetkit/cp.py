"""The cycle-prefix graph family CP(n, k).

CP(n, k) is the coset instance on S_n whose subgroup H_k fixes the first
n-k points and whose connection set is gamma(2)..gamma(n-k+1), where
gamma(j) cyclically shifts 1..j to the right.  Degree is n-1: each
gamma(j) with j <= n-k contributes one edge class coset, gamma(n-k+1)
contributes k.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import factorial

from .coset import CosetDigraph, CosetDigraphSpec, build
from .errors import CrossCheckError, GroupError
from .perms import (DEFAULT_ENUM_CAP, Permutation, SubgroupHandle,
                    canonical_coset_rep, compose, normalizes, subgroup_generated)
from .theorems import sub_instance


@dataclass(frozen=True)
class CPParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise GroupError(f"n must be at least 2, got {self.n}")
        if not 1 <= self.k <= self.n - 1:
            raise GroupError(f"k must satisfy 1 <= k <= n-1, got k={self.k}")

    @property
    def vertex_count(self) -> int:
        return factorial(self.n) // factorial(self.k)


def gamma(k: int, n: int) -> Permutation:
    """One-line form k 1 2 .. (k-1) (k+1) .. n: shift 1..k cyclically right."""
    if not 2 <= k <= n:
        raise GroupError(f"gamma({k}) needs 2 <= k <= n = {n}")
    return Permutation([k] + list(range(1, k)) + list(range(k + 1, n + 1)))


def gamma_label(k: int) -> str:
    return f"γ({k})"


def cp_spec(p: CPParams, enumeration_cap: int = DEFAULT_ENUM_CAP) -> CosetDigraphSpec:
    n, k = p.n, p.k
    full_cycle = Permutation(list(range(2, n + 1)) + [1])
    transposition = gamma(2, n)
    subgroup_gens = tuple(
        Permutation(list(range(1, j)) + [j + 1, j] + list(range(j + 2, n + 1)))
        for j in range(n - k + 1, n))
    connection = tuple((gamma_label(j), gamma(j, n)) for j in range(2, n - k + 2))
    return CosetDigraphSpec(n, (transposition, full_cycle), subgroup_gens,
                            connection, enumeration_cap)


def cp_build(p: CPParams, enumeration_cap: int = DEFAULT_ENUM_CAP) -> CosetDigraph:
    return build(cp_spec(p, enumeration_cap))


def cp_degree_profile(p: CPParams, cd: CosetDigraph | None = None) -> dict[str, int]:
    """Degree table of the built instance, cross-checked against the
    closed form d_gamma(i) = 1 for i <= n-k and d_gamma(n-k+1) = k."""
    cd = cd if cd is not None else cp_build(p)
    expected = {gamma_label(j): 1 for j in range(2, p.n - p.k + 1)}
    expected[gamma_label(p.n - p.k + 1)] = p.k
    if cd.degrees != expected:
        raise CrossCheckError(f"degree profile {cd.degrees} != expected {expected}")
    if sum(cd.degrees.values()) != p.n - 1:
        raise CrossCheckError("degree profile does not sum to n-1")
    return dict(cd.degrees)


def verify_neighbor_multiplier(p: CPParams, F: SubgroupHandle,
                               cd: CosetDigraph | None = None) -> bool:
    """For H <= F <= G' = <H, gamma(2)..gamma(n-k)>: the neighbors of F/H
    due to gamma(n-k+1) number exactly |F/H| * k, verified by enumeration."""
    cd = cd if cd is not None else cp_build(p)
    h = cd.subgroup
    gprime = subgroup_generated(
        cd.group, h, [gamma(j, p.n) for j in range(2, p.n - p.k + 1)])
    if not (h.member_set <= F.member_set and F.member_set <= gprime.member_set):
        raise GroupError("F must satisfy H <= F <= G'")
    top = gamma(p.n - p.k + 1, p.n)
    reached = {canonical_coset_rep(compose(f, top), h).image for f in F.members}
    return len(reached) == (len(F) // len(h)) * p.k


@dataclass(frozen=True)
class PrefixStructureReport:
    normalizer_ok: bool
    gprime_vertex_count: int
    iso_target: str
    iso_ok: bool


def verify_prefix_structure(p: CPParams,
                            cd: CosetDigraph | None = None) -> PrefixStructureReport:
    """Structural facts about G' = <H, gamma(2)..gamma(n-k)> for
    1 < k < n-1: every gamma(j) with j <= n-k normalizes H, G'/H has
    (n-k)! cosets, and the instance on G' is isomorphic to CP(n-k, 1)
    via deterministic label-directed BFS."""
    n, k = p.n, p.k
    if not 1 < k < n - 1:
        raise GroupError(f"prefix structure needs 1 < k < n-1, got n={n} k={k}")
    cd = cd if cd is not None else cp_build(p)
    h = cd.subgroup

    for j in range(2, n - k + 1):
        if not normalizes(gamma(j, n), h):
            raise CrossCheckError(f"gamma({j}) does not normalize H")

    prefix_labels = tuple(gamma_label(j) for j in range(2, n - k + 1))
    gprime_inst = sub_instance(cd, prefix_labels)
    m = n - k
    if len(gprime_inst.vertices) != factorial(m):
        raise CrossCheckError(
            f"|G'/H| = {len(gprime_inst.vertices)} != ({m})! = {factorial(m)}")

    target = cp_build(CPParams(m, 1))
    if not _labeled_bfs_isomorphic(gprime_inst, target):
        raise CrossCheckError(f"G' instance is not isomorphic to CP({m},1)")
    return PrefixStructureReport(True, len(gprime_inst.vertices), f"CP({m},1)", True)


def _labeled_bfs_isomorphic(a: CosetDigraph, b: CosetDigraph) -> bool:
    """Isomorphism check for instances whose edge classes all have d_s = 1
    and share label names: labels then direct a unique BFS pairing from the
    base vertices, which is checked to be an edge-class-preserving bijection."""
    if sorted(a.labels) != sorted(b.labels):
        return False
    if len(a.vertices) != len(b.vertices):
        return False
    if any(d != 1 for d in a.degrees.values()) or any(d != 1 for d in b.degrees.values()):
        raise GroupError("labeled BFS isomorphism requires every d_s = 1")

    def successor_maps(inst: CosetDigraph) -> dict[str, dict[int, int]]:
        return {lbl: {u: v for u, v in edges}
                for lbl, edges in inst.edge_class.items()}

    succ_a, succ_b = successor_maps(a), successor_maps(b)
    labels = a.labels
    pairing = {a.base_vertex: b.base_vertex}
    queue = deque([a.base_vertex])
    while queue:
        u = queue.popleft()
        for lbl in labels:
            va, vb = succ_a[lbl][u], succ_b[lbl][pairing[u]]
            if va in pairing:
                if pairing[va] != vb:
                    return False
            else:
                pairing[va] = vb
                queue.append(va)
    if len(pairing) != len(a.vertices) or len(set(pairing.values())) != len(pairing):
        return False
    for lbl in labels:
        mapped = {(pairing[u], pairing[v]) for u, v in a.edge_class[lbl]}
        if mapped != b.edge_class[lbl]:
            return False
    return True
