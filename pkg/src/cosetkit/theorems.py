"""Mechanical hypothesis checkers for the connectivity theorems.

Every checker evaluates the stated hypotheses in order, with a concrete
witness for each failure, and then verifies the stated conclusion against
the flow oracle instead of trusting it: a conclusion that fails while the
hypotheses hold is an inconsistency, never silently accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coset import CosetDigraph, CosetDigraphSpec, build, generation_connectivity
from .digraph import e_atoms_bruteforce, edge_connectivity, vertex_connectivity_transitive
from .errors import GroupError
from .perms import Permutation, compose, double_coset, inverse, subgroup_generated

THEOREM_IDS = ("decomposition", "corollary1", "corollary1_1", "hierarchical_gen",
               "hier1", "hierarchical_cayley", "hierarchical_gen_c", "edgec")


@dataclass(frozen=True)
class Hypothesis:
    description: str
    holds: bool
    witness: str | None = None


@dataclass(frozen=True)
class HypothesisReport:
    theorem_id: str
    hypotheses: tuple[Hypothesis, ...]
    applicable: bool
    implied_bound: int | None
    computed_kappa: int | None
    consistent: bool

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "hypotheses": [{"description": h.description, "holds": h.holds,
                            "witness": h.witness} for h in self.hypotheses],
            "applicable": self.applicable,
            "implied_bound": self.implied_bound,
            "computed_kappa": self.computed_kappa,
            "consistent": self.consistent,
        }


def oracle_kappa(cd: CosetDigraph) -> int:
    return vertex_connectivity_transitive(cd.graph, cd.base_vertex)


def sub_instance(cd: CosetDigraph, labels) -> CosetDigraph:
    """The instance on <H, labels> with the same subgroup H."""
    gens = tuple(cd.connection[lbl] for lbl in labels)
    spec = CosetDigraphSpec(cd.spec.degree,
                            cd.spec.subgroup_generators + gens,
                            cd.spec.subgroup_generators,
                            tuple((lbl, cd.connection[lbl]) for lbl in labels),
                            cd.spec.enumeration_cap)
    return build(spec)


def _require_connected(cd: CosetDigraph) -> None:
    connected, _, _ = generation_connectivity(cd)
    if not connected:
        raise GroupError("instance is disconnected")


def _require_partition(cd: CosetDigraph, blocks) -> None:
    flat = [lbl for block in blocks for lbl in block]
    if sorted(flat) != sorted(cd.labels):
        raise GroupError(f"blocks {blocks} do not partition the connection set "
                         f"{cd.labels}")


def _double_coset_of(members, r: Permutation) -> frozenset[Permutation]:
    # full enumeration of G'rG'; no coset-representative shortcuts
    return frozenset(compose(compose(x, r), y) for x in members for y in members)


def check_decomposition(cd: CosetDigraph, r1, r2) -> HypothesisReport:
    """kappa(G) >= min(|V(G')|, kappa(G') + d_R2) for G' = <H, R1>, when
    G' avoids R2 and R2 generators from one G'-double-coset generate the
    same subgroup with H."""
    r1, r2 = tuple(r1), tuple(r2)
    _require_partition(cd, (r1, r2))
    _require_connected(cd)
    gp = subgroup_generated(cd.group, cd.subgroup, [cd.connection[lbl] for lbl in r1])

    offenders = [lbl for lbl in r2 if cd.connection[lbl] in gp.member_set]
    hyp1 = Hypothesis("G' = <H, R1> contains no member of R2", not offenders,
                      f"{offenders[0]} lies in G'" if offenders else None)

    hyp2_holds, witness = True, None
    for a, b in combinations(r2, 2):
        pa, pb = cd.connection[a], cd.connection[b]
        if _double_coset_of(gp.members, pa) == _double_coset_of(gp.members, pb):
            if subgroup_generated(cd.group, cd.subgroup, [pa]) != \
                    subgroup_generated(cd.group, cd.subgroup, [pb]):
                hyp2_holds, witness = False, (
                    f"G'{a}G' = G'{b}G' but <H,{a}> != <H,{b}>")
                break
    hyp2 = Hypothesis("same G'-double-coset members of R2 generate equal <H, r>",
                      hyp2_holds, witness)

    applicable = hyp1.holds and hyp2.holds
    computed = oracle_kappa(cd)
    bound = None
    if applicable:
        sub = sub_instance(cd, r1)
        kappa_sub = oracle_kappa(sub)
        d_r2 = sum(cd.degrees[lbl] for lbl in r2)
        bound = min(len(sub.vertices), kappa_sub + d_r2)
    consistent = (computed >= bound) if applicable else True
    return HypothesisReport("decomposition", (hyp1, hyp2), applicable,
                            bound, computed, consistent)


def check_tower(cd: CosetDigraph, blocks, variant: str = "corollary1") -> HypothesisReport:
    """Tower corollaries: an ordered partition S_1,...,S_k whose partial
    subgroups grow at every step forces kappa = d_S, given the degree and
    index conditions of the chosen variant."""
    if variant not in ("corollary1", "corollary1_1"):
        raise GroupError(f"unknown tower variant {variant!r}")
    blocks = [tuple(b) for b in blocks]
    _require_partition(cd, blocks)
    _require_connected(cd)
    k = len(blocks)
    h_order = len(cd.subgroup)

    chain = []
    gens: list[Permutation] = []
    for block in blocks:
        gens.extend(cd.connection[lbl] for lbl in block)
        chain.append(subgroup_generated(cd.group, cd.subgroup, gens))
    d_block = [sum(cd.degrees[lbl] for lbl in block) for block in blocks]
    d_cum = [sum(d_block[:i + 1]) for i in range(k)]

    hyps = []
    repeat = next((i for i in range(k - 1) if len(chain[i]) == len(chain[i + 1])), None)
    hyps.append(Hypothesis("the subgroups G_i are distinct", repeat is None,
                           None if repeat is None else
                           f"G_{repeat + 1} = G_{repeat + 2}"))

    holds, witness = True, None
    for i in range(1, k):
        members = chain[i - 1].members
        for a, b in combinations(blocks[i], 2):
            pa, pb = cd.connection[a], cd.connection[b]
            if _double_coset_of(members, pa) == _double_coset_of(members, pb) and \
                    subgroup_generated(cd.group, cd.subgroup, [pa]) != \
                    subgroup_generated(cd.group, cd.subgroup, [pb]):
                holds, witness = False, f"G_{i}{a}G_{i} = G_{i}{b}G_{i} but <H,{a}> != <H,{b}>"
                break
        if not holds:
            break
    hyps.append(Hypothesis("same-double-coset members of S_i+1 generate equal <H, r>",
                           holds, witness))

    base = sub_instance(cd, blocks[0])
    kappa_base = oracle_kappa(base)
    hyps.append(Hypothesis("kappa(G(G_1, H, S_1)) = d_1", kappa_base == d_cum[0],
                           None if kappa_base == d_cum[0] else
                           f"kappa = {kappa_base}, d_1 = {d_cum[0]}"))

    if variant == "corollary1":
        bad = next((i for i in range(k - 1)
                    if len(chain[i]) // h_order < d_cum[i + 1]), None)
        hyps.append(Hypothesis("|G_i/H| >= d_i+1 for every i", bad is None,
                               None if bad is None else
                               f"|G_{bad + 1}/H| = {len(chain[bad]) // h_order} "
                               f"< d_{bad + 2} = {d_cum[bad + 1]}"))
    else:
        ok = k < 2 or len(chain[0]) // h_order >= d_cum[1]
        hyps.append(Hypothesis("|G_1/H| >= d_2", ok,
                               None if ok else
                               f"|G_1/H| = {len(chain[0]) // h_order} < d_2 = {d_cum[1]}"))
        bad = next((i for i in range(k - 1) if d_block[i + 1] > d_cum[i]), None)
        hyps.append(Hypothesis("d_S_i+1 <= d_i for every i", bad is None,
                               None if bad is None else
                               f"d_S_{bad + 2} = {d_block[bad + 1]} > d_{bad + 1} "
                               f"= {d_cum[bad]}"))

    applicable = all(h.holds for h in hyps)
    computed = oracle_kappa(cd)
    bound = cd.degree if applicable else None
    consistent = (computed == bound) if applicable else True
    return HypothesisReport(variant, tuple(hyps), applicable, bound,
                            computed, consistent)


def hierarchical_order_search(cd: CosetDigraph):
    """First generator ordering (lexicographic in spec order) making the
    partial subgroups <H, s_1..s_i> strictly grow, or None."""
    labels = cd.labels
    sizes: dict[frozenset[str], int] = {}

    def size_of(chosen: frozenset[str]) -> int:
        if chosen not in sizes:
            sizes[chosen] = len(subgroup_generated(
                cd.group, cd.subgroup, [cd.connection[lbl] for lbl in sorted(chosen)]))
        return sizes[chosen]

    def extend(prefix: tuple[str, ...], used: frozenset[str], current: int):
        if len(prefix) == len(labels):
            return prefix
        for lbl in labels:
            if lbl in used:
                continue
            grown = size_of(used | {lbl})
            if grown > current:
                hit = extend(prefix + (lbl,), used | {lbl}, grown)
                if hit is not None:
                    return hit
        return None

    return extend((), frozenset(), len(cd.subgroup))


def is_minimal(cd: CosetDigraph) -> bool:
    """True iff no proper subset of the connection set generates G with H."""
    order = len(cd.group)
    for dropped in cd.labels:
        rest = [cd.connection[lbl] for lbl in cd.labels if lbl != dropped]
        if len(subgroup_generated(cd.group, cd.subgroup, rest)) == order:
            return False
    return True


def check_hierarchical_gen(cd: CosetDigraph, ordering,
                           variant: str = "standard") -> HypothesisReport:
    """Hierarchical ordering plus degree conditions force kappa = d.  The
    hier1 variant replaces |G_1/H| >= d_2 with Hs_1^-1 H != Hs_1 H."""
    if variant not in ("standard", "hier1"):
        raise GroupError(f"unknown variant {variant!r}")
    ordering = tuple(ordering)
    if sorted(ordering) != sorted(cd.labels):
        raise GroupError(f"{ordering} is not an ordering of {cd.labels}")
    _require_connected(cd)
    k = len(ordering)

    chain = []
    gens: list[Permutation] = []
    for lbl in ordering:
        gens.append(cd.connection[lbl])
        chain.append(subgroup_generated(cd.group, cd.subgroup, gens))
    d_cum = [sum(cd.degrees[lbl] for lbl in ordering[:i + 1]) for i in range(k)]

    hyps = []
    repeat = next((i for i in range(k - 1) if len(chain[i]) == len(chain[i + 1])),
                  None)
    hyps.append(Hypothesis("the ordering is hierarchical (subgroups all distinct)",
                           repeat is None,
                           None if repeat is None else
                           f"<H,{','.join(ordering[:repeat + 1])}> = "
                           f"<H,{','.join(ordering[:repeat + 2])}>"))

    bad = next((i for i in range(k - 1)
                if cd.degrees[ordering[i + 1]] > d_cum[i]), None)
    hyps.append(Hypothesis("d_s_i+1 <= d_i for every i", bad is None,
                           None if bad is None else
                           f"d_{ordering[bad + 1]} = {cd.degrees[ordering[bad + 1]]} "
                           f"> d_{bad + 1} = {d_cum[bad]}"))

    if variant == "standard":
        ok = k < 2 or len(chain[0]) // len(cd.subgroup) >= d_cum[1]
        hyps.append(Hypothesis("|G_1/H| >= d_2", ok,
                               None if ok else
                               f"|G_1/H| = {len(chain[0]) // len(cd.subgroup)} "
                               f"< d_2 = {d_cum[1]}"))
    else:
        s1 = cd.connection[ordering[0]]
        distinct = double_coset(cd.subgroup, s1) != double_coset(cd.subgroup, inverse(s1))
        hyps.append(Hypothesis("Hs_1^-1 H != Hs_1 H", distinct,
                               None if distinct else
                               f"Hs_1H = Hs_1^-1H for s_1 = {ordering[0]}"))

    applicable = all(h.holds for h in hyps)
    computed = oracle_kappa(cd)
    bound = cd.degree if applicable else None
    consistent = (computed == bound) if applicable else True
    theorem_id = "hierarchical_gen" if variant == "standard" else "hier1"
    return HypothesisReport(theorem_id, tuple(hyps), applicable, bound,
                            computed, consistent)


def verify_hierarchical_cayley(cd: CosetDigraph) -> HypothesisReport:
    """Hierarchical Cayley digraphs (trivial H) are optimally connected:
    kappa = |S|."""
    if len(cd.subgroup) != 1:
        raise GroupError("not a Cayley digraph: H is nontrivial")
    ordering = hierarchical_order_search(cd)
    if ordering is None:
        raise GroupError("no hierarchical ordering exists")
    _require_connected(cd)
    hyps = (Hypothesis("H is trivial", True),
            Hypothesis("a hierarchical ordering exists", True, ",".join(ordering)))
    computed = oracle_kappa(cd)
    bound = len(cd.labels)
    return HypothesisReport("hierarchical_cayley", hyps, True, bound, computed,
                            computed == bound)


def check_hierarchical_gen_c(cd: CosetDigraph, s_labels, sprime_labels) -> HypothesisReport:
    """Cayley digraph on S and some inverses S' of order >= 3: if S is
    hierarchical in the given order and |<s_1, s_2>| != 4, then
    kappa = |S u S'|."""
    if len(cd.subgroup) != 1:
        raise GroupError("not a Cayley digraph: H is nontrivial")
    s_labels, sprime_labels = tuple(s_labels), tuple(sprime_labels)
    if set(s_labels) & set(sprime_labels):
        raise GroupError("S and S' overlap")
    _require_partition(cd, (s_labels, sprime_labels))
    _require_connected(cd)

    s_perms = [cd.connection[lbl] for lbl in s_labels]
    s_images = {p.image for p in s_perms}
    hyps = []

    stray = [lbl for lbl in sprime_labels
             if inverse(cd.connection[lbl]).image not in s_images]
    hyps.append(Hypothesis("S' is a subset of S^-1", not stray,
                           f"{stray[0]} is not the inverse of any member of S"
                           if stray else None))

    low = [lbl for lbl in sprime_labels if cd.connection[lbl].order() < 3]
    hyps.append(Hypothesis("every member of S' has order at least 3", not low,
                           f"{low[0]} has order {cd.connection[low[0]].order()}"
                           if low else None))

    chain = []
    gens: list[Permutation] = []
    for lbl in s_labels:
        gens.append(cd.connection[lbl])
        chain.append(subgroup_generated(cd.group, cd.subgroup, gens))
    hierarchical = all(len(chain[i]) < len(chain[i + 1])
                       for i in range(len(chain) - 1))
    generates = len(chain[-1]) == len(cd.group)
    hyps.append(Hypothesis("G(G, {e}, S) is hierarchical in the given order",
                           hierarchical and generates,
                           None if hierarchical and generates else
                           ("<S> != G" if not generates else "a subgroup repeats")))

    pair = subgroup_generated(cd.group, cd.subgroup, s_perms[:2])
    hyps.append(Hypothesis("|<s_1, s_2>| != 4", len(pair) != 4,
                           None if len(pair) != 4 else f"|<s_1,s_2>| = 4"))

    applicable = all(h.holds for h in hyps)
    computed = oracle_kappa(cd)
    bound = len(cd.labels) if applicable else None
    consistent = (computed == bound) if applicable else True
    return HypothesisReport("hierarchical_gen_c", tuple(hyps), applicable,
                            bound, computed, consistent)


def verify_edge_connectivity(cd: CosetDigraph) -> HypothesisReport:
    """Edge connectivity equals the degree, and every e-atom is a single
    vertex.  Unconditional for connected instances."""
    _require_connected(cd)
    lam, _ = edge_connectivity(cd.graph)
    d = cd.degree
    eatoms = e_atoms_bruteforce(cd.graph, lam=lam, cap=cd.graph.vertex_count)
    singletons = all(len(a) == 1 for a in eatoms.members)
    hyps = (Hypothesis("instance is connected", True),)
    consistent = lam == d and singletons
    return HypothesisReport("edgec", hyps, True, d, lam, consistent)
