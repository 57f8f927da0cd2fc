"""Permutation arithmetic and finite group enumeration.

Permutations act on points 1..n and are stored in one-line image form.
Products follow the right-action convention throughout: ``compose(p, q)``
(or ``p * q``) applies p first, then q, so i(pq) = (ip)q.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, CrossCheckError, GroupError

DEFAULT_ENUM_CAP = 50_000

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A bijection on {1..n}; ``image[i-1]`` is the image of point i."""

    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        img = tuple(image)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise GroupError(f"not a bijection on 1..{len(img)}: {img}")
        self.image = img

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise GroupError("degree must be positive")
        return cls(range(1, degree + 1))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        return self.image[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))

    def order(self) -> int:
        k = 1
        p = self
        while not p.is_identity():
            p = compose(p, self)
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, fixed points omitted, each starting at its
        minimum, sorted by minimum element."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cur, cyc = start, [start]
            seen[start - 1] = True
            while True:
                cur = self.image[cur - 1]
                if cur == start:
                    break
                seen[cur - 1] = True
                cyc.append(cur)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __lt__(self, other: "Permutation") -> bool:
        return self.image < other.image

    def __repr__(self) -> str:
        return print_cycles(self)


def compose(pi: Permutation, sigma: Permutation) -> Permutation:
    """Product pi*sigma: apply pi first, then sigma."""
    if pi.degree != sigma.degree:
        raise GroupError(f"degree mismatch: {pi.degree} vs {sigma.degree}")
    s = sigma.image
    return Permutation(s[v - 1] for v in pi.image)


def inverse(pi: Permutation) -> Permutation:
    img = [0] * pi.degree
    for i, v in enumerate(pi.image):
        img[v - 1] = i + 1
    return Permutation(img)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation like ``(1 2)(3 4)``; ``()`` is the
    identity.  Points may be separated by whitespace or commas."""
    stripped = text.strip()
    matches = list(_CYCLE_RE.finditer(stripped))
    leftover = _CYCLE_RE.sub("", stripped).strip()
    if leftover or (not matches and stripped != ""):
        raise GroupError(f"malformed cycle notation: {text!r}")
    img = list(range(1, degree + 1))
    seen: set[int] = set()
    for m in matches:
        body = m.group(1).strip()
        if not body:
            continue
        try:
            points = [int(tok) for tok in re.split(r"[,\s]+", body)]
        except ValueError:
            raise GroupError(f"malformed cycle notation: {text!r}") from None
        for p in points:
            if not 1 <= p <= degree:
                raise GroupError(f"point {p} out of range 1..{degree}")
            if p in seen:
                raise GroupError(f"repeated point {p} in {text!r}")
            seen.add(p)
        for a, b in zip(points, points[1:] + points[:1]):
            img[a - 1] = b
    return Permutation(img)


def print_cycles(pi: Permutation) -> str:
    cycles = pi.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)


class GroupContext:
    """A fully enumerated finite permutation group.

    ``elements`` holds every element in deterministic BFS discovery order
    (identity first); ``index`` maps each element to its ordinal.
    """

    __slots__ = ("degree", "generators", "elements", "index")

    def __init__(self, degree: int, generators: tuple[Permutation, ...],
                 elements: tuple[Permutation, ...], index: dict[Permutation, int]):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self.index = index

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, pi: Permutation) -> bool:
        return pi in self.index

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"<group of order {len(self.elements)} on 1..{self.degree}>"


class SubgroupHandle:
    """A subgroup of a GroupContext; ``members`` sorted by parent index."""

    __slots__ = ("parent", "members", "member_set")

    def __init__(self, parent: GroupContext, members: tuple[Permutation, ...]):
        self.parent = parent
        self.members = members
        self.member_set = frozenset(members)

    @property
    def identity(self) -> Permutation:
        return self.parent.identity

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, pi: Permutation) -> bool:
        return pi in self.member_set

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SubgroupHandle)
                and self.parent is other.parent
                and self.member_set == other.member_set)

    def __hash__(self) -> int:
        return hash(self.member_set)

    def __repr__(self) -> str:
        return f"<subgroup of order {len(self.members)}>"


def enumerate_closure(degree: int, gens: Sequence[Permutation],
                      cap: int = DEFAULT_ENUM_CAP) -> GroupContext:
    """Enumerate the group generated by ``gens`` by breadth-first closure
    under right multiplication.  Raises CapExceeded past ``cap`` elements,
    reporting the partial count."""
    gens = tuple(gens)
    for g in gens:
        if g.degree != degree:
            raise GroupError(f"generator degree {g.degree} != {degree}")
    ident = Permutation.identity(degree)
    elements = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for g in frontier:
            for s in gens:
                w = compose(g, s)
                if w not in index:
                    if len(elements) >= cap:
                        raise CapExceeded(
                            f"group enumeration exceeded cap {cap} "
                            f"({len(elements)} elements found so far)",
                            count=len(elements))
                    index[w] = len(elements)
                    elements.append(w)
                    new_frontier.append(w)
        frontier = new_frontier
    return GroupContext(degree, gens, tuple(elements), index)


def trivial_subgroup(ctx: GroupContext) -> SubgroupHandle:
    return SubgroupHandle(ctx, (ctx.identity,))


def subgroup_generated(ctx: GroupContext, seed: SubgroupHandle | None,
                       extra: Sequence[Permutation] = ()) -> SubgroupHandle:
    """Smallest subgroup of ``ctx`` containing ``seed`` and ``extra``."""
    if seed is not None and seed.parent is not ctx:
        raise GroupError("seed subgroup belongs to a different group")
    gens: list[Permutation] = list(seed.members) if seed is not None else []
    for g in extra:
        if g not in ctx:
            raise GroupError(f"element {g} not in parent group")
        gens.append(g)
    members = {ctx.identity}
    frontier = [ctx.identity]
    while frontier:
        new_frontier = []
        for x in frontier:
            for s in gens:
                w = compose(x, s)
                if w not in members:
                    members.add(w)
                    new_frontier.append(w)
        frontier = new_frontier
    ordered = tuple(sorted(members, key=ctx.index.__getitem__))
    return SubgroupHandle(ctx, ordered)


def canonical_coset_rep(g: Permutation, H: SubgroupHandle) -> Permutation:
    """Lexicographically minimal element of the left coset gH."""
    if g not in H.parent:
        raise GroupError("element not in the parent group of H")
    best = min(compose(g, h).image for h in H.members)
    return Permutation(best)


def left_coset_reps(G: GroupContext, H: SubgroupHandle) -> list[Permutation]:
    """Canonical representatives of G/H, ordered by first occurrence in
    the group's element order."""
    if H.parent is not G:
        raise GroupError("H is not a subgroup of G")
    reps = []
    seen: set[tuple[int, ...]] = set()
    for g in G.elements:
        if g.image in seen:
            continue
        coset = [compose(g, h) for h in H.members]
        reps.append(Permutation(min(c.image for c in coset)))
        seen.update(c.image for c in coset)
    return reps


def double_coset(H: SubgroupHandle, s: Permutation) -> frozenset[Permutation]:
    """The set HsH = {h1*s*h2 : h1, h2 in H}."""
    if s not in H.parent:
        raise GroupError("element not in the parent group of H")
    left = [compose(h, s) for h in H.members]
    return frozenset(compose(t, h) for t in left for h in H.members)


def double_coset_index(H: SubgroupHandle, s: Permutation) -> int:
    """Number of left cosets of H inside HsH, cross-checked against the
    index formula |H| / |H ∩ sHs^-1|."""
    dc = double_coset(H, s)
    d = len(dc) // len(H)
    s_inv = inverse(s)
    conjugated = {compose(compose(s, h), s_inv) for h in H.members}
    stab = conjugated & H.member_set
    d_formula = len(H) // len(stab)
    if d != d_formula:
        raise CrossCheckError(
            f"double coset index mismatch: |HsH|/|H| = {d} but "
            f"|H|/|H ∩ sHs^-1| = {d_formula} for s = {s}")
    return d


def normalizes(g: Permutation, H: SubgroupHandle) -> bool:
    """True iff gHg^-1 = H as sets."""
    if g not in H.parent:
        raise GroupError("element not in the parent group of H")
    g_inv = inverse(g)
    return all(compose(compose(g, h), g_inv) in H.member_set for h in H.members)
