"""Ground-truth embedding counts by exhaustive induced-substructure inspection.

An embedding of a pattern into a host tree is a subset of host nodes whose
induced ancestor order (with sibling order inherited from the host in the
plane case) reproduces the pattern.  Plane counts are over subsets; unordered
("nonplane") counts collapse subsets that differ by a host automorphism,
which is what makes a single count per unlabeled host meaningful.

Everything here is deliberately simple and independent of the generating
function engine; it is the reference the series are validated against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import BudgetError, DomainError, UnsupportedFamilyError
from .families import DEFAULT_ENUM_CAP, Family, enumerate_family, family_size
from .trees import PlaneForest, PlaneTree, canonical_nonplane, format_tree

DEFAULT_SUBSET_BUDGET = 10**8


@dataclass(frozen=True)
class EmbedCount:
    all: int
    good: int


class HostIndex:
    """Flattened host tree: pre-order ids, subtree sizes, child lists.

    Node i's subtree occupies the id interval [i, i + size[i]), so
    ancestorship is a pair of comparisons.
    """

    __slots__ = ("tree", "n", "sizes", "children")

    def __init__(self, tree: PlaneTree):
        self.tree = tree
        self.n = tree.size
        self.sizes = [0] * self.n
        self.children: list[list[int]] = [[] for _ in range(self.n)]
        self._build(tree, 0)

    def _build(self, t: PlaneTree, at: int) -> int:
        self.sizes[at] = t.size
        child_at = at + 1
        for c in t.children:
            self.children[at].append(child_at)
            child_at = self._build(c, child_at)
        return child_at

    def is_ancestor(self, a: int, b: int) -> bool:
        return a <= b < a + self.sizes[a]

    def induced_components(self, ids: tuple[int, ...]) -> list[PlaneTree]:
        """Components of the induced substructure, in pre-order.

        `ids` must be sorted ascending.  Each selected node's parent is its
        nearest selected proper ancestor; sibling order is id order.
        """
        roots: list[PlaneTree] = []
        # Stack of open nodes: [id, end-of-interval, collected children].
        stack: list[list] = []
        for v in ids:
            while stack and not (stack[-1][0] <= v < stack[-1][1]):
                top = stack.pop()
                done = PlaneTree(tuple(top[2]))
                (stack[-1][2] if stack else roots).append(done)
            stack.append([v, v + self.sizes[v], []])
        while stack:
            top = stack.pop()
            done = PlaneTree(tuple(top[2]))
            (stack[-1][2] if stack else roots).append(done)
        return roots

    def colored_key(self, selected: frozenset[int]):
        """Canonical form of (host, subset) as an unordered 2-colored tree.

        Two subsets get equal keys iff a host automorphism maps one onto
        the other, so distinct keys enumerate subset orbits.
        """

        def key(i: int):
            kids = sorted(key(c) for c in self.children[i])
            return (i in selected, tuple(kids))

        return key(0)


def induced_substructure(t: PlaneTree, subset) -> PlaneForest:
    """Induced substructure of the host on the given pre-order node ids."""
    host = HostIndex(t)
    ids = sorted(set(subset))
    if not ids:
        raise DomainError("subset must be nonempty")
    if ids[0] < 0 or ids[-1] >= host.n:
        raise DomainError(f"node ids must lie in [0, {host.n})")
    return PlaneForest(tuple(host.induced_components(tuple(ids))))


def _iter_rooted_subsets(host: HostIndex, m: int):
    """Yield (v, ids) for subsets whose minimum element v can be the root
    of a single induced component: the remaining m-1 ids lie in v's subtree."""
    for v in range(host.n):
        span = host.sizes[v]
        if span < m:
            continue
        if m == 1:
            yield v, (v,)
            continue
        for rest in combinations(range(v + 1, v + span), m - 1):
            yield v, (v,) + rest


def count_in_tree(s: PlaneTree, t: PlaneTree, mode: str = "plane") -> EmbedCount:
    """Number of (all, good) embeddings of the pattern s in the host t.

    mode="plane" counts subsets; mode="nonplane" counts subset orbits under
    host automorphisms, comparing shapes as unordered trees.
    """
    m = s.size
    if mode == "plane":
        host = HostIndex(t)
        total = good = 0
        for v, ids in _iter_rooted_subsets(host, m):
            comp = host.induced_components(ids)
            if comp[0] == s:
                total += 1
                if v == 0:
                    good += 1
        return EmbedCount(total, good)
    if mode == "nonplane":
        target = canonical_nonplane(s)
        host = HostIndex(canonical_nonplane(t))
        orbits = set()
        good_orbits = set()
        for v, ids in _iter_rooted_subsets(host, m):
            comp = host.induced_components(ids)
            if canonical_nonplane(comp[0]) == target:
                key = host.colored_key(frozenset(ids))
                orbits.add(key)
                if v == 0:
                    good_orbits.add(key)
        return EmbedCount(len(orbits), len(good_orbits))
    raise DomainError(f"unknown mode {mode!r}; expected 'plane' or 'nonplane'")


def _family_mode(fam: Family) -> str:
    return "nonplane" if fam is Family.NONPLANE_BINARY else "plane"


def _check_budget(fam: Family, n: int, m: int, budget) -> None:
    if budget is None:
        return
    work = family_size(fam, n) * comb(n, m)
    if work > budget:
        raise BudgetError(
            f"subset sweep needs ~{work} candidate checks for {fam.value} "
            f"at n={n}, pattern size {m}, above the budget {budget}")


def count_in_family(s: PlaneTree, fam: Family, n: int, *,
                    budget=DEFAULT_SUBSET_BUDGET,
                    cap=DEFAULT_ENUM_CAP) -> EmbedCount:
    """Componentwise sum of count_in_tree over the whole family at size n."""
    if n < 1:
        raise DomainError("host size must be >= 1")
    _check_budget(fam, n, s.size, budget)
    mode = _family_mode(fam)
    total = good = 0
    for t in enumerate_family(fam, n, cap=cap):
        c = count_in_tree(s, t, mode)
        total += c.all
        good += c.good
    return EmbedCount(total, good)


def _forest_plane_key(f: PlaneForest) -> tuple[str, ...]:
    return tuple(sorted(format_tree(c) for c in f.components))


def _forest_nonplane_key(f: PlaneForest) -> tuple[str, ...]:
    return tuple(sorted(format_tree(canonical_nonplane(c)) for c in f.components))


def count_forest_in_tree(f: PlaneForest, t: PlaneTree, mode: str = "plane") -> EmbedCount:
    """Embeddings of a disconnected pattern (>= 2 components) in one host.

    The pattern is a set of components, so the induced components are
    compared as a multiset.  Good embeddings would have to contain the host
    root, which forces a connected induced structure, hence good = 0.
    """
    if f.r < 2:
        raise DomainError("forest patterns need at least 2 components")
    m = f.size
    if mode == "plane":
        target = _forest_plane_key(f)
        host = HostIndex(t)

        def matches(comps):
            return tuple(sorted(map(format_tree, comps))) == target

        total = 0
        for ids in combinations(range(host.n), m):
            comps = host.induced_components(ids)
            if len(comps) == f.r and matches(comps):
                total += 1
        return EmbedCount(total, 0)
    if mode == "nonplane":
        target = _forest_nonplane_key(f)
        host = HostIndex(canonical_nonplane(t))
        orbits = set()
        for ids in combinations(range(host.n), m):
            comps = host.induced_components(ids)
            if len(comps) == f.r:
                key = tuple(sorted(
                    format_tree(canonical_nonplane(c)) for c in comps))
                if key == target:
                    orbits.add(host.colored_key(frozenset(ids)))
        return EmbedCount(len(orbits), 0)
    raise DomainError(f"unknown mode {mode!r}; expected 'plane' or 'nonplane'")


def count_forest_in_family(f: PlaneForest, fam: Family, n: int, *,
                           budget=DEFAULT_SUBSET_BUDGET,
                           cap=DEFAULT_ENUM_CAP) -> EmbedCount:
    """Family aggregate of count_forest_in_tree (binary families only)."""
    if fam is Family.PLANTED_PLANE:
        raise UnsupportedFamilyError(
            "disconnected patterns are not treated for the planted plane family")
    if n < 1:
        raise DomainError("host size must be >= 1")
    _check_budget(fam, n, f.size, budget)
    mode = _family_mode(fam)
    total = 0
    for t in enumerate_family(fam, n, cap=cap):
        total += count_forest_in_tree(f, t, mode).all
    return EmbedCount(total, 0)


def is_subposet(s1: PlaneTree, s2: PlaneTree, mode: str = "plane") -> bool:
    """True iff at least one embedding of s1 into s2 exists (early exit)."""
    m = s1.size
    if mode == "nonplane":
        target = canonical_nonplane(s1)
        host = HostIndex(canonical_nonplane(s2))
        for _, ids in _iter_rooted_subsets(host, m):
            if canonical_nonplane(host.induced_components(ids)[0]) == target:
                return True
        return False
    if mode == "plane":
        host = HostIndex(s2)
        for _, ids in _iter_rooted_subsets(host, m):
            if host.induced_components(ids)[0] == s1:
                return True
        return False
    raise DomainError(f"unknown mode {mode!r}; expected 'plane' or 'nonplane'")
