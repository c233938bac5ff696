"""Rooted plane trees and forests: parsing, canonical forms, pattern analysis.

Trees are immutable and compared structurally, so shared subtrees behave as
values.  The text grammar is nested parentheses: a leaf is ``()``, an inner
node wraps the concatenation of its children, e.g. ``(()())`` is the cherry.
Forests are semicolon-separated tree literals, e.g. ``();(()())``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations, product
from typing import Iterator

from .errors import DomainError, TreeParseError


class PlaneTree:
    """Rooted tree with ordered children; equality is structural."""

    __slots__ = ("children", "size", "_hash")

    def __init__(self, children: tuple["PlaneTree", ...] = ()):
        self.children = tuple(children)
        self.size = 1 + sum(c.size for c in self.children)
        self._hash = None

    @property
    def degree(self) -> int:
        return len(self.children)

    def iter_nodes(self) -> Iterator["PlaneTree"]:
        """Pre-order traversal of all subtrees (nodes)."""
        stack = [self]
        while stack:
            t = stack.pop()
            yield t
            stack.extend(reversed(t.children))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return self.size == other.size and self.children == other.children

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("PlaneTree",) + tuple(map(hash, self.children)))
        return self._hash

    def __repr__(self):
        return f"PlaneTree({format_tree(self)!r})"


LEAF = PlaneTree()


def tree(*children: PlaneTree) -> PlaneTree:
    """Convenience constructor: tree(a, b, ...) is a root over the children."""
    return PlaneTree(children)


@dataclass(frozen=True)
class PlaneForest:
    """Ordered sequence of rooted plane trees (r >= 1 components)."""

    components: tuple[PlaneTree, ...]

    def __post_init__(self):
        if len(self.components) < 1:
            raise DomainError("a forest needs at least one component")

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------


def parse_tree(text: str, _base_offset: int = 0) -> PlaneTree:
    """Parse a nested-parentheses tree literal; whitespace is ignored."""
    i, n = 0, len(text)

    def skip_ws(j):
        while j < n and text[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    if i >= n:
        raise TreeParseError("empty input, expected '('", _base_offset + i)
    if text[i] != "(":
        raise TreeParseError(f"unexpected character {text[i]!r}, expected '('",
                             _base_offset + i)
    stack: list[list[PlaneTree]] = [[]]
    i += 1
    while True:
        i = skip_ws(i)
        if i >= n:
            raise TreeParseError("unbalanced parentheses, expected ')'",
                                 _base_offset + i)
        c = text[i]
        if c == "(":
            stack.append([])
            i += 1
        elif c == ")":
            done = PlaneTree(tuple(stack.pop()))
            i += 1
            if not stack:
                i = skip_ws(i)
                if i != n:
                    raise TreeParseError(
                        f"trailing characters {text[i]!r} after tree",
                        _base_offset + i)
                return done
            stack[-1].append(done)
        else:
            raise TreeParseError(f"unexpected character {c!r}", _base_offset + i)


def format_tree(t: PlaneTree) -> str:
    """Canonical text of a tree; inverse of parse_tree."""
    parts: list[str] = []

    def walk(x: PlaneTree):
        parts.append("(")
        for c in x.children:
            walk(c)
        parts.append(")")

    walk(t)
    return "".join(parts)


def parse_forest(text: str) -> PlaneForest:
    """Parse a semicolon-separated list of tree literals."""
    comps = []
    offset = 0
    pieces = text.split(";")
    if not text.strip():
        raise TreeParseError("empty input, expected '('", 0)
    for piece in pieces:
        comps.append(parse_tree(piece, _base_offset=offset))
        offset += len(piece) + 1
    return PlaneForest(tuple(comps))


def format_forest(f: PlaneForest) -> str:
    return ";".join(format_tree(c) for c in f.components)


# ---------------------------------------------------------------------------
# structural analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeSequence:
    """Out-degree census d[i] = number of nodes with i children, plus
    the derived quantities: size m, leaves l, unary nodes u, and the
    half-integer parameter k = (m + l - 2)/2 governing ratio limits."""

    d: tuple[int, ...]
    m: int
    l: int
    u: int
    k_param: Fraction


def degree_sequence(t: PlaneTree) -> DegreeSequence:
    m = t.size
    d = [0] * m
    for node in t.iter_nodes():
        d[node.degree] += 1
    l = d[0]
    u = d[1] if m > 1 else 0
    return DegreeSequence(tuple(d), m, l, u, Fraction(m + l - 2, 2))


def forest_degree_sequence(f: PlaneForest) -> DegreeSequence:
    """Degree census of a forest, indexed 0..size-1 like a tree's."""
    m = f.size
    d = [0] * m
    for comp in f.components:
        for node in comp.iter_nodes():
            d[node.degree] += 1
    l = d[0]
    u = d[1] if m > 1 else 0
    return DegreeSequence(tuple(d), m, l, u, Fraction(m + l - 2, 2))


def _canon_key(t: PlaneTree) -> tuple[int, str]:
    return (t.size, format_tree(t))


@cache
def canonical_nonplane(t: PlaneTree) -> PlaneTree:
    """Canonical plane representative of t's unordered-tree class.

    Children are sorted recursively by (size, text); two trees are
    isomorphic as unordered trees iff their canonical forms are equal.
    """
    kids = sorted((canonical_nonplane(c) for c in t.children), key=_canon_key)
    return PlaneTree(tuple(kids))


def max_degree(t: PlaneTree) -> int:
    return max((n.degree for n in t.iter_nodes()), default=0)


def is_motzkin(t: PlaneTree) -> bool:
    """True iff every node has out-degree at most 2."""
    return max_degree(t) <= 2


def count_symmetry_nodes(t: PlaneTree) -> int:
    """Number of binary nodes whose two subtrees are isomorphic as
    unordered trees.  Defined for unary-binary (Motzkin) trees only."""
    if not is_motzkin(t):
        raise DomainError("symmetry nodes are defined for Motzkin trees only")
    count = 0
    for node in t.iter_nodes():
        if node.degree == 2:
            a, b = node.children
            if canonical_nonplane(a) == canonical_nonplane(b):
                count += 1
    return count


def catalan(k: int) -> int:
    """k-th Catalan number C_k = binom(2k, k)/(k+1)."""
    if k < 0:
        raise DomainError("Catalan numbers need k >= 0")
    return math.comb(2 * k, k) // (k + 1)


def binary_expansion_constant(d: DegreeSequence, family=None) -> int:
    """Product of Catalan(i-1)**d[i] over out-degrees i of the pattern.

    This counts the ways to replace every high-degree node by a binary
    separation tree.  The plane-binary and planted-plane conventions index
    the product from i=3 and i=1 respectively, but Catalan(0)=Catalan(1)=1
    makes the two ranges numerically identical, so one implementation
    serves both; the family argument is accepted for interface parity.
    """
    c = 1
    for i in range(2, d.m):
        if d.d[i]:
            c *= catalan(i - 1) ** d.d[i]
    return c


# ---------------------------------------------------------------------------
# forests as patterns
# ---------------------------------------------------------------------------


def forest_orderings(f: PlaneForest) -> list[PlaneTree]:
    """All distinct trees obtained by putting a new root over the forest's
    components in some order.  There are r!/(k_1! ... k_h!) of them, where
    the k_j are the multiplicities of equal components."""
    if f.r < 2:
        raise DomainError("forest orderings need at least 2 components")
    seen: dict[PlaneTree, None] = {}
    for perm in permutations(f.components):
        clipped = PlaneTree(perm)
        if clipped not in seen:
            seen[clipped] = None
    return list(seen)


def clip_forest_nonplane(f: PlaneForest) -> PlaneTree:
    """Single canonical unordered tree: new root over the components."""
    if f.r < 2:
        raise DomainError("clipping needs at least 2 components")
    return canonical_nonplane(PlaneTree(f.components))


# ---------------------------------------------------------------------------
# expansion of high-degree nodes into binary separation trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MotzkinExpansion:
    """Unary-binary trees obtained by replacing each node of out-degree
    d >= 3 with a binary tree over its d subtrees, with multiplicities,
    and the symmetry-weighted constant sum((1/2)**s(t))."""

    trees: tuple[tuple[PlaneTree, int], ...]
    c_s: Fraction


@cache
def _binary_combinations(leaves: tuple[PlaneTree, ...]) -> tuple[PlaneTree, ...]:
    """Distinct unordered binary trees whose leaf multiset is `leaves`
    (each leaf slot carries the given subtree).  `leaves` must be sorted
    by canonical key so the cache collapses equal multisets."""
    if len(leaves) == 1:
        return (leaves[0],)
    rest = leaves[1:]
    out: dict[PlaneTree, None] = {}
    # First leaf always goes left; iterate subsets of the rest for its side.
    for mask in range(0, 1 << len(rest)):
        left_leaves = (leaves[0],) + tuple(
            rest[i] for i in range(len(rest)) if mask >> i & 1)
        right_leaves = tuple(rest[i] for i in range(len(rest)) if not mask >> i & 1)
        if not right_leaves:
            continue
        left_key = tuple(sorted(left_leaves, key=_canon_key))
        right_key = tuple(sorted(right_leaves, key=_canon_key))
        for a in _binary_combinations(left_key):
            for b in _binary_combinations(right_key):
                node = PlaneTree(tuple(sorted((a, b), key=_canon_key)))
                out[node] = None
    return tuple(out)


def _expand_variants(t: PlaneTree) -> dict[PlaneTree, int]:
    """Unordered unary-binary variants of t with choice multiplicities."""
    child_variants = [_expand_variants(c) for c in t.children]
    out: dict[PlaneTree, int] = {}
    for picks in product(*(cv.items() for cv in child_variants)):
        kids = tuple(p[0] for p in picks)
        mult = math.prod(p[1] for p in picks) if picks else 1
        if len(kids) <= 2:
            v = PlaneTree(tuple(sorted(kids, key=_canon_key)))
            out[v] = out.get(v, 0) + mult
        else:
            key = tuple(sorted(kids, key=_canon_key))
            for gadget in _binary_combinations(key):
                out[gadget] = out.get(gadget, 0) + mult
    return out


def motzkin_expansions(s: PlaneTree) -> MotzkinExpansion:
    """Replace every node of out-degree d >= 3 by each distinct unordered
    binary tree with d leaves carrying the original subtrees.  Returns the
    resulting multiset of unary-binary trees and the symmetry constant
    sum over it of (1/2)**(number of symmetry nodes)."""
    variants = _expand_variants(s)
    c_s = Fraction(0)
    for v, mult in variants.items():
        c_s += Fraction(mult, 2 ** count_symmetry_nodes(v))
    return MotzkinExpansion(tuple(variants.items()), c_s)
