"""Host-tree families: exhaustive enumeration, cardinalities, special hosts.

Three families are supported: plane binary trees (every node has 0 or 2
ordered children; odd sizes only), their unordered counterparts (counted by
the Wedderburn-Etherington numbers; enumerated as canonical representatives),
and rooted plane trees with unrestricted degrees (Catalan-counted).
"""

from __future__ import annotations

import enum
from functools import cache

from .errors import BudgetError, DomainError
from .trees import LEAF, PlaneTree, _canon_key, catalan

DEFAULT_ENUM_CAP = 10**6


class Family(enum.Enum):
    PLANE_BINARY = "plane-binary"
    NONPLANE_BINARY = "nonplane-binary"
    PLANTED_PLANE = "planted-plane"

    @classmethod
    def from_string(cls, text: str) -> "Family":
        norm = text.strip().lower().replace("_", "-")
        for fam in cls:
            if fam.value == norm:
                return fam
        raise DomainError(f"unknown family {text!r}; expected one of "
                          + ", ".join(f.value for f in cls))


@cache
def wedderburn_etherington(j: int) -> int:
    """Number of unordered binary trees with j leaves (OEIS A001190)."""
    if j < 1:
        raise DomainError("leaf count must be >= 1")
    if j == 1:
        return 1
    total = 0
    if j % 2 == 0:
        half = wedderburn_etherington(j // 2)
        total += half * (half + 1) // 2
        pairs = range(1, j // 2)
    else:
        pairs = range(1, (j + 1) // 2)
    for i in pairs:
        total += wedderburn_etherington(i) * wedderburn_etherington(j - i)
    return total


def family_size(fam: Family, n: int) -> int:
    """Exact number of trees of the family with n nodes."""
    if n < 1:
        raise DomainError("tree size must be >= 1")
    if fam is Family.PLANE_BINARY:
        return catalan((n - 1) // 2) if n % 2 == 1 else 0
    if fam is Family.NONPLANE_BINARY:
        return wedderburn_etherington((n + 1) // 2) if n % 2 == 1 else 0
    if fam is Family.PLANTED_PLANE:
        return catalan(n - 1)
    raise DomainError(f"unknown family {fam!r}")


@cache
def _plane_binary(n: int) -> tuple[PlaneTree, ...]:
    if n == 1:
        return (LEAF,)
    if n % 2 == 0:
        return ()
    out = []
    for i in range(1, n - 1, 2):
        for left in _plane_binary(i):
            for right in _plane_binary(n - 1 - i):
                out.append(PlaneTree((left, right)))
    return tuple(out)


@cache
def _nonplane_binary(n: int) -> tuple[PlaneTree, ...]:
    if n == 1:
        return (LEAF,)
    if n % 2 == 0:
        return ()
    out = []
    for i in range(1, (n - 1) // 2 + 1, 2):
        j = n - 1 - i
        left_reps = _nonplane_binary(i)
        if i < j:
            for a in left_reps:
                for b in _nonplane_binary(j):
                    out.append(PlaneTree(tuple(sorted((a, b), key=_canon_key))))
        else:
            for x in range(len(left_reps)):
                for y in range(x, len(left_reps)):
                    pair = sorted((left_reps[x], left_reps[y]), key=_canon_key)
                    out.append(PlaneTree(tuple(pair)))
    return tuple(out)


@cache
def _plane_forests(total: int) -> tuple[tuple[PlaneTree, ...], ...]:
    """Ordered forests of plane trees with the given total size."""
    if total == 0:
        return ((),)
    out = []
    for s in range(1, total + 1):
        for first in _planted_plane(s):
            for rest in _plane_forests(total - s):
                out.append((first,) + rest)
    return tuple(out)


@cache
def _planted_plane(n: int) -> tuple[PlaneTree, ...]:
    if n == 1:
        return (LEAF,)
    return tuple(PlaneTree(kids) for kids in _plane_forests(n - 1))


def enumerate_family(fam: Family, n: int, cap: int = DEFAULT_ENUM_CAP) -> list[PlaneTree]:
    """All trees of the family with n nodes, each exactly once, in a
    deterministic order (recursive, smaller first components first).
    Refuses to build more than `cap` trees."""
    size = family_size(fam, n)
    if cap is not None and size > cap:
        raise BudgetError(
            f"{fam.value} at n={n} has {size} trees, above the cap {cap}; "
            "raise the cap to force enumeration")
    if fam is Family.PLANE_BINARY:
        return list(_plane_binary(n))
    if fam is Family.NONPLANE_BINARY:
        return list(_nonplane_binary(n))
    return list(_planted_plane(n))


def complete_balanced(h: int) -> PlaneTree:
    """Complete balanced binary tree of height h (size 2**(h+1) - 1)."""
    if h < 0:
        raise DomainError("height must be >= 0")
    return _complete_balanced(h)


@cache
def _complete_balanced(h: int) -> PlaneTree:
    if h == 0:
        return LEAF
    sub = _complete_balanced(h - 1)
    return PlaneTree((sub, sub))
