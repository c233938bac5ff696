"""Exact generating functions for embedding counts in the three families.

For each family the coefficient of z^n in the "all" series is the number of
embeddings of the pattern summed over every host of size n, and the "good"
series counts the embeddings that contain the host root.  Plane-binary
series come from a closed product over the pattern's degree census; the
unordered-binary series follow a recursion over the pattern (unary-binary
patterns only, exact including all z -> z^2 terms); the plane series with
unrestricted host degrees are built from a splitting decomposition whose
per-degree factors are computed once and multiplied per pattern node.

All coefficients are exact integers; rational intermediates are asserted
away before returning.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, UnsupportedExactError, UnsupportedFamilyError
from .families import Family
from .series import Series
from .trees import (
    DegreeSequence,
    PlaneForest,
    PlaneTree,
    canonical_nonplane,
    catalan,
    clip_forest_nonplane,
    degree_sequence,
    forest_orderings,
    is_motzkin,
)

# ---------------------------------------------------------------------------
# family counting series
# ---------------------------------------------------------------------------


def plane_binary_counts(order: int) -> Series:
    """B(z): [z^(2k+1)] = Catalan(k); satisfies B = z + z B^2."""
    c = [0] * (order + 1)
    for k in range(0, (order - 1) // 2 + 1):
        c[2 * k + 1] = catalan(k)
    return Series(c)


def nonplane_binary_counts(order: int) -> Series:
    """V(z): unique solution of V = z + (z/2)(V^2 + V(z^2)) with V(0)=0.

    Solved order by order; the halving is exact because the coefficients
    count unordered binary trees (Wedderburn-Etherington numbers by size).
    """
    v = [0] * (order + 1)
    if order >= 1:
        v[1] = 1
    for n in range(2, order + 1):
        conv = 0
        for i in range(1, n - 1):
            if v[i]:
                vj = v[n - 1 - i]
                if vj:
                    conv += v[i] * vj
        if (n - 1) % 2 == 0:
            conv += v[(n - 1) // 2]
        if conv % 2 != 0:
            raise DomainError("internal error: odd convolution in V recurrence")
        v[n] = conv // 2
    return Series(v)


def planted_plane_counts(order: int) -> Series:
    """T(z) = (1 - sqrt(1-4z))/2: [z^n] = Catalan(n-1)."""
    c = [0] * (order + 1)
    for n in range(1, order + 1):
        c[n] = catalan(n - 1)
    return Series(c)


def family_series(fam: Family, order: int) -> Series:
    if fam is Family.PLANE_BINARY:
        return plane_binary_counts(order)
    if fam is Family.NONPLANE_BINARY:
        return nonplane_binary_counts(order)
    return planted_plane_counts(order)


def _central_binomials(order: int) -> list[int]:
    out = [1] * (order + 1)
    for n in range(1, order + 1):
        out[n] = out[n - 1] * (4 * n - 2) // n
    return out


# ---------------------------------------------------------------------------
# plane binary hosts: closed product over the degree census
# ---------------------------------------------------------------------------


class _PlaneBinaryCtx:
    """Series shared by all plane-binary queries at one truncation order."""

    def __init__(self, order: int):
        self.order = order
        self.B = plane_binary_counts(order)
        # 1/(1-2zB) = 1/sqrt(1-4z^2) and 1-2zB = sqrt(1-4z^2), directly.
        cb = _central_binomials(order // 2)
        rc = [0] * (order + 1)
        fc = [0] * (order + 1)
        fc[0] = 1
        for k in range(order // 2 + 1):
            rc[2 * k] = cb[k]
        for k in range(0, (order - 2) // 2 + 1):
            fc[2 * k + 2] = -2 * catalan(k)
        self.R = Series(rc)
        self.root_factor = Series(fc)  # 1 - 2zB
        self._R_pows: dict[int, Series] = {0: Series.one(order), 1: self.R}
        self._B_pows: dict[int, Series] = {0: Series.one(order), 1: self.B}
        self._all: dict[tuple[int, ...], Series] = {}
        self._good: dict[tuple[int, ...], Series] = {}

    def _pow(self, cache: dict[int, Series], base: Series, e: int) -> Series:
        if e not in cache:
            top = max(cache)
            cur = cache[top]
            while top < e:
                cur = cur * base
                top += 1
                cache[top] = cur
        return cache[e]

    def _product(self, d: DegreeSequence, drop: int) -> Series:
        """R^(m+l-1-drop) * z^(l+u-1) * B^(l+u) * 2^u * C."""
        from .trees import binary_expansion_constant

        scalar = (2 ** d.u) * binary_expansion_constant(d)
        right = self._pow(self._B_pows, self.B, d.l + d.u).shift(d.l + d.u - 1)
        left = self._pow(self._R_pows, self.R, d.m + d.l - 1 - drop)
        return (left * right) * scalar

    def all_series(self, d: DegreeSequence) -> Series:
        if d.d not in self._all:
            self._all[d.d] = self._product(d, drop=0)
        return self._all[d.d]

    def good_series(self, d: DegreeSequence) -> Series:
        if d.d not in self._good:
            self._good[d.d] = self._product(d, drop=1)
        return self._good[d.d]


# ---------------------------------------------------------------------------
# unordered binary hosts: recursion over Motzkin patterns
# ---------------------------------------------------------------------------


class _NonplaneCtx:
    def __init__(self, order: int):
        self.order = order
        self.V = nonplane_binary_counts(order)
        zV = self.V.shift(1)
        self.one_minus_zV = Series.one(order) - zV
        Q = self.one_minus_zV.reciprocal().to_int_coeffs()
        self.point = (self.V * Q).to_int_coeffs()  # V/(1-zV): marks a node class
        self.unary_factor = (zV * Q).to_int_coeffs()
        self.binary_prefactor = (Q * Q).shift(1).to_int_coeffs()
        self._memo: dict[PlaneTree, Series] = {}

    def all_series(self, s: PlaneTree) -> Series:
        t = canonical_nonplane(s)
        if not is_motzkin(t):
            raise UnsupportedExactError(
                "exact unordered-binary series cover unary-binary patterns only; "
                "use the oracle or the asymptotic estimate for higher degrees")
        return self._rec(t)

    def _rec(self, t: PlaneTree) -> Series:
        got = self._memo.get(t)
        if got is not None:
            return got
        if t.degree == 0:
            res = self.point
        elif t.degree == 1:
            res = self.unary_factor * self._rec(t.children[0])
        else:
            a, b = t.children
            if a == b:
                aa = self._rec(a)
                paired = (aa * aa + aa.compose_z2()) * Fraction(1, 2)
                res = (self.binary_prefactor * paired).to_int_coeffs()
            else:
                res = self.binary_prefactor * self._rec(a) * self._rec(b)
        self._memo[t] = res
        return res

    def good_series(self, s: PlaneTree) -> Series:
        return (self.one_minus_zV * self.all_series(s)).to_int_coeffs()


# ---------------------------------------------------------------------------
# plane hosts with unrestricted degrees: splitting decomposition
# ---------------------------------------------------------------------------


class _PlantedPlaneCtx:
    """Shared series for plane hosts with unrestricted node degrees.

    The per-degree factor f_k is defined by embedding a k-star: the root is
    embedded at some host node and the k subtree embeddings distribute over
    consecutive blocks of that node's descendants.  Writing the block
    decomposition as an interval DP and stripping one factor of each
    subtree's own series gives a factor depending only on k, so a general
    pattern's series is the product of its nodes' factors.
    """

    def __init__(self, order: int):
        self.order = order
        self.T = planted_plane_counts(order)
        self.U = Series(
            [catalan(n) for n in range(order + 1)])  # 1/(1-T): forests
        self.R2 = Series(_central_binomials(order))  # 1/(1-2T) = 1/sqrt(1-4z)
        self.one = Series.one(order)
        self.one_minus_T = self.one - self.T
        self.one_minus_2T = self.one - 2 * self.T
        self.point = self.R2.shift(1)  # zT'(z) = z/(1-2T)
        self.oneT_R2 = (self.one_minus_T * self.R2).to_int_coeffs()  # (1-T)/(1-2T)
        self.good_factor = (self.one_minus_2T * self.U).to_int_coeffs()  # (1-2T)/(1-T)
        # Interval-DP state for blocks of j identical unit components.
        self._ehat: list = [None, self.one]
        self._yhat: list = [None, self.U]
        self._ehatU: list = [None, self.U]
        self._f: dict[int, Series] = {1: (self.T * self.R2).to_int_coeffs()}
        self._f_pows: dict[tuple[int, int], Series] = {}
        self._point_pows: dict[int, Series] = {0: self.one, 1: self.point}
        self._all: dict[tuple[int, ...], Series] = {}
        self._good: dict[tuple[int, ...], Series] = {}

    def _degree_factor(self, k: int) -> Series:
        """f_k with f_1 = T/(1-2T); a k-star's series is f_k * point^k."""
        if k in self._f:
            return self._f[k]
        for j in range(len(self._ehat), k + 1):
            xhat = self._ehatU[1] * self._yhat[j - 1]
            for t in range(2, j):
                xhat = xhat + self._ehatU[t] * self._yhat[j - t]
            ehat = (xhat.shift(1) * self.R2)
            yhat = (xhat * self.oneT_R2)
            self._ehat.append(ehat)
            self._yhat.append(yhat)
            self._ehatU.append(ehat * self.U)
            fj = (self.oneT_R2 * (self.U * yhat).shift(1)).to_int_coeffs()
            self._f[j] = fj
        return self._f[k]

    def _pow_point(self, e: int) -> Series:
        if e not in self._point_pows:
            top = max(self._point_pows)
            cur = self._point_pows[top]
            while top < e:
                cur = cur * self.point
                top += 1
                self._point_pows[top] = cur
        return self._point_pows[e]

    def _pow_f(self, k: int, e: int) -> Series:
        key = (k, e)
        if key not in self._f_pows:
            f = self._degree_factor(k)
            cur = f
            for _ in range(e - 1):
                cur = cur * f
            self._f_pows[key] = cur
        return self._f_pows[key]

    def all_series(self, d: DegreeSequence) -> Series:
        if d.d in self._all:
            return self._all[d.d]
        res = self._pow_point(d.d[0])
        for k in range(1, d.m):
            if d.d[k]:
                res = res * self._pow_f(k, d.d[k])
        res = res.to_int_coeffs()
        self._all[d.d] = res
        return res

    def good_series(self, d: DegreeSequence) -> Series:
        if d.d not in self._good:
            self._good[d.d] = (
                self.good_factor * self.all_series(d)).to_int_coeffs()
        return self._good[d.d]


# ---------------------------------------------------------------------------
# cache and facade
# ---------------------------------------------------------------------------

_CTX_TYPES = {
    Family.PLANE_BINARY: _PlaneBinaryCtx,
    Family.NONPLANE_BINARY: _NonplaneCtx,
    Family.PLANTED_PLANE: _PlantedPlaneCtx,
}
_contexts: dict[tuple[Family, int], object] = {}


def _ctx(fam: Family, order: int):
    key = (fam, order)
    if key not in _contexts:
        _contexts[key] = _CTX_TYPES[fam](order)
    return _contexts[key]


def embedding_series(pattern, fam: Family, order: int, kind: str = "all") -> Series:
    """Exact counting series for the pattern in the family, to z**order.

    `pattern` may be a PlaneTree or a PlaneForest (>= 2 components; "all"
    embeddings of a forest are never good, so its good series is zero).
    """
    if kind not in ("all", "good"):
        raise DomainError(f"kind must be 'all' or 'good', not {kind!r}")
    if order < 0:
        raise DomainError("truncation order must be >= 0")
    if isinstance(pattern, PlaneForest):
        if kind == "good":
            return Series.zero(order)
        return _forest_series(pattern, fam, order)
    ctx = _ctx(fam, order)
    if fam is Family.NONPLANE_BINARY:
        series = ctx.all_series(pattern) if kind == "all" else ctx.good_series(pattern)
        return series.to_int_coeffs()
    d = degree_sequence(pattern)
    series = ctx.all_series(d) if kind == "all" else ctx.good_series(d)
    return series.to_int_coeffs()


def _forest_series(f: PlaneForest, fam: Family, order: int) -> Series:
    if f.r < 2:
        raise DomainError("forest patterns need at least 2 components")
    if fam is Family.PLANE_BINARY:
        orderings = forest_orderings(f)
        rep = embedding_series(orderings[0], fam, order, "good")
        return rep * len(orderings)
    if fam is Family.NONPLANE_BINARY:
        clipped = clip_forest_nonplane(f)
        if not is_motzkin(clipped):
            raise UnsupportedExactError(
                "clipped forest has a node of out-degree >= 3; exact "
                "unordered-binary series cover unary-binary patterns only")
        return embedding_series(clipped, fam, order, "good")
    raise UnsupportedFamilyError(
        "disconnected patterns are not treated for the planted plane family")


def embedding_count_via_series(pattern, fam: Family, n: int, kind: str = "all") -> int:
    """[z^n] of the embedding series (convenience for single coefficients)."""
    return embedding_series(pattern, fam, n, kind).coeff(n)
