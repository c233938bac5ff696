"""Singularity constants, leading-order growth estimates, and ratio limits.

Counting sequences in all three families grow like K * beta**n * n**alpha
for pattern-dependent constants; the good/all ratio decays like a constant
over sqrt(n), and that constant is monotone under pattern inclusion.  The
unordered-binary family needs two numerically solved constants (the
singularity rho and the amplitude b); everything else is in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import DomainError, NumericError
from .families import Family
from .genfun import nonplane_binary_counts
from .oracle import is_subposet
from .trees import (
    PlaneForest,
    PlaneTree,
    binary_expansion_constant,
    clip_forest_nonplane,
    degree_sequence,
    forest_degree_sequence,
    forest_orderings,
    motzkin_expansions,
)

_ODD_ONLY = "odd_only"
_ALL_N = "all_n"


@dataclass(frozen=True)
class AsymEstimate:
    """Leading-order model K * beta**n * n**alpha (zero off-parity)."""

    K: float
    beta: float
    alpha: float
    parity: str

    def admits(self, n: int) -> bool:
        return self.parity == _ALL_N or n % 2 == 1

    def log_evaluate(self, n: int) -> float:
        """Natural log of the estimate; -inf where parity forces zero."""
        if n < 1:
            raise DomainError("n must be >= 1")
        if not self.admits(n):
            return -math.inf
        return math.log(self.K) + n * math.log(self.beta) + self.alpha * math.log(n)

    def evaluate(self, n: int) -> float:
        if n < 1:
            raise DomainError("n must be >= 1")
        if not self.admits(n):
            return 0.0
        try:
            return self.K * self.beta**n * n**self.alpha
        except OverflowError:
            return math.inf


@dataclass(frozen=True)
class NonplaneConstants:
    """Solved singular data of V: radius rho, amplitude b, and the same in
    the internal-node normalization (sigma = rho**2, a = b/sqrt(2 sigma))."""

    rho: float
    b: float
    sigma: float
    a_const: float
    residual_f: float
    residual_fv: float
    digits: dict


_V_SERIES_ORDER = 640
_constants_cache: dict[int, NonplaneConstants] = {}


def solve_nonplane_constants(precision: int = 15) -> NonplaneConstants:
    """Solve {F = 0, dF/dV = 0} for F(z,V) = z + (z/2)(V^2 + W(z)) - V,
    where W(z) = V(z^2) is evaluated from a high-order truncated series
    (analytic at the root since rho**2 < rho).  dF/dV = 0 reduces to
    zV = 1, leaving one scalar equation solved by Newton iteration; the
    amplitude is b = sqrt(2 F_z / F_VV) at the critical point.
    """
    if not 1 <= precision <= 30:
        raise DomainError("precision must be between 1 and 30 digits")
    if precision in _constants_cache:
        return _constants_cache[precision]

    v = nonplane_binary_counts(_V_SERIES_ORDER).coeffs
    with localcontext() as ctx:
        ctx.prec = precision + 15
        half = Decimal(1) / 2

        def w_and_deriv(z: Decimal):
            # W(z) = sum v_k z^(2k), W'(z) = sum 2k v_k z^(2k-1)
            z2 = z * z
            p = z2
            w = Decimal(0)
            wp = Decimal(0)
            for k in range(1, _V_SERIES_ORDER + 1):
                if v[k]:
                    vk = Decimal(v[k])
                    w += vk * p
                    wp += 2 * k * vk * p / z
                p *= z2
            return w, wp

        z = Decimal("0.63")
        converged = False
        phi = phip = None
        for _ in range(80):
            w, wp = w_and_deriv(z)
            phi = z - 1 / (2 * z) + z * w * half
            phip = 1 + 1 / (2 * z * z) + w * half + z * wp * half
            step = phi / phip
            z -= step
            if abs(step) < Decimal(10) ** (-(precision + 8)):
                converged = True
                break
        if not converged:
            raise NumericError("Newton iteration for rho did not converge",
                               residuals={"phi": float(phi)})

        rho = z
        v_at = 1 / rho
        w, wp = w_and_deriv(rho)
        sigma = rho * rho
        f_residual = rho + rho * half * (v_at * v_at + w) - v_at
        fv_residual = rho * v_at - 1
        # Partial of F at fixed V; W(z) = V(z^2) contributes its own slope.
        f_z = 1 + half * (v_at * v_at + w) + rho * wp * half
        f_vv = rho
        b = (2 * rho * f_z / f_vv).sqrt()
        a_const = b / (2 * sigma).sqrt()

        quant = Decimal(10) ** (-(precision - 1))
        digits = {
            "rho": str(rho.quantize(quant)),
            "b": str(b.quantize(quant)),
            "sigma": str(sigma.quantize(quant)),
            "a": str(a_const.quantize(quant)),
        }
        result = NonplaneConstants(
            rho=float(rho), b=float(b), sigma=float(sigma), a_const=float(a_const),
            residual_f=abs(float(f_residual)), residual_fv=abs(float(fv_residual)),
            digits=digits)
    _constants_cache[precision] = result
    return result


# ---------------------------------------------------------------------------
# leading-order counts
# ---------------------------------------------------------------------------


def _gamma(x) -> float:
    return math.gamma(float(x))


def _tree_estimate(s: PlaneTree, fam: Family, kind: str) -> AsymEstimate:
    d = degree_sequence(s)
    return _estimate_from_degrees(d, fam, kind,
                                  cs=lambda: motzkin_expansions(s).c_s)


def _estimate_from_degrees(d, fam: Family, kind: str, cs=None) -> AsymEstimate:
    m, l = d.m, d.l
    ml = m + l
    if fam is Family.PLANE_BINARY:
        c = binary_expansion_constant(d)
        if kind == "all":
            k_const = c * 2.0 ** ((5 - m - 3 * l) / 2) / _gamma(Fraction(ml - 1, 2))
            return AsymEstimate(k_const, 2.0, (ml - 3) / 2, _ODD_ONLY)
        if ml == 2:
            return AsymEstimate(math.sqrt(2) / math.sqrt(math.pi), 2.0, -1.5, _ODD_ONLY)
        k_const = c * 2.0 ** ((6 - m - 3 * l) / 2) / _gamma(Fraction(ml - 2, 2))
        return AsymEstimate(k_const, 2.0, (ml - 4) / 2, _ODD_ONLY)
    if fam is Family.NONPLANE_BINARY:
        consts = solve_nonplane_constants()
        rho, b = consts.rho, consts.b
        c_s = float(cs())
        if kind == "all":
            k_const = 2 * c_s * b ** (1 - ml) * rho ** (-ml) / _gamma(Fraction(ml - 1, 2))
            return AsymEstimate(k_const, 1 / rho, (ml - 3) / 2, _ODD_ONLY)
        if ml == 2:
            return AsymEstimate(b / math.sqrt(math.pi), 1 / rho, -1.5, _ODD_ONLY)
        k_const = 2 * c_s * b ** (2 - ml) * rho ** (1 - ml) / _gamma(Fraction(ml - 2, 2))
        return AsymEstimate(k_const, 1 / rho, (ml - 4) / 2, _ODD_ONLY)
    if fam is Family.PLANTED_PLANE:
        c = binary_expansion_constant(d)
        if kind == "all":
            k_const = c * 0.5**ml / _gamma(Fraction(ml - 1, 2))
            return AsymEstimate(k_const, 4.0, (ml - 3) / 2, _ALL_N)
        if ml == 2:
            return AsymEstimate(1 / (4 * math.sqrt(math.pi)), 4.0, -1.5, _ALL_N)
        k_const = 2 * c * 0.5**ml / _gamma(Fraction(ml - 2, 2))
        return AsymEstimate(k_const, 4.0, (ml - 4) / 2, _ALL_N)
    raise DomainError(f"unknown family {fam!r}")


def asymptotic_estimate(pattern, fam: Family, kind: str = "all") -> AsymEstimate:
    """Leading-order estimate of the embedding count sequence.

    Forest patterns admit only kind="all" in the binary families: the count
    equals (number of distinct orderings) times the good estimate of one
    clipped ordering in the plane case, and the good estimate of the
    canonical clipped tree in the unordered case.
    """
    if kind not in ("all", "good"):
        raise DomainError(f"kind must be 'all' or 'good', not {kind!r}")
    if isinstance(pattern, PlaneForest):
        if kind != "all":
            raise DomainError("forest embeddings are never good; only "
                              "kind='all' is defined for forests")
        if fam is Family.PLANE_BINARY:
            orderings = forest_orderings(pattern)
            base = _tree_estimate(orderings[0], fam, "good")
            return AsymEstimate(base.K * len(orderings), base.beta,
                                base.alpha, base.parity)
        if fam is Family.NONPLANE_BINARY:
            return _tree_estimate(clip_forest_nonplane(pattern), fam, "good")
        raise DomainError(
            "disconnected patterns are not treated for the planted plane family")
    return _tree_estimate(pattern, fam, kind)


# ---------------------------------------------------------------------------
# ratio limits and monotonicity
# ---------------------------------------------------------------------------


def ratio_limit(s: PlaneTree, fam: Family) -> float:
    """Limit of sqrt(n) * good/all for the pattern in the family.

    Raises DomainError for the single-node pattern, whose ratio decays
    like 1/n instead of 1/sqrt(n).
    """
    d = degree_sequence(s)
    k = d.k_param
    if k == 0:
        raise DomainError(
            "single-node pattern: the good/all ratio is exactly 1/n, "
            "so the sqrt(n)-normalized limit degenerates (flagged 1/n case)")
    gamma_ratio = _gamma(k + Fraction(1, 2)) / _gamma(k)
    if fam is Family.PLANE_BINARY:
        return gamma_ratio * math.sqrt(2)
    if fam is Family.NONPLANE_BINARY:
        consts = solve_nonplane_constants()
        return gamma_ratio * consts.b * consts.rho
    if fam is Family.PLANTED_PLANE:
        return 2 * gamma_ratio
    raise DomainError(f"unknown family {fam!r}")


def gautschi_inequality_holds(x: float, s: float, tol: float = 1e-10) -> bool:
    """Check x**(1-s) < Gamma(x+1)/Gamma(x+s) < (x+1)**(1-s) numerically."""
    if x <= 0:
        raise DomainError("x must be positive")
    if not 0 < s < 1:
        raise DomainError("s must lie strictly between 0 and 1")
    ratio = math.gamma(x + 1) / math.gamma(x + s)
    return x ** (1 - s) < ratio + tol and ratio < (x + 1) ** (1 - s) + tol


@dataclass(frozen=True)
class ComparisonVerdict:
    comparable: bool
    k1: Fraction
    k2: Fraction
    limit1: float
    limit2: float
    ordered: bool | None


def compare_patterns(s1: PlaneTree, s2: PlaneTree, fam: Family) -> ComparisonVerdict:
    """Ratio-limit comparison of two patterns with s1 embeddable in s2.

    When s1 is a subposet of s2 the limits must be ordered (`ordered` is the
    observed check); if no embedding exists the verdict is incomparable.
    The degenerate single-node case enters as limit 0 (its ratio decays
    like 1/n, below any positive constant/sqrt(n) regime).
    """
    mode = "nonplane" if fam is Family.NONPLANE_BINARY else "plane"
    k1 = degree_sequence(s1).k_param
    k2 = degree_sequence(s2).k_param
    limit1 = 0.0 if k1 == 0 else ratio_limit(s1, fam)
    limit2 = 0.0 if k2 == 0 else ratio_limit(s2, fam)
    if not is_subposet(s1, s2, mode):
        return ComparisonVerdict(False, k1, k2, limit1, limit2, None)
    return ComparisonVerdict(True, k1, k2, limit1, limit2,
                             limit1 <= limit2 + 1e-12)
