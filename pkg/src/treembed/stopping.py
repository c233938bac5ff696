"""Best-choice stopping quantities built on embedding counts, plus a
Monte Carlo simulator that validates them empirically.

The selector watches the nodes of an unknown host tree arrive in uniformly
random order.  When the revealed elements induce a copy of a pattern whose
unique maximum is the newest element, the probability that this newest
element is the host root equals good/all for that pattern over the family.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UndefinedProbabilityError
from .families import Family, complete_balanced, enumerate_family
from .genfun import embedding_series
from .oracle import (
    DEFAULT_SUBSET_BUDGET,
    HostIndex,
    count_forest_in_family,
    count_forest_in_tree,
    count_in_family,
    count_in_tree,
)
from .trees import (
    PlaneForest,
    PlaneTree,
    canonical_nonplane,
    count_symmetry_nodes,
    is_motzkin,
)


def _series_supported(s, fam: Family) -> bool:
    if isinstance(s, PlaneForest):
        return fam is Family.PLANE_BINARY or (
            fam is Family.NONPLANE_BINARY
            and is_motzkin(PlaneTree(s.components)))
    if fam is Family.NONPLANE_BINARY:
        return is_motzkin(s)
    return True


def exact_counts(s, fam: Family, n: int, engine: str = "auto", *,
                 budget=DEFAULT_SUBSET_BUDGET):
    """(all, good) counts with engine provenance: 'series' or 'oracle'."""
    if engine not in ("auto", "series", "oracle"):
        raise DomainError(f"unknown engine {engine!r}")
    use_series = engine == "series" or (
        engine == "auto" and _series_supported(s, fam))
    if use_series:
        a = embedding_series(s, fam, n, "all").coeff(n)
        g = embedding_series(s, fam, n, "good").coeff(n)
        return a, g, "series"
    if isinstance(s, PlaneForest):
        c = count_forest_in_family(s, fam, n, budget=budget)
    else:
        c = count_in_family(s, fam, n, budget=budget)
    return c.all, c.good, "oracle"


def best_choice_win_prob(s: PlaneTree, fam: Family, n: int,
                         engine: str = "auto") -> Fraction:
    """Exact probability that stopping now wins: good/all at size n."""
    a, g, _ = exact_counts(s, fam, n, engine)
    if a == 0:
        raise UndefinedProbabilityError(
            f"pattern cannot occur in {fam.value} hosts of size {n}; "
            "the conditional win probability is undefined")
    return Fraction(g, a)


def balanced_identification_prob(s, h: int, *,
                                 budget=DEFAULT_SUBSET_BUDGET) -> Fraction:
    """Probability that the observed structure sits inside the complete
    balanced binary tree of height h, among unordered hosts of that size."""
    if h < 0:
        raise DomainError("height must be >= 0")
    n = 2 ** (h + 1) - 1
    host = complete_balanced(h)
    if isinstance(s, PlaneForest):
        num = count_forest_in_tree(s, host, "nonplane").all
        denom = count_forest_in_family(s, Family.NONPLANE_BINARY, n,
                                       budget=budget).all
    else:
        num = count_in_tree(s, host, "nonplane").all
        denom, _, _ = exact_counts(s, Family.NONPLANE_BINARY, n,
                                   budget=budget)
    if denom == 0:
        raise UndefinedProbabilityError(
            f"pattern cannot occur in any unordered binary host of size {n}")
    return Fraction(num, denom)


@dataclass(frozen=True)
class SimulationResult:
    """Weighted Monte Carlo estimate of the stopping win probability.

    hits counts conditioned trials, successes the root hits among them.
    In the unordered family each conditioned trial carries weight
    1/|orbit| so that the estimate targets the isomorphism-collapsed
    good/all ratio; raw_estimate is the unweighted fraction.  estimate is
    None when no trial satisfied the conditioning event (inconclusive).
    """

    trials: int
    hits: int
    successes: int
    estimate: float | None
    std_error: float | None
    raw_estimate: float | None
    seed: int
    inconclusive: bool


def _trial_rng(seed: int, index: int) -> random.Random:
    # Per-trial generators keep results independent of any execution order.
    return random.Random((seed << 32) + index)


def simulate_best_choice(fam: Family, n: int, s: PlaneTree, trials: int,
                         seed: int) -> SimulationResult:
    """Simulate the arrival process and estimate the win probability.

    Each trial draws a host uniformly from the family at size n and a
    uniform random arrival order; the trial conditions on the first
    size(s) elements inducing the pattern with the newest element as its
    unique maximum, and succeeds when that element is the host root.
    Deterministic for a given seed (per-trial MT19937 streams derived as
    Random((seed << 32) + trial)).
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if n < 1:
        raise DomainError("host size must be >= 1")
    nonplane = fam is Family.NONPLANE_BINARY
    hosts = enumerate_family(fam, n)
    if not hosts:
        raise DomainError(f"{fam.value} has no trees of size {n}")
    t = s.size
    if nonplane:
        target = canonical_nonplane(s)
        hosts = [canonical_nonplane(h) for h in hosts]
    else:
        target = s
    indexed = [HostIndex(h) for h in hosts]
    host_sym = [count_symmetry_nodes(h) for h in hosts] if nonplane else None

    hits = successes = 0
    wsum = 0.0
    wgood = 0.0
    wsq_terms: list[tuple[float, bool]] = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        which = rng.randrange(len(indexed))
        host = indexed[which]
        first = rng.sample(range(n), t)
        newest = first[-1]
        ids = tuple(sorted(first))
        if newest != ids[0]:
            continue  # newest element is not the unique maximum
        comps = host.induced_components(ids)
        if len(comps) != 1:
            continue
        observed = comps[0]
        if nonplane:
            if canonical_nonplane(observed) != target:
                continue
        elif observed != target:
            continue
        hits += 1
        won = newest == 0
        successes += won
        if nonplane:
            colored_sym = _colored_symmetry_count(host, frozenset(ids))
            weight = 2.0 ** (colored_sym - host_sym[which])
        else:
            weight = 1.0
        wsum += weight
        if won:
            wgood += weight
        wsq_terms.append((weight, won))

    if hits == 0:
        return SimulationResult(trials, 0, 0, None, None, None, seed, True)
    estimate = wgood / wsum
    var = sum((w / wsum) ** 2 * ((1.0 if won else 0.0) - estimate) ** 2
              for w, won in wsq_terms)
    return SimulationResult(trials, hits, successes, estimate,
                            math.sqrt(var), successes / hits, seed, False)


def _colored_symmetry_count(host: HostIndex, selected: frozenset[int]) -> int:
    """Binary host nodes whose two child subtrees match as colored trees.

    2**count is the size of the automorphism group of (host, selection);
    dividing by the host's own 2**s(t) gives 1/|orbit of the selection|.
    """

    def key(i: int):
        kids = sorted(key(c) for c in host.children[i])
        return (i in selected, tuple(kids))

    count = 0
    stack = [0]
    while stack:
        i = stack.pop()
        kids = host.children[i]
        if len(kids) == 2 and key(kids[0]) == key(kids[1]):
            count += 1
        stack.extend(kids)
    return count
