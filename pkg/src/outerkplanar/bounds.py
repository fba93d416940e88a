"""Edge-density bounds for graphs drawn on points in convex position.

Everything here is a closed-form evaluator: upper bounds on the number of
edges an outer k-planar graph on n vertices can have, matching lower
bounds realized by the chain constructions, and the crossing-number lower
bounds the upper bounds rest on.  Each evaluator has an explicit validity
window and raises NotApplicableError outside it rather than returning a
number that nothing proves.

Upper-bound variants (general graphs):

* ``small_k``: the exact small-k table 2n-3, 2.5n-4, 3n-5, 3.25n-6 for
  k = 0..3; k = 4 evaluates to 3.5n-6 but is only conditionally
  established, and the report marks it so.
* ``lazy``: 2.85*sqrt(k)*n for k >= 5, via doubling into a two-page
  multigraph and a multigraph crossing lemma.
* ``common``: sqrt(87723/16000*k)*n for k >= 5, via a crossing lemma
  tuned to convex position.
* ``local``: (2*sqrt(k+1)+2)*n, from the max-min-degree splitting
  argument; valid for every k.
* ``direct``: (sqrt(2)+eps)*sqrt(k)*n + n with eps = epsilon_for(k),
  from a recursive splitting argument that only kicks in for large k;
  guarded by the configurable threshold K_MIN.

Bipartite counterparts use the constants 2.228 (lazy), sqrt(675/128)
(common), 2*sqrt(8/11) (local), and the small-k family
((k+3.5)n - (2k+6))/2 for k <= 4.

The bipartite small-k constant deserves a note: the derivation yields
-(2k+6) while the headline statement says -(2k+5); the enumerated values
1.75n-3 .. 3.75n-7 match -(2k+6), which is therefore the default, with
``strict_statement=True`` reproducing the looser stated constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotApplicableError

__all__ = [
    "DEFAULT_K_MIN",
    "GENERAL_UPPER_VARIANTS",
    "BIPARTITE_UPPER_VARIANTS",
    "CROSSING_LEMMA_FLAVORS",
    "LowerBoundValue",
    "MaxMinDegreeBounds",
    "BoundEntry",
    "BoundReport",
    "general_upper",
    "epsilon_for",
    "general_lower",
    "general_lower_closed_form",
    "crossing_lemma_lower",
    "bipartite_upper",
    "bipartite_lower",
    "maxmindeg_bound",
    "bound_report",
]

SQRT2 = math.sqrt(2.0)

# Largest explicit threshold appearing anywhere in the source results;
# used as the default guard for the "sufficiently large k" statements.
DEFAULT_K_MIN = 176

GENERAL_UPPER_VARIANTS = ("small_k", "lazy", "common", "local", "direct")
BIPARTITE_UPPER_VARIANTS = ("small_k", "lazy", "common", "local")
CROSSING_LEMMA_FLAVORS = (
    "outer",
    "outer_bipartite",
    "multigraph_m2",
    "multigraph_m2_bipartite",
)

# slope, offset per k: bound is slope*n - offset.
_SMALL_K_TABLE = {0: (2.0, 3.0), 1: (2.5, 4.0), 2: (3.0, 5.0), 3: (3.25, 6.0)}
_SMALL_K_CONDITIONAL = (3.5, 6.0)  # k = 4, conditional


def _check_nk(n: int, k: int) -> tuple[int, int]:
    n, k = int(n), int(k)
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0:
        raise ValueError("k must be non-negative")
    return n, k


def epsilon_for(k) -> float:
    """Smallest eps making the direct-variant bound (sqrt(2)+eps)*sqrt(k)*n + n work.

    The recursion behind the direct variant needs
    (sqrt(2)*k - 2*sqrt(k)) * eps > (5*sqrt(2)/2)*sqrt(k) - 1,
    whose infimum this returns.  The denominator is positive only for
    k > 2.  Decreases monotonically and tends to 0 like 2.5/sqrt(k).
    """
    k = float(k)
    if k <= 2:
        raise NotApplicableError("epsilon_for requires k > 2")
    num = (5.0 * SQRT2 / 2.0) * math.sqrt(k) - 1.0
    den = SQRT2 * k - 2.0 * math.sqrt(k)
    return num / den


def general_upper(n: int, k: int, variant: str = "common", *, k_min: int = DEFAULT_K_MIN) -> float:
    """Upper bound on edges of an outer k-planar graph on n vertices.

    Raises NotApplicableError when the variant's validity window excludes
    k.  Note that ``small_k`` at k = 4 returns 3.5n - 6, which is only
    conditionally established; consumers that need unconditional bounds
    should treat k = 4 as out of window (bound_report flags it).
    """
    n, k = _check_nk(n, k)
    if variant == "small_k":
        if n < 3:
            # at n = 2 the affine forms dip below the single realizable
            # edge, so they are not upper bounds there
            raise NotApplicableError(f"small_k assumes n >= 3 (got n={n})")
        if k in _SMALL_K_TABLE:
            slope, offset = _SMALL_K_TABLE[k]
        elif k == 4:
            slope, offset = _SMALL_K_CONDITIONAL
        else:
            raise NotApplicableError(f"small_k covers k <= 4 only (got k={k})")
        return slope * n - offset
    if variant == "lazy":
        if k < 5:
            raise NotApplicableError(f"lazy requires k >= 5 (got k={k})")
        return 2.85 * math.sqrt(k) * n
    if variant == "common":
        if k < 5:
            raise NotApplicableError(f"common requires k >= 5 (got k={k})")
        return math.sqrt(87723.0 / 16000.0 * k) * n
    if variant == "local":
        return (2.0 * math.sqrt(k + 1.0) + 2.0) * n
    if variant == "direct":
        if k < max(3, k_min):
            raise NotApplicableError(
                f"direct requires k >= {max(3, k_min)} (got k={k})"
            )
        return (SQRT2 + epsilon_for(k)) * math.sqrt(k) * n + n
    raise ValueError(f"unknown variant {variant!r}")


@dataclass(frozen=True)
class LowerBoundValue:
    """A constructive (or asymptotic) lower bound.

    ``exact`` is True when the value is the exact edge count of a
    construction matching the queried (n, k); when the query had to be
    rounded down to admissible parameters, n_used/k_used record what was
    actually built and exact is False.  kind "asymptotic" marks a
    leading-term estimate that is not a proven finite-n bound.
    """

    value: int
    n_used: int
    k_used: int
    exact: bool
    kind: str


def general_lower(n: int, k: int) -> LowerBoundValue:
    """Edges of the densest complete-block chain fitting inside (n, k).

    Admissible parameters have k = ((x-2)/2)^2 for even x (k a perfect
    square) and (n-2) divisible by x-2.  Inadmissible queries fall back
    to the largest admissible k' <= k and n' <= n and are flagged
    inexact.  The count is blocks*C(x,2) - (blocks-1).
    """
    n, k = _check_nk(n, k)
    if k < 1:
        raise NotApplicableError("general_lower requires k >= 1")
    s = math.isqrt(k)
    while s >= 1 and n < 2 * s + 2:
        s -= 1
    if s < 1:
        raise NotApplicableError(
            f"n={n} is too small for even a single block at any k' <= {k}"
        )
    x = 2 * s + 2
    blocks = (n - 2) // (x - 2)
    n_used = blocks * (x - 2) + 2
    k_used = s * s
    value = blocks * (x * (x - 1) // 2) - (blocks - 1)
    return LowerBoundValue(
        value=value,
        n_used=n_used,
        k_used=k_used,
        exact=(n_used == n and k_used == k),
        kind="chain",
    )


def general_lower_closed_form(n: int, k: int) -> float:
    """Simplified closed form n*sqrt(k) + 3n - 2*sqrt(k) of the chain count.

    Kept for reference only: the simplification is inconsistent with the
    exact block count (already at k=1 it disagrees with the table value),
    so nothing in this package treats it as a valid bound.
    """
    n, k = _check_nk(n, k)
    return n * math.sqrt(k) + 3.0 * n - 2.0 * math.sqrt(k)


def crossing_lemma_lower(n: int, m: int, flavor: str = "outer") -> float:
    """Lower bound on crossings of a (multi)graph drawn on n convex points.

    Flavors and validity windows:

    * ``outer``: 8000/87723 * m^3/n^2 for m >= 171n/40.
    * ``outer_bipartite``: 64/675 * m^3/n^2 for m >= 3.75n.
    * ``multigraph_m2``: m^3/(27.48 * 2n^2) for m > 6.77n, for
      multiplicity-two multigraphs.
    * ``multigraph_m2_bipartite``: 1024/16875 * m^3/(2n^2), same window
      as multigraph_m2 (no sharper threshold is established).
    """
    n = int(n)
    m = int(m)
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if flavor == "outer":
        if m < 171.0 * n / 40.0:
            raise NotApplicableError(
                f"outer flavor requires m >= 171n/40 = {171.0 * n / 40.0:g}"
            )
        return 8000.0 / 87723.0 * m**3 / n**2
    if flavor == "outer_bipartite":
        if m < 3.75 * n:
            raise NotApplicableError(
                f"outer_bipartite flavor requires m >= 3.75n = {3.75 * n:g}"
            )
        return 64.0 / 675.0 * m**3 / n**2
    if flavor == "multigraph_m2":
        if m <= 6.77 * n:
            raise NotApplicableError(
                f"multigraph_m2 flavor requires m > 6.77n = {6.77 * n:g}"
            )
        return m**3 / (27.48 * 2.0 * n**2)
    if flavor == "multigraph_m2_bipartite":
        if m <= 6.77 * n:
            raise NotApplicableError(
                f"multigraph_m2_bipartite flavor requires m > 6.77n = {6.77 * n:g}"
            )
        return 1024.0 / 16875.0 * m**3 / (2.0 * n**2)
    raise ValueError(f"unknown flavor {flavor!r}")


def bipartite_upper(
    n: int,
    k: int,
    variant: str = "common",
    *,
    strict_statement: bool = False,
    k_min: int = DEFAULT_K_MIN,
) -> float:
    """Upper bound on edges of a bipartite outer k-planar graph.

    ``strict_statement`` only affects ``small_k``: it switches the
    additive constant from the derived -(2k+6) to the stated -(2k+5).
    """
    n, k = _check_nk(n, k)
    if variant == "small_k":
        if n < 3:
            raise NotApplicableError(f"small_k assumes n >= 3 (got n={n})")
        if k > 4:
            raise NotApplicableError(f"small_k covers k <= 4 only (got k={k})")
        offset = (2 * k + 5) if strict_statement else (2 * k + 6)
        return ((k + 3.5) * n - offset) / 2.0
    if variant == "lazy":
        if k < 5:
            raise NotApplicableError(f"lazy requires k >= 5 (got k={k})")
        return 2.228 * math.sqrt(k) * n
    if variant == "common":
        if k < 5:
            raise NotApplicableError(f"common requires k >= 5 (got k={k})")
        return math.sqrt(675.0 / 128.0 * k) * n
    if variant == "local":
        if k < k_min:
            raise NotApplicableError(f"local requires k >= {k_min} (got k={k})")
        return 2.0 * math.sqrt(8.0 / 11.0) * math.sqrt(k) * n
    raise ValueError(f"unknown variant {variant!r}")


def bipartite_lower(n: int, k: int, setting: str = "alternating") -> LowerBoundValue:
    """Constructive lower bounds for bipartite outer k-planar graphs.

    * ``alternating``: exact count l*x^2 - (l-1) of the alternating
      K_{x,x} chain, admissible when x = sqrt(2k)+1 is an integer and
      (n-2) is divisible by 2x-2; inadmissible queries raise.
    * ``consecutive``: the leading term floor(sqrt(k/2))*n of the
      two-layer construction, flagged asymptotic-only (the true count
      subtracts a lower-order correction).
    """
    n, k = _check_nk(n, k)
    if setting == "alternating":
        s = math.isqrt(2 * k)
        if s * s != 2 * k or s < 1:
            raise NotApplicableError(
                f"alternating setting needs sqrt(2k) integral (got k={k})"
            )
        x = s + 1
        span = 2 * x - 2
        if (n - 2) % span != 0 or n < 2 * x:
            raise NotApplicableError(
                f"alternating setting needs n = l*{span}+2 with l >= 1 (got n={n})"
            )
        blocks = (n - 2) // span
        return LowerBoundValue(
            value=blocks * x * x - (blocks - 1),
            n_used=n,
            k_used=k,
            exact=True,
            kind="alternating-chain",
        )
    if setting == "consecutive":
        return LowerBoundValue(
            value=math.isqrt(k // 2) * n,
            n_used=n,
            k_used=k,
            exact=False,
            kind="asymptotic",
        )
    raise ValueError(f"unknown setting {setting!r}")


class MaxMinDegreeBounds(NamedTuple):
    """Upper bounds on the minimum degree over all induced subgraphs.

    ``bipartite`` is only established for sufficiently large k (see
    DEFAULT_K_MIN); callers needing a guard should apply it themselves.
    """

    general: float
    bipartite: float


def maxmindeg_bound(k: int) -> MaxMinDegreeBounds:
    """Degree bounds 2*sqrt(k+1)+2 (general) and 2*sqrt(8/11*k)+2 (bipartite)."""
    k = int(k)
    if k < 0:
        raise ValueError("k must be non-negative")
    return MaxMinDegreeBounds(
        general=2.0 * math.sqrt(k + 1.0) + 2.0,
        bipartite=2.0 * math.sqrt(8.0 / 11.0) * math.sqrt(k) + 2.0,
    )


# ---------------------------------------------------------------------------
# Collected reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    """One bound evaluation.

    ``valid`` is "yes", "no", "conditional" (value shown but resting on a
    conditional result), or "reference" (value shown for comparison only,
    excluded from any consistency claims).  Entries with valid "no" carry
    value None.
    """

    name: str
    kind: str  # "upper" or "lower"
    value: float | None
    valid: str
    valid_when: str
    source: str


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    family: str  # "general" or "bipartite"
    entries: tuple[BoundEntry, ...]


def _try(fn, *args, **kw):
    try:
        return fn(*args, **kw), "yes"
    except NotApplicableError:
        return None, "no"


def bound_report(n: int, k: int, *, bipartite: bool = False, k_min: int = DEFAULT_K_MIN) -> BoundReport:
    """Evaluate every bound of one family at (n, k) with validity flags."""
    n, k = _check_nk(n, k)
    entries: list[BoundEntry] = []
    if not bipartite:
        if n < 3 or k > 4:
            sk_val, sk_flag = None, "no"
        elif k <= 3:
            sk_val, sk_flag = general_upper(n, k, "small_k"), "yes"
        else:
            sk_val, sk_flag = general_upper(n, k, "small_k"), "conditional"
        entries.append(BoundEntry(
            "small_k", "upper", sk_val, sk_flag,
            "n >= 3 and k <= 3 (k = 4 conditional)", "small-k table"))
        for name, window, source in (
            ("lazy", "k >= 5", "two-page doubling + multigraph crossing lemma"),
            ("common", "k >= 5", "convex-position crossing lemma"),
            ("local", "k >= 0", "max-min-degree splitting"),
            ("direct", f"k >= {max(3, k_min)}", "recursive splitting"),
        ):
            val, flag = _try(general_upper, n, k, name, k_min=k_min)
            entries.append(BoundEntry(name, "upper", val, flag, window, source))
        low, low_flag = _try(general_lower, n, k)
        entries.append(BoundEntry(
            "chain", "lower",
            None if low is None else float(low.value), low_flag,
            "k >= 1, n >= 4 (rounded down to admissible parameters)",
            "complete-block chain"))
        entries.append(BoundEntry(
            "chain_closed_form", "lower",
            general_lower_closed_form(n, k), "reference",
            "reference only: simplified closed form, inconsistent with the exact count",
            "complete-block chain"))
    else:
        if n >= 3 and k <= 4:
            sk_val, sk_flag = bipartite_upper(n, k, "small_k"), "yes"
        else:
            sk_val, sk_flag = None, "no"
        entries.append(BoundEntry(
            "small_k", "upper", sk_val, sk_flag,
            "n >= 3 and k <= 4", "small-k charging argument"))
        for name, window, source in (
            ("lazy", "k >= 5", "two-page doubling + bipartite multigraph crossing lemma"),
            ("common", "k >= 5", "bipartite convex-position crossing lemma"),
            ("local", f"k >= {k_min}", "bipartite max-min-degree splitting"),
        ):
            val, flag = _try(bipartite_upper, n, k, name, k_min=k_min)
            entries.append(BoundEntry(name, "upper", val, flag, window, source))
        low, low_flag = _try(bipartite_lower, n, k, "alternating")
        entries.append(BoundEntry(
            "alternating", "lower",
            None if low is None else float(low.value), low_flag,
            "sqrt(2k) integral and n = l*(2*sqrt(2k))+2",
            "alternating complete-bipartite chain"))
        cons = bipartite_lower(n, k, "consecutive")
        entries.append(BoundEntry(
            "consecutive", "lower", float(cons.value), "reference",
            "asymptotic leading term only (finite-n count is smaller)",
            "two-layer blowup"))
    return BoundReport(n=n, k=k, family="bipartite" if bipartite else "general",
                       entries=tuple(entries))
