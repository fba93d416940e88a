"""Circulant graphs C_n^{1..r}: spectra, max-cut bounds, and XOR sums.

The graph C_n^{1..r} connects i and j whenever their cyclic distance is at
most r; with 2r < n it is 2r-regular with rn edges.  Its adjacency
eigenvalues come straight from the circulant structure:

    lambda_j = D_r(2*pi*j/n) - 1,   j = 0..n-1,

where D_r(theta) = 1 + 2*sum_{k=1..r} cos(k*theta) is the Dirichlet
kernel (closed form sin((r+1/2)*theta)/sin(theta/2) away from multiples
of 2*pi).  Laplacian eigenvalues are 2r - lambda_j, and the classical
spectral bound says maxcut <= n/4 * max_j (2r - lambda_j).

Two cruder but closed-form max-cut bounds are provided alongside: the
additive-constant bound (5r/8 + 76)n, and its refinement that uses the
spectral constant (5r/8 + 0.25)n once r >= 176 (where the Dirichlet
kernel's minimum is known to stay above -0.5r) and the trivial rn
otherwise.  The Dirichlet-kernel minimum estimate behind that refinement,

    min_theta D_r(theta) >= min(-5/12, 1/r + C0 - 8*pi/(2*(r+1))) * r

with C0 = -0.4344, is exposed as ``mercer_min_bound``.

``exact_maxcut`` enumerates all 2^(n-1) side assignments (vertex 0
pinned to side 0) with vectorized popcounts, so it is exact, reasonably
fast up to the hard budget n <= 28, and deterministic: ties resolve to
the lexicographically smallest side vector.

``xor_sum`` is the uncut-pair statistic sum_i sum_{|j| <= r} s_i xor
s_{i+j} over a bit-string; in cyclic mode with 2r < n it equals exactly
twice the cut value of the corresponding side assignment of C_n^{1..r}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError

__all__ = [
    "MAXCUT_N_BUDGET",
    "MERCER_C0",
    "CirculantSpec",
    "Cut",
    "dirichlet_kernel",
    "dirichlet_kernel_closed",
    "adjacency_eigenvalue",
    "adjacency_eigenvalues",
    "laplacian_lambda_max",
    "mohar_bound",
    "mercer_inner",
    "mercer_min_bound",
    "lemma_maxcut_bound",
    "cut_value",
    "exact_maxcut",
    "xor_sum",
]

MAXCUT_N_BUDGET = 28
MERCER_C0 = -0.4344


@dataclass(frozen=True)
class CirculantSpec:
    """Parameters of C_n^{1..r}; requires 1 <= r and 2r < n."""

    n: int
    r: int

    def __post_init__(self):
        n, r = int(self.n), int(self.r)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        if r < 1:
            raise ValueError("r must be at least 1")
        if 2 * r >= n:
            raise ValueError(f"need 2r < n (got n={n}, r={r})")

    @property
    def edge_count(self) -> int:
        return self.r * self.n


def dirichlet_kernel(r: int, theta):
    """D_r(theta) = 1 + 2*sum_{k=1..r} cos(k*theta), by direct summation.

    Accepts a scalar or an ndarray of angles; D_r(0) = 2r + 1 exactly.
    """
    r = int(r)
    if r < 0:
        raise ValueError("r must be non-negative")
    th = np.asarray(theta, dtype=float)
    if r == 0:
        out = np.ones_like(th)
    else:
        ks = np.arange(1, r + 1, dtype=float)
        out = 1.0 + 2.0 * np.cos(np.multiply.outer(th, ks)).sum(axis=-1)
    if np.ndim(theta) == 0:
        return float(out)
    return out


def dirichlet_kernel_closed(r: int, theta):
    """Closed form sin((r+1/2)*theta)/sin(theta/2).

    Undefined at multiples of 2*pi (where the sum form should be used);
    raises there rather than returning inf/nan.
    """
    r = int(r)
    if r < 0:
        raise ValueError("r must be non-negative")
    th = np.asarray(theta, dtype=float)
    denom = np.sin(th / 2.0)
    # sin(th/2) only hits exact 0.0 at th = 0; near other multiples of
    # 2*pi it bottoms out around 1e-16, where the quotient is pure noise
    if np.any(np.abs(denom) < 1e-12):
        raise ValueError("closed form is undefined at multiples of 2*pi")
    out = np.sin((r + 0.5) * th) / denom
    if np.ndim(theta) == 0:
        return float(out)
    return out


def adjacency_eigenvalue(spec: CirculantSpec, j: int) -> float:
    """Eigenvalue lambda_j = D_r(2*pi*j/n) - 1 of the adjacency matrix."""
    j = int(j)
    if not 0 <= j < spec.n:
        raise ValueError(f"j must be in 0..{spec.n - 1}")
    return dirichlet_kernel(spec.r, 2.0 * math.pi * j / spec.n) - 1.0


def adjacency_eigenvalues(spec: CirculantSpec) -> np.ndarray:
    """All n adjacency eigenvalues, indexed by frequency j."""
    thetas = 2.0 * math.pi * np.arange(spec.n) / spec.n
    return dirichlet_kernel(spec.r, thetas) - 1.0


def laplacian_lambda_max(spec: CirculantSpec) -> float:
    """Largest Laplacian eigenvalue max_j (2r - lambda_j); lies in [0, 4r]."""
    return float(np.max(2.0 * spec.r - adjacency_eigenvalues(spec)))


def mohar_bound(spec: CirculantSpec) -> float:
    """Spectral max-cut bound n * lambda_max(L) / 4."""
    return spec.n * laplacian_lambda_max(spec) / 4.0


def mercer_inner(r: int) -> float:
    """The r-dependent branch 1/r + C0 - 8*pi/(2*(r+1)) of the kernel-minimum bound."""
    r = int(r)
    if r < 2:
        raise ValueError("needs r >= 2")
    return 1.0 / r + MERCER_C0 - 8.0 * math.pi / (2.0 * (r + 1.0))


def mercer_min_bound(r: int) -> float:
    """Lower bound min(-5/12, mercer_inner(r)) * r on min_theta D_r(theta).

    For r >= 176 the inner branch exceeds -0.5, so the bound stays above
    -r/2; that is exactly what the refined max-cut bound needs.
    """
    r = int(r)
    if r < 2:
        raise ValueError("needs r >= 2")
    return min(-5.0 / 12.0, mercer_inner(r)) * r


def lemma_maxcut_bound(spec: CirculantSpec, refined: bool = False) -> float:
    """Closed-form max-cut upper bound for C_n^{1..r}.

    Unrefined: (5r/8 + 76) * n.  Refined: min(rn, (5r/8 + 0.25) * n)
    when r >= 176 (the window where the kernel-minimum estimate applies),
    and the trivial rn below that.
    """
    n, r = spec.n, spec.r
    if not refined:
        return (5.0 * r / 8.0 + 76.0) * n
    if r >= 176:
        return min(float(r * n), (5.0 * r / 8.0 + 0.25) * n)
    return float(r * n)


def _check_sides(spec: CirculantSpec, sides) -> tuple[int, ...]:
    sides = tuple(int(s) for s in sides)
    if len(sides) != spec.n:
        raise ValueError("side vector length must equal n")
    if any(s not in (0, 1) for s in sides):
        raise ValueError("sides must be 0 or 1")
    return sides


def cut_value(spec: CirculantSpec, sides) -> int:
    """Edges of C_n^{1..r} whose endpoints get different sides."""
    sides = _check_sides(spec, sides)
    n, r = spec.n, spec.r
    total = 0
    for d in range(1, r + 1):
        total += sum(1 for i in range(n) if sides[i] != sides[(i + d) % n])
    return total


@dataclass(frozen=True)
class Cut:
    """A side assignment and its cut value."""

    sides: tuple[int, ...]
    value: int


def exact_maxcut(spec: CirculantSpec, *, chunk_size: int = 1 << 20) -> Cut:
    """Exact maximum cut of C_n^{1..r} by full enumeration.

    Vertex 0 is pinned to side 0 (the cut is invariant under swapping
    sides), leaving 2^(n-1) assignments.  Assignments are scanned in
    increasing order of the side vector read as a binary number (vertex 0
    most significant), and the incumbent only updates on strict
    improvement, so the returned witness is the lexicographically
    smallest maximizing side vector.  Hard budget: n <= 28.
    """
    n, r = spec.n, spec.r
    if n > MAXCUT_N_BUDGET:
        raise BudgetExceededError(
            f"exact_maxcut enumerates 2^(n-1) assignments; n={n} exceeds the "
            f"budget n <= {MAXCUT_N_BUDGET}"
        )
    total = 1 << (n - 1)
    mask = np.uint64((1 << n) - 1)
    best_val = -1
    best_x = 0
    for start in range(0, total, chunk_size):
        stop = min(start + chunk_size, total)
        xs = np.arange(start, stop, dtype=np.uint64)
        vals = np.zeros(stop - start, dtype=np.int64)
        for d in range(1, r + 1):
            rot = ((xs << np.uint64(d)) | (xs >> np.uint64(n - d))) & mask
            vals += np.bitwise_count(xs ^ rot)
        i = int(np.argmax(vals))
        if int(vals[i]) > best_val:
            best_val = int(vals[i])
            best_x = start + i
    sides = tuple((best_x >> (n - 1 - i)) & 1 for i in range(n))
    return Cut(sides=sides, value=best_val)


def xor_sum(bits, r: int, mode: str = "cyclic") -> int:
    """sum_i sum_{j=-r..r} s_i xor s_{i+j} over a bit-string.

    ``bits`` may be a string like "0101" or any sequence of 0/1.  In
    cyclic mode indices wrap modulo the length; in bounded mode
    out-of-range pairs are simply dropped.  The j = 0 terms are always
    zero.  In cyclic mode with 2r < len(bits) the sum is exactly twice
    the cut value of the corresponding side assignment of C_n^{1..r}.
    """
    if isinstance(bits, str):
        if bits == "" or any(ch not in "01" for ch in bits):
            raise ValueError("bit-string must be non-empty over {0, 1}")
        arr = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
    else:
        arr = np.asarray(list(bits), dtype=np.int64)
        if arr.size == 0 or not np.all((arr == 0) | (arr == 1)):
            raise ValueError("bits must be a non-empty 0/1 sequence")
    r = int(r)
    if r < 1:
        raise ValueError("r must be at least 1")
    n = arr.size
    if mode == "cyclic":
        total = 0
        for d in range(1, r + 1):
            total += int(np.count_nonzero(arr != np.roll(arr, -d)))
        return 2 * total
    if mode == "bounded":
        total = 0
        for d in range(1, min(r, n - 1) + 1):
            total += int(np.count_nonzero(arr[:-d] != arr[d:]))
        return 2 * total
    raise ValueError(f"unknown mode {mode!r}")
