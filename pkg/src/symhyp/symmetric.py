"""Complete symmetric polynomials h = sum_e a_e h_e(x_1..x_k) and their zero counts.

h_e is never expanded into monomials.  Values come from the recurrence
h_e(x_1..x_j) = h_e(x_1..x_{j-1}) + x_j h_{e-1}(x_1..x_j), which costs
O(k e) field operations and evaluates every h_0..h_m in one pass.

Point counts use the S_k symmetry of h: N_q is a weighted sum over the
C(q+k-1, k) multisets of F_q, N* is k! times the number of vanishing
k-subsets.  The naive tuple loops are kept as independent oracles.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .gf import GF
from .poly import UniPoly, degree, fold_exponent

NAIVE_BUDGET = 10**7
_CHUNK_CELLS = 1 << 22


class BudgetError(RuntimeError):
    """An enumeration would exceed its configured budget."""


# --- evaluation ----------------------------------------------------------------

def h_values(F: GF, xs: Sequence[int], top: int) -> list[int]:
    """[h_0(xs), ..., h_top(xs)] via the one-variable-at-a-time recurrence."""
    h = [1] + [0] * top
    for x in xs:
        for e in range(1, top + 1):
            h[e] = F.add(h[e], F.mul(x, h[e - 1]))
    return h


def eval_h(F: GF, e: int, xs: Sequence[int]) -> int:
    """h_e(xs).  h_0 is 1 and h_e of no variables is 0 for e > 0."""
    if e < 0:
        return 0
    return h_values(F, [F.check(x) for x in xs], e)[e]


@dataclass(frozen=True)
class CompleteSymPoly:
    """h = sum_{e=0}^{m} a_e h_e in k variables, with a_m != 0."""

    field: GF
    k: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"number of variables must be >= 0, got {self.k}")
        cs = tuple(self.field.check(c) for c in self.coeffs)
        if not cs or cs[-1] == 0:
            raise ValueError("leading coefficient a_m must be nonzero; trim the coefficient vector")
        object.__setattr__(self, "coeffs", cs)

    @property
    def m(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def homogeneous(cls, F: GF, k: int, e: int, c: int = 1) -> "CompleteSymPoly":
        return cls(F, k, (0,) * e + (c,))

    def __call__(self, *xs) -> int:
        return eval_complete(self, xs)


def eval_complete(h: CompleteSymPoly, xs: Sequence[int]) -> int:
    F = h.field
    if len(xs) != h.k:
        raise ValueError(f"expected {h.k} coordinates, got {len(xs)}")
    hv = h_values(F, [F.check(x) for x in xs], h.m)
    acc = 0
    for a, v in zip(h.coeffs, hv):
        if a:
            acc = F.add(acc, F.mul(a, v))
    return acc


# --- vectorized kernels -----------------------------------------------------------

def h_matrix(F: GF, points: np.ndarray, top: int) -> np.ndarray:
    """Array H with H[e, t] = h_e(points[t]) for e = 0..top."""
    points = np.asarray(points, dtype=np.int64)
    T = points.shape[0]
    H = np.zeros((top + 1, T), dtype=np.int64)
    H[0] = 1
    for j in range(points.shape[1] if points.ndim == 2 else 0):
        x = points[:, j]
        for e in range(1, top + 1):
            H[e] = F.vadd(H[e], F.vmul(x, H[e - 1]))
    return H


def batch_values(F: GF, A: np.ndarray, H: np.ndarray) -> np.ndarray:
    """V[n, t] = sum_e A[n, e] H[e, t] over F_q."""
    A = np.asarray(A, dtype=np.int64)
    acc = np.zeros((A.shape[0], H.shape[1]), dtype=np.int64)
    for e in range(min(A.shape[1], H.shape[0])):
        col = A[:, e]
        if not col.any():
            continue
        acc = F.vadd(acc, F.vmul(col[:, None], H[e][None, :]))
    return acc


def batch_zero_scan(F: GF, A: np.ndarray, H: np.ndarray,
                    weights: Optional[np.ndarray] = None) -> tuple[np.ndarray, np.ndarray]:
    """Weighted zero counts and first-zero column for each coefficient row of A.

    Returns ``(counts, first)`` where ``first[n]`` is the smallest t with
    V[n, t] == 0, or -1.
    """
    A = np.asarray(A, dtype=np.int64)
    N, T = A.shape[0], H.shape[1]
    counts = np.zeros(N, dtype=np.int64)
    first = np.full(N, -1, dtype=np.int64)
    step = max(1, _CHUNK_CELLS // max(T, 1))
    for lo in range(0, N, step):
        zero = batch_values(F, A[lo:lo + step], H) == 0
        counts[lo:lo + step] = zero.sum(axis=1) if weights is None else zero.astype(np.int64) @ weights
        hit = zero.any(axis=1)
        first[lo:lo + step] = np.where(hit, zero.argmax(axis=1), -1)
    return counts, first


# --- enumeration helpers -------------------------------------------------------------

def multisets_with_weights(q: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """All k-multisets of range(q) with their orbit sizes k!/prod(c_i!)."""
    rows, weights = [], []
    kf = math.factorial(k)
    for combo in itertools.combinations_with_replacement(range(q), k):
        w = kf
        for _, grp in itertools.groupby(combo):
            w //= math.factorial(len(list(grp)))
        rows.append(combo)
        weights.append(w)
    return np.array(rows, dtype=np.int64).reshape(len(rows), k), np.array(weights, dtype=np.int64)


def colex_subsets(elements: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """k-subsets of ``elements`` (taken in the given order) in colexicographic order."""
    pos = list(range(len(elements)))
    combos = sorted(itertools.combinations(pos, k), key=lambda c: c[::-1])
    return [tuple(elements[i] for i in c) for c in combos]


def _subset_list(F: GF, S: Optional[Iterable[int]]) -> list[int]:
    if S is None:
        return F.elements()
    S = sorted({F.check(s) for s in S})
    return S


# --- point counts ------------------------------------------------------------------

@dataclass(frozen=True)
class PointCount:
    """n_total is N_q(h) (None when not computed); n_distinct is N* over S."""

    n_total: Optional[int]
    n_distinct: Optional[int]
    subset_size: int
    method: str
    subsets_vanishing: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "N": self.n_total,
            "N_star": self.n_distinct,
            "subset_size": self.subset_size,
            "method": self.method,
            "subsets_vanishing": self.subsets_vanishing,
        }


def count_points(h: CompleteSymPoly, method: str = "multiset", budget: int = NAIVE_BUDGET) -> PointCount:
    """N_q(h), the number of zeros of h in F_q^k."""
    F, k = h.field, h.k
    if k < 1:
        raise ValueError("need at least one variable")
    if method == "multiset":
        pts, w = multisets_with_weights(F.q, k)
        H = h_matrix(F, pts, h.m)
        counts, _ = batch_zero_scan(F, np.array([h.coeffs]), H, w)
        n = int(counts[0])
    elif method == "naive":
        if F.q**k > budget:
            raise BudgetError(f"naive enumeration of {F.q}^{k} points exceeds budget {budget}")
        n = sum(1 for xs in itertools.product(range(F.q), repeat=k) if eval_complete(h, xs) == 0)
    else:
        raise ValueError(f"unknown counting method {method!r}")
    return PointCount(n, None, F.q, method)


def count_points_distinct(h: CompleteSymPoly, S: Optional[Iterable[int]] = None,
                          method: str = "subset", budget: int = NAIVE_BUDGET) -> PointCount:
    """N*_S(h): zeros with pairwise distinct coordinates drawn from S (default F_q)."""
    F, k = h.field, h.k
    elems = _subset_list(F, S)
    if k > len(elems):
        raise ValueError(f"k = {k} exceeds |S| = {len(elems)}")
    if method == "subset":
        subsets = colex_subsets(elems, k)
        H = h_matrix(F, np.array(subsets, dtype=np.int64).reshape(len(subsets), k), h.m)
        counts, _ = batch_zero_scan(F, np.array([h.coeffs]), H)
        nsub = int(counts[0])
        n = nsub * math.factorial(k)
    elif method == "naive":
        if math.perm(len(elems), k) > budget:
            raise BudgetError("naive distinct-tuple enumeration exceeds budget")
        n = sum(1 for xs in itertools.permutations(elems, k) if eval_complete(h, xs) == 0)
        nsub = n // math.factorial(k)
    else:
        raise ValueError(f"unknown counting method {method!r}")
    return PointCount(None, n, len(elems), method, nsub)


# --- reduction profile and specialization -------------------------------------------------

@dataclass(frozen=True)
class ReductionProfile:
    b: tuple[int, ...]
    reduced_g: UniPoly
    is_degree_k_minus_1: bool

    def to_dict(self) -> dict:
        return {"b": list(self.b), "g": self.reduced_g.to_list(),
                "degree_k_minus_1": self.is_degree_k_minus_1}


def b_vector(h: CompleteSymPoly) -> tuple[int, ...]:
    """b_j = sum of a_e over e = j mod (q-1), for j = 0..q-2."""
    F = h.field
    n = F.q - 1
    b = [0] * n
    for e, a in enumerate(h.coeffs):
        b[e % n] = F.add(b[e % n], a)
    return tuple(b)


def reduced_companion_poly(h: CompleteSymPoly, k: Optional[int] = None) -> UniPoly:
    """x^{k-1} sum_e a_e x^e reduced modulo x^q - x."""
    k = h.k if k is None else k
    F = h.field
    out = [0] * F.q
    for e, a in enumerate(h.coeffs):
        if a:
            t = fold_exponent(e + k - 1, F.q)
            out[t] = F.add(out[t], a)
    return UniPoly(F, tuple(out))


def reduction_profile(h: CompleteSymPoly, k: Optional[int] = None) -> ReductionProfile:
    """b-vector, reduced g, and whether g has degree exactly k-1.

    Both the b-vector criterion and the degree of g are computed; a
    disagreement raises, since they are the same statement.
    """
    k = h.k if k is None else k
    F = h.field
    if not 2 <= k <= F.q:
        raise ValueError(f"reduction profile needs 2 <= k <= q, got k={k}, q={F.q}")
    b = b_vector(h)
    g = reduced_companion_poly(h, k)
    by_b = b[0] != 0 and all(b[j] == 0 for j in range(1, F.q - k + 1))
    by_deg = degree(g) == k - 1
    if by_b != by_deg:
        raise AssertionError(f"b-vector and degree criteria disagree for {h}")
    return ReductionProfile(b, g, by_deg)


def specialize(h: CompleteSymPoly, fixed: Sequence[int]) -> CompleteSymPoly:
    """Fix the last len(fixed) variables of h, leaving a polynomial in the rest.

    Uses h_j(x, y) = sum_e h_e(x) h_{j-e}(y), so the new coefficients are
    a'_e = sum_{j >= e} a_j h_{j-e}(fixed) and a'_m = a_m.
    """
    F = h.field
    if len(fixed) >= h.k:
        raise ValueError("must leave at least one free variable")
    hy = h_values(F, [F.check(y) for y in fixed], h.m)
    new = []
    for e in range(h.m + 1):
        acc = 0
        for j in range(e, h.m + 1):
            acc = F.add(acc, F.mul(h.coeffs[j], hy[j - e]))
        new.append(acc)
    return CompleteSymPoly(F, h.k - len(fixed), tuple(new))

