"""Generalized Vandermonde determinants D_f and their companion polynomials C_f.

M_f(x_1..x_k) has rows 1, x, ..., x^{k-2}, f(x).  Its determinant factors as
D_f = C_f * prod_{i<j} (x_j - x_i) with C_f = sum_{i >= k-1} a_i h_{i-k+1},
so on distinct points D_f vanishes exactly where C_f does.  Zero counts go
through C_f; the explicit determinant path is the independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .gf import GF
from .poly import UniPoly, degree, evaluate, reduce_mod_qx
from .symmetric import (
    CompleteSymPoly,
    PointCount,
    _subset_list,
    batch_zero_scan,
    colex_subsets,
    h_matrix,
    reduced_companion_poly,
)


def determinant(F: GF, rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square matrix over F_q by Gaussian elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = F.neg(det)
        pc = a[c][c]
        det = F.mul(det, pc)
        inv = F.inv(pc)
        for r in range(c + 1, n):
            if a[r][c]:
                factor = F.mul(a[r][c], inv)
                row_r, row_c = a[r], a[c]
                for j in range(c, n):
                    if row_c[j]:
                        row_r[j] = F.sub(row_r[j], F.mul(factor, row_c[j]))
    return det


def vandermonde_product(F: GF, alphas: Sequence[int]) -> int:
    """prod_{i<j} (alpha_j - alpha_i)."""
    acc = 1
    for j in range(len(alphas)):
        for i in range(j):
            acc = F.mul(acc, F.sub(alphas[j], alphas[i]))
    return acc


@dataclass(frozen=True)
class GenVanderInstance:
    """A polynomial f (stored reduced mod x^q - x) and matrix size k."""

    f: UniPoly
    k: int

    def __post_init__(self):
        q = self.f.field.q
        if not 2 <= self.k <= q:
            raise ValueError(f"need 2 <= k <= q, got k={self.k}, q={q}")
        object.__setattr__(self, "f", reduce_mod_qx(self.f))

    @property
    def field(self) -> GF:
        return self.f.field

    def matrix(self, alphas: Sequence[int]) -> list[list[int]]:
        F = self.field
        alphas = [F.check(a) for a in alphas]
        if len(alphas) != self.k:
            raise ValueError(f"expected {self.k} points, got {len(alphas)}")
        rows = [[F.pow(a, i) for a in alphas] for i in range(self.k - 1)]
        rows.append([evaluate(self.f, a) for a in alphas])
        return rows


def det_Df(inst: GenVanderInstance, alphas: Sequence[int]) -> int:
    return determinant(inst.field, inst.matrix(alphas))


def cf_from_f(f: UniPoly, k: int) -> Optional[CompleteSymPoly]:
    """C_f = sum_{i=k-1}^{d} a_i h_{i-(k-1)} in k variables.

    Returns None when deg f <= k-2: C_f is then identically zero and so is D_f.
    """
    d = degree(f)
    if d < k - 1:
        return None
    return CompleteSymPoly(f.field, k, f.coeffs[k - 1:])


def g_from_h(h: CompleteSymPoly) -> UniPoly:
    """x^{k-1} sum_e a_e x^e reduced modulo x^q - x; its C_g agrees with h on distinct points."""
    if h.k < 2:
        raise ValueError("g_from_h needs k >= 2")
    return reduced_companion_poly(h)


def count_Df_zero(inst: GenVanderInstance, S: Optional[Iterable[int]] = None,
                  method: str = "companion") -> PointCount:
    """N*_S(D_f): ordered tuples of distinct points of S where D_f vanishes."""
    F, k = inst.field, inst.k
    elems = _subset_list(F, S)
    if k > len(elems):
        raise ValueError(f"k = {k} exceeds |S| = {len(elems)}")
    cf = cf_from_f(inst.f, k)
    if method == "companion":
        if cf is None:
            nsub = math.comb(len(elems), k)
        else:
            subsets = colex_subsets(elems, k)
            H = h_matrix(F, np.array(subsets, dtype=np.int64).reshape(-1, k), cf.m)
            counts, _ = batch_zero_scan(F, np.array([cf.coeffs]), H)
            nsub = int(counts[0])
    elif method == "determinant":
        nsub = sum(1 for T in colex_subsets(elems, k) if det_Df(inst, T) == 0)
    else:
        raise ValueError(f"unknown method {method!r}")
    return PointCount(None, nsub * math.factorial(k), len(elems), method, nsub)


def first_vanishing_subset(inst: GenVanderInstance, S: Optional[Iterable[int]] = None):
    """First k-subset of S (colex order) on which D_f vanishes, or None."""
    F, k = inst.field, inst.k
    elems = _subset_list(F, S)
    subsets = colex_subsets(elems, k)
    cf = cf_from_f(inst.f, k)
    if cf is None:
        return subsets[0] if subsets else None
    H = h_matrix(F, np.array(subsets, dtype=np.int64).reshape(-1, k), cf.m)
    _, first = batch_zero_scan(F, np.array([cf.coeffs]), H)
    return subsets[int(first[0])] if first[0] >= 0 else None


def companion_scan(F: GF, k: int, essential: np.ndarray,
                   S: Optional[Iterable[int]] = None) -> tuple[np.ndarray, np.ndarray, list]:
    """Vanishing-subset counts for many f given by their essential coefficients.

    Row n of ``essential`` holds a_{k-1}, a_k, ... of one f; lower
    coefficients never affect C_f.  Returns ``(counts, first, subsets)``,
    where ``first`` indexes into the colex-ordered ``subsets`` (-1: none).
    Rows that are entirely zero (deg f <= k-2) vanish everywhere.
    """
    elems = _subset_list(F, S)
    subsets = colex_subsets(elems, k)
    essential = np.asarray(essential, dtype=np.int64)
    H = h_matrix(F, np.array(subsets, dtype=np.int64).reshape(-1, k), essential.shape[1] - 1)
    counts, first = batch_zero_scan(F, essential, H)
    return counts, first, subsets
