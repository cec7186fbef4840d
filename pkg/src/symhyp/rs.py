"""Reed-Solomon codes over all of F_q, MDS checks, and deep-hole classification.

A word beta_f = (f(alpha_1), ..., f(alpha_q)) is a deep hole of RS_q(k-1)
when appending the row of f values (plus one extra coordinate) to the
generator matrix keeps the code MDS.  That holds exactly when D_f has no
zero on a k-subset of F_q, which is what :func:`is_deep_hole` checks via
the companion polynomial.  Full minor enumeration of the extended matrix
is :func:`is_mds`, used as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .gf import GF
from .poly import UniPoly, degree, evaluate, reduce_mod_qx
from .symmetric import colex_subsets
from .vander import GenVanderInstance, determinant, first_vanishing_subset

Matrix = list[list[int]]


@dataclass(frozen=True)
class RSSpec:
    """RS_q(dim) evaluated at every element of F_q in canonical order."""

    field: GF
    dim: int

    def __post_init__(self):
        if not 2 <= self.dim + 1 <= self.field.q:
            raise ValueError(f"need 1 <= dim <= q-1, got dim={self.dim}")

    @property
    def k(self) -> int:
        return self.dim + 1

    @property
    def eval_points(self) -> list[int]:
        return self.field.elements()


def power_rows(F: GF, nrows: int) -> Matrix:
    """Rows (alpha^i) for i < nrows over all alpha, with 0^0 = 1."""
    return [[F.pow(a, i) for a in F.elements()] for i in range(nrows)]


def generator_matrix(rs: RSSpec) -> Matrix:
    return power_rows(rs.field, rs.dim)


def mat_mul_transpose(F: GF, A: Matrix, B: Matrix) -> Matrix:
    """A @ B^T over F_q."""
    return [[F.sum(F.mul(x, y) for x, y in zip(ra, rb)) for rb in B] for ra in A]


def rank(F: GF, M: Matrix) -> int:
    a = [list(r) for r in M]
    rk, ncols = 0, len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((r for r in range(rk, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        inv = F.inv(a[rk][c])
        for r in range(len(a)):
            if r != rk and a[r][c]:
                fac = F.mul(a[r][c], inv)
                a[r] = [F.sub(x, F.mul(fac, y)) for x, y in zip(a[r], a[rk])]
        rk += 1
    return rk


def is_mds(F: GF, M: Matrix) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Whether every r x r column submatrix is nonsingular.

    Column sets are tried in colex order; the first singular one is returned.
    """
    r, n = len(M), len(M[0])
    if r > n:
        raise ValueError("MDS check needs at least as many columns as rows")
    for cols in colex_subsets(list(range(n)), r):
        if determinant(F, [[row[c] for c in cols] for row in M]) == 0:
            return False, cols
    return True, None


def extended_matrix(rs: RSSpec, f: UniPoly) -> Matrix:
    """k x (q+1): generator rows padded with 0, then (f(alpha_1..alpha_q), 1)."""
    F = rs.field
    rows = [row + [0] for row in generator_matrix(rs)]
    rows.append([evaluate(f, a) for a in F.elements()] + [1])
    return rows


def syndrome(rs: RSSpec, f: UniPoly) -> tuple[int, ...]:
    """w_i = -sum_j alpha_j^i f(alpha_j) for i = 0..q-k."""
    F = rs.field
    vals = [evaluate(f, a) for a in F.elements()]
    return tuple(
        F.neg(F.sum(F.mul(F.pow(a, i), v) for a, v in zip(F.elements(), vals)))
        for i in range(F.q - rs.k + 1)
    )


def dual_extended_matrix(rs: RSSpec, f: UniPoly) -> tuple[Matrix, tuple[int, ...]]:
    """(q+1-k) x (q+1) matrix with rows (alpha^i ..., w_i), and the vector w."""
    F = rs.field
    w = syndrome(rs, f)
    rows = [row + [wi] for row, wi in zip(power_rows(F, F.q - rs.k + 1), w)]
    return rows, w


def seroussi_roth_test(w: Sequence[int]) -> bool:
    """True iff w = (0, ..., 0, a) with a != 0."""
    return len(w) > 0 and w[-1] != 0 and not any(w[:-1])


@dataclass(frozen=True)
class DeepHoleVerdict:
    is_deep_hole: bool
    f_degree: object
    sr_form: bool
    witness: Optional[tuple[int, ...]] = None
    codeword: bool = False

    def to_dict(self) -> dict:
        d = self.f_degree
        return {
            "deep_hole": self.is_deep_hole,
            "degree": d if isinstance(d, int) else None,
            "sr_form": self.sr_form,
            "witness": list(self.witness) if self.witness is not None else None,
            "codeword": self.codeword,
        }


def is_deep_hole(rs: RSSpec, f: UniPoly) -> DeepHoleVerdict:
    """Classify beta_f for RS_q(k-1) by searching for a k-subset where D_f = 0."""
    g = reduce_mod_qx(f)
    d = degree(g)
    sr = seroussi_roth_test(syndrome(rs, g))
    inst = GenVanderInstance(g, rs.k)
    witness = first_vanishing_subset(inst)
    codeword = d < rs.k - 1
    return DeepHoleVerdict(witness is None, d, sr, witness, codeword)


def is_deep_hole_by_minors(rs: RSSpec, f: UniPoly) -> bool:
    """Oracle: full minor enumeration of the extended matrix."""
    return is_mds(rs.field, extended_matrix(rs, reduce_mod_qx(f)))[0]
