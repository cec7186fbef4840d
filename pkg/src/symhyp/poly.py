"""Univariate polynomials over F_q."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf import GF, FieldError

ZERO_DEGREE = -math.inf
"""Degree of the zero polynomial.  Compares unequal to every integer."""


@dataclass(frozen=True)
class UniPoly:
    """Polynomial sum(coeffs[i] x^i) with canonical element indices.

    Trailing zeros are stripped on construction; ``coeffs == ()`` is zero.
    """

    field: GF
    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = [self.field.check(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, field: GF, e: int, c: int = 1) -> "UniPoly":
        return cls(field, (0,) * e + (c,))

    @classmethod
    def parse(cls, field: GF, text: str) -> "UniPoly":
        """Read comma-separated coefficients, low degree first (``"0,0,1"`` is x^2)."""
        text = text.strip()
        if not text:
            return cls(field, ())
        try:
            vals = [int(t) for t in text.split(",")]
        except ValueError as exc:
            raise FieldError(f"bad coefficient list {text!r}") from exc
        return cls(field, tuple(vals))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x) -> int:
        return evaluate(self, x)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        _same_field(self, other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(F, tuple(F.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + other.scale(self.field.neg(1))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        _same_field(self, other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return UniPoly(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return UniPoly(F, tuple(out))

    def __pow__(self, e: int) -> "UniPoly":
        result = UniPoly(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "UniPoly":
        return UniPoly(self.field, tuple(self.field.mul(c, a) for a in self.coeffs))

    def shift(self, n: int) -> "UniPoly":
        """Multiply by x^n."""
        if self.is_zero():
            return self
        return UniPoly(self.field, (0,) * n + self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(reversed(terms))


def _same_field(f: UniPoly, g: UniPoly) -> None:
    if f.field != g.field:
        raise FieldError(f"polynomials over {f.field} and {g.field} cannot be combined")


def degree(f: UniPoly):
    """Index of the last nonzero coefficient, or :data:`ZERO_DEGREE` for zero."""
    return len(f.coeffs) - 1 if f.coeffs else ZERO_DEGREE


def evaluate(f: UniPoly, x) -> int:
    F = f.field
    x = F.check(x)
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def evaluate_all(f: UniPoly) -> list[int]:
    return [evaluate(f, a) for a in f.field.elements()]


def fold_exponent(e: int, q: int) -> int:
    """Exponent of the representative of x^e modulo x^q - x."""
    if e < q:
        return e
    return (e - 1) % (q - 1) + 1


def reduce_mod_qx(f: UniPoly) -> UniPoly:
    """Representative of degree <= q-1 inducing the same function on F_q."""
    F = f.field
    if len(f.coeffs) <= F.q:
        return f
    out = [0] * F.q
    for e, c in enumerate(f.coeffs):
        if c:
            t = fold_exponent(e, F.q)
            out[t] = F.add(out[t], c)
    return UniPoly(F, tuple(out))


def interpolate(field: GF, points: Sequence[tuple[int, int]]) -> UniPoly:
    """Lagrange interpolation through (x, y) pairs with distinct x."""
    F = field
    xs = [F.check(x) for x, _ in points]
    ys = [F.check(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise FieldError("interpolation abscissae must be pairwise distinct")
    result = UniPoly(F, ())
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = UniPoly(F, (1,))
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly(F, (F.neg(xj), 1))
                denom = F.mul(denom, F.sub(xi, xj))
        result = result + basis.scale(F.div(yi, denom))
    return result


def from_values(field: GF, values: Iterable[int]) -> UniPoly:
    """The polynomial of degree <= q-1 taking ``values[i]`` at element i."""
    return interpolate(field, list(zip(field.elements(), values)))
