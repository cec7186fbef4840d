"""Finite fields F_q, q = p^m, with elements stored as canonical integer indices.

An element of F_{p^m} is a polynomial c_0 + c_1 t + ... + c_{m-1} t^{m-1}
over F_p (t a root of the field modulus).  Its index is the integer
c_0 + c_1 p + ... + c_{m-1} p^{m-1}, so index 0 is zero and index 1 is one.

All hot-path arithmetic works on plain ints (or numpy arrays of them) and
goes through precomputed log/antilog tables.  :class:`FieldElement` is a thin
convenience wrapper for interactive use; it refuses to mix fields.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 2**16
_DENSE_TABLE_LIMIT = 1024  # build full q x q add/mul tables up to this order


class FieldError(ValueError):
    """Bad field parameters or an operand that does not belong to the field."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- dense polynomials over F_p, coefficient lists low-degree-first ----------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo monic b over F_p."""
    r = list(a)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _trim([x % p for x in r[:db]])


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division of a monic polynomial by every monic polynomial of degree <= deg/2."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        raise FieldError("expected a monic polynomial of positive degree")
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _polymod_p(coeffs, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over F_p whose coefficient index is smallest.

    Candidates x^m + c_{m-1} x^{m-1} + ... + c_0 are tried in increasing order
    of c_0 + c_1 p + ... + c_{m-1} p^{m-1}.  For (2, 3) this gives x^3 + x + 1.
    """
    for n in range(p**m):
        low = [(n // p**i) % p for i in range(m)]
        cand = tuple(low) + (1,)
        if m > 1 and low[0] == 0:
            continue
        if is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {m} over F_{p}")


class GF:
    """The field F_{p^m}.  Build instances with :func:`field_new` (cached)."""

    def __init__(self, p: int, m: int = 1, *, max_order: int = MAX_ORDER):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"characteristic {p!r} is not prime")
        if not isinstance(m, int) or m < 1:
            raise FieldError(f"extension degree {m!r} must be a positive integer")
        q = p**m
        if q > max_order:
            raise FieldError(f"field order {q} exceeds the ceiling {max_order}")
        self.p, self.m, self.q = p, m, q
        self.modulus = (0, 1) if m == 1 else smallest_irreducible(p, m)
        self._build_tables()

    # -- construction helpers ------------------------------------------------

    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.m)]

    def from_digits(self, ds: Iterable[int]) -> int:
        return sum((d % self.p) * self.p**i for i, d in enumerate(ds))

    def _slow_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_polymod_p(prod, self.modulus, self.p))

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        n = q - 1
        factors = _prime_factors(n) if n > 1 else []
        for g in range(1, q):
            if all(self._slow_pow(g, n // r) != 1 for r in factors):
                break
        self.generator = g
        exp = [0] * (2 * n)
        log = [0] * q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)

        idx = np.arange(q, dtype=np.int64)
        self._digit_arr = np.stack([(idx // p**i) % p for i in range(self.m)])
        self._place = np.array([p**i for i in range(self.m)], dtype=np.int64)
        neg = ((-self._digit_arr) % p * self._place[:, None]).sum(axis=0)
        self.neg_table = neg
        self._neg = neg.tolist()

        self.add_table = self.mul_table = None
        if q <= _DENSE_TABLE_LIMIT:
            self.add_table = self._vadd_digits(idx[:, None], idx[None, :])
            self.mul_table = self._vmul_log(idx[:, None], idx[None, :])
            self._add_rows = self.add_table.tolist()

    # -- scalar arithmetic -----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return self._add_rows[a][b]
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def pow_square_multiply(self, a: int, e: int) -> int:
        """Table-free square-and-multiply, kept as a cross-check for :meth:`pow`."""
        if e < 0:
            a, e = self.inv(a), -e
        return self._slow_pow(a, e)

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    def sum(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def prod(self, values: Iterable[int]) -> int:
        acc = 1
        for v in values:
            acc = self.mul(acc, v)
        return acc

    # -- vectorized arithmetic on numpy integer arrays -------------------------

    def _vadd_digits(self, a, b):
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for place in self._place.tolist():
            out += ((a // place) % self.p + (b // place) % self.p) % self.p * place
        return out

    def _vmul_log(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        r = self.exp_table[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def vadd(self, a, b):
        if self.m == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.add_table is not None:
            return self.add_table[a, b]
        return self._vadd_digits(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def vmul(self, a, b):
        if self.mul_table is not None:
            return self.mul_table[a, b]
        return self._vmul_log(a, b)

    def vneg(self, a):
        return self.neg_table[a]

    # -- enumeration, validation, serialization ---------------------------------

    def elements(self) -> list[int]:
        return list(range(self.q))

    def nonzero(self) -> list[int]:
        return list(range(1, self.q))

    def check(self, a) -> int:
        """Return a as a canonical index, rejecting foreign or out-of-range values."""
        if isinstance(a, FieldElement):
            if a.field != self:
                raise FieldError(f"element of {a.field} used in {self}")
            return a.value
        if isinstance(a, (int, np.integer)) and not isinstance(a, bool) and 0 <= a < self.q:
            return int(a)
        raise FieldError(f"{a!r} is not an element index of {self}")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, self.check(value))

    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def table(self) -> list[dict]:
        return [{"index": a, "digits": self.digits(a)} for a in range(self.q)]

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (field_new, (self.p, self.m))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


@functools.lru_cache(maxsize=None)
def field_new(p: int, m: int = 1, max_order: int = MAX_ORDER) -> GF:
    """Cached field constructor: the same (p, m) always returns the same table."""
    return GF(p, m, max_order=max_order)


def field_from_order(q: int) -> GF:
    """Field of order q, rejecting non prime powers."""
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise FieldError(f"{q} is not a prime power")
            return field_new(p, m)
    raise FieldError(f"{q} is not a prime power")


def field_from_descriptor(desc: dict) -> GF:
    f = field_new(int(desc["p"]), int(desc["m"]))
    if "modulus" in desc and tuple(desc["modulus"]) != f.modulus:
        raise FieldError(f"descriptor modulus {desc['modulus']} differs from {list(f.modulus)}")
    return f


class FieldElement:
    """An element bound to its field, for readable interactive arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value

    def _other(self, b) -> int:
        if isinstance(b, FieldElement):
            if b.field != self.field:
                raise FieldError(f"cannot combine elements of {self.field} and {b.field}")
            return b.value
        return self.field.check(b)

    def __add__(self, b):
        return FieldElement(self.field, self.field.add(self.value, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return FieldElement(self.field, self.field.sub(self.value, self._other(b)))

    def __mul__(self, b):
        return FieldElement(self.field, self.field.mul(self.value, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return FieldElement(self.field, self.field.div(self.value, self._other(b)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, b) -> bool:
        if isinstance(b, FieldElement):
            return self.field == b.field and self.value == b.value
        return isinstance(b, int) and self.value == b

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"
