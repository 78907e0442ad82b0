"""Arithmetic in GF(2^n) with a polynomial basis.

Elements are plain ints in [0, 2^n); bit i is the coefficient of alpha^i.
Scalar operations work directly on the bit vectors. The ``v*`` methods act
on numpy arrays through log/antilog tables built lazily on first use.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# GF(2)[x] helpers on int bit vectors

def degree(p: int) -> int:
    return p.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-vector polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, p: int) -> int:
    dp = degree(p)
    while a and degree(a) >= dp:
        a ^= p << (degree(a) - dp)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_mulmod(a: int, b: int, p: int) -> int:
    return poly_mod(clmul(a, b), p)


def _x_pow_2e(e: int, p: int) -> int:
    # x^(2^e) mod p by repeated squaring
    t = poly_mod(0b10, p)
    for _ in range(e):
        t = poly_mulmod(t, t, p)
    return t


def prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(p: int) -> bool:
    """Rabin's test: x^(2^n) = x mod p and gcd(x^(2^(n/q)) - x, p) = 1 for primes q | n."""
    n = degree(p)
    if n < 1:
        return False
    if n == 1:
        return True
    if _x_pow_2e(n, p) != 0b10:
        return False
    for q in prime_factors(n):
        if poly_gcd(_x_pow_2e(n // q, p) ^ 0b10, p) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_poly(n: int) -> int:
    """Smallest (as an integer) monic irreducible polynomial of degree n."""
    for p in range(1 << n, 1 << (n + 1)):
        if is_irreducible(p):
            return p
    raise FieldError(f"no irreducible polynomial of degree {n}")  # unreachable


# ---------------------------------------------------------------------------

def to_hex(x: int) -> str:
    return format(x, "#x")


def from_hex(s: str) -> int:
    s = s.strip().lower()
    try:
        return int(s[2:] if s.startswith("0x") else s, 16)
    except ValueError:
        raise FieldError(f"not a hex value: {s!r}") from None


@dataclass(frozen=True, eq=False)
class FieldSpec:
    n: int
    poly: int
    _tables: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def m(self) -> int | None:
        return self.n // 2 if self.n % 2 == 0 else None

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.n, self.poly) == (other.n, other.poly)

    def __hash__(self):
        return hash((self.n, self.poly))

    def __reduce__(self):
        # workers rebuild (and cache) their own tables
        return (make_field, (self.n, self.poly))

    def to_dict(self) -> dict:
        return {"n": self.n, "poly_hex": to_hex(self.poly)}

    def check(self, x: int) -> int:
        if not 0 <= x < self.order:
            raise FieldError(f"{x:#x} is not an element of GF(2^{self.n})")
        return x

    def require_even(self) -> int:
        if self.n % 2:
            raise FieldError(f"n = {self.n} is odd; the field has no quadratic subfield")
        return self.n // 2

    # -- scalar arithmetic ------------------------------------------------

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        r = 0
        top = 1 << self.n
        p = self.poly
        while y:
            if y & 1:
                r ^= x
            y >>= 1
            x <<= 1
            if x & top:
                x ^= p
        return r

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise FieldError("zero has no negative powers")
            return 1 if e == 0 else 0
        e %= self.order - 1
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldError("zero is not invertible")
        return self.pow(x, self.order - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def frob(self, x: int, j: int = 1) -> int:
        """x^(2^j)."""
        for _ in range(j % self.n):
            x = self.mul(x, x)
        return x

    def conjugate(self, x: int) -> int:
        return self.frob(x, self.require_even())

    def trace(self, x: int) -> int:
        t, y = 0, x
        for _ in range(self.n):
            t ^= y
            y = self.mul(y, y)
        assert t in (0, 1)
        return t

    def sqrt(self, x: int) -> int:
        return self.frob(x, self.n - 1)

    def in_subfield(self, x: int, k: int) -> bool:
        if k < 1 or self.n % k:
            raise FieldError(f"{k} does not divide n = {self.n}")
        return self.frob(x, k) == x

    def is_dth_power(self, x: int, d: int) -> bool:
        if x == 0:
            return True
        q1 = self.order - 1
        return self.pow(x, q1 // math.gcd(d, q1)) == 1

    def elements(self) -> range:
        return range(self.order)

    # -- table-driven vector arithmetic ------------------------------------

    def _build_tables(self):
        q1 = self.order - 1
        g = self.generator
        exp = np.empty(2 * q1, dtype=np.int64)
        t = 1
        for i in range(q1):
            exp[i] = t
            t = self.mul(t, g)
        exp[q1:] = exp[:q1]
        log = np.zeros(self.order, dtype=np.int64)
        log[exp[:q1]] = np.arange(q1)
        self._tables["exp"] = exp
        self._tables["log"] = log

    @property
    def generator(self) -> int:
        """Smallest element of multiplicative order 2^n - 1."""
        g = self._tables.get("gen")
        if g is None:
            q1 = self.order - 1
            qs = prime_factors(q1)
            g = next(a for a in range(1, self.order)
                     if all(self.pow(a, q1 // q) != 1 for q in qs) or q1 == 1)
            self._tables["gen"] = g
        return g

    @property
    def exp_table(self) -> np.ndarray:
        if "exp" not in self._tables:
            self._build_tables()
        return self._tables["exp"]

    @property
    def log_table(self) -> np.ndarray:
        if "log" not in self._tables:
            self._build_tables()
        return self._tables["log"]

    def vmul(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        lg, ex = self.log_table, self.exp_table
        r = ex[lg[x] + lg[y]]
        return np.where((x == 0) | (y == 0), 0, r)

    def vpow(self, x, e: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        q1 = self.order - 1
        if e < 0 and np.any(x == 0):
            raise FieldError("zero has no negative powers")
        if e == 0:
            return np.ones_like(x)
        r = self.exp_table[(self.log_table[x] * (e % q1)) % q1]
        return np.where(x == 0, 0, r)

    def vinv(self, x) -> np.ndarray:
        return self.vpow(x, -1)

    def vdiv(self, x, y) -> np.ndarray:
        return self.vmul(x, self.vinv(y))

    def vfrob(self, x, j: int) -> np.ndarray:
        return self.vpow(x, pow(2, j % self.n))

    def power_table(self, d: int) -> np.ndarray:
        """x -> x^d over the whole field (d >= 1)."""
        return self.vpow(np.arange(self.order), d)


@lru_cache(maxsize=None)
def _validated_field(n: int, poly: int) -> FieldSpec:
    if degree(poly) != n:
        raise FieldError(f"polynomial {poly:#x} has degree {degree(poly)}, expected {n}")
    if not is_irreducible(poly):
        raise FieldError(f"polynomial {poly:#x} is reducible over GF(2)")
    return FieldSpec(n, poly)


def make_field(n: int, poly: int | None = None) -> FieldSpec:
    """Field of degree n; the default polynomial is the smallest irreducible one."""
    if n < 1:
        raise FieldError(f"degree must be positive, got {n}")
    return _validated_field(n, default_poly(n) if poly is None else poly)


def mod_inverse(a: int, modulus: int) -> int:
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if math.gcd(a, modulus) != 1:
        raise ValueError(f"{a} is not invertible modulo {modulus}")
    return pow(a, -1, modulus)
