"""c-differential counts, spectra and uniformity of functions on GF(2^n).

For a function F and constants a, c the c-derivative is F(x + a) + c F(x)
(characteristic 2, so the minus sign is a plus). Everything here is an
exhaustive count over the field, done with numpy histograms.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .circle import unit_circle
from .field import FieldSpec, make_field, to_hex


@dataclass(frozen=True, eq=False)
class PowerFunc:
    spec: FieldSpec
    d: int
    table: np.ndarray

    @classmethod
    def make(cls, spec: FieldSpec, d: int) -> "PowerFunc":
        if d < 1:
            raise ValueError(f"exponent must be positive, got {d}")
        table = spec.power_table(d)
        table.flags.writeable = False
        return cls(spec, d, table)

    @property
    def a0_gcd(self) -> int:
        return math.gcd(self.d, self.spec.order - 1)


def _table(F) -> np.ndarray:
    return F.table if isinstance(F, PowerFunc) else np.asarray(F, dtype=np.int64)


def derivative_values(spec: FieldSpec, F, a: int, c: int) -> np.ndarray:
    """Array x -> F(x + a) + c F(x)."""
    t = _table(F)
    xs = np.arange(spec.order)
    return t[xs ^ a] ^ spec.vmul(c, t)


def c_derivative_count(spec: FieldSpec, F, a: int, b: int, c: int) -> int:
    if c == 1 and a == 0:
        raise ValueError("a must be nonzero when c = 1")
    return int(np.count_nonzero(derivative_values(spec, F, a, c) == b))


def count_a0(F: PowerFunc, b: int, c: int) -> int:
    """Closed-form number of x with (1 + c) x^d = b."""
    if c == 1:
        raise ValueError("the a = 0 row is excluded when c = 1")
    if b == 0:
        return 1
    spec = F.spec
    return F.a0_gcd if spec.is_dth_power(spec.div(b, 1 ^ c), F.d) else 0


@dataclass
class SpectrumReport:
    n: int
    d: int | None
    c: int
    counts: np.ndarray  # counts[b] = #{x : F(x+1) + c F(x) = b}
    a0_gcd: int | None
    uniformity: int

    @property
    def pcn(self) -> bool:
        return self.uniformity == 1

    @property
    def apcn(self) -> bool:
        return self.uniformity == 2

    def histogram(self) -> dict[int, int]:
        """count value -> number of b attaining it."""
        return dict(sorted(Counter(self.counts.tolist()).items()))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "c": to_hex(self.c),
            "uniformity": self.uniformity,
            "a0_gcd": self.a0_gcd,
            "histogram": {str(k): v for k, v in self.histogram().items()},
            "pcn": self.pcn,
            "apcn": self.apcn,
        }

    def csv_rows(self) -> Iterator[tuple[str, str, int]]:
        for b, cnt in enumerate(self.counts.tolist()):
            yield to_hex(self.c), to_hex(b), cnt


def spectrum(F: PowerFunc, c: int) -> SpectrumReport:
    spec = F.spec
    counts = np.bincount(derivative_values(spec, F, 1, c), minlength=spec.order)
    u = int(counts.max())
    if c != 1:
        u = max(u, F.a0_gcd)
    return SpectrumReport(spec.n, F.d, c, counts, F.a0_gcd, u)


def cdu_general(spec: FieldSpec, F, c: int) -> int:
    """Maximum of the c-derivative count over every admissible (a, b)."""
    t = _table(F)
    ct = spec.vmul(c, t)
    xs = np.arange(spec.order)
    best = 0
    for a in range(spec.order):
        if a == 0 and c == 1:
            continue
        best = max(best, int(np.bincount(t[xs ^ a] ^ ct).max()))
    return best


# ---------------------------------------------------------------------------
# catalog of known low-uniformity power functions

@dataclass(frozen=True)
class CatalogRow:
    name: str
    description: str
    instances: Callable[[int], Iterable[tuple[int, int]]]   # n_max -> (n, k)
    exponent: Callable[[int, int], int]                      # (n, k) -> d
    admissible: Callable[[FieldSpec, int, int], bool]        # (F, k, c)
    expected: int
    bound_only: bool = False   # expected is an upper bound
    boundary: tuple[int, ...] = ()   # c values recorded but never failed
    note: str = ""


@dataclass
class CatalogCheck:
    row: str
    n: int
    k: int
    d: int
    c: int
    uniformity: int
    expected: int
    bound_only: bool
    boundary: bool

    @property
    def ok(self) -> bool:
        if self.bound_only:
            return self.uniformity <= self.expected
        return self.uniformity == self.expected

    @property
    def status(self) -> str:
        if self.boundary:
            return "boundary-holds" if self.ok else "boundary-fails"
        return "pass" if self.ok else "fail"

    def to_json(self) -> dict:
        return {
            "row": self.row, "n": self.n, "k": self.k, "d": self.d, "c": to_hex(self.c),
            "uniformity": self.uniformity,
            "expected": ("<=" if self.bound_only else "==") + str(self.expected),
            "status": self.status,
        }


def _in_subfield_minus_one(F, k, c):
    g = math.gcd(k, F.n)
    return c not in (0, 1) and F.in_subfield(c, g)


def _inverse_trace_one(F, k, c):
    return c != 0 and F.trace(c) == 1 and F.trace(F.inv(c)) == 1


def _inverse_trace_zero(F, k, c):
    return c not in (0, 1) and (F.trace(c) == 0 or F.trace(F.inv(c)) == 0)


def _big_circle(F, k, c):
    # subgroup of order 2^(2m) + 1 inside GF(2^(4m))*
    e = (1 << (F.n // 2)) + 1
    return c not in (0, 1) and F.pow(c, e) == 1


TABLE1: tuple[CatalogRow, ...] = (
    CatalogRow(
        "gold-pcn", "x^(2^k+1), n >= 3, c in GF(2^gcd(k,n)) minus {1}",
        lambda nmax: [(n, k) for n in range(3, nmax + 1) for k in range(1, n)
                      if math.gcd(k, n) > 1],
        lambda n, k: (1 << k) + 1,
        lambda F, k, c: c == 0 or _in_subfield_minus_one(F, k, c),
        1, boundary=(0,),
    ),
    CatalogRow(
        "inverse-apcn", "x^(2^n-2), c != 0, Tr(c) = Tr(1/c) = 1",
        lambda nmax: [(n, 0) for n in range(3, nmax + 1)],
        lambda n, k: (1 << n) - 2,
        _inverse_trace_one,
        2,
    ),
    CatalogRow(
        "niho-4m-apcn", "x^(2^3m+2^2m+2^m-1), n = 4m, c on the order-(2^2m+1) circle minus {1}",
        lambda nmax: [(4 * m, m) for m in range(1, nmax // 4 + 1)],
        lambda n, m: (1 << 3 * m) + (1 << 2 * m) + (1 << m) - 1,
        _big_circle,
        2,
        note="circle taken as mu_{2^{2m}+1}, the order 2^{2m}+1 subgroup of GF(2^{4m})*",
    ),
    CatalogRow(
        "inverse-3", "x^(2^n-2), c != 0, Tr(c) = 0 or Tr(1/c) = 0",
        lambda nmax: [(n, 0) for n in range(3, nmax + 1)],
        lambda n, k: (1 << n) - 2,
        lambda F, k, c: _inverse_trace_zero(F, k, c) or (c == 1 and F.trace(1) == 0),
        3, boundary=(1,),
    ),
    CatalogRow(
        "gold-3", "x^(2^k+1), gcd(k, n) = 1, c outside GF(2)",
        lambda nmax: [(n, k) for n in range(3, nmax + 1) for k in range(1, n)
                      if math.gcd(k, n) == 1],
        lambda n, k: (1 << k) + 1,
        lambda F, k, c: c > 1,
        3,
    ),
    CatalogRow(
        "third-power-le3", "x^((2^(n+1)-1)/3), 2^n = 2 mod 3, c != 1",
        lambda nmax: [(n, 0) for n in range(1, nmax + 1) if pow(2, n, 3) == 2],
        lambda n, k: ((1 << (n + 1)) - 1) // 3,
        lambda F, k, c: c != 1,
        3, bound_only=True, boundary=(0,),
    ),
)


def verify_catalog(rows: Iterable[CatalogRow], n_max: int, n_min: int = 1) -> list[CatalogCheck]:
    out = []
    for row in rows:
        for n, k in row.instances(n_max):
            if n < n_min:
                continue
            spec = make_field(n)
            d = row.exponent(n, k)
            pf = PowerFunc.make(spec, d)
            for c in spec.elements():
                if not row.admissible(spec, k, c):
                    continue
                u = spectrum(pf, c).uniformity
                out.append(CatalogCheck(row.name, n, k, d, c, u, row.expected,
                                        row.bound_only, c in row.boundary))
    return out


def circle_c_values(spec: FieldSpec) -> list[int]:
    return [c for c in unit_circle(spec) if c != 1]
