"""The Niho-type power function x^(s(2^m-1)+1) on GF(2^(2m)), s = (2^k+1)^-1 mod 2^m+1.

Solutions of (x+1)^d + c x^d = b for c on the unit circle are produced
structurally: one possible solution in the subfield GF(2^m), and the rest
through pairs (y, z) on the circle solving

    c (z + conj(b)) y^(2^k) + b z + 1 = 0
    (y + c conj(b)) z^(2^k) + b y + c = 0

with y, z != 1 and y != z. Brute-force counts from :mod:`cdiff` serve as
the independent check.
"""
from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from .cdiff import PowerFunc, spectrum
from .circle import circle_mask, on_circle, unit_circle
from .field import FieldSpec, make_field, mod_inverse, to_hex
from .quad import QuadPoly


class ParamError(ValueError):
    pass


class StructuralError(RuntimeError):
    """Raised when the structural case split produces colliding solutions."""


@dataclass(frozen=True)
class NihoParams:
    m: int
    k: int
    g: int
    n: int
    s: int
    d: int
    experimental: bool = False

    @property
    def field(self) -> FieldSpec:
        return make_field(self.n)

    @property
    def expected_uniformity(self) -> int:
        return (1 << self.g) + 1

    def to_dict(self) -> dict:
        return {"m": self.m, "k": self.k, "g": self.g, "n": self.n, "s": self.s, "d": self.d}


def is_valid_pair(m: int, k: int) -> bool:
    return math.gcd((1 << k) + 1, (1 << m) + 1) == 1


def make_params(m: int, k: int, experimental: bool = False) -> NihoParams:
    """Build the exponent data for (m, k).

    ``experimental`` lifts the odd-m restriction (the even-m experiments);
    the gcd condition is still required so that s exists.
    """
    if k < 1 or m < 1:
        raise ParamError(f"m and k must be positive, got m={m}, k={k}")
    if not experimental and (m % 2 == 0 or m < 3):
        raise ParamError(f"m must be odd and at least 3, got {m}")
    G = math.gcd((1 << k) + 1, (1 << m) + 1)
    if G != 1:
        raise ParamError(f"gcd(2^{k}+1, 2^{m}+1) = {G}, not 1")
    n = 2 * m
    s = mod_inverse((1 << k) + 1, (1 << m) + 1)
    d = (s * ((1 << m) - 1) + 1) % ((1 << n) - 1)
    return NihoParams(m, k, math.gcd(k, m), n, s, d, experimental)


class StructuralSolution(NamedTuple):
    x: int
    origin: Literal["subfield", "circle_case1", "circle_case2"]
    witness: tuple[int, int] | None = None


def _check_c(p: NihoParams, c: int):
    F = p.field
    if c == 1 or not on_circle(F, c):
        raise ParamError(f"c = {c:#x} must lie on the unit circle and differ from 1")


def equation_value(p: NihoParams, c: int, b: int, x: int) -> int:
    """Left side minus right side of (x+1)^d + c x^d = b."""
    F = p.field
    return F.pow(x ^ 1, p.d) ^ F.mul(c, F.pow(x, p.d)) ^ b


def subfield_solution(p: NihoParams, c: int, b: int) -> int | None:
    _check_c(p, c)
    F = p.field
    if F.mul(c, F.conjugate(b) ^ 1) ^ b ^ 1:
        return None
    return F.div(b ^ 1, c ^ 1)


@lru_cache(maxsize=16)
def _circle_grid(F: FieldSpec, k: int):
    mu = np.array([u for u in unit_circle(F) if u != 1], dtype=np.int64)
    y, z = (a.ravel() for a in np.meshgrid(mu, mu, indexing="ij"))
    return y, z, F.vfrob(y, k), F.vfrob(z, k)


def system36_solutions(p: NihoParams, c: int, b: int) -> list[tuple[int, int]]:
    """All (y, z) on the circle, both != 1, y != z, solving the pair system.

    Plain scan over the grid of circle pairs.
    """
    F = p.field
    y, z, yk, zk = _circle_grid(F, p.k)
    bb = F.conjugate(b)
    e1 = F.vmul(F.vmul(c, z ^ bb), yk) ^ F.vmul(b, z) ^ 1
    e2 = F.vmul(y ^ F.mul(c, bb), zk) ^ F.vmul(b, y) ^ c
    hit = (e1 == 0) & (e2 == 0) & (y != z)
    return sorted(zip(y[hit].tolist(), z[hit].tolist()))


def nonsubfield_solutions(p: NihoParams, c: int, b: int) -> list[StructuralSolution]:
    _check_c(p, c)
    F = p.field
    K1 = (1 << p.k) + 1
    out: list[StructuralSolution] = []
    if b not in (1, c) and on_circle(F, b):
        x = F.div(F.pow(b, -K1) ^ 1, F.pow(c, -K1) ^ 1)
        binv = F.inv(b)
        out.append(StructuralSolution(x, "circle_case1", (F.mul(c, binv), binv)))
    for y, z in system36_solutions(p, c, b):
        den = y ^ F.mul(c, z)
        if den == 0:
            continue
        x = F.div(F.mul(y, F.mul(b, z) ^ 1), den)
        out.append(StructuralSolution(x, "circle_case2", (y, z)))
    xs = [s.x for s in out]
    if len(set(xs)) != len(xs):
        raise StructuralError(f"duplicate solutions for c={c:#x}, b={b:#x}: {out}")
    return out


def structural_count(p: NihoParams, c: int, b: int) -> tuple[int, list[StructuralSolution]]:
    sols = []
    x0 = subfield_solution(p, c, b)
    if x0 is not None:
        sols.append(StructuralSolution(x0, "subfield"))
    sols.extend(nonsubfield_solutions(p, c, b))
    if len({s.x for s in sols}) != len(sols):
        raise StructuralError(f"subfield and circle solutions collide for c={c:#x}, b={b:#x}")
    return len(sols), sols


def witness_uv(p: NihoParams, y: int, z: int) -> tuple[int, int]:
    """Recover (u, v) from y = u^(2s), z = v^(2s): u^2 = y^(2^k+1)."""
    F = p.field
    K1 = (1 << p.k) + 1
    return F.sqrt(F.pow(y, K1)), F.sqrt(F.pow(z, K1))


def structural_counts(p: NihoParams, c: int, block: int = 4096) -> np.ndarray:
    """Structural solution count for every b at once (array indexed by b).

    For each z the first equation is linear in y^(2^k), so y is solved for
    directly instead of scanned; z = conj(b) with b on the circle is the
    only degenerate column and is scanned over y.
    """
    _check_c(p, c)
    F = p.field
    m, k, n = p.m, p.k, p.n
    circ = circle_mask(F)
    mu = np.array([u for u in unit_circle(F) if u != 1], dtype=np.int64)
    zk = F.vfrob(mu, k)
    root_e = n - (k % n)  # inverse of y -> y^(2^k)
    total = np.zeros(F.order, dtype=np.int64)
    for lo in range(0, F.order, block):
        B = np.arange(lo, min(lo + block, F.order), dtype=np.int64)
        bb = F.vfrob(B, m)
        # subfield solution
        cond = F.vmul(c, bb ^ 1) ^ B ^ 1
        cnt = (cond == 0).astype(np.int64)
        # y + cz = 0 case
        cnt += circ[B] & (B != 1) & (B != c)
        # y + cz != 0 case, solved column by column
        Bc, bbc = B[:, None], bb[:, None]
        coef = F.vmul(c, mu[None, :] ^ bbc)
        rhs = F.vmul(Bc, mu[None, :]) ^ 1
        ok = coef != 0
        Y = F.vdiv(rhs, np.where(ok, coef, 1))
        y = F.vfrob(Y, root_e)
        e2 = F.vmul(y ^ F.vmul(c, bbc), zk[None, :]) ^ F.vmul(Bc, y) ^ c
        good = (ok & circ[y] & (y != 1) & (y != mu[None, :]) & (e2 == 0)
                & ((y ^ F.vmul(c, mu[None, :])) != 0))
        cnt += good.sum(axis=1)
        total[lo:lo + len(B)] = cnt
    # degenerate column: b on the circle, z = 1/b
    for b in unit_circle(F):
        if b == 1:
            continue
        z = F.inv(b)
        ys = mu[mu != z]
        e2 = F.vmul(ys ^ F.mul(c, F.conjugate(b)), F.frob(z, k)) ^ F.vmul(b, ys) ^ c
        keep = (e2 == 0) & ((ys ^ F.mul(c, z)) != 0)
        total[b] += int(keep.sum())
    return total


def brute_counts(p: NihoParams, c: int) -> np.ndarray:
    return spectrum(PowerFunc.make(p.field, p.d), c).counts


def case3_poly(p: NihoParams, c: int, b: int) -> QuadPoly:
    """Monic form of the single equation in z obtained by eliminating y."""
    _check_c(p, c)
    F = p.field
    if b == 0 or on_circle(F, b):
        raise ParamError(f"b = {b:#x} must be nonzero and off the unit circle")
    K = 1 << p.k
    cK = F.pow(c, K + 1)
    bb = F.conjugate(b)
    lead = F.mul(cK, F.pow(bb, K)) ^ b
    if lead == 0:
        raise StructuralError(f"leading coefficient vanishes for c={c:#x}, b={b:#x}")
    a2 = F.mul(cK, F.pow(bb, K + 1)) ^ 1
    a1 = cK ^ F.pow(b, K + 1)
    a0 = F.mul(cK, bb) ^ F.pow(b, K)
    inv = F.inv(lead)
    return QuadPoly(2 * p.k, F.mul(a2, inv), F.mul(a1, inv), F.mul(a0, inv))


def v_member(p: NihoParams, c: int) -> bool:
    q, r = divmod((1 << p.m) + 1, (1 << p.g) + 1)
    if r:
        raise ParamError(f"2^{p.g}+1 does not divide 2^{p.m}+1")
    return p.field.pow(c, q) == 1


def theorem1_uniformity(p: NihoParams, c: int) -> int:
    counts = structural_counts(p, c)
    return max(int(counts.max()), math.gcd(p.d, p.field.order - 1))


# ---------------------------------------------------------------------------
# sweeps

def verify_record(m: int, k: int, c: int) -> dict:
    p = make_params(m, k)
    su = theorem1_uniformity(p, c)
    bu = spectrum(PowerFunc.make(p.field, p.d), c).uniformity
    exp = p.expected_uniformity
    return {"m": m, "k": k, "s": p.s, "d": p.d, "c_hex": to_hex(c),
            "structural_uniformity": su, "brute_uniformity": bu,
            "expected": exp, "pass": su == bu == exp}


def brute_record(m: int, k: int, c: int) -> dict:
    p = make_params(m, k)
    bu = spectrum(PowerFunc.make(p.field, p.d), c).uniformity
    exp = p.expected_uniformity
    return {"m": m, "k": k, "s": p.s, "d": p.d, "c_hex": to_hex(c),
            "brute_uniformity": bu, "expected": exp, "pass": bu == exp}


def theorem1_jobs(pairs) -> tuple[list[tuple[int, int, int]], list[dict]]:
    """Expand (m, k) pairs into (m, k, c) work items; invalid pairs are skipped."""
    work, skipped = [], []
    for m, k in pairs:
        try:
            p = make_params(m, k)
        except ParamError as e:
            skipped.append({"m": m, "k": k, "skipped": str(e)})
            continue
        work.extend((m, k, c) for c in unit_circle(p.field) if c != 1)
    return work, skipped


def remark_experiments(p: NihoParams, c_values) -> list[dict]:
    F = p.field
    pf = PowerFunc.make(F, p.d)
    even_set = {2, (1 << math.gcd(2 * p.k, p.m)) + 1}
    out = []
    for c in c_values:
        u = spectrum(pf, c).uniformity
        rec = {"m": p.m, "k": p.k, "d": p.d, "c_hex": to_hex(c), "uniformity": u,
               "on_circle": on_circle(F, c)}
        if p.m % 2 == 0 and rec["on_circle"] and c != 1:
            rec["expected_set"] = sorted(even_set)
            rec["in_expected"] = u in even_set
        out.append(rec)
    return out
