"""Unit circle mu_{2^m+1} of GF(2^{2m}), polar form x = alpha*u, and the
pair map (u, v) -> u^2 (1 + v^2) / (u^2 + v^2) onto GF(2^n) minus GF(2^m)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .field import FieldError, FieldSpec


class PolarForm(NamedTuple):
    alpha: int  # in GF(2^m)*
    u: int      # on the unit circle


class PairUV(NamedTuple):
    u: int
    v: int


def unit_circle(F: FieldSpec) -> list[int]:
    m = F.require_even()
    key = "circle"
    if key not in F._tables:
        xs = np.arange(1, F.order)
        F._tables[key] = [int(x) for x in xs[F.vpow(xs, (1 << m) + 1) == 1]]
    return list(F._tables[key])


def circle_mask(F: FieldSpec) -> np.ndarray:
    """Boolean array indexed by element: True on the unit circle."""
    mask = np.zeros(F.order, dtype=bool)
    mask[unit_circle(F)] = True
    return mask


def on_circle(F: FieldSpec, x: int) -> bool:
    m = F.require_even()
    return x != 0 and F.pow(x, (1 << m) + 1) == 1


def polar_decompose(F: FieldSpec, x: int) -> PolarForm:
    m = F.require_even()
    if x == 0:
        raise FieldError("zero has no polar form")
    alpha = F.sqrt(F.pow(x, (1 << m) + 1))
    return PolarForm(alpha, F.div(x, alpha))


def phi(F: FieldSpec, p: PairUV) -> int:
    u, v = p
    if not (on_circle(F, u) and on_circle(F, v)) or 1 in (u, v) or u == v:
        raise FieldError(f"({u:#x}, {v:#x}) is not a pair of distinct non-unit circle points")
    u2, v2 = F.mul(u, u), F.mul(v, v)
    return F.div(F.mul(u2, 1 ^ v2), u2 ^ v2)


def phi_inv(F: FieldSpec, x: int) -> PairUV:
    m = F.require_even()
    if F.in_subfield(x, m):
        raise FieldError(f"{x:#x} lies in GF(2^{m})")
    return PairUV(polar_decompose(F, x).u, polar_decompose(F, x ^ 1).u)


def pair_coefficients(F: FieldSpec, p: PairUV) -> tuple[int, int]:
    """(alpha, beta) with alpha*u + beta*v = 1, from the pair alone."""
    u, v = p
    u2, v2 = F.mul(u, u), F.mul(v, v)
    den = F.inv(u2 ^ v2)
    alpha = F.mul(F.mul(u, 1 ^ v2), den)
    beta = F.mul(F.mul(v, 1 ^ u2), den)
    return alpha, beta


def pair_domain(F: FieldSpec) -> list[PairUV]:
    mu = [u for u in unit_circle(F) if u != 1]
    return [PairUV(u, v) for u in mu for v in mu if u != v]
