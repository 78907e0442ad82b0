"""Roots of Q(x) = x^(2^r+1) + a x^(2^r) + b x + c by exhaustive evaluation."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circle import circle_mask
from .field import FieldSpec


@dataclass(frozen=True)
class QuadPoly:
    r: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")

    def evaluate(self, F: FieldSpec, x: int) -> int:
        xr = F.frob(x, self.r)
        return F.mul(xr, x) ^ F.mul(self.a, xr) ^ F.mul(self.b, x) ^ self.c


def _values(F: FieldSpec, q: QuadPoly) -> np.ndarray:
    xs = np.arange(F.order)
    xr = F.vfrob(xs, q.r)
    return F.vmul(xr, xs) ^ F.vmul(q.a, xr) ^ F.vmul(q.b, xs) ^ q.c


def roots_in_field(F: FieldSpec, q: QuadPoly) -> list[int]:
    return [int(x) for x in np.flatnonzero(_values(F, q) == 0)]


def roots_in_circle(F: FieldSpec, q: QuadPoly) -> list[int]:
    mask = circle_mask(F)
    return [x for x in roots_in_field(F, q) if mask[x]]


def allowed_field_counts(n: int, r: int) -> set[int]:
    return {0, 1, 2, (1 << math.gcd(n, r)) + 1}


def circle_count_if_many(n: int, r: int) -> int:
    """Number of circle roots forced once there are at least three."""
    return (1 << math.gcd(n // 2, math.gcd(n, r))) + 1
