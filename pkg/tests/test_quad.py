import math

import numpy as np
import pytest

from nihocdu.field import make_field
from nihocdu.quad import (QuadPoly, allowed_field_counts, circle_count_if_many,
                          roots_in_circle, roots_in_field)


def scalar_roots(F, q):
    return [x for x in F.elements() if q.evaluate(F, x) == 0]


def test_examples(F4, F16):
    assert roots_in_field(F16, QuadPoly(2, 0, 0, 0)) == [0]
    assert roots_in_field(F4, QuadPoly(1, 0, 1, 0)) == [0, 1]
    q = QuadPoly(2, 0, 0, 1)
    assert len(roots_in_field(F16, q)) == 5 == (1 << math.gcd(4, 2)) + 1
    assert roots_in_circle(F16, q) == roots_in_field(F16, q)
    with pytest.raises(ValueError):
        QuadPoly(0, 0, 0, 0)


def test_vector_and_scalar_evaluation_agree(F64):
    rng = np.random.default_rng(1)
    for _ in range(50):
        r = int(rng.integers(1, 4))
        q = QuadPoly(r, *map(int, rng.integers(0, 64, 3)))
        assert roots_in_field(F64, q) == scalar_roots(F64, q)


@pytest.mark.parametrize("n", [4, 6, 8])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_root_count_classes(n, r):
    F = make_field(n)
    rng = np.random.default_rng(100 * n + r)
    allowed = allowed_field_counts(n, r)
    forced = circle_count_if_many(n, r)
    polys = [QuadPoly(r, *map(int, rng.integers(0, F.order, 3))) for _ in range(1000)]
    polys += [QuadPoly(r, 0, 0, c) for c in F.elements()]
    polys += [QuadPoly(r, a, 0, 0) for a in F.elements()]
    for q in polys:
        roots = roots_in_field(F, q)
        assert len(roots) in allowed, q
        circ = roots_in_circle(F, q)
        if len(circ) >= 3:
            assert len(circ) == forced, q
        if len(roots) <= 2:
            assert len(circ) <= 2
        for x in roots:
            assert q.evaluate(F, x) == 0


def test_roots_in_circle_needs_even_degree():
    F = make_field(5)
    with pytest.raises(Exception):
        roots_in_circle(F, QuadPoly(1, 0, 0, 0))
