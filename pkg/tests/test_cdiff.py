import json
import math
from collections import Counter

import numpy as np
import pytest

from conftest import brute_equation_count
from nihocdu.cdiff import (TABLE1, PowerFunc, c_derivative_count, cdu_general, circle_c_values,
                           count_a0, derivative_values, spectrum, verify_catalog)
from nihocdu.field import make_field


def brute_uniformity(F, d, c):
    """Definition-level max over admissible (a, b), scalar arithmetic only."""
    best = 0
    for a in F.elements():
        if c == 1 and a == 0:
            continue
        cnt = Counter(F.pow(x ^ a, d) ^ F.mul(c, F.pow(x, d)) for x in F.elements())
        best = max(best, max(cnt.values()))
    return best


def test_c_zero_counts_preimages(F16):
    pf = PowerFunc.make(F16, 7)
    pre = Counter(F16.pow(x ^ 1, 7) for x in F16.elements())
    for b in F16.elements():
        assert c_derivative_count(F16, pf, 1, b, 0) == pre.get(b, 0)
    assert cdu_general(F16, pf, 0) == max(Counter(pf.table.tolist()).values())


def test_c_one_needs_nonzero_a(F16):
    with pytest.raises(ValueError):
        c_derivative_count(F16, PowerFunc.make(F16, 3), 0, 0, 1)
    with pytest.raises(ValueError):
        count_a0(PowerFunc.make(F16, 3), 0, 1)
    with pytest.raises(ValueError):
        PowerFunc.make(F16, 0)


def test_niho_examples_n6(F64):
    pf = PowerFunc.make(F64, 15)
    for c in circle_c_values(F64):
        assert c_derivative_count(F64, pf, 1, 1, c) >= 1
        assert 0 in np.flatnonzero(derivative_values(F64, pf, 1, c) == 1)
        hits = np.flatnonzero(derivative_values(F64, pf, 1, c) == c)
        assert hits.tolist() == [1]


@pytest.mark.parametrize("n,d", [(4, 7), (6, 15), (6, 21), (5, 3)])
def test_counts_match_scalar_oracle(n, d):
    F = make_field(n)
    pf = PowerFunc.make(F, d)
    for c in (0, 2, 3, F.order - 1):
        for a in (1, 3):
            vals = derivative_values(F, pf, a, c)
            for b in range(0, F.order, 3):
                assert int(np.count_nonzero(vals == b)) == brute_equation_count(F, d, a, b, c)


@pytest.mark.parametrize("n,d", [(4, 5), (4, 7), (6, 15), (6, 62)])
def test_partition_and_translation(n, d):
    F = make_field(n)
    pf = PowerFunc.make(F, d)
    for c in range(F.order):
        base = np.bincount(derivative_values(F, pf, 1, c), minlength=F.order)
        assert base.sum() == F.order
        for a in range(1, F.order):
            hist = np.bincount(derivative_values(F, pf, a, c), minlength=F.order)
            assert hist.sum() == F.order
            ad = F.pow(a, d)
            # count(a, b) == count(1, b / a^d)
            idx = F.vdiv(np.arange(F.order), ad)
            assert np.array_equal(hist, base[idx])


@pytest.mark.parametrize("n,d", [(4, 7), (6, 15), (6, 9)])
def test_count_a0_closed_form(n, d):
    F = make_field(n)
    pf = PowerFunc.make(F, d)
    for c in range(F.order):
        if c == 1:
            continue
        brute = np.bincount(derivative_values(F, pf, 0, c), minlength=F.order)
        closed = [count_a0(pf, b, c) for b in F.elements()]
        assert closed == brute.tolist()


def test_isomorphism_invariance():
    F1, F2 = make_field(4, 0b10011), make_field(4, 0b11001)

    def horner(F, poly, x):
        acc = 0
        for i in range(poly.bit_length() - 1, -1, -1):
            acc = F.mul(acc, x) ^ ((poly >> i) & 1)
        return acc

    root = next(r for r in F1.elements() if horner(F1, F2.poly, r) == 0)

    def sigma(e):  # F2 -> F1
        out = 0
        for i in range(4):
            if e >> i & 1:
                out ^= F1.pow(root, i)
        return out

    assert all(sigma(F2.mul(x, y)) == F1.mul(sigma(x), sigma(y))
               for x in range(16) for y in range(16))
    for d in (3, 5, 7, 14):
        p1, p2 = PowerFunc.make(F1, d), PowerFunc.make(F2, d)
        for c in range(16):
            for a in range(16):
                if c == 1 and a == 0:
                    continue
                for b in range(16):
                    assert (c_derivative_count(F2, p2, a, b, c)
                            == c_derivative_count(F1, p1, sigma(a), sigma(b), sigma(c)))


def test_spectrum_examples(F16):
    rep = spectrum(PowerFunc.make(F16, 14), 0b0110)
    assert rep.counts.sum() == 16
    F32 = make_field(5)
    pf = PowerFunc.make(F32, 21)
    for c in range(32):
        if c != 1:
            assert spectrum(pf, c).uniformity <= 3
    inv = PowerFunc.make(F16, 14)
    for c in range(1, 16):
        if F16.trace(c) == 1 and F16.trace(F16.inv(c)) == 1:
            assert spectrum(inv, c).uniformity == 2


@pytest.mark.parametrize("n,d", [(4, 5), (4, 7), (4, 14), (5, 3), (5, 21), (6, 15)])
def test_spectrum_equals_general_scan(n, d):
    F = make_field(n)
    pf = PowerFunc.make(F, d)
    for c in range(F.order):
        assert spectrum(pf, c).uniformity == cdu_general(F, pf.table, c)


@pytest.mark.parametrize("n,d", [(3, 3), (4, 7)])
def test_general_scan_matches_definition(n, d):
    F = make_field(n)
    for c in range(F.order):
        assert cdu_general(F, PowerFunc.make(F, d), c) == brute_uniformity(F, d, c)


def test_classical_gold_is_apn():
    F = make_field(5)
    assert cdu_general(F, PowerFunc.make(F, 3), 1) == 2
    assert spectrum(PowerFunc.make(F, 3), 1).uniformity == 2


def test_general_table_input(F16):
    rng = np.random.default_rng(0)
    table = rng.permutation(16).tolist()
    u = cdu_general(F16, table, 1)
    best = 0
    for a in range(1, 16):
        cnt = Counter(table[x ^ a] ^ table[x] for x in range(16))
        best = max(best, max(cnt.values()))
    assert u == best


def test_report_json(F64):
    rep = spectrum(PowerFunc.make(F64, 15), circle_c_values(F64)[0])
    js = rep.to_json()
    assert set(js) >= {"c", "uniformity", "a0_gcd", "histogram", "pcn", "apcn"}
    assert sum(int(k) * v for k, v in js["histogram"].items()) == 64
    assert sum(js["histogram"].values()) == 64
    assert js["a0_gcd"] == 3 and js["uniformity"] == 3
    assert not js["pcn"] and not js["apcn"]
    json.dumps(js)
    rows = list(rep.csv_rows())
    assert len(rows) == 64 and rows[0][1] == "0x0"


def test_report_flags():
    rep = spectrum(PowerFunc.make(make_field(6), 5), 2)
    assert rep.pcn == (rep.uniformity == 1) and rep.apcn == (rep.uniformity == 2)


def test_catalog_rows_present():
    names = [r.name for r in TABLE1]
    assert len(names) == 6 and len(set(names)) == 6
    checks = verify_catalog(TABLE1, 5)
    assert {c.row for c in checks} == set(names)
    # n = 5 rows hold without exception
    for ch in checks:
        if ch.row in ("gold-3", "third-power-le3") and not ch.boundary:
            assert ch.ok, ch.to_json()
