import numpy as np
import pytest

import oracles
from conjucode.acc import acc_from_gen_poly, acc_from_vector, trace_dual
from conjucode.algebra import BinPoly, divisors_of_xn_plus_1, parse_poly, poly_reciprocal
from conjucode.algebra.gf4 import parse_vector
from conjucode.distance import NotComputed
from conjucode.tracecode import (
    CyclicCode,
    duality_report,
    hull_generator,
    is_lcd,
    min_distance,
    phi_orthogonality_check,
    phi_poly,
    phi_vec,
    tr_subset_check,
    trace_code_of,
    trace_of_dual,
    trace_words,
)


def _words(code: CyclicCode) -> set:
    return set(code.codewords())


def test_phi_folds_halves():
    assert phi_vec((1, 0, 1, 1, 1, 0)) == (0, 1, 1)
    assert phi_poly(BinPoly(0b110101), 3) == BinPoly(0b011)
    with pytest.raises(ValueError):
        phi_poly(BinPoly(1 << 6), 3)


def test_cyclic_code_basics():
    c = CyclicCode(7, parse_poly("1+x+x^3"))
    assert c.dim == 4
    assert c.dual().r == poly_reciprocal(c.h)
    assert len(_words(c)) == 16
    with pytest.raises(ValueError):
        CyclicCode(7, parse_poly("1+x^2"))


@pytest.mark.parametrize("n", range(1, 7))
def test_trace_code_generator_against_enumeration(n):
    for g in divisors_of_xn_plus_1(2 * n):
        C = acc_from_gen_poly(g, n)
        assert trace_words(C) == _words(trace_code_of(C))
        assert trace_words(trace_dual(C)) == _words(trace_of_dual(C))


@pytest.mark.parametrize("n", range(1, 7))
def test_lcd_flag_against_enumeration(n):
    for g in divisors_of_xn_plus_1(2 * n):
        tc = trace_code_of(acc_from_gen_poly(g, n))
        words = _words(tc)
        dual = {w for w in range(1 << n) if all((w & c).bit_count() % 2 == 0 for c in words)}
        assert dual == _words(tc.dual())
        assert is_lcd(tc) == (words & dual == {0})
        assert len(words & dual) == 2 ** (n - hull_generator(tc).degree)


def test_worked_counterexample_and_equality():
    rep = duality_report(acc_from_gen_poly(parse_poly("(1+x)^2*(1+x+x^3)"), 7))
    assert rep.r == parse_poly("(1+x)*(1+x+x^3)")
    assert rep.t == parse_poly("(1+x+x^3)*(1+x^2+x^3)")
    assert rep.dual_gen == parse_poly("1+x+x^3")
    assert rep.inclusion_strict and not rep.equality_condition

    rep = duality_report(acc_from_gen_poly(parse_poly("1+x^2+x^4+x^8"), 7))
    assert rep.r == parse_poly("(1+x)*(1+x^2+x^3)")
    assert rep.t == rep.dual_gen == parse_poly("1+x^2+x^3")
    assert rep.equality_condition


def test_worked_lcd_example():
    C = acc_from_gen_poly(parse_poly("(1+x+x^2+x^3+x^4)^2"), 5)
    rep = duality_report(C)
    assert rep.r == poly_reciprocal(rep.r) == parse_poly("1+x+x^2+x^3+x^4")
    assert rep.trace_lcd and rep.lcd_criterion_applies


def test_tr_subset_small():
    for n in range(1, 8):
        for g in divisors_of_xn_plus_1(2 * n):
            assert tr_subset_check(acc_from_gen_poly(g, n))


def test_phi_orthogonality():
    rng = np.random.default_rng(4)
    for m in (2, 4, 6, 8, 10):
        for r in divisors_of_xn_plus_1(m):
            D = CyclicCode(m, r)
            assert phi_orthogonality_check(D, pairs=None)
            assert phi_orthogonality_check(D, pairs=50, rng=rng)


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10, 12])
def test_min_distance_against_codebook(m):
    for r in divisors_of_xn_plus_1(m):
        code = CyclicCode(m, r)
        brute = oracles.min_weight_codebook(code.generator_matrix().to_lists())
        d = min_distance(code)
        if brute is None:
            assert isinstance(d, NotComputed)
        else:
            assert d == brute
            assert min_distance(code, method="info-sets") == brute


def test_min_distance_bound_and_method():
    code = CyclicCode(31, parse_poly("1+x^2+x^5"))
    assert isinstance(min_distance(code, max_dim=20), NotComputed)
    assert min_distance(code, max_dim=26) == 3
    with pytest.raises(ValueError):
        min_distance(code, method="magic")


# --- table rows whose printed vectors disagree with the listed parameters ---------------------

def test_row4_vector_with_restored_symbol():
    # The listed vector gives a 36-dimensional code; one extra W at position 2
    # gives the listed [18,28] / [18,10,4].
    listed = acc_from_vector(parse_vector("W,0,W,0,W,W,0,W,0,0,0,0,0,0,0,0,0,0"))
    assert listed.dim == 36
    fixed = acc_from_vector(parse_vector("W,0,W,W,0,W,W,0,W,0,0,0,0,0,0,0,0,0"))
    assert fixed.dim == 28
    tc = trace_code_of(fixed)
    assert (tc.dim, min_distance(tc)) == (10, 4)


def test_length39_no_lcd_code_with_distance_12():
    # [[39,12,12;27]] needs an LCD [39,12,12] cyclic code; the only LCD
    # [39,12] cyclic code has d = 6, the other two are self-orthogonal.
    found = []
    for r in divisors_of_xn_plus_1(39):
        if r.degree == 27:
            code = CyclicCode(39, r)
            found.append((is_lcd(code), min_distance(code), hull_generator(code).degree))
    assert sorted(found) == [(False, 12, 27), (False, 12, 27), (True, 6, 39)]


def test_length43_vector_with_symbol_removed():
    from conjucode.eaqec import eaqec_from_trace

    v = parse_vector("W,0,w,W,0,0,0,0,W,W,W,0,0,0,w,0,0,0,W,W,W,0,0,0,0,w,w,0,W,0"
                     + ",0" * 13)
    tc = trace_code_of(acc_from_vector(v))
    e = eaqec_from_trace(tc, min_distance(tc))
    assert e.brackets() == "[[43,15,13;28]]"
