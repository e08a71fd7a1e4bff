"""Catalog functions: fixed tables, derived constants, cosets, lifting."""

from fractions import Fraction

import pytest

from groupcut.exactnum import QNum
import groupcut.catalog as cat
from groupcut.catalog import (
    kzh_function, kzh_params, psi_function, psi_prime_function,
    lifted_function, coset_classify, in_group_t, catalog_names, get,
    FIXED_C, PLUS_CPLUS, MINUS,
)

Q = lambda *a: QNum(Fraction(*a))


# -- psi and psi_prime -----------------------------------------------------------

def test_psi_table():
    fn = psi_function()
    assert fn.f == Q(1, 2)
    xs = [r.x for r in fn.rows]
    assert xs == [Q(0), Q(1, 8), Q(3, 8), Q(1, 2), Q(5, 8), Q(7, 8)]
    r0 = fn.rows[0]
    # jump at the origin: the limit from below (at 1^-) is 1/2
    assert (r0.left, r0.value, r0.right) == (Q(1, 2), Q(0), Q(0))
    assert fn.eval(Q(1, 2)) == QNum(1)
    assert not fn.is_continuous


def test_psi_prime_differs_only_on_middle_plateau():
    a, b = psi_function(), psi_prime_function()
    assert a.f == b.f
    diff = [(ra.x, ra, rb) for ra, rb in zip(a.rows, b.rows) if ra != rb]
    xs = [x for x, _, _ in diff]
    assert xs == [Q(1, 8), Q(3, 8)]
    # both plateaus flatten: left limit joins the value
    assert b.rows[1].left == b.rows[1].value == Q(1, 4)
    assert b.rows[2].left == b.rows[2].value == Q(3, 4)


def test_psi_symmetry_values():
    fn = psi_function()
    for r in fn.rows:
        assert fn.eval(fn.f - r.x) + r.value == QNum(1)


# -- the 40-row table ------------------------------------------------------------

def test_kzh_table_shape_and_spot_values():
    fn = kzh_function()
    p = kzh_params()
    assert len(fn.rows) == 40
    assert fn.f == Q(4, 5)

    r = fn.rows[0]
    assert (r.x, r.left, r.value) == (Q(0), Q(101, 650), Q(0))
    r = fn.rows[17]
    assert r.x == p.l
    assert (r.left, r.value, r.right) == (Q(933, 2080), Q(933, 2080),
                                          Q(51443, 147680))
    r = fn.rows[18]
    assert r.x == p.u
    assert (r.left, r.value, r.right) == (Q(668809, 1919840), Q(683, 2080),
                                          Q(683, 2080))
    r = fn.rows[37]
    assert (r.x, r.left, r.value) == (Q(4, 5), Q(549, 650), QNum(1))
    r = fn.rows[39]
    assert (r.x, r.left, r.value) == (Q(4899, 5000), Q(101, 1000),
                                      Q(3333, 13000))


def test_kzh_is_discontinuous_piecewise_linear():
    fn = kzh_function()
    assert not fn.is_continuous
    jumps = [r for r in fn.rows if r.left != r.value or r.value != r.right]
    assert len(jumps) >= 20


def test_kzh_slopes_take_exactly_three_values():
    fn = kzh_function()
    p = kzh_params()
    assert set(fn.slopes) == {p.c1, p.c2, p.c3}
    assert fn.slopes.count(p.c2) == 2  # only the two shallow special pieces


def test_kzh_symmetry_pairing():
    fn = kzh_function()
    rows = fn.rows
    for i in range(38):
        assert rows[i].x + rows[37 - i].x == fn.f
        assert rows[i].value + rows[37 - i].value == QNum(1)
    assert rows[38].x + rows[39].x == fn.f + QNum(1)
    assert rows[38].value + rows[39].value == QNum(1)


def test_kzh_parameter_identities():
    p = kzh_params()
    assert p.a1 == p.a0 + p.t1
    assert p.a2 == p.a0 + p.t2
    assert p.a2 == Q(14199, 64600)
    assert p.t1 == QNum(0, Fraction(77, 7752))
    assert p.t2 == Q(77, 2584)
    assert p.u - p.l == Q(1, 16)
    assert p.l + p.u < p.f
    assert p.s == Q(19, 23998)


def test_kzh_derived_jump_constant():
    fn = kzh_function()
    p = kzh_params()
    x39 = fn.rows[39].x
    s = fn.rows[39].left + fn.eval(QNum(1) + p.l - x39) - fn.eval(p.l)
    assert s == p.s


def test_kzh_special_intervals():
    fn = kzh_function()
    p = kzh_params()
    assert fn.special_intervals == ((p.l, p.u), (p.f - p.u, p.f - p.l))


# -- cosets inside the special intervals -----------------------------------------

def test_group_membership():
    p = kzh_params()
    assert in_group_t(p.t1)
    assert in_group_t(p.t2)
    assert in_group_t(p.t1 + p.t2)
    assert in_group_t(QNum(0) - p.t2)
    assert not in_group_t(p.t2 / QNum(2))
    assert not in_group_t(QNum(0, Fraction(1, 3)))


def test_coset_classification_is_shift_invariant():
    p = kzh_params()
    mid = (p.l + p.u) / QNum(2)
    base = coset_classify(mid)
    assert base.classification == FIXED_C
    for shift in (p.t1, QNum(0) - p.t1, p.t2, QNum(0) - p.t2, p.t1 - p.t2):
        prof = coset_classify(mid + shift)
        assert prof.classification == base.classification
        assert prof.reduced == base.reduced


def test_coset_classes_and_mirror():
    p = kzh_params()
    cases = [(p.l + p.t2, PLUS_CPLUS), (p.l + p.t1, PLUS_CPLUS),
             (p.u - p.t2, MINUS), ((p.l + p.u) / QNum(2), FIXED_C)]
    for x, want in cases:
        assert coset_classify(x).classification == want
        # the mirror point keeps its coset label on the reflected interval
        assert coset_classify(p.f - x, side="upper").classification == want


def test_coset_classify_rejects_boundary_and_outside():
    p = kzh_params()
    with pytest.raises(ValueError):
        coset_classify(p.l)
    with pytest.raises(ValueError):
        coset_classify(p.u, side="lower")
    with pytest.raises(ValueError):
        coset_classify(Q(1, 10))


# -- the lifted function ---------------------------------------------------------

def test_lifted_matches_base_off_the_special_intervals():
    lf = lifted_function()
    base = kzh_function()
    for x in (Q(0), Q(1, 10), Q(4, 5), Q(9, 10), Q(219, 800)):
        assert lf.sigma(x) == 0
        assert lf.eval(x) == base.eval(x)


def test_lifted_shifts_by_sigma_times_s():
    lf = lifted_function()
    base = kzh_function()
    p = kzh_params()
    x = p.l + p.t2
    assert lf.sigma(x) == 1
    assert lf.eval(x) == base.eval(x) + p.s
    y = p.u - p.t2
    assert lf.sigma(y) == -1
    assert lf.eval(y) == base.eval(y) - p.s
    mid = (p.l + p.u) / QNum(2)
    assert lf.sigma(mid) == 0
    assert lf.eval(mid) == base.eval(mid)


def test_lifted_symmetry_on_moved_points():
    lf = lifted_function()
    p = kzh_params()
    for x in (p.l + p.t2, p.l + p.t1, p.u - p.t2, (p.l + p.u) / QNum(2),
              p.l + p.t1 + p.t2):
        assert lf.sigma(p.f - x) == -lf.sigma(x)
        assert lf.eval(x) + lf.eval(p.f - x) == QNum(1)


def test_lifted_metadata():
    lf = lifted_function()
    assert lf.f == Q(4, 5)
    assert lf.base is kzh_function()
    assert lf.special_intervals == kzh_function().special_intervals
    assert "kzh_lifted" in repr(lf)


# -- registry --------------------------------------------------------------------

def test_catalog_registry():
    assert catalog_names() == ["kzh", "kzh_lifted", "psi", "psi_prime"]
    assert get("psi") is psi_function()
    assert get("kzh_lifted") is lifted_function()
    with pytest.raises(KeyError):
        get("nope")
