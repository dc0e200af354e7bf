"""Tests for the flag, base and fiber spectra and the two
catalogued-inconsistency reports."""

from fractions import Fraction

import pytest

from flagvar.fibration import FibrationFamily, build_fibration
from flagvar.rootsys import FamilyTag
from flagvar.spectra import (ambient_weight, base_spectrum,
                             base_spectrum_first, bn_dominance_row_report,
                             casimir_of_weight, class_one_weight,
                             cn_first_eigenvalue_report, cpn_multiplicity,
                             fiber_spectrum, flag_minimum, flag_mu,
                             flag_spectrum, g2_base_value,
                             is_dominant_class_one, kramer_basis,
                             sphere_multiplicity, weyl_dim)


# -- eigenvalue polynomials and their Casimir oracle ----------------------

def test_flag_mu_unit_values():
    assert flag_mu(FamilyTag("A", 2), (1, 1)) == 1
    assert flag_mu(FamilyTag("A", 5), (1,) * 5) == 1
    assert flag_mu(FamilyTag("B", 2), (1, 1)) == Fraction(2, 3)
    assert flag_mu(FamilyTag("G2", 2), (2, 1)) == Fraction(1, 2)


def test_flag_mu_validates_input():
    with pytest.raises(ValueError):
        flag_mu(FamilyTag("A", 2), (1,))
    with pytest.raises(ValueError):
        flag_mu(FamilyTag("A", 2), (1, 0))


@pytest.mark.parametrize("kind,rank", [("A", 2), ("A", 4), ("B", 2),
                                       ("B", 4), ("D", 4), ("D", 5),
                                       ("G2", 2)])
def test_flag_mu_matches_casimir(kind, rank):
    # For every family but C the polynomial is the Casimir number of
    # the weight sum p_i * alpha_i; checked on a box of dominant p.
    family = FamilyTag(kind, rank)
    values = range(1, 4) if rank <= 2 else range(1, 3)
    from itertools import product
    for p in product(values, repeat=rank):
        if not is_dominant_class_one(family, p):
            continue
        lam = class_one_weight(family, p)
        assert flag_mu(family, p) == casimir_of_weight(family, lam)


def test_flag_mu_c_family_differs_from_casimir():
    # The catalogued sp polynomial is kept verbatim; it is not the
    # Casimir of the same weight, which is the reported discrepancy.
    family = FamilyTag("C", 3)
    p = (1, 2, 1)
    lam = class_one_weight(family, p)
    assert flag_mu(family, p) == 1
    assert flag_mu(family, p) != casimir_of_weight(family, lam)


# -- flag spectra ----------------------------------------------------------

def test_flag_minimum_values():
    assert flag_minimum(FamilyTag("A", 2)).value == 1
    assert flag_minimum(FamilyTag("A", 5)).value == 1
    assert flag_minimum(FamilyTag("B", 2)).value == Fraction(2, 3)
    assert flag_minimum(FamilyTag("B", 4)).value == Fraction(4, 7)
    assert flag_minimum(FamilyTag("C", 3)).value == 1
    assert flag_minimum(FamilyTag("C", 5)).value == 1
    assert flag_minimum(FamilyTag("D", 4)).value == 1
    assert flag_minimum(FamilyTag("D", 6)).value == 1
    assert flag_minimum(FamilyTag("G2", 2)).value == Fraction(1, 2)


def test_flag_minimum_argmin_shapes():
    assert flag_minimum(FamilyTag("C", 4)).label[0] == (1, 2, 2, 1)
    assert flag_minimum(FamilyTag("A", 3)).label[0] == (1, 1, 1)


def test_flag_spectrum_sorted_and_complete():
    entries = flag_spectrum(FamilyTag("A", 2), Fraction(4))
    values = [e.value for e in entries]
    assert values == sorted(values)
    assert values[0] == 1
    assert all(not e.mult_known for e in entries)
    # Exactly the dominant class-one values <= 4: enumerate directly.
    direct = set()
    for p1 in range(1, 10):
        for p2 in range(1, 10):
            if not is_dominant_class_one(FamilyTag("A", 2), (p1, p2)):
                continue
            v = flag_mu(FamilyTag("A", 2), (p1, p2))
            if v <= 4:
                direct.add(v)
    assert set(values) == direct


def test_flag_spectrum_rejects_bad_cutoff():
    with pytest.raises(ValueError):
        flag_spectrum(FamilyTag("A", 2), 0)


# -- dimensions and closed-form multiplicities ----------------------------

def test_weyl_dim_examples():
    assert weyl_dim(FamilyTag("A", 2), (1, 1)) == 8
    assert weyl_dim(FamilyTag("A", 2), (1, 0)) == 3
    assert weyl_dim(FamilyTag("A", 2), (0, 0)) == 1
    assert weyl_dim(FamilyTag("A", 1), (2,)) == 3
    assert weyl_dim(FamilyTag("B", 2), (1, 0)) == 5
    assert weyl_dim(FamilyTag("B", 2), (0, 2)) == 10
    assert weyl_dim(FamilyTag("G2", 2), (1, 0)) == 14
    assert weyl_dim(FamilyTag("G2", 2), (0, 1)) == 7
    with pytest.raises(ValueError):
        weyl_dim(FamilyTag("A", 2), (-1, 1))


def test_ambient_weight_validates_length():
    with pytest.raises(ValueError):
        ambient_weight(FamilyTag("A", 2), (1,))


def test_cpn_multiplicity():
    assert cpn_multiplicity(2, 1) == 8
    assert cpn_multiplicity(2, 2) == 27
    assert cpn_multiplicity(3, 1) == 15
    # Matches the Weyl dimension of the corresponding ambient weight.
    assert cpn_multiplicity(2, 3) == weyl_dim(FamilyTag("A", 2), (3, 3))


def test_sphere_multiplicity():
    assert sphere_multiplicity(2, 1) == 5
    assert sphere_multiplicity(2, 2) == 14
    assert sphere_multiplicity(3, 1) == 7
    assert sphere_multiplicity(2, 1) == weyl_dim(FamilyTag("B", 2), (1, 0))
    assert sphere_multiplicity(2, 2) == weyl_dim(FamilyTag("B", 2), (2, 0))


# -- spherical generator bases --------------------------------------------

def test_kramer_bases():
    assert kramer_basis(FibrationFamily("su", 3)) == ((1, 0, 1),)
    assert kramer_basis(FibrationFamily("so-odd", 2)) == ((1, 0),)
    assert kramer_basis(FibrationFamily("sp", 3)) == (
        (2, 0, 0), (0, 2, 0), (0, 0, 2))
    assert kramer_basis(FibrationFamily("so-even", 4)) == (
        (0, 1, 0, 0), (0, 0, 0, 2))
    assert kramer_basis(FibrationFamily("so-even", 5)) == (
        (0, 1, 0, 0, 0), (0, 0, 0, 1, 1))
    assert kramer_basis(FibrationFamily("so-even", 6)) == (
        (0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 2))
    assert kramer_basis(FibrationFamily("g2", 2)) == ((2, 0), (0, 2))


# -- base spectra ----------------------------------------------------------

def test_base_spectrum_su_closed_form():
    entries = base_spectrum(FibrationFamily("su", 2), Fraction(4))
    assert [(e.value, e.mult) for e in entries] == [
        (Fraction(1), 8), (Fraction(8, 3), 27)]
    # q(q+n)/(n+1) is the Casimir of the q-th generator multiple.
    family = FamilyTag("A", 2)
    for q in (1, 2, 3):
        lam = ambient_weight(family, (q, q))
        assert casimir_of_weight(family, lam) == Fraction(q * (q + 2), 3)


def test_base_spectrum_sphere_closed_form():
    entries = base_spectrum(FibrationFamily("so-odd", 2), Fraction(3))
    assert [(e.value, e.mult) for e in entries] == [
        (Fraction(2, 3), 5), (Fraction(5, 3), 14), (Fraction(3), 30)]
    family = FamilyTag("B", 2)
    for q in (1, 2):
        lam = ambient_weight(family, (q, 0))
        assert casimir_of_weight(family, lam) == Fraction(q * (q + 3), 6)


def test_base_spectrum_minima():
    assert base_spectrum_first(FibrationFamily("su", 2), 1)[0].value == 1
    assert base_spectrum_first(FibrationFamily("so-odd", 4), 1)[0].value == Fraction(4, 7)
    assert base_spectrum_first(FibrationFamily("sp", 3), 1)[0].value == 1
    assert base_spectrum_first(FibrationFamily("so-even", 4), 1)[0].value == 1
    assert base_spectrum_first(FibrationFamily("g2", 2), 1)[0].value == Fraction(7, 6)


def test_base_spectrum_g2_values_and_first_multiplicity():
    entries = base_spectrum(FibrationFamily("g2", 2), Fraction(3))
    first = entries[0]
    assert first.value == Fraction(7, 6)
    assert first.mult == 27
    assert first.label == ((0, 1),)
    for e in entries:
        for r, s in e.label:
            assert g2_base_value(r, s) == e.value


def test_base_spectrum_merges_equal_values():
    # so-even at n=4: the two generators can collide in value; labels
    # then accumulate under a single entry with summed multiplicity.
    entries = base_spectrum(FibrationFamily("so-even", 4), Fraction(4))
    for e in entries:
        assert len(e.label) >= 1
        total = 0
        family = FamilyTag("D", 4)
        basis = kramer_basis(FibrationFamily("so-even", 4))
        for x in e.label:
            coeffs = tuple(sum(xi * b[k] for xi, b in zip(x, basis))
                           for k in range(4))
            total += weyl_dim(family, coeffs)
        assert total == e.mult


def test_base_spectrum_sp_first_value_is_one():
    entries = base_spectrum(FibrationFamily("sp", 3), Fraction(1))
    assert entries[0].value == 1
    assert entries[0].label == ((1, 0, 0),)


# -- fiber spectra ---------------------------------------------------------

@pytest.mark.parametrize("kind,n", [("su", 2), ("su", 4), ("so-odd", 2),
                                    ("so-odd", 4), ("sp", 3),
                                    ("so-even", 4), ("g2", 2)])
def test_fiber_first_eigenvalue_is_one(kind, n):
    fib = build_fibration(FibrationFamily(kind, n))
    entries = fiber_spectrum(fib, Fraction(2))
    assert entries[0].value == 1


def test_fiber_spectrum_g2_is_a_sum_set():
    fib = build_fibration(FibrationFamily("g2", 2))
    values = [e.value for e in fiber_spectrum(fib, Fraction(4))]
    # Rank-one values are a(a+1)/2: 1, 3, ...; sums give 1, 2, 3, 4.
    assert values == [1, 2, 3, 4]


def test_fiber_spectrum_rejects_bad_cutoff():
    fib = build_fibration(FibrationFamily("su", 2))
    with pytest.raises(ValueError):
        fiber_spectrum(fib, 0)


# -- catalogued-inconsistency reports -------------------------------------

def test_cn_first_eigenvalue_report():
    rep = cn_first_eigenvalue_report(3)
    assert rep["formula_min"] == 1
    assert rep["formula_argmin"] == (1, 2, 1)
    assert rep["stated"] == Fraction(11, 16)
    assert not rep["consistent"]
    rep = cn_first_eigenvalue_report(5)
    assert rep["formula_min"] == 1
    assert rep["stated"] == Fraction(19, 24)
    assert not rep["consistent"]


def test_bn_dominance_row_report():
    rep = bn_dominance_row_report(4)
    assert rep["witness"] == (1, 1, 1, 3)
    assert rep["catalogued_accepts"]
    assert not rep["dominant"]
    with pytest.raises(ValueError):
        bn_dominance_row_report(2)
