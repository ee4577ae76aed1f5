"""Multipliers, outer multipliers, theta, and the separability decision."""

from __future__ import annotations

import pytest

from sring import (
    Section,
    aut_stabilizer,
    fmult_group,
    frs0,
    full_sring,
    is_quasidense,
    is_separable,
    is_valid_multiplier,
    is_valid_outer_multiplier,
    mult_group,
    rank2_sring,
    theta,
)
from sring.modarith import unit_mod
from sring.multipliers import _is_subsection
from sring.oracle import enumerate_srings


def test_aut_stabilizer(cyc5, units8):
    assert aut_stabilizer(cyc5, Section(5, 1, 5)).elements == (1, 4)
    assert aut_stabilizer(cyc5, Section(5, 1, 1)).elements == (1,)
    assert aut_stabilizer(units8, Section(8, 1, 8)).elements == (1, 3, 5, 7)
    assert aut_stabilizer(units8, Section(8, 2, 8)).elements == (1, 3)


def test_aut_stabilizer_of_full_restriction():
    a = full_sring(6)
    assert aut_stabilizer(a, Section(6, 1, 6)).elements == (1,)


def test_mult_group_orders(cyc5, units8, units4):
    assert len(mult_group(cyc5)) == 4
    # all distinguished sections of the orbit rings have order at most 2,
    # so the only unit choice is 1 everywhere
    assert len(mult_group(units4)) == 1
    assert len(mult_group(units8)) == 1
    assert len(mult_group(full_sring(5))) == 4


def test_fmult_group_orders(cyc5, units8):
    assert len(fmult_group(cyc5)) == 2
    assert len(fmult_group(units8)) == 1
    assert len(fmult_group(full_sring(5))) == 4


def test_mult_group_requires_quasidense(rank2_4):
    with pytest.raises(ValueError):
        mult_group(rank2_4)


def test_multiplier_group_structure(cyc5):
    group = mult_group(cyc5)
    elems = set(group)
    for mu in group:
        assert is_valid_multiplier(cyc5, mu)
        assert mu.inverse() in elems
        for nu in group:
            assert mu * nu in elems
    vectors = [mu.canonical_vector() for mu in group]
    assert vectors == sorted(vectors)


def test_outer_multiplier_group_structure(units8):
    group = fmult_group(units8)
    elems = set(group)
    for om in group:
        assert is_valid_outer_multiplier(units8, om)
        for other in group:
            assert om * other in elems


def test_multiplier_congruence_property(cyc5, units8):
    # Along nested sections the chosen unit must reduce consistently.
    for a in (cyc5, units8, full_sring(12)):
        fam = frs0(a)
        for mu in mult_group(a):
            assert is_valid_multiplier(a, mu)
            for s in fam:
                for t in fam:
                    if _is_subsection(t, s):
                        assert unit_mod(mu.unit_for(s), t.m) == mu.unit_for(t)


def test_theta_projects_units_to_cosets(cyc5):
    group = mult_group(cyc5)
    outs = {theta(cyc5, mu) for mu in group}
    assert outs == set(fmult_group(cyc5))
    for mu in group:
        om = theta(cyc5, mu)
        for s in frs0(cyc5):
            stab = set(aut_stabilizer(cyc5, s).elements)
            coset = {unit_mod(e * mu.unit_for(s), s.m) for e in stab}
            assert om.coset_for(s) == coset


def test_is_separable_on_named_instances(cyc5, units8, units4, rank2_4):
    for a in (cyc5, units8, units4, rank2_4):
        decided, report = is_separable(a)
        assert decided
        assert report.n == a.n
        assert report.separable is True
        assert report.theta_image_order == report.fmult_order
        assert report.missing is None


def test_separability_report_shape(rank2_4):
    decided, report = is_separable(rank2_4)
    assert decided
    assert report.reduct == full_sring(4)
    assert [(s.l, s.u) for s in report.trace] == [(1, 4)]
    data = report.to_json_dict()
    assert data["separable"] is True
    assert data["reduct"]["n"] == 4
    assert data["trace"] == [{"l": 1, "u": 4}]


def test_theta_image_bounds():
    # The projected multiplier group sits inside the outer multiplier group.
    for n in range(1, 17):
        for a in enumerate_srings(n):
            if not is_quasidense(a):
                continue
            image = {theta(a, mu) for mu in mult_group(a)}
            outer = set(fmult_group(a))
            assert image <= outer


def test_separable_iff_theta_surjective():
    for n in range(1, 17):
        for a in enumerate_srings(n):
            decided, report = is_separable(a)
            assert decided == (report.theta_image_order == report.fmult_order)
            if not decided:
                assert report.missing is not None


def test_wreath_ring_over_composite_is_separable():
    # Rank-2 rings reduce to the full ring, which is plainly separable.
    for n in (4, 6, 8, 9, 12):
        decided, _ = is_separable(rank2_sring(n))
        assert decided
