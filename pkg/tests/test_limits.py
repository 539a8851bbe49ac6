"""Tests for degeneration limits of hypersurface plane schemes."""

from __future__ import annotations

import random

import pytest

from schubres.chow import GrassContext
from schubres.limits import (
    DegenerationSpec,
    decompose_degeneration,
    enumerate_degenerations,
    fano_class,
    fano_degree,
    piece_label,
)
from schubres.symfunc import parse_poly


def test_piece_labels() -> None:
    assert piece_label(2, 1) == "X2"
    assert piece_label(1, 4) == "X1^4"
    spec = DegenerationSpec(GrassContext(1, 4), ((1, 4), (1, 1)))
    assert spec.labels == ("X1^4", "X1")
    assert str(spec) == "X1^4 + X1"
    assert spec.degree == 5


def test_spec_validation() -> None:
    ctx = GrassContext(1, 3)
    with pytest.raises(ValueError):
        DegenerationSpec(ctx, ((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        DegenerationSpec(ctx, ((1, 0), (1, 2)))
    with pytest.raises(ValueError):
        DegenerationSpec(ctx, ((1, 1), (1, 1), (1, 1)))  # type: ignore[arg-type]


def test_fano_counts_for_classical_surfaces() -> None:
    assert fano_degree(GrassContext(1, 3), 3) == 27
    assert fano_degree(GrassContext(1, 4), 5) == 2875
    # A general quartic surface contains no lines.
    assert fano_degree(GrassContext(1, 3), 4) == 0


def test_cubic_surface_degeneration() -> None:
    # A cubic surface degenerating to a plane plus a doubled plane:
    # 3 limit lines attach to the reduced plane, 24 to the double one.
    ctx = GrassContext(1, 3)
    report = decompose_degeneration(DegenerationSpec(ctx, ((1, 1), (1, 2))))

    def poly(text: str):
        return parse_poly(ctx.spec, text)

    reduced, doubled = report.pieces
    assert reduced.label == "X1"
    assert doubled.label == "X1^2"
    assert reduced.total_class == poly("6*x^2*y - 3*y^2")
    assert doubled.total_class == poly("12*x^2*y + 12*y^2")
    assert (reduced.main_degree, reduced.adjunct_degree) == (15, -12)
    assert reduced.total_degree == 3
    assert doubled.total_degree == 24
    assert report.ambient_class == poly("18*x^2*y + 9*y^2")
    assert report.ambient_degree == 27
    assert report.conserved


def test_quintic_threefold_sample_cases() -> None:
    ctx = GrassContext(1, 4)

    report = decompose_degeneration(DegenerationSpec(ctx, ((1, 4), (1, 1))))
    quadruple, plain = report.pieces
    assert (quadruple.main_degree, quadruple.adjunct_degree, quadruple.total_degree) == (
        2400, 320, 2720,
    )
    assert (plain.main_degree, plain.adjunct_degree, plain.total_degree) == (
        1275, -1120, 155,
    )
    assert report.ambient_degree == 2875
    assert report.conserved

    report = decompose_degeneration(DegenerationSpec(ctx, ((2, 2), (1, 1))))
    doubled_quadric, plane = report.pieces
    assert (
        doubled_quadric.main_degree,
        doubled_quadric.adjunct_degree,
        doubled_quadric.total_degree,
    ) == (2880, -640, 2240)
    assert (plane.main_degree, plane.adjunct_degree, plane.total_degree) == (
        1275, -640, 635,
    )
    assert report.ambient_degree == 2875
    assert report.conserved


def test_quartic_fivefold_sample_case() -> None:
    # Planes on a quartic in P^7 degenerating to a doubled hyperplane plus
    # a quadric; one of the adjunct corrections is positive.
    ctx = GrassContext(2, 7)
    report = decompose_degeneration(DegenerationSpec(ctx, ((1, 2), (2, 1))))
    doubled, quadric = report.pieces
    assert (doubled.main_degree, doubled.adjunct_degree, doubled.total_degree) == (
        2_645_888, 561_792, 3_207_680,
    )
    assert (quadric.main_degree, quadric.adjunct_degree, quadric.total_degree) == (
        3_087_616, -2_998_016, 89_600,
    )
    assert report.ambient_degree == 3_297_280
    assert report.conserved


def test_adjuncts_vanish_for_reduced_line_degenerations() -> None:
    # For lines and two reduced pieces the shared locus imposes no excess,
    # so both adjunct corrections vanish identically.
    ctx = GrassContext(1, 4)
    report = decompose_degeneration(DegenerationSpec(ctx, ((2, 1), (3, 1))))
    assert report.pieces[0].adjunct_class.is_zero
    assert report.pieces[1].adjunct_class.is_zero
    assert report.conserved


def test_swap_symmetry() -> None:
    ctx = GrassContext(1, 4)
    forward = decompose_degeneration(DegenerationSpec(ctx, ((1, 3), (1, 2))))
    backward = decompose_degeneration(DegenerationSpec(ctx, ((1, 2), (1, 3))))
    assert forward.pieces[0].total_class == backward.pieces[1].total_class
    assert forward.pieces[0].adjunct_class == backward.pieces[1].adjunct_class
    assert forward.ambient_class == backward.ambient_class


def test_positive_dimensional_family_needs_pairing() -> None:
    # Lines on a quadric surface form a curve in the Grassmannian; degrees
    # require pairing against a Schubert condition of complementary size.
    ctx = GrassContext(1, 3)
    spec = DegenerationSpec(ctx, ((1, 1), (1, 1)))
    free = decompose_degeneration(spec)
    assert free.pieces[0].total_degree is None
    assert free.ambient_degree is None
    assert free.conserved

    paired = decompose_degeneration(spec, pairing=(1,))
    assert paired.pieces[0].total_degree == 2
    assert paired.pieces[1].total_degree == 2
    assert paired.ambient_degree == 4
    assert paired.ambient_class == parse_poly(ctx.spec, "4*x*y")

    with pytest.raises(ValueError):
        decompose_degeneration(spec, pairing=(2,))


def test_enumerate_degenerations() -> None:
    assert enumerate_degenerations(2) == [((1, 1), (1, 1))]
    assert enumerate_degenerations(3) == [((1, 2), (1, 1)), ((2, 1), (1, 1))]
    assert len(enumerate_degenerations(4)) == 5
    cases = enumerate_degenerations(5)
    assert len(cases) == 7
    assert cases[0] == ((1, 4), (1, 1))
    for pieces in cases:
        assert sum(k * e for k, e in pieces) == 5
    with pytest.raises(ValueError):
        enumerate_degenerations(1)


def test_conservation_across_random_specs() -> None:
    rng = random.Random(20260815)
    contexts = [GrassContext(1, 3), GrassContext(1, 4), GrassContext(2, 5)]
    for _ in range(10):
        ctx = rng.choice(contexts)
        d = rng.randint(2, 4 if ctx.r == 1 else 3)
        pieces = rng.choice(enumerate_degenerations(d))
        report = decompose_degeneration(DegenerationSpec(ctx, pieces))
        assert report.conserved
        total = report.pieces[0].total_class + report.pieces[1].total_class
        assert total == fano_class(ctx, d)
