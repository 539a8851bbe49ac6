"""Tests for Chern/Segre arithmetic and symmetric powers."""

from __future__ import annotations

import itertools
import random

import pytest

from schubres.bundles import (
    BundleClass,
    VirtualClass,
    adams_twist,
    chern,
    difference,
    rank_sym,
    segre,
    segre_negrank_product,
    sym_power,
    sym_ustar,
    total_segre,
    ustar,
)
from schubres.chow import GrassContext, blowup_plane_at_point
from schubres.errors import CancellationRequiredError
from schubres.symfunc import GeneratorSpec, GradedPoly, parse_poly


def lines_ctx() -> GrassContext:
    return GrassContext(1, 3)


def c(ctx: GrassContext, text: str) -> GradedPoly:
    return parse_poly(ctx.spec, text)


def test_bundle_constructor_validation() -> None:
    ctx = lines_ctx()
    with pytest.raises(ValueError):
        BundleClass(0, GradedPoly.one(ctx.spec))
    with pytest.raises(ValueError):
        BundleClass(2, c(ctx, "2 + x"))
    with pytest.raises(ValueError):
        VirtualClass(c(ctx, "x"))
    # Honest bundles carry nothing above their rank.
    line = BundleClass(1, c(ctx, "1 + x + y"))
    assert line.total_chern == c(ctx, "1 + x")


def test_dual_subbundle_chern_classes() -> None:
    ctx = lines_ctx()
    U = ustar(ctx)
    assert U.rank == 2
    assert chern(U, 1) == c(ctx, "x")
    assert chern(U, 2) == c(ctx, "y")
    assert chern(U, 3).is_zero
    with pytest.raises(IndexError):
        chern(U, -1)


def test_segre_of_dual_subbundle() -> None:
    ctx = lines_ctx()
    U = ustar(ctx)
    assert segre(U, 0) == 1
    assert segre(U, 1) == c(ctx, "-x")
    assert segre(U, 2) == c(ctx, "x^2 - y")
    assert total_segre(U) * U.total_chern == 1


def test_segre_negative_index_conventions() -> None:
    U = ustar(lines_ctx())
    assert segre(U, -1).is_zero
    with pytest.raises(CancellationRequiredError):
        segre(U, -2)
    with pytest.raises(IndexError):
        segre(U, -3)
    other = c(lines_ctx(), "3*x + y")
    assert segre_negrank_product(U, other) == -other


def test_sym_cube_of_dual_subbundle() -> None:
    # Total Chern class of the third symmetric power on the line
    # Grassmannian, the running rank-two example.
    ctx = lines_ctx()
    E = sym_power(ustar(ctx), 3)
    assert E.rank == 4
    assert chern(E, 1) == c(ctx, "6*x")
    assert chern(E, 2) == c(ctx, "11*x^2 + 10*y")
    assert chern(E, 3) == c(ctx, "6*x^3 + 30*x*y")
    assert chern(E, 4) == c(ctx, "18*x^2*y + 9*y^2")


def test_sym_square_of_dual_subbundle() -> None:
    ctx = lines_ctx()
    E = sym_power(ustar(ctx), 2)
    assert E.rank == 3
    assert E.total_chern == c(ctx, "1 + 3*x + 2*x^2 + 4*y + 4*x*y")


def test_sym_power_identity_and_zero() -> None:
    ctx = GrassContext(2, 5)
    U = ustar(ctx)
    assert sym_power(U, 1) == U
    trivial = sym_power(U, 0)
    assert trivial.rank == 1
    assert trivial.total_chern == 1
    with pytest.raises(IndexError):
        sym_power(U, -1)


def test_sym_power_against_numeric_roots() -> None:
    # Independent check: give the bundle explicit integer Chern roots and
    # compare against the direct product of (1 + multiset sum) factors.
    spec = GeneratorSpec(("t",), (1,), 10)
    t = GradedPoly.generator(spec, "t")
    roots = (1, 2, 3)
    total = GradedPoly.one(spec)
    for a in roots:
        total = total * (1 + a * t)
    E = BundleClass(3, total)
    for d in (2, 3):
        sums = [
            sum(roots[i] for i in multiset)
            for multiset in itertools.combinations_with_replacement(range(3), d)
        ]
        expected = GradedPoly.one(spec)
        for s in sums:
            expected = expected * (1 + s * t)
        assert sym_power(E, d).total_chern == expected
        assert sym_power(E, d).rank == len(sums)


def test_sym_power_of_line_bundle() -> None:
    spec = GeneratorSpec(("h",), (1,), 5)
    h = GradedPoly.generator(spec, "h")
    line = BundleClass(1, 1 + 3 * h)
    cube = sym_power(line, 4)
    assert cube.rank == 1
    assert cube.total_chern == 1 + 12 * h


def test_rank_sym_values() -> None:
    assert rank_sym(1, 3) == 4
    assert rank_sym(1, 5) == 6
    assert rank_sym(2, 4) == 15
    assert rank_sym(2, 0) == 1
    with pytest.raises(ValueError):
        rank_sym(-1, 2)


def test_adams_twist() -> None:
    ctx = lines_ctx()
    U = ustar(ctx)
    twisted = adams_twist(U, 2)
    assert twisted.total_chern == c(ctx, "1 + 2*x + 4*y")
    assert adams_twist(adams_twist(U, 2), 3) == adams_twist(U, 6)
    assert adams_twist(U, 1) == U
    # Twisting commutes with taking Segre classes.
    assert twisted.total_segre() == U.total_segre().degree_scale(2)


def test_difference_virtual_class() -> None:
    ctx = lines_ctx()
    U = ustar(ctx)
    cube = sym_power(U, 3)
    diff = difference(cube, U)
    assert chern(diff, 1) == c(ctx, "5*x")
    assert chern(diff, 2) == c(ctx, "6*x^2 + 9*y")
    trivial = BundleClass(1, GradedPoly.one(ctx.spec))
    assert difference(cube, trivial).total_chern == cube.total_chern


def test_chern_times_segre_is_one_random() -> None:
    rng = random.Random(23)
    spec = GeneratorSpec(("a", "b", "c"), (1, 2, 3), 8)
    for _ in range(100):
        total = GradedPoly.one(spec)
        for name, degree in zip(spec.names, spec.degrees):
            coeff = rng.randint(-6, 6)
            total = total + coeff * GradedPoly.generator(spec, name)
        for extra in range(rng.randrange(3)):
            total = total + rng.randint(-4, 4) * parse_poly(spec, "a*b")
        E = BundleClass(8, total)
        assert E.total_chern * E.total_segre() == 1


def test_bundles_over_structure_rings() -> None:
    # The same operations work over a tabulated ring carrier.
    ring = blowup_plane_at_point()
    N = BundleClass(2, ring.parse("1 + 2*h") ** 2)
    assert chern(N, 1) == ring.parse("4*h")
    assert chern(N, 2) == ring.parse("4*P")
    assert segre(N, 1) == ring.parse("-4*h")
    assert segre(N, 2) == ring.parse("12*P")
    line = BundleClass(1, ring.parse("1 + h"))
    assert sym_power(line, 2).total_chern == ring.parse("1 + 2*h")


def test_sym_ustar_caching() -> None:
    ctx = lines_ctx()
    first = sym_ustar(ctx, 3)
    assert first is sym_ustar(GrassContext(1, 3), 3)
    twisted = sym_ustar(ctx, 1, 2)
    assert twisted.total_chern == c(ctx, "1 + 2*x + 4*y")
