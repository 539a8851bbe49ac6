"""Tests for Schubert calculus and structure-constant rings."""

from __future__ import annotations

import importlib.resources
import random

import pytest

from schubres.chow import (
    GrassContext,
    Partition,
    SchubertVector,
    StructRing,
    blowup_plane_at_point,
    builtin_ring,
    dual_pieri_multiply,
    integrate,
    integrate_oracle,
    load_ring,
    partitions_in_box,
    projective_space,
    ring_from_dict,
    schubert_poly,
    struct_integrate,
    struct_mul,
    struct_pushforward,
    to_schubert,
)
from schubres.errors import ContextMismatchError, RingFormatError, UnsupportedOperationError
from schubres.symfunc import GradedPoly, parse_poly


def sigma(ctx: GrassContext, *parts: int) -> SchubertVector:
    return SchubertVector(ctx, {Partition(tuple(parts)): 1})


def test_partition_normalization() -> None:
    assert Partition((2, 1, 0, 0)).parts == (2, 1)
    assert Partition(()).size == 0
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition((2, 2)).conjugate() == Partition((2, 2))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((-1,))


def test_partitions_in_box() -> None:
    box22 = partitions_in_box(2, 2)
    assert len(box22) == 6
    assert box22[0] == Partition(())
    assert box22[-1] == Partition((2, 2))
    assert len(partitions_in_box(3, 5)) == 56


def test_context_derived_quantities() -> None:
    ctx = GrassContext(1, 3)
    assert (ctx.k, ctx.m, ctx.dim) == (2, 2, 4)
    assert ctx.spec.names == ("x", "y")
    assert ctx.spec.degrees == (1, 2)
    assert ctx.spec.truncation == 4
    assert ctx.box == Partition((2, 2))
    big = GrassContext(4, 9)
    assert big.spec.names == ("c1", "c2", "c3", "c4", "c5")
    with pytest.raises(ValueError):
        GrassContext(3, 3)
    with pytest.raises(ValueError):
        GrassContext(-1, 3)


def test_dual_pieri_adds_vertical_strips() -> None:
    ctx = GrassContext(1, 3)
    assert dual_pieri_multiply(sigma(ctx, 1, 1), 1) == sigma(ctx, 2, 1)
    assert dual_pieri_multiply(sigma(ctx, 1), 1) == sigma(ctx, 2) + sigma(ctx, 1, 1)
    assert dual_pieri_multiply(sigma(ctx, 2, 2), 1).is_zero
    assert dual_pieri_multiply(sigma(ctx, 1), 2) == sigma(ctx, 2, 1)
    with pytest.raises(IndexError):
        dual_pieri_multiply(sigma(ctx, 1), 3)
    with pytest.raises(IndexError):
        dual_pieri_multiply(sigma(ctx, 1), 0)


def test_to_schubert_examples() -> None:
    ctx = GrassContext(1, 3)
    p = parse_poly(ctx.spec, "x^2*y")
    assert to_schubert(ctx, p) == sigma(ctx, 2, 2)
    ctx4 = GrassContext(1, 4)
    p4 = parse_poly(ctx4.spec, "x^2*y")
    assert to_schubert(ctx4, p4) == sigma(ctx4, 3, 1) + sigma(ctx4, 2, 2)
    with pytest.raises(ContextMismatchError):
        to_schubert(ctx, p4)


def test_integrate_classical_values() -> None:
    ctx = GrassContext(1, 3)
    assert integrate(ctx, parse_poly(ctx.spec, "x^4")) == 2
    assert integrate(ctx, parse_poly(ctx.spec, "x^2*y")) == 1
    assert integrate(ctx, parse_poly(ctx.spec, "y^2")) == 1
    assert integrate(ctx, parse_poly(ctx.spec, "x^2")) == 0
    ctx4 = GrassContext(1, 4)
    assert integrate(ctx4, parse_poly(ctx4.spec, "x^6")) == 5


def monomials_of_degree(spec, degree):
    def extend(i, remaining):
        if i == spec.ngens:
            if remaining == 0:
                yield ()
            return
        step = spec.degrees[i]
        for e in range(remaining // step + 1):
            for rest in extend(i + 1, remaining - e * step):
                yield (e,) + rest

    yield from extend(0, degree)


@pytest.mark.parametrize("r,n", [(1, 3), (2, 4), (0, 3)])
def test_integrate_agrees_with_oracle_exhaustively(r: int, n: int) -> None:
    ctx = GrassContext(r, n)
    for expo in monomials_of_degree(ctx.spec, ctx.dim):
        p = GradedPoly(ctx.spec, {expo: 1})
        assert integrate(ctx, p) == integrate_oracle(ctx, p), expo


def test_integrate_agrees_with_oracle_random() -> None:
    rng = random.Random(19)
    for ctx in (GrassContext(1, 4), GrassContext(2, 5)):
        monomials = list(monomials_of_degree(ctx.spec, ctx.dim))
        for _ in range(10):
            terms = {e: rng.randint(-5, 5) for e in rng.sample(monomials, 3)}
            p = GradedPoly(ctx.spec, terms)
            assert integrate(ctx, p) == integrate_oracle(ctx, p)


def test_schubert_poly_round_trip() -> None:
    for ctx in (GrassContext(1, 3), GrassContext(1, 4), GrassContext(2, 5)):
        for partition in partitions_in_box(ctx.k, ctx.m):
            vector = to_schubert(ctx, schubert_poly(ctx, partition))
            assert vector == SchubertVector(ctx, {partition: 1})


def test_schubert_duality() -> None:
    # A Schubert class pairs to one against its reversed complement and to
    # zero against every other class of complementary codimension.
    ctx = GrassContext(1, 4)
    box = partitions_in_box(ctx.k, ctx.m)
    for lam in box:
        complement = Partition(
            tuple(ctx.m - lam.part(ctx.k - 1 - i) for i in range(ctx.k))
        )
        for mu in box:
            if mu.size != ctx.dim - lam.size:
                continue
            product = schubert_poly(ctx, lam) * schubert_poly(ctx, mu)
            assert integrate(ctx, product) == (1 if mu == complement else 0)


def test_schubert_poly_rejects_out_of_box() -> None:
    ctx = GrassContext(1, 3)
    with pytest.raises(ValueError):
        schubert_poly(ctx, Partition((3,)))


def test_vector_arithmetic_and_strings() -> None:
    ctx = GrassContext(1, 3)
    v = 2 * sigma(ctx, 1) - sigma(ctx, 2, 1)
    assert v.to_string() == "2*sigma[1] - sigma[2,1]"
    assert (v - v).is_zero
    assert SchubertVector.zero(ctx).to_string() == "0"
    with pytest.raises(ValueError):
        SchubertVector(ctx, {Partition((5,)): 1})


def test_blowup_ring_products() -> None:
    ring = blowup_plane_at_point()
    h, e, point = ring.element("h"), ring.element("e"), ring.element("P")
    assert h * h == point
    assert (h * e).is_zero
    assert e * e == -point
    assert struct_mul(ring, h + e, h + e) == ring.zero()
    assert struct_integrate(ring, 3 * point) == 3
    assert struct_integrate(ring, h) == 0


def test_blowup_pushforward() -> None:
    ring = blowup_plane_at_point()
    target = ring.pushforward_target
    assert struct_pushforward(ring, ring.element("h")) == target.element("h")
    assert struct_pushforward(ring, ring.element("e")).is_zero
    assert struct_pushforward(ring, ring.element("P")) == target.element("h2")
    assert struct_pushforward(ring, ring.one()) == target.one()
    with pytest.raises(UnsupportedOperationError):
        projective_space(2).one().pushforward()


def test_struct_element_series_inverse() -> None:
    ring = blowup_plane_at_point()
    a = ring.parse("1 + 2*h")
    assert a.series_inverse() == ring.parse("1 - 2*h + 4*P")
    assert a * a.series_inverse() == ring.one()
    with pytest.raises(Exception):
        ring.parse("2*h").series_inverse()


def test_struct_parse_and_string_round_trip() -> None:
    ring = blowup_plane_at_point()
    for text in ("2*h + 4*P", "-P", "1 - e", "3", "0"):
        assert ring.parse(text).to_string() == text
    with pytest.raises(ValueError):
        ring.parse("h*h")
    with pytest.raises(ValueError):
        ring.parse("h^2")
    with pytest.raises(KeyError):
        ring.parse("q")


def test_projective_space_ring() -> None:
    ring = projective_space(3)
    h = ring.element("h")
    assert h ** 3 == ring.element("h3")
    assert (h ** 4).is_zero
    assert struct_integrate(ring, h ** 3) == 1
    assert ring.parse("1 + 4*h + 4*h2") == ring.one() + 4 * h + 4 * h * h


def test_ring_validation_catches_bad_tables() -> None:
    with pytest.raises(RingFormatError):
        # Non-homogeneous product: degree 1 times degree 1 landing in degree 1.
        StructRing(
            "bad", ("1", "h", "P"), (0, 1, 2),
            products={("h", "h"): {"h": 1}}, integral={"P": 1},
        )
    with pytest.raises(RingFormatError):
        # Integral supported off the top degree.
        StructRing(
            "bad", ("1", "h", "P"), (0, 1, 2),
            products={("h", "h"): {"P": 1}}, integral={"h": 1},
        )
    with pytest.raises(RingFormatError):
        # Two degree-zero elements.
        StructRing("bad", ("1", "u"), (0, 0), products={}, integral={})
    with pytest.raises(RingFormatError):
        # Associativity failure: (x*x)*y = z*y = t but x*(x*y) = 0.
        StructRing(
            "bad", ("1", "x", "y", "z", "t"), (0, 1, 1, 2, 3),
            products={
                ("x", "x"): {"z": 1},
                ("x", "y"): {},
                ("y", "y"): {},
                ("x", "z"): {},
                ("y", "z"): {"t": 1},
            },
            integral={"t": 1},
        )


def test_ring_yaml_fixture_matches_builtin() -> None:
    with importlib.resources.path("schubres.data", "blowup_p2.yaml") as path:
        loaded = load_ring(path)
    assert loaded == blowup_plane_at_point()
    assert loaded.element("e") * loaded.element("e") == -loaded.element("P")


def test_ring_from_dict_rejects_malformed() -> None:
    with pytest.raises(RingFormatError):
        ring_from_dict({"basis": ["1", "h"], "degrees": [0]})
    with pytest.raises(RingFormatError):
        ring_from_dict({"basis": ["1", "h"], "degrees": [0, 1], "bogus": 1})
    with pytest.raises(RingFormatError):
        ring_from_dict(
            {
                "basis": ["1", "h"],
                "degrees": [0, 1],
                "products": {"h": "h"},
            }
        )


def test_builtin_ring_lookup() -> None:
    assert builtin_ring("blowup_p2") == blowup_plane_at_point()
    assert builtin_ring("p2") == projective_space(2)
    with pytest.raises(KeyError):
        builtin_ring("nope")
