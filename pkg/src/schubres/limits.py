"""Limiting linear subspaces in degenerations of hypersurfaces.

A degree-``d`` hypersurface in projective ``n``-space carries a scheme of
``r``-planes cut out, on the Grassmannian, by a section of ``Sym^d U*``.
When the hypersurface degenerates into a union of two pieces -- each a
hypersurface of some degree taken with some multiplicity -- the planes in
the limit distribute over the pieces.  Each piece receives a main class
(planes honestly contained in that piece) and an adjunct correction from
the locus shared with the other piece, and the total over both pieces
recovers the top Chern class of ``Sym^d U*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bundles import BundleClass, sym_ustar
from .chow import GrassContext, Partition, integrate, schubert_poly
from .residual import IntersectionSetup, regular_decompose
from .symfunc import GradedPoly

__all__ = [
    "DegenerationSpec",
    "PieceReport",
    "LimitReport",
    "piece_label",
    "fano_class",
    "fano_degree",
    "decompose_degeneration",
    "enumerate_degenerations",
]

Piece = tuple[int, int]


def piece_label(degree: int, multiplicity: int) -> str:
    """Display name for a piece: ``X3`` for a plain cubic, ``X1^2`` for a
    doubled hyperplane."""
    if multiplicity == 1:
        return f"X{degree}"
    return f"X{degree}^{multiplicity}"


@dataclass(frozen=True)
class DegenerationSpec:
    """A degeneration of a hypersurface into two weighted pieces.

    Each piece ``(k, e)`` is a degree-``k`` hypersurface with multiplicity
    ``e``; the total degree of the degenerate fibre is the weighted sum of
    the pieces.
    """

    context: GrassContext
    pieces: tuple[Piece, Piece]

    def __post_init__(self) -> None:
        if not isinstance(self.context, GrassContext):
            raise TypeError("context must be a GrassContext")
        pieces = tuple((int(k), int(e)) for k, e in self.pieces)
        if len(pieces) != 2:
            raise ValueError("exactly two pieces are supported")
        for k, e in pieces:
            if k < 1 or e < 1:
                raise ValueError(
                    f"piece degrees and multiplicities must be >= 1, got ({k}, {e})"
                )
        object.__setattr__(self, "pieces", pieces)

    @property
    def degree(self) -> int:
        """Total degree of the degenerate hypersurface."""
        return sum(k * e for k, e in self.pieces)

    @property
    def labels(self) -> tuple[str, str]:
        return tuple(piece_label(k, e) for k, e in self.pieces)

    def __str__(self) -> str:
        return " + ".join(self.labels)


@dataclass(frozen=True)
class PieceReport:
    """Limit classes and (when defined) degrees attached to one piece."""

    label: str
    degree: int
    multiplicity: int
    main_class: GradedPoly
    adjunct_class: GradedPoly
    total_class: GradedPoly
    main_degree: int | None
    adjunct_degree: int | None
    total_degree: int | None


@dataclass(frozen=True)
class LimitReport:
    """Full account of a degeneration: per-piece reports plus the ambient
    total they must reproduce."""

    spec: DegenerationSpec
    pieces: tuple[PieceReport, PieceReport]
    ambient_class: GradedPoly
    ambient_degree: int | None
    conserved: bool


def fano_class(ctx: GrassContext, d: int) -> GradedPoly:
    """Class of the scheme of ``r``-planes on a general degree-``d``
    hypersurface: the top Chern class of ``Sym^d U*``."""
    bundle = sym_ustar(ctx, d)
    return bundle.chern(bundle.rank)


def _coerce_pairing(pairing) -> Partition:
    if isinstance(pairing, Partition):
        return pairing
    return Partition(tuple(pairing))


def _paired_degree(
    ctx: GrassContext, value: GradedPoly, excess: int, pairing: Partition | None
) -> int | None:
    """Integrate ``value`` against the pairing class, or directly when the
    class already sits in the top degree.

    ``excess`` is the dimension of the family the class represents; when it
    is positive a pairing partition of that size is required to produce a
    number, and without one the degree is reported as ``None``.
    """
    if excess <= 0:
        return integrate(ctx, value)
    if pairing is None:
        return None
    if pairing.size != excess:
        raise ValueError(
            f"pairing partition must have size {excess}, got {pairing.size}"
        )
    return integrate(ctx, value * schubert_poly(ctx, pairing))


def fano_degree(ctx: GrassContext, d: int, pairing=None) -> int | None:
    """Count of ``r``-planes on a general degree-``d`` hypersurface when
    the count is finite; otherwise the degree of the family paired against
    the given Schubert condition (``None`` if no pairing is supplied)."""
    excess = ctx.dim - sym_ustar(ctx, d).rank
    coerced = _coerce_pairing(pairing) if pairing is not None else None
    return _paired_degree(ctx, fano_class(ctx, d), excess, coerced)


def decompose_degeneration(spec: DegenerationSpec, pairing=None) -> LimitReport:
    """Split the limit class of plane schemes over the two pieces of a
    degeneration.

    Piece ``(k, e)`` contributes through the rescaled bundle obtained from
    ``Sym^k U*`` by multiplying its codimension-``i`` classes by ``e^i``;
    its top Chern class locates planes on that piece and the residual
    machinery supplies the adjunct correction along the common locus.

    When the expected family of planes is positive-dimensional the degree
    columns are ``None`` unless ``pairing`` names a Schubert condition of
    complementary size to cut the family down to points.
    """
    ctx = spec.context
    d = spec.degree
    ambient_bundle = sym_ustar(ctx, d)
    setup = IntersectionSetup(
        cN=ambient_bundle.total_chern, d=ambient_bundle.rank, k=ctx.dim, ring=ctx
    )
    (k1, e1), (k2, e2) = spec.pieces
    bundle1 = sym_ustar(ctx, k1, e1)
    bundle2 = sym_ustar(ctx, k2, e2)
    top1 = bundle1.chern(bundle1.rank)
    top2 = bundle2.chern(bundle2.rank)
    decomposition = regular_decompose(
        setup, bundle1, bundle2, top1, top2, top1 * top2, labels=spec.labels
    )

    ambient = fano_class(ctx, d)
    total = decomposition.components[0].total + decomposition.components[1].total
    conserved = total == ambient

    excess = ctx.dim - ambient_bundle.rank
    coerced = _coerce_pairing(pairing) if pairing is not None else None
    reports = tuple(
        PieceReport(
            label=component.label,
            degree=k,
            multiplicity=e,
            main_class=component.main,
            adjunct_class=component.adjunct,
            total_class=component.total,
            main_degree=_paired_degree(ctx, component.main, excess, coerced),
            adjunct_degree=_paired_degree(ctx, component.adjunct, excess, coerced),
            total_degree=_paired_degree(ctx, component.total, excess, coerced),
        )
        for component, (k, e) in zip(decomposition.components, spec.pieces)
    )
    return LimitReport(
        spec=spec,
        pieces=reports,
        ambient_class=ambient,
        ambient_degree=_paired_degree(ctx, ambient, excess, coerced),
        conserved=conserved,
    )


def _piece_sort_key(piece: Piece) -> tuple[int, int, int]:
    k, e = piece
    return (-k * e, -e, k)


def enumerate_degenerations(d: int) -> list[tuple[Piece, Piece]]:
    """All unordered two-piece degenerations of total degree ``d``, each
    listed once with the heavier piece first."""
    if d < 2:
        raise ValueError("need total degree >= 2 to split into two pieces")
    seen: set[tuple[Piece, Piece]] = set()
    for a in range(1, d):
        b = d - a
        for ka in _factor_pairs(a):
            for kb in _factor_pairs(b):
                pair = tuple(sorted((ka, kb), key=_piece_sort_key))
                seen.add(pair)  # type: ignore[arg-type]
    return sorted(seen, key=lambda pair: tuple(_piece_sort_key(p) for p in pair))


def _factor_pairs(total: int) -> Iterable[Piece]:
    """Factorings ``total == k * e`` into degree and multiplicity."""
    for k in range(1, total + 1):
        if total % k == 0:
            yield (k, total // k)
