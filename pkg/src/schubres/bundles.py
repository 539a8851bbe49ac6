"""Chern and Segre class computations for bundles over exact Chow rings.

A bundle is represented by its rank and total Chern class; the class may
live in a Grassmannian polynomial ring or in a tabulated structure ring,
and every operation works over either carrier.  Segre classes are the
series inverse of the Chern class.  Negative Segre indices follow the
residual-intersection convention: indices strictly between -rank and zero
vanish, and the index -rank itself is only meaningful inside a product
that cancels it against the top Chern class, so asking for it alone is an
error and ``segre_negrank_product`` provides the cancelled form.

Symmetric powers are computed by the splitting principle: the Chern roots
of the d-th symmetric power are the d-fold multiset sums of the original
roots, and the resulting symmetric polynomial is rewritten in elementary
symmetric functions and evaluated on the actual Chern classes.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

from .chow import GrassContext, StructElement
from .errors import CancellationRequiredError
from .symfunc import GradedPoly, root_spec, roots_to_e, substitute

ClassLike = "GradedPoly | StructElement"


def _truncation_bound(total: "GradedPoly | StructElement") -> int:
    if isinstance(total, GradedPoly):
        return total.spec.truncation
    return total.ring.top_degree


class BundleClass:
    """An honest bundle: positive rank, total Chern class with unit term.

    Chern components above the rank vanish for honest bundles, so the
    constructor drops them; they can only arise as truncation debris of
    virtual inputs.  Instances are immutable; the total Segre class is
    computed on first use and cached.
    """

    __slots__ = ("rank", "total_chern", "_segre")

    def __init__(self, rank: int, total_chern) -> None:
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive integer, got {rank!r}")
        if total_chern.constant_term != 1:
            raise ValueError(
                f"total Chern class must have constant term 1, got "
                f"{total_chern.constant_term}"
            )
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "total_chern", total_chern.truncate_above(rank))
        object.__setattr__(self, "_segre", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("BundleClass is immutable")

    def chern(self, i: int):
        return chern(self, i)

    def segre(self, i: int):
        return segre(self, i)

    def total_segre(self):
        if self._segre is None:
            object.__setattr__(self, "_segre", self.total_chern.series_inverse())
        return self._segre

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BundleClass):
            return NotImplemented
        return self.rank == other.rank and self.total_chern == other.total_chern

    def __hash__(self) -> int:
        return hash((self.rank, self.total_chern))

    def __repr__(self) -> str:
        return f"BundleClass(rank={self.rank}, c={self.total_chern.to_string()!r})"


class VirtualClass:
    """A formal difference of bundles: just a total Chern class, no rank."""

    __slots__ = ("total_chern",)

    def __init__(self, total_chern) -> None:
        if total_chern.constant_term != 1:
            raise ValueError(
                f"total Chern class must have constant term 1, got "
                f"{total_chern.constant_term}"
            )
        object.__setattr__(self, "total_chern", total_chern)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("VirtualClass is immutable")

    def chern(self, i: int):
        return chern(self, i)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VirtualClass):
            return NotImplemented
        return self.total_chern == other.total_chern

    def __hash__(self) -> int:
        return hash(self.total_chern)

    def __repr__(self) -> str:
        return f"VirtualClass(c={self.total_chern.to_string()!r})"


def chern(E: "BundleClass | VirtualClass", i: int):
    """The i-th Chern class; zero beyond the carried degrees."""
    if not isinstance(i, int) or i < 0:
        raise IndexError(f"Chern index must be a non-negative integer, got {i}")
    return E.total_chern.degree_part(i)


def segre(E: BundleClass, i: int):
    """The i-th Segre class of an honest bundle.

    Non-negative indices come from inverting the total Chern class.
    Indices strictly between -rank and zero are zero; the index -rank is
    refused because it only makes sense multiplied against the top Chern
    class (use ``segre_negrank_product``); anything lower is out of range.
    """
    if not isinstance(i, int):
        raise IndexError(f"Segre index must be an integer, got {i!r}")
    if i >= 0:
        return E.total_segre().degree_part(i)
    if -E.rank < i < 0:
        return E.total_chern.zero_like()
    if i == -E.rank:
        raise CancellationRequiredError(
            f"Segre index {-E.rank} of a rank-{E.rank} bundle is only defined "
            "against the top Chern class; use segre_negrank_product"
        )
    raise IndexError(f"Segre index {i} below -rank = {-E.rank}")


def segre_negrank_product(E: BundleClass, other):
    """The product (top Chern class of E) * (Segre class of index -rank) * other.

    The two extreme classes cancel to minus one, so the result is just the
    negation; having it as a named operation keeps callers in exact integer
    arithmetic instead of dividing by a top Chern class.
    """
    return -other


def total_segre(E: BundleClass):
    return E.total_segre()


def rank_sym(r: int, m: int) -> int:
    """Rank of the m-th symmetric power of a bundle of rank r + 1."""
    if r < 0 or m < 0:
        raise ValueError("rank_sym needs non-negative arguments")
    return comb(m + r, r)


def sym_power(E: BundleClass, d: int) -> BundleClass:
    """The d-th symmetric power via the splitting principle.

    Enumerates the d-element multisets of Chern roots in colexicographic
    order, multiplies the linear factors in a root ring truncated at the
    carrier's bound, rewrites the symmetric result in elementary symmetric
    functions, and evaluates those at the Chern classes of E.
    """
    if not isinstance(d, int) or d < 0:
        raise IndexError(f"symmetric power exponent must be non-negative, got {d}")
    one = E.total_chern.one_like()
    if d == 0:
        return BundleClass(1, one)
    k = E.rank
    bound = _truncation_bound(E.total_chern)
    rspec = root_spec(k, bound)
    gens = [GradedPoly.generator(rspec, name) for name in rspec.names]
    total = GradedPoly.one(rspec)
    multisets = sorted(
        itertools.combinations_with_replacement(range(k), d),
        key=lambda multiset: multiset[::-1],
    )
    for multiset in multisets:
        factor = GradedPoly.one(rspec)
        for index in multiset:
            factor = factor + gens[index]
        total = total * factor
    in_e_basis = roots_to_e(total)
    images = [chern(E, i) for i in range(1, k + 1)]
    return BundleClass(rank_sym(k - 1, d), substitute(in_e_basis, images, one))


def adams_twist(E: BundleClass, m: int) -> BundleClass:
    """Scale the i-th Chern component by m**i.

    For a rank-one twist this is exactly tensoring a symmetric power of a
    dual subbundle by the m-th power of the corresponding line bundle, which
    is the only way twists enter downstream.
    """
    return BundleClass(E.rank, E.total_chern.degree_scale(m))


def difference(A: "BundleClass | VirtualClass", B: BundleClass) -> VirtualClass:
    """The virtual class A - B: total Chern class c(A) times the Segre of B."""
    return VirtualClass(A.total_chern * B.total_segre())


def ustar(ctx: GrassContext) -> BundleClass:
    """The dual tautological subbundle on a Grassmannian context."""
    total = GradedPoly.one(ctx.spec)
    for i in range(1, ctx.k + 1):
        total = total + ctx.chern_generator(i)
    return BundleClass(ctx.k, total)


@lru_cache(maxsize=None)
def sym_ustar(ctx: GrassContext, d: int, twist: int = 1) -> BundleClass:
    """Twisted symmetric power of the dual subbundle, cached per context.

    These are the normal bundle ingredients every degeneration needs, and
    the same powers recur across cases, so memoization pays for itself.
    Safe because contexts and bundle classes are immutable values.
    """
    E = sym_power(ustar(ctx), d)
    return adams_twist(E, twist) if twist != 1 else E
