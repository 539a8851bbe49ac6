"""Chow rings: Grassmannians in Schubert form, plus small tabulated rings.

Two ring models live here.  ``GrassContext`` presents the Chow ring of the
Grassmannian of projective r-planes in projective n-space as a truncated
polynomial ring in the Chern classes of the dual tautological subbundle,
with conversion to the Schubert basis and exact integration of top-degree
classes.  ``StructRing`` is a finite graded ring given by explicit integer
structure constants, used for ambient spaces such as a blown-up plane where
a handful of basis classes suffice; it optionally carries a pushforward to
another such ring.

Integration over the Grassmannian is implemented twice on purpose: the
production path converts to the Schubert basis via the Pieri rule for the
dual subbundle's Chern classes, and ``integrate_oracle`` expands everything
into Chern roots and reads one coefficient off an alternant.  The two routes
share no code beyond polynomial arithmetic and must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

import yaml

from .errors import (
    ContextMismatchError,
    NonUnitError,
    RingFormatError,
    UnsupportedOperationError,
)
from .symfunc import (
    GeneratorSpec,
    GradedPoly,
    elementary_symmetric,
    parse_linear_terms,
    root_spec,
    substitute,
)


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; the empty partition is allowed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return self.length <= rows and (not self.parts or self.parts[0] <= cols)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(
            tuple(
                sum(1 for p in self.parts if p > j) for j in range(self.parts[0])
            )
        )

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    out: list[Partition] = []

    def extend(prefix: list[int], bound: int) -> None:
        out.append(Partition(tuple(prefix)))
        if len(prefix) == rows:
            return
        for p in range(bound, 0, -1):
            prefix.append(p)
            extend(prefix, p)
            prefix.pop()

    extend([], cols)
    return sorted(out, key=lambda p: (p.size, p.parts))


_GENERATOR_LETTERS = ("x", "y", "z")


@dataclass(frozen=True)
class GrassContext:
    """The Grassmannian of projective r-planes in projective n-space.

    Its Chow ring is generated by the Chern classes of the rank k = r + 1
    dual tautological subbundle, truncated above the dimension k(n - r).
    Schubert classes are indexed by partitions in the k by (n - r) box, and
    the class of a point is the full box.
    """

    r: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.r, int) and isinstance(self.n, int)):
            raise ValueError("r and n must be integers")
        if self.r < 0 or self.n <= self.r:
            raise ValueError(f"need 0 <= r < n, got r={self.r}, n={self.n}")

    @property
    def k(self) -> int:
        return self.r + 1

    @property
    def m(self) -> int:
        return self.n - self.r

    @property
    def dim(self) -> int:
        return self.k * self.m

    @property
    def spec(self) -> GeneratorSpec:
        k = self.k
        if k <= len(_GENERATOR_LETTERS):
            names = _GENERATOR_LETTERS[:k]
        else:
            names = tuple(f"c{i}" for i in range(1, k + 1))
        return GeneratorSpec(names, tuple(range(1, k + 1)), self.dim)

    @property
    def box(self) -> Partition:
        return Partition((self.m,) * self.k)

    def chern_generator(self, i: int) -> GradedPoly:
        """The i-th Chern class of the dual tautological subbundle."""
        if not 1 <= i <= self.k:
            raise IndexError(f"Chern index {i} outside 1..{self.k}")
        return GradedPoly.generator(self.spec, self.spec.names[i - 1])


class SchubertVector:
    """Integer combination of Schubert classes on a fixed Grassmannian."""

    __slots__ = ("context", "coeffs")

    def __init__(
        self, context: GrassContext, coeffs: Mapping[Partition, int] = ()
    ) -> None:
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        canonical: dict[Partition, int] = {}
        for partition, coeff in items:
            if not isinstance(partition, Partition):
                partition = Partition(tuple(partition))
            if not partition.fits_in_box(context.k, context.m):
                raise ValueError(f"{partition} does not fit the {context.k}x{context.m} box")
            if not isinstance(coeff, int):
                raise ValueError(f"coefficient {coeff!r} is not an integer")
            if coeff:
                value = canonical.get(partition, 0) + coeff
                if value:
                    canonical[partition] = value
                elif partition in canonical:
                    del canonical[partition]
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "coeffs", canonical)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("SchubertVector is immutable")

    @classmethod
    def zero(cls, context: GrassContext) -> "SchubertVector":
        return cls(context)

    @classmethod
    def unit(cls, context: GrassContext) -> "SchubertVector":
        return cls(context, {Partition(()): 1})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, partition: Partition) -> int:
        return self.coeffs.get(partition, 0)

    def _check_context(self, other: "SchubertVector") -> None:
        if self.context != other.context:
            raise ContextMismatchError("Schubert vectors over different Grassmannians")

    def __add__(self, other: "SchubertVector") -> "SchubertVector":
        if not isinstance(other, SchubertVector):
            return NotImplemented
        self._check_context(other)
        out = dict(self.coeffs)
        for partition, coeff in other.coeffs.items():
            value = out.get(partition, 0) + coeff
            if value:
                out[partition] = value
            elif partition in out:
                del out[partition]
        return SchubertVector(self.context, out)

    def __neg__(self) -> "SchubertVector":
        return SchubertVector(self.context, {p: -c for p, c in self.coeffs.items()})

    def __sub__(self, other: "SchubertVector") -> "SchubertVector":
        if not isinstance(other, SchubertVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int) -> "SchubertVector":
        if not isinstance(scalar, int):
            return NotImplemented
        return SchubertVector(
            self.context, {p: c * scalar for p, c in self.coeffs.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchubertVector):
            return NotImplemented
        return self.context == other.context and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self.coeffs.items())))

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        chunks: list[str] = []
        for partition, coeff in sorted(
            self.coeffs.items(), key=lambda item: (item[0].size, item[0].parts)
        ):
            body = f"sigma{partition}"
            magnitude = abs(coeff)
            if magnitude != 1:
                body = f"{magnitude}*{body}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"SchubertVector({self.to_string()!r})"


def _vertical_strip_targets(
    partition: Partition, i: int, rows: int, cols: int
) -> list[Partition]:
    # Adding a vertical strip means at most one new box per row; the result
    # must stay a partition inside the rows-by-cols box.
    padded = [partition.part(j) for j in range(rows)]
    targets = []
    for chosen in itertools.combinations(range(rows), i):
        grown = list(padded)
        for row in chosen:
            grown[row] += 1
        if grown[0] > cols:
            continue
        if any(grown[j] < grown[j + 1] for j in range(rows - 1)):
            continue
        targets.append(Partition(tuple(grown)))
    return targets


def dual_pieri_multiply(vector: SchubertVector, i: int) -> SchubertVector:
    """Multiply by the i-th Chern class of the dual tautological subbundle.

    The product of a Schubert class with that Chern class is the sum of the
    Schubert classes obtained by adding a vertical strip of i boxes, staying
    inside the box; classes that grow out of the box vanish.
    """
    ctx = vector.context
    if not 1 <= i <= ctx.k:
        raise IndexError(f"Pieri index {i} outside 1..{ctx.k}")
    out: dict[Partition, int] = {}
    for partition, coeff in vector.coeffs.items():
        for target in _vertical_strip_targets(partition, i, ctx.k, ctx.m):
            value = out.get(target, 0) + coeff
            if value:
                out[target] = value
            elif target in out:
                del out[target]
    return SchubertVector(ctx, out)


def to_schubert(ctx: GrassContext, p: GradedPoly) -> SchubertVector:
    """Expand a polynomial in the Chern generators in the Schubert basis."""
    if p.spec != ctx.spec:
        raise ContextMismatchError("polynomial does not live on this Grassmannian")
    result = SchubertVector.zero(ctx)
    for expo, coeff in sorted(p.terms.items()):
        vector = coeff * SchubertVector.unit(ctx)
        for index, exponent in enumerate(expo):
            for _ in range(exponent):
                vector = dual_pieri_multiply(vector, index + 1)
        result = result + vector
    return result


def integrate(ctx: GrassContext, p: GradedPoly) -> int:
    """Degree of the top-dimensional part of ``p`` against the point class."""
    top = p.degree_part(ctx.dim)
    if top.is_zero:
        return 0
    return to_schubert(ctx, top).coefficient(ctx.box)


def integrate_oracle(ctx: GrassContext, p: GradedPoly) -> int:
    """Integration via Chern roots, independent of the Pieri route.

    Substitutes each Chern generator by the elementary symmetric polynomial
    in k root variables, multiplies by the alternant (the product of all
    root differences), and reads off the coefficient of the staircase
    exponent shifted by the full box.  Kept deliberately separate from
    ``integrate`` so the two can cross-check each other.
    """
    k, m = ctx.k, ctx.m
    rspec = root_spec(k, ctx.dim + k * (k - 1) // 2)
    images = [elementary_symmetric(rspec, i + 1) for i in range(k)]
    expanded = substitute(p, images, GradedPoly.one(rspec))
    alternant = GradedPoly.one(rspec)
    for i in range(k):
        for j in range(i + 1, k):
            diff = GradedPoly.generator(rspec, rspec.names[i]) - GradedPoly.generator(
                rspec, rspec.names[j]
            )
            alternant = alternant * diff
    target = tuple(m + k - 1 - i for i in range(k))
    return (expanded * alternant).terms.get(target, 0)


def schubert_poly(ctx: GrassContext, partition: Partition) -> GradedPoly:
    """Polynomial representative of a Schubert class in the Chern generators.

    Uses the determinant of the matrix of Chern generators indexed by the
    conjugate partition (the elementary-symmetric determinantal formula).
    """
    if not partition.fits_in_box(ctx.k, ctx.m):
        raise ValueError(f"{partition} does not fit the {ctx.k}x{ctx.m} box")
    conj = partition.conjugate()
    size = conj.length
    if size == 0:
        return GradedPoly.one(ctx.spec)

    def entry(i: int, j: int) -> GradedPoly | None:
        index = conj.part(i) - i + j
        if index < 0 or index > ctx.k:
            return None
        if index == 0:
            return GradedPoly.one(ctx.spec)
        return ctx.chern_generator(index)

    total = GradedPoly.zero(ctx.spec)
    for perm in itertools.permutations(range(size)):
        sign = 1
        for i in range(size):
            for j in range(i + 1, size):
                if perm[i] > perm[j]:
                    sign = -sign
        product = GradedPoly.constant(ctx.spec, sign)
        for i in range(size):
            factor = entry(i, perm[i])
            if factor is None:
                product = GradedPoly.zero(ctx.spec)
                break
            product = product * factor
        total = total + product
    return total


class StructRing:
    """Finite graded ring described by integer structure constants.

    The basis must contain exactly one degree-zero element, which acts as
    the unit.  Products may list either ordering of a basis pair; missing
    pairs default to zero, which covers all products landing above the top
    degree.  Validation checks grading, commutativity, associativity on all
    basis triples, that the integral is supported in the top degree, and
    that a pushforward (if present) shifts codimension consistently with
    the dimensions of the two rings.
    """

    __slots__ = ("name", "labels", "degrees", "_index", "_unit", "_table",
                 "_integral", "_pushforward")

    def __init__(
        self,
        name: str,
        labels: Iterable[str],
        degrees: Iterable[int],
        products: Mapping[tuple[str, str], Mapping[str, int]],
        integral: Mapping[str, int] = (),
        pushforward: "tuple[StructRing, Mapping[str, Mapping[str, int]]] | None" = None,
    ) -> None:
        labels = tuple(labels)
        degrees = tuple(int(d) for d in degrees)
        if len(labels) != len(degrees):
            raise RingFormatError("basis and degrees must have equal length")
        if len(set(labels)) != len(labels):
            raise RingFormatError("basis labels must be distinct")
        if any(d < 0 for d in degrees):
            raise RingFormatError("degrees must be non-negative")
        units = [i for i, d in enumerate(degrees) if d == 0]
        if len(units) != 1:
            raise RingFormatError("need exactly one degree-zero basis element")
        index = {label: i for i, label in enumerate(labels)}
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_unit", units[0])

        table: dict[tuple[int, int], dict[int, int]] = {}
        for (la, lb), value in products.items():
            for label in (la, lb):
                if label not in index:
                    raise RingFormatError(f"product references unknown label {label!r}")
            ia, ib = sorted((index[la], index[lb]))
            entry: dict[int, int] = {}
            for label, coeff in value.items():
                if label not in index:
                    raise RingFormatError(f"product value references unknown label {label!r}")
                if not isinstance(coeff, int):
                    raise RingFormatError(f"structure constant {coeff!r} is not an integer")
                if coeff:
                    entry[index[label]] = entry.get(index[label], 0) + coeff
            entry = {i: c for i, c in entry.items() if c}
            if (ia, ib) in table and table[(ia, ib)] != entry:
                raise RingFormatError(
                    f"conflicting products for {labels[ia]}*{labels[ib]}"
                )
            table[(ia, ib)] = entry
        object.__setattr__(self, "_table", table)

        integral_map: dict[int, int] = {}
        items = integral.items() if isinstance(integral, Mapping) else integral
        for label, coeff in items:
            if label not in index:
                raise RingFormatError(f"integral references unknown label {label!r}")
            if coeff:
                integral_map[index[label]] = int(coeff)
        object.__setattr__(self, "_integral", integral_map)

        if pushforward is not None:
            target, mapping = pushforward
            image: dict[int, "StructElement"] = {}
            for label, value in mapping.items():
                if label not in index:
                    raise RingFormatError(f"pushforward maps unknown label {label!r}")
                image[index[label]] = StructElement(
                    target, {target._index[t]: c for t, c in value.items() if c}
                )
            pushforward = (target, image)
        object.__setattr__(self, "_pushforward", pushforward)
        self._validate()

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("StructRing is immutable")

    @property
    def top_degree(self) -> int:
        return max(self.degrees)

    @property
    def has_pushforward(self) -> bool:
        return self._pushforward is not None

    @property
    def pushforward_target(self) -> "StructRing":
        if self._pushforward is None:
            raise UnsupportedOperationError(f"ring {self.name!r} has no pushforward")
        return self._pushforward[0]

    def _validate(self) -> None:
        top = self.top_degree
        for (ia, ib), entry in self._table.items():
            degree = self.degrees[ia] + self.degrees[ib]
            if self._unit in (ia, ib):
                other = ib if ia == self._unit else ia
                if entry != {other: 1}:
                    raise RingFormatError("unit must act as the identity")
            for i in entry:
                if self.degrees[i] != degree:
                    raise RingFormatError(
                        f"product {self.labels[ia]}*{self.labels[ib]} is not homogeneous"
                    )
        for i, coeff in self._integral.items():
            if self.degrees[i] != top:
                raise RingFormatError("integral must be supported in the top degree")
        basis = [self.basis_element(i) for i in range(len(self.labels))]
        for a, b, c in itertools.product(basis, repeat=3):
            if (a * b) * c != a * (b * c):
                raise RingFormatError(
                    f"associativity fails on {a}, {b}, {c} in ring {self.name!r}"
                )
        if self._pushforward is not None:
            target, image = self._pushforward
            shift = self.top_degree - target.top_degree
            if shift < 0:
                raise RingFormatError("pushforward target has larger dimension")
            for i in range(len(self.labels)):
                if i not in image:
                    raise RingFormatError(
                        f"pushforward does not map label {self.labels[i]!r}"
                    )
                value = image[i]
                expected = self.degrees[i] - shift
                for j in value.coeffs:
                    if target.degrees[j] != expected:
                        raise RingFormatError(
                            f"pushforward of {self.labels[i]!r} is not homogeneous "
                            f"of degree {expected}"
                        )

    def basis_element(self, i: int) -> "StructElement":
        return StructElement(self, {i: 1})

    def element(self, label: str) -> "StructElement":
        if label not in self._index:
            raise KeyError(f"no basis label {label!r} in ring {self.name!r}")
        return self.basis_element(self._index[label])

    def zero(self) -> "StructElement":
        return StructElement(self, {})

    def one(self) -> "StructElement":
        return self.basis_element(self._unit)

    def parse(self, text: str) -> "StructElement":
        """Parse a linear combination of basis labels such as ``2*h - P``."""
        coeffs: dict[int, int] = {}
        for coeff, factors in parse_linear_terms(text):
            merged: list[str] = []
            for name, exponent in factors:
                if exponent != 1:
                    raise ValueError(
                        f"element expressions are linear in the basis, got {name}^{exponent}"
                    )
                merged.append(name)
            if len(merged) > 1:
                raise ValueError(
                    "element expressions are linear in the basis, got a product "
                    f"of {merged}"
                )
            if merged:
                if merged[0] not in self._index:
                    raise KeyError(f"no basis label {merged[0]!r} in ring {self.name!r}")
                i = self._index[merged[0]]
            else:
                i = self._unit
            value = coeffs.get(i, 0) + coeff
            if value:
                coeffs[i] = value
            elif i in coeffs:
                del coeffs[i]
        return StructElement(self, coeffs)

    def _mul_basis(self, ia: int, ib: int) -> dict[int, int]:
        if ia == self._unit:
            return {ib: 1}
        if ib == self._unit:
            return {ia: 1}
        return self._table.get((min(ia, ib), max(ia, ib)), {})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StructRing):
            return NotImplemented
        return (
            self.name == other.name
            and self.labels == other.labels
            and self.degrees == other.degrees
            and self._table == other._table
            and self._integral == other._integral
            and self._pushforward_signature() == other._pushforward_signature()
        )

    def _pushforward_signature(self):
        if self._pushforward is None:
            return None
        target, image = self._pushforward
        return (target.name, target.labels, {i: tuple(sorted(v.coeffs.items())) for i, v in image.items()})

    def __hash__(self) -> int:
        return hash((self.name, self.labels, self.degrees))

    def __repr__(self) -> str:
        return f"StructRing({self.name!r}, basis={self.labels})"


class StructElement:
    """Element of a ``StructRing``: an integer combination of basis classes."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: StructRing, coeffs: Mapping[int, int] = ()) -> None:
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        canonical = {i: int(c) for i, c in items if c}
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", canonical)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("StructElement is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> int:
        return self.coeffs.get(self.ring._unit, 0)

    def zero_like(self) -> "StructElement":
        return self.ring.zero()

    def one_like(self) -> "StructElement":
        return self.ring.one()

    def degree_part(self, d: int) -> "StructElement":
        degrees = self.ring.degrees
        return StructElement(
            self.ring, {i: c for i, c in self.coeffs.items() if degrees[i] == d}
        )

    def truncate_above(self, bound: int) -> "StructElement":
        degrees = self.ring.degrees
        return StructElement(
            self.ring, {i: c for i, c in self.coeffs.items() if degrees[i] <= bound}
        )

    def max_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(self.ring.degrees[i] for i in self.coeffs)

    def degree_scale(self, m: int) -> "StructElement":
        degrees = self.ring.degrees
        return StructElement(
            self.ring, {i: c * m ** degrees[i] for i, c in self.coeffs.items()}
        )

    def _check_ring(self, other: "StructElement") -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise ContextMismatchError("elements of different structure rings")

    def __add__(self, other: "StructElement | int") -> "StructElement":
        if isinstance(other, int):
            other = other * self.ring.one()
        if not isinstance(other, StructElement):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            value = out.get(i, 0) + c
            if value:
                out[i] = value
            elif i in out:
                del out[i]
        return StructElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "StructElement":
        return StructElement(self.ring, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: "StructElement | int") -> "StructElement":
        if isinstance(other, int):
            other = other * self.ring.one()
        if not isinstance(other, StructElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "StructElement":
        return (other * self.ring.one()) + (-self)

    def __mul__(self, other: "StructElement | int") -> "StructElement":
        if isinstance(other, int):
            return StructElement(self.ring, {i: c * other for i, c in self.coeffs.items()})
        if not isinstance(other, StructElement):
            return NotImplemented
        self._check_ring(other)
        out: dict[int, int] = {}
        for ia, ca in self.coeffs.items():
            for ib, cb in other.coeffs.items():
                for i, c in self.ring._mul_basis(ia, ib).items():
                    value = out.get(i, 0) + ca * cb * c
                    if value:
                        out[i] = value
                    elif i in out:
                        del out[i]
        return StructElement(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "StructElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def series_inverse(self) -> "StructElement":
        """Inverse of an element with constant term one.

        The non-constant part is nilpotent, so the geometric series
        terminates at the top degree.
        """
        if self.constant_term != 1:
            raise NonUnitError(
                f"series inverse needs constant term 1, got {self.constant_term}"
            )
        nilpotent = self - 1
        result = self.ring.one()
        power = self.ring.one()
        for _ in range(self.ring.top_degree):
            power = power * (-nilpotent)
            if power.is_zero:
                break
            result = result + power
        return result

    def integrate(self) -> int:
        return sum(
            c * self.ring._integral.get(i, 0) for i, c in self.coeffs.items()
        )

    def pushforward(self) -> "StructElement":
        if self.ring._pushforward is None:
            raise UnsupportedOperationError(
                f"ring {self.ring.name!r} has no pushforward"
            )
        target, image = self.ring._pushforward
        out = target.zero()
        for i, c in self.coeffs.items():
            out = out + c * image[i]
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = other * self.ring.one()
        if not isinstance(other, StructElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        chunks: list[str] = []
        ordered = sorted(
            self.coeffs.items(), key=lambda item: (self.ring.degrees[item[0]], item[0])
        )
        for i, coeff in ordered:
            label = self.ring.labels[i]
            magnitude = abs(coeff)
            if i == self.ring._unit:
                body = str(magnitude)
            elif magnitude == 1:
                body = label
            else:
                body = f"{magnitude}*{label}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"StructElement({self.to_string()!r} in {self.ring.name})"


def struct_mul(ring: StructRing, a: StructElement, b: StructElement) -> StructElement:
    if a.ring != ring or b.ring != ring:
        raise ContextMismatchError("elements do not belong to the given ring")
    return a * b


def struct_integrate(ring: StructRing, a: StructElement) -> int:
    if a.ring != ring:
        raise ContextMismatchError("element does not belong to the given ring")
    return a.integrate()


def struct_pushforward(ring: StructRing, a: StructElement) -> StructElement:
    if a.ring != ring:
        raise ContextMismatchError("element does not belong to the given ring")
    return a.pushforward()


def _parse_linear_expression(text: str) -> dict[str, int]:
    """Parse an element expression into a raw label-to-coefficient map.

    Used while loading ring descriptions, before the ring exists to resolve
    labels; the pseudo-label ``"1"`` stands for the unit.
    """
    out: dict[str, int] = {}
    for coeff, factors in parse_linear_terms(str(text)):
        if len(factors) > 1 or (factors and factors[0][1] != 1):
            raise RingFormatError(f"expected a linear expression, got {text!r}")
        label = factors[0][0] if factors else "1"
        value = out.get(label, 0) + coeff
        if value:
            out[label] = value
        elif label in out:
            del out[label]
    return out


def _resolve_unit_label(raw: dict[str, int], labels: tuple[str, ...], unit_label: str) -> dict[str, int]:
    out = dict(raw)
    if "1" in out and "1" not in labels:
        out[unit_label] = out.get(unit_label, 0) + out.pop("1")
    return out


def ring_from_dict(data: Mapping, name_hint: str = "ring") -> StructRing:
    """Build a ``StructRing`` from the declarative mapping form.

    Expected keys: ``basis`` (labels), ``degrees``, optional ``name``,
    ``products`` (``"a*b": expression``), ``integral`` (label to integer)
    and ``pushforward`` (``target`` mapping plus ``map`` of expressions in
    the target basis).  Products not listed are zero; the unit's products
    are implied.
    """
    if not isinstance(data, Mapping):
        raise RingFormatError("ring description must be a mapping")
    unknown = set(data) - {"name", "basis", "degrees", "products", "integral", "pushforward"}
    if unknown:
        raise RingFormatError(f"unknown ring keys: {sorted(unknown)}")
    try:
        labels = tuple(str(label) for label in data["basis"])
        degrees = tuple(int(d) for d in data["degrees"])
    except KeyError as missing:
        raise RingFormatError(f"ring description lacks key {missing}") from None
    units = [label for label, d in zip(labels, degrees) if d == 0]
    if len(units) != 1:
        raise RingFormatError("need exactly one degree-zero basis element")
    unit_label = units[0]

    products: dict[tuple[str, str], dict[str, int]] = {}
    for key, value in (data.get("products") or {}).items():
        pieces = [piece.strip() for piece in str(key).split("*")]
        if len(pieces) != 2 or not all(pieces):
            raise RingFormatError(f"product key must look like 'a*b', got {key!r}")
        raw = _parse_linear_expression(value)
        products[(pieces[0], pieces[1])] = _resolve_unit_label(raw, labels, unit_label)

    integral = {str(k): int(v) for k, v in (data.get("integral") or {}).items()}

    pushforward = None
    if "pushforward" in data and data["pushforward"] is not None:
        block = data["pushforward"]
        if not isinstance(block, Mapping) or set(block) - {"target", "map"}:
            raise RingFormatError("pushforward needs exactly 'target' and 'map'")
        target_data = block.get("target")
        if isinstance(target_data, str):
            target = builtin_ring(target_data)
        else:
            target = ring_from_dict(target_data, name_hint=f"{name_hint}.target")
        target_units = [
            label for label, d in zip(target.labels, target.degrees) if d == 0
        ]
        mapping: dict[str, dict[str, int]] = {}
        for label, value in (block.get("map") or {}).items():
            raw = _parse_linear_expression(value)
            mapping[str(label)] = _resolve_unit_label(raw, target.labels, target_units[0])
        pushforward = (target, mapping)

    return StructRing(
        name=str(data.get("name", name_hint)),
        labels=labels,
        degrees=degrees,
        products=products,
        integral=integral,
        pushforward=pushforward,
    )


def load_ring(path) -> StructRing:
    """Load a ring description from a YAML file."""
    with open(path, "r", encoding="utf-8") as handle:
        data = yaml.safe_load(handle)
    return ring_from_dict(data, name_hint=str(path))


def projective_space(m: int) -> StructRing:
    """The Chow ring of projective m-space with basis 1, h, h2, ..."""
    if m < 1:
        raise ValueError("projective space dimension must be positive")
    labels = ["1", "h"] + [f"h{i}" for i in range(2, m + 1)]
    products = {}
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            if i + j <= m:
                products[(labels[i], labels[j])] = {labels[i + j]: 1}
    return StructRing(
        name=f"p{m}",
        labels=labels,
        degrees=tuple(range(m + 1)),
        products=products,
        integral={labels[m]: 1},
    )


def blowup_plane_at_point() -> StructRing:
    """The plane blown up at one point, with its pushforward to the plane.

    Basis: unit, hyperplane pullback h, exceptional curve e, point class P.
    The exceptional curve has self-intersection -1 in dimension terms, so
    e*e = -P; h misses the exceptional curve, so h*e = 0.  The pushforward
    collapses e and carries the point class to the point class.
    """
    target = projective_space(2)
    return StructRing(
        name="blowup_p2",
        labels=("1", "h", "e", "P"),
        degrees=(0, 1, 1, 2),
        products={
            ("h", "h"): {"P": 1},
            ("h", "e"): {},
            ("e", "e"): {"P": -1},
        },
        integral={"P": 1},
        pushforward=(target, {"1": {"1": 1}, "h": {"h": 1}, "e": {}, "P": {"h2": 1}}),
    )


def builtin_ring(name: str) -> StructRing:
    """Look up a ring shipped with the package by name: blowup_p2 or p<m>."""
    if name == "blowup_p2":
        return blowup_plane_at_point()
    if name.startswith("p") and name[1:].isdigit():
        return projective_space(int(name[1:]))
    raise KeyError(f"no builtin ring named {name!r}")
