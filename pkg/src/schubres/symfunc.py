"""Exact truncated polynomial rings over declared weighted generators.

Everything downstream computes in rings of the form
``Z[g_1, ..., g_n] / (terms of weighted degree > D)`` where each generator
carries a positive integer degree and D is the truncation bound.  Terms are
stored sparsely as a dict from exponent tuples to nonzero integer
coefficients; all arithmetic is exact and every product is truncated eagerly,
which is safe because truncation only ever discards degrees nothing of lower
degree can depend on.

The module also provides the two symmetric-function conversions the rest of
the package is built on: series inversion (total Segre class from total Chern
class) and rewriting a symmetric polynomial in degree-one root variables as a
polynomial in the elementary symmetric functions.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import kernel
from .errors import ContextMismatchError, NonUnitError, NotSymmetricError

Exponent = tuple[int, ...]
TermMap = dict[Exponent, int]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class GeneratorSpec:
    """Names, weighted degrees and truncation bound of a polynomial ring.

    A spec with no generators is the ring of plain integers (every element is
    a constant).  Specs compare by value, so equal specs built independently
    are interchangeable.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    truncation: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        for name in self.names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid generator name {name!r}")
        if any(d <= 0 for d in self.degrees):
            raise ValueError("generator degrees must be positive")
        if not isinstance(self.truncation, int) or self.truncation < 0:
            raise ValueError("truncation must be a non-negative integer")

    @property
    def ngens(self) -> int:
        return len(self.names)

    def weighted_degree(self, expo: Exponent) -> int:
        return sum(e * d for e, d in zip(expo, self.degrees))

    def zero_exponent(self) -> Exponent:
        return (0,) * self.ngens

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None


class GradedPoly:
    """Immutable truncated polynomial with exact integer coefficients.

    ``terms`` is canonical: no zero coefficients, every exponent tuple has
    the spec's length and weighted degree at most the truncation bound.
    Treat instances as read-only; all operations return new objects.
    """

    __slots__ = ("spec", "terms")

    def __init__(
        self,
        spec: GeneratorSpec,
        terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        canonical: TermMap = {}
        for expo, coeff in items:
            expo = tuple(expo)
            if len(expo) != spec.ngens:
                raise ValueError(
                    f"exponent {expo} has length {len(expo)}, expected {spec.ngens}"
                )
            if any(not isinstance(e, int) or e < 0 for e in expo):
                raise ValueError(f"exponents must be non-negative integers: {expo}")
            if not isinstance(coeff, int):
                raise ValueError(f"coefficient {coeff!r} is not an integer")
            if coeff == 0 or spec.weighted_degree(expo) > spec.truncation:
                continue
            value = canonical.get(expo, 0) + coeff
            if value:
                canonical[expo] = value
            elif expo in canonical:
                del canonical[expo]
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def _raw(cls, spec: GeneratorSpec, terms: TermMap) -> "GradedPoly":
        # Trusted constructor: terms must already be canonical.
        self = object.__new__(cls)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GradedPoly is immutable")

    @classmethod
    def zero(cls, spec: GeneratorSpec) -> "GradedPoly":
        return cls._raw(spec, {})

    @classmethod
    def one(cls, spec: GeneratorSpec) -> "GradedPoly":
        return cls.constant(spec, 1)

    @classmethod
    def constant(cls, spec: GeneratorSpec, value: int) -> "GradedPoly":
        if value == 0:
            return cls.zero(spec)
        return cls._raw(spec, {spec.zero_exponent(): int(value)})

    @classmethod
    def generator(cls, spec: GeneratorSpec, name: str) -> "GradedPoly":
        i = spec.index(name)
        if spec.degrees[i] > spec.truncation:
            return cls.zero(spec)
        expo = tuple(1 if j == i else 0 for j in range(spec.ngens))
        return cls._raw(spec, {expo: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def constant_term(self) -> int:
        return self.terms.get(self.spec.zero_exponent(), 0)

    def max_degree(self) -> int:
        """Largest weighted degree with a nonzero term; -1 for the zero poly."""
        if not self.terms:
            return -1
        return max(self.spec.weighted_degree(e) for e in self.terms)

    def degree_part(self, d: int) -> "GradedPoly":
        wd = self.spec.weighted_degree
        return GradedPoly._raw(
            self.spec, {e: c for e, c in self.terms.items() if wd(e) == d}
        )

    def truncate_above(self, bound: int) -> "GradedPoly":
        wd = self.spec.weighted_degree
        return GradedPoly._raw(
            self.spec, {e: c for e, c in self.terms.items() if wd(e) <= bound}
        )

    def homogeneous_parts(self) -> dict[int, "GradedPoly"]:
        buckets: dict[int, TermMap] = {}
        wd = self.spec.weighted_degree
        for expo, coeff in self.terms.items():
            buckets.setdefault(wd(expo), {})[expo] = coeff
        return {d: GradedPoly._raw(self.spec, t) for d, t in sorted(buckets.items())}

    def degree_scale(self, m: int) -> "GradedPoly":
        """Multiply each homogeneous degree-i component by m**i."""
        wd = self.spec.weighted_degree
        out: TermMap = {}
        for expo, coeff in self.terms.items():
            value = coeff * m ** wd(expo)
            if value:
                out[expo] = value
        return GradedPoly._raw(self.spec, out)

    def zero_like(self) -> "GradedPoly":
        return GradedPoly.zero(self.spec)

    def one_like(self) -> "GradedPoly":
        return GradedPoly.one(self.spec)

    def series_inverse(self) -> "GradedPoly":
        return series_inverse(self)

    def _check_spec(self, other: "GradedPoly") -> None:
        if self.spec != other.spec:
            raise ContextMismatchError(
                f"operands live over different specs: {self.spec} vs {other.spec}"
            )

    def __add__(self, other: "GradedPoly | int") -> "GradedPoly":
        if isinstance(other, int):
            other = GradedPoly.constant(self.spec, other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        self._check_spec(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            value = out.get(expo, 0) + coeff
            if value:
                out[expo] = value
            elif expo in out:
                del out[expo]
        return GradedPoly._raw(self.spec, out)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        return GradedPoly._raw(self.spec, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "GradedPoly | int") -> "GradedPoly":
        if isinstance(other, int):
            other = GradedPoly.constant(self.spec, other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "GradedPoly":
        return GradedPoly.constant(self.spec, other) + (-self)

    def __mul__(self, other: "GradedPoly | int") -> "GradedPoly":
        if isinstance(other, int):
            if other == 0:
                return GradedPoly.zero(self.spec)
            return GradedPoly._raw(
                self.spec, {e: c * other for e, c in self.terms.items()}
            )
        if not isinstance(other, GradedPoly):
            return NotImplemented
        self._check_spec(other)
        out = kernel.mul_terms(
            self.terms, other.terms, self.spec.degrees, self.spec.truncation
        )
        return GradedPoly._raw(self.spec, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GradedPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = GradedPoly.one(self.spec)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = GradedPoly.constant(self.spec, other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.spec, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _sorted_terms(self) -> list[tuple[Exponent, int]]:
        # Ascending weighted degree, then descending lexicographic exponent,
        # so leading generators print before trailing ones within a degree.
        wd = self.spec.weighted_degree
        return sorted(
            self.terms.items(),
            key=lambda item: (wd(item[0]), tuple(-e for e in item[0])),
        )

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for expo, coeff in self._sorted_terms():
            factors = []
            for name, e in zip(self.spec.names, expo):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"GradedPoly({self.to_string()!r})"


def poly_add(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    return a + b


def poly_mul(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    return a * b


def series_inverse(a: GradedPoly) -> GradedPoly:
    """Multiplicative inverse of a series with constant term one.

    Computed degree by degree: if a = 1 + a_1 + a_2 + ... then the inverse
    b = 1 + b_1 + b_2 + ... satisfies b_n = -(a_1 b_{n-1} + ... + a_n b_0).
    """
    if a.constant_term != 1:
        raise NonUnitError(
            f"series inverse needs constant term 1, got {a.constant_term}"
        )
    parts_a = a.homogeneous_parts()
    parts_a.pop(0, None)
    result = GradedPoly.one(a.spec)
    parts_b: dict[int, GradedPoly] = {0: result}
    for n in range(1, a.spec.truncation + 1):
        acc = GradedPoly.zero(a.spec)
        for j, a_j in parts_a.items():
            if j > n:
                break
            b_prev = parts_b.get(n - j)
            if b_prev is not None:
                acc = acc - a_j * b_prev
        if not acc.is_zero:
            parts_b[n] = acc
            result = result + acc
    return result


def root_spec(k: int, truncation: int, prefix: str = "t") -> GeneratorSpec:
    """Spec of k degree-one root variables, for splitting-principle work."""
    return GeneratorSpec(
        tuple(f"{prefix}{i}" for i in range(1, k + 1)), (1,) * k, truncation
    )


def elementary_symmetric(spec: GeneratorSpec, i: int) -> GradedPoly:
    """The i-th elementary symmetric polynomial in the spec's generators.

    Only meaningful for specs whose generators all sit in degree one.
    """
    k = spec.ngens
    if i < 0 or i > k:
        return GradedPoly.zero(spec)
    if i == 0:
        return GradedPoly.one(spec)
    terms: TermMap = {}
    for subset in itertools.combinations(range(k), i):
        expo = tuple(1 if j in subset else 0 for j in range(k))
        if spec.weighted_degree(expo) <= spec.truncation:
            terms[expo] = 1
    return GradedPoly._raw(spec, terms)


def roots_to_e(p: GradedPoly, out_spec: GeneratorSpec | None = None) -> GradedPoly:
    """Rewrite a symmetric polynomial in root variables in the e-basis.

    ``p`` must live over a spec whose k generators all have degree one.  The
    result lives over ``out_spec``, whose generators must have degrees
    1, ..., k (the elementary symmetric functions); a default spec named
    e1..ek is created when none is given.  Raises NotSymmetricError when the
    input is not symmetric under permuting the roots.

    Works by repeatedly clearing the lexicographically leading term: a
    symmetric leading exponent is weakly decreasing, and subtracting the
    matching e-monomial strictly lowers the leading term.
    """
    spec = p.spec
    k = spec.ngens
    if any(d != 1 for d in spec.degrees):
        raise ValueError("roots_to_e input must live over degree-one root variables")
    if out_spec is None:
        out_spec = GeneratorSpec(
            tuple(f"e{i}" for i in range(1, k + 1)),
            tuple(range(1, k + 1)),
            spec.truncation,
        )
    if out_spec.degrees != tuple(range(1, k + 1)):
        raise ValueError("output spec must have generator degrees 1..k")
    if out_spec.truncation != spec.truncation:
        raise ValueError("output spec must keep the input truncation")
    if k == 0:
        return GradedPoly(out_spec, dict(p.terms))

    e_polys = [elementary_symmetric(spec, i + 1) for i in range(k)]
    expansions: dict[Exponent, GradedPoly] = {(0,) * k: GradedPoly.one(spec)}

    def expansion(m: Exponent) -> GradedPoly:
        cached = expansions.get(m)
        if cached is not None:
            return cached
        i = max(j for j in range(k) if m[j] > 0)
        parent = tuple(e - 1 if j == i else e for j, e in enumerate(m))
        value = expansion(parent) * e_polys[i]
        expansions[m] = value
        return value

    out: TermMap = {}
    rem = p
    prev_lead: Exponent | None = None
    while not rem.is_zero:
        lead = max(rem.terms)
        if prev_lead is not None and lead >= prev_lead:
            raise NotSymmetricError(f"leading term did not decrease at {lead}")
        prev_lead = lead
        if any(lead[i] < lead[i + 1] for i in range(k - 1)):
            raise NotSymmetricError(
                f"leading exponent {lead} is not weakly decreasing"
            )
        coeff = rem.terms[lead]
        m = tuple(
            lead[i] - (lead[i + 1] if i + 1 < k else 0) for i in range(k)
        )
        out[m] = out.get(m, 0) + coeff
        rem = rem - coeff * expansion(m)
    return GradedPoly(out_spec, out)


def substitute(p: GradedPoly, images, one):
    """Evaluate ``p`` by sending generator j to ``images[j]``.

    ``images`` are elements of any ring carrier supporting +, *, integer
    scaling and ``zero_like``; ``one`` is that carrier's multiplicative unit.
    Powers of each image are cached, so repeated exponents cost one multiply.
    """
    if len(images) != p.spec.ngens:
        raise ContextMismatchError(
            f"expected {p.spec.ngens} images, got {len(images)}"
        )
    powers: list[dict[int, object]] = [{0: one} for _ in images]

    def power(j: int, e: int):
        cache = powers[j]
        if e not in cache:
            cache[e] = power(j, e - 1) * images[j]
        return cache[e]

    acc = one.zero_like()
    for expo, coeff in sorted(p.terms.items()):
        term = one * coeff
        for j, e in enumerate(expo):
            if e:
                term = term * power(j, e)
        acc = acc + term
    return acc


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[\^*+-]))"
)


def tokenize_expression(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ValueError(f"unexpected character {text[pos]!r} at position {pos}")
        pos = match.end()
        for kind in ("int", "name", "op"):
            value = match.group(kind)
            if value is not None:
                tokens.append((kind, value))
                break
    return tokens


def parse_linear_terms(text: str) -> Iterator[tuple[int, list[tuple[str, int]]]]:
    """Parse ``18*x^2*y + 9*y^2`` style text into (coefficient, factors) terms.

    Each factor is a (name, exponent) pair; repeated names are not merged
    here.  Shared by the polynomial parser and the structure-ring element
    parser.
    """
    tokens = tokenize_expression(text)
    if not tokens:
        raise ValueError("empty expression")
    pos = 0

    def parse_term() -> tuple[int, list[tuple[str, int]]]:
        nonlocal pos
        coeff = 1
        factors: list[tuple[str, int]] = []
        expect_factor = True
        while pos < len(tokens):
            kind, value = tokens[pos]
            if not expect_factor:
                if kind == "op" and value == "*":
                    pos += 1
                    expect_factor = True
                    continue
                break
            if kind == "int":
                coeff *= int(value)
                pos += 1
            elif kind == "name":
                name = value
                exponent = 1
                pos += 1
                if (
                    pos + 1 < len(tokens)
                    and tokens[pos] == ("op", "^")
                    and tokens[pos + 1][0] == "int"
                ):
                    exponent = int(tokens[pos + 1][1])
                    pos += 2
                factors.append((name, exponent))
            else:
                raise ValueError(f"expected a factor, found {value!r}")
            expect_factor = False
        if expect_factor:
            raise ValueError("dangling operator at end of term")
        return coeff, factors

    sign = 1
    kind, value = tokens[0]
    if kind == "op" and value in "+-":
        sign = -1 if value == "-" else 1
        pos = 1
    while True:
        coeff, factors = parse_term()
        yield sign * coeff, factors
        if pos == len(tokens):
            return
        kind, value = tokens[pos]
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            pos += 1
        else:
            raise ValueError(f"expected '+' or '-', found {value!r}")


def parse_poly(spec: GeneratorSpec, text: str) -> GradedPoly:
    """Parse the textual form produced by ``GradedPoly.to_string``."""
    terms: list[tuple[Exponent, int]] = []
    for coeff, factors in parse_linear_terms(text):
        expo = [0] * spec.ngens
        for name, exponent in factors:
            expo[spec.index(name)] += exponent
        terms.append((tuple(expo), coeff))
    return GradedPoly(spec, terms)
